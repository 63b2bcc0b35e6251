//! Finite groups stored by full multiplication table.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::BraidedError;

/// Default cap on group order.
pub const DEFAULT_GROUP_CAP: usize = 100_000;

/// Element identifier; `0` is always the identity.
pub type Elem = u32;

/// A finite group with a permutation realisation.
///
/// Elements are numbered in breadth-first discovery order from the identity,
/// multiplying on the right by generators. The product `g * h` of permutations is
/// the composite "apply `h`, then `g`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    labels: Vec<String>,
    perms: Vec<Vec<u32>>,
    generators: Vec<Elem>,
    /// Each element as a word in the generators (left to right product).
    words: Vec<Vec<usize>>,
}

/// A conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: Elem,
    pub members: Vec<Elem>,
}

fn compose(g: &[u32], h: &[u32]) -> Vec<u32> {
    h.iter().map(|&x| g[x as usize]).collect()
}

/// Cycle notation with 1-based points, e.g. `(1 2)(3 4)`; the identity is `()`.
pub fn cycle_label(perm: &[u32]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{}", x + 1);
            x = perm[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses cycle notation such as `(1 2 3)(4 5)` on `degree` points.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Vec<u32>, BraidedError> {
    let bad = |msg: &str| BraidedError::Input(format!("permutation {text:?}: {msg}"));
    let mut perm: Vec<u32> = (0..degree as u32).collect();
    let mut rest = text.trim();
    let mut used = vec![false; degree];
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = open.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let points: Vec<usize> = open[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| bad("non-numeric point")))
            .collect::<Result<_, _>>()?;
        for &p in &points {
            if p == 0 || p > degree {
                return Err(bad("point out of range"));
            }
            if used[p - 1] {
                return Err(bad("cycles are not disjoint"));
            }
            used[p - 1] = true;
        }
        for (k, &p) in points.iter().enumerate() {
            perm[p - 1] = (points[(k + 1) % points.len()] - 1) as u32;
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(perm)
}

impl FinGroup {
    /// Closure of the given permutations (images of `0..m`, zero-based).
    pub fn from_permutations(gens: &[Vec<u32>], cap: usize) -> Result<FinGroup, BraidedError> {
        let degree = gens.first().map(|g| g.len()).unwrap_or(0);
        for g in gens {
            if g.len() != degree {
                return Err(BraidedError::Input("generators act on different point sets".into()));
            }
            let mut hit = vec![false; degree];
            for &x in g {
                if x as usize >= degree || hit[x as usize] {
                    return Err(BraidedError::Input(format!("not a permutation: {g:?}")));
                }
                hit[x as usize] = true;
            }
        }
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut index: HashMap<Vec<u32>, Elem> = HashMap::new();
        let mut perms = vec![identity.clone()];
        let mut words = vec![Vec::new()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, g) in gens.iter().enumerate() {
                let y = compose(&perms[x], g);
                if index.contains_key(&y) {
                    continue;
                }
                if perms.len() >= cap {
                    return Err(BraidedError::CapExceeded(format!("group order exceeds cap {cap}")));
                }
                index.insert(y.clone(), perms.len() as Elem);
                let mut w = words[x].clone();
                w.push(k);
                words.push(w);
                perms.push(y);
                queue.push_back(perms.len() - 1);
            }
        }
        let order = perms.len();
        let mut mul = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                mul[a * order + b] = index[&compose(&perms[a], &perms[b])];
            }
        }
        let inv = (0..order)
            .map(|a| (0..order).find(|&b| mul[a * order + b] == 0).unwrap() as Elem)
            .collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        Ok(FinGroup { order, mul, inv, labels, perms, generators, words })
    }

    pub fn trivial() -> FinGroup {
        FinGroup::from_permutations(&[vec![0]], 1).expect("trivial group")
    }

    /// `S_n` generated by the adjacent transpositions `(i i+1)`.
    pub fn symmetric(n: usize) -> Result<FinGroup, BraidedError> {
        Self::symmetric_capped(n, DEFAULT_GROUP_CAP)
    }

    pub fn symmetric_capped(n: usize, cap: usize) -> Result<FinGroup, BraidedError> {
        if n <= 1 {
            return Ok(FinGroup::trivial());
        }
        let gens: Vec<Vec<u32>> = (0..n - 1)
            .map(|i| {
                let mut p: Vec<u32> = (0..n as u32).collect();
                p.swap(i, i + 1);
                p
            })
            .collect();
        FinGroup::from_permutations(&gens, cap)
    }

    /// `C_n` generated by the `n`-cycle.
    pub fn cyclic(n: usize) -> Result<FinGroup, BraidedError> {
        if n == 0 {
            return Err(BraidedError::Input("cyclic group of order 0".into()));
        }
        let gen: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        FinGroup::from_permutations(&[gen], DEFAULT_GROUP_CAP)
    }

    /// Dihedral group of order `2n` acting on the vertices of an `n`-gon, generated
    /// by the two reflections `i -> -i` and `i -> 1 - i` (mod `n`).
    pub fn dihedral(n: usize) -> Result<FinGroup, BraidedError> {
        if n < 2 {
            return Err(BraidedError::Input("dihedral group needs n >= 2".into()));
        }
        let m = n as u32;
        let s1: Vec<u32> = (0..m).map(|i| (m - i) % m).collect();
        let s2: Vec<u32> = (0..m).map(|i| (m + 1 - i) % m).collect();
        if n == 2 {
            // On two points both reflections coincide with a transposition; use a 4-point model.
            let a = vec![1, 0, 2, 3];
            let b = vec![0, 1, 3, 2];
            return FinGroup::from_permutations(&[a, b], DEFAULT_GROUP_CAP);
        }
        FinGroup::from_permutations(&[s1, s2], DEFAULT_GROUP_CAP)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order + b as usize]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    /// `g h g^{-1}`.
    pub fn conj(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a as usize]
    }

    pub fn perm(&self, a: Elem) -> &[u32] {
        &self.perms[a as usize]
    }

    pub fn degree(&self) -> usize {
        self.perms[0].len()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    /// `a` as a product of generators, by generator index.
    pub fn word(&self, a: Elem) -> &[usize] {
        &self.words[a as usize]
    }

    pub fn find_label(&self, label: &str) -> Option<Elem> {
        let trimmed: String = label.split_whitespace().collect::<Vec<_>>().join(" ");
        if trimmed == "e" || trimmed == "1" || trimmed == "()" {
            return Some(0);
        }
        if let Some(i) = self.labels.iter().position(|l| *l == trimmed) {
            return Some(i as Elem);
        }
        let perm = parse_cycles(&trimmed, self.degree()).ok()?;
        self.perms.iter().position(|p| *p == perm).map(|i| i as Elem)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exhaustive check of the group axioms on the table.
    pub fn verify_axioms(&self) -> bool {
        let n = self.order as Elem;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a || self.mul(a, self.inv(a)) != 0 {
                return false;
            }
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Orbits of the conjugation action, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for a in self.elements() {
            if seen[a as usize] {
                continue;
            }
            let mut members: Vec<Elem> = self.elements().map(|g| self.conj(g, a)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                seen[m as usize] = true;
            }
            out.push(ConjClass { representative: a, members });
        }
        out
    }

    /// Index of the conjugacy class containing each element.
    pub fn class_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.order];
        for (k, c) in self.conjugacy_classes().iter().enumerate() {
            for &m in &c.members {
                idx[m as usize] = k;
            }
        }
        idx
    }

    /// Whether an element of the group algebra (coefficient per element) commutes with every element.
    pub fn is_central<T: PartialEq>(&self, coeffs: &[T]) -> bool {
        self.elements().all(|g| {
            self.elements().all(|h| coeffs[self.conj(g, h) as usize] == coeffs[h as usize])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_roundtrip() {
        let p = parse_cycles("(1 3 2)(4 5)", 5).unwrap();
        assert_eq!(cycle_label(&p), "(1 3 2)(4 5)");
        assert!(parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(parse_cycles("(1 9)", 3).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(FinGroup::symmetric_capped(5, 100), Err(BraidedError::CapExceeded(_))));
    }
}
