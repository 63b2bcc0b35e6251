//! Braided doubles `U^- ⋊ kG ⋉ U^+` over a quasi-YD structure, with elements kept in
//! the normal form `sum c * (left word) * g * (right word)`.
//!
//! Products are computed by moving right words past left words with the commutator
//! `f v - v f = beta(f, v)` and the semidirect relations `g v = g(v) g`,
//! `f g = g (f ◁ g)`, and then reducing both words in the chosen quotients.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use exact_linalg::{vector, Field, Matrix, Rref, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::gmodule::GModule;
use crate::group::{Elem, FinGroup};
use crate::ops::{quasibraided_factorial, Codomain};
use crate::quotient::{GradedQuotient, Growth};
use crate::qyd::{CheckReport, QydStructure};
use crate::tensor::{all_words, apply_diagonal, Word};
use crate::BraidedError;

type Key = (Word, Elem, Word);
type Terms = Vec<(Key, Scalar)>;

/// A generator of the double, for building words to straighten.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    V(u8),
    G(Elem),
    F(u8),
}

/// `g beta(f ◁ g, v) = beta(f, g(v)) g` on all basis pairs and all `g`.
pub fn yd_pairing_check(q: &QydStructure) -> CheckReport {
    let g = q.group();
    let d = q.dim();
    let f = q.field();
    for x in g.elements() {
        let r = q.module().act(x);
        for a in 0..d {
            let fa = vector::unit(f, d, a);
            let moved = q.module().right_act(&fa, x);
            for v in 0..d {
                // Left side: sum_b (f◁x)_b beta(f_b, v), shifted by x.
                let mut lhs = vec![f.zero(); g.order()];
                for (b, c) in moved.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (h, val) in q.beta(b, v) {
                        lhs[g.mul(x, h) as usize] += &(c * &val);
                    }
                }
                let mut rhs = vec![f.zero(); g.order()];
                for w in 0..d {
                    let c = r.get(w, v);
                    if c.is_zero() {
                        continue;
                    }
                    for (h, val) in q.beta(a, w) {
                        rhs[g.mul(h, x) as usize] += &(c * &val);
                    }
                }
                if lhs != rhs {
                    return CheckReport::fail(format!("g = {}, f_{a}, v_{v}", g.label(x)));
                }
            }
        }
    }
    CheckReport::ok()
}

/// A braided double at a degree truncation: the quasi-YD data together with the
/// quotients `U^-` of `T(V)` and `U^+` of `T(V*)`.
#[derive(Clone, Debug)]
pub struct DoubleSpec {
    qyd: QydStructure,
    left: GradedQuotient,
    right: GradedQuotient,
    memo: Arc<RwLock<HashMap<(Word, Word), Arc<Terms>>>>,
}

/// An element of a double in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NfElement {
    field: Field,
    terms: BTreeMap<Key, Scalar>,
}

impl NfElement {
    pub fn zero(field: Field) -> NfElement {
        NfElement { field, terms: BTreeMap::new() }
    }

    pub fn monomial(field: Field, left: Word, g: Elem, right: Word, c: Scalar) -> NfElement {
        let mut e = NfElement::zero(field);
        e.add_term((left, g, right), c);
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Key, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, left: &[u8], g: Elem, right: &[u8]) -> Scalar {
        self.terms.get(&(left.to_vec(), g, right.to_vec())).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, key: Key, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &NfElement) -> NfElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> NfElement {
        let mut out = NfElement::zero(self.field);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c * s);
        }
        out
    }

    pub fn sub(&self, other: &NfElement) -> NfElement {
        self.add(&other.scale(&-self.field.one()))
    }

    /// Canonical text: `coeff * [i1,i2] * g_label * [j1]` terms joined by ` + `,
    /// sorted by left word, group label and right word.
    pub fn canonical_text(&self, group: &FinGroup) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let fmt_word = |w: &[u8]| {
            let inner: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            format!("[{}]", inner.join(","))
        };
        let mut parts: Vec<((Word, String, Word), String)> = self
            .terms
            .iter()
            .map(|((a, g, b), c)| {
                let label = group.label(*g).to_string();
                let text = format!("{} * {} * {} * {}", c, fmt_word(a), label, fmt_word(b));
                ((a.clone(), label, b.clone()), text)
            })
            .collect();
        parts.sort();
        parts.into_iter().map(|(_, t)| t).collect::<Vec<_>>().join(" + ")
    }

    /// The `kG` part: coefficients of terms with both words empty.
    pub fn group_part(&self, order: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); order];
        for ((a, g, b), c) in &self.terms {
            if a.is_empty() && b.is_empty() {
                out[*g as usize] = c.clone();
            }
        }
        out
    }

    pub fn max_degrees(&self) -> (usize, usize) {
        self.terms.keys().fold((0, 0), |(x, y), (a, _, b)| (x.max(a.len()), y.max(b.len())))
    }
}

fn ideal_quotient(field: Field, dim: usize, growth: Growth, n: usize, gens: &[Vec<(Word, Scalar)>]) -> Result<GradedQuotient, BraidedError> {
    GradedQuotient::build(field, dim, growth, n, |k, partial| partial.ideal_step(k, gens))
}

/// Commutators `v_i v_j - v_j v_i`, `i < j`.
pub fn exterior_generators(field: Field, dim: usize) -> Vec<Vec<(Word, Scalar)>> {
    let mut gens = Vec::new();
    for i in 0..dim as u8 {
        for j in i + 1..dim as u8 {
            gens.push(vec![(vec![i, j], field.one()), (vec![j, i], -field.one())]);
        }
    }
    gens
}

/// `S(V)` as a quotient of `T(V)` to degree `n`.
pub fn symmetric_quotient(field: Field, dim: usize, growth: Growth, n: usize) -> Result<GradedQuotient, BraidedError> {
    ideal_quotient(field, dim, growth, n, &exterior_generators(field, dim))
}

/// Quotient of `T(V)` by the ideal generated by homogeneous elements.
pub fn generated_quotient(field: Field, dim: usize, growth: Growth, n: usize, gens: &[Vec<(Word, Scalar)>]) -> Result<GradedQuotient, BraidedError> {
    ideal_quotient(field, dim, growth, n, gens)
}

/// Graded dimensions of `T(V)/<I_2>` where `I_2` is the degree-2 part of the
/// minimal left ideal.
pub fn quadratic_double_dims(q: &QydStructure, n: usize) -> Result<Vec<usize>, BraidedError> {
    let minimal = crate::ops::minimal_left_quotient(q, n.min(2))?;
    let gens = if n >= 2 { full_relation_generators(&minimal, 2) } else { Vec::new() };
    let mut gens1 = if n >= 1 { full_relation_generators(&minimal, 1) } else { Vec::new() };
    gens1.extend(gens);
    Ok(ideal_quotient(q.field(), q.dim(), Growth::Append, n, &gens1)?.dims())
}

/// A basis of `I_n` as combinations of words.
pub fn full_relation_generators(quot: &GradedQuotient, n: usize) -> Vec<Vec<(Word, Scalar)>> {
    let words = all_words(quot.generators(), n);
    quot.relations_full(n)
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (words[i].clone(), c.clone()))
                .collect()
        })
        .collect()
}

impl DoubleSpec {
    /// A double from explicit quotients; both must be built to the same degree.
    pub fn new(qyd: QydStructure, left: GradedQuotient, right: GradedQuotient) -> Result<DoubleSpec, BraidedError> {
        if left.generators() != qyd.dim() || right.generators() != qyd.dim() {
            return Err(BraidedError::Input("quotients must be generated by V and V*".into()));
        }
        if left.field() != qyd.field() || right.field() != qyd.field() {
            return Err(BraidedError::Input("quotients over a different field".into()));
        }
        Ok(DoubleSpec { qyd, left, right, memo: Arc::default() })
    }

    /// The free double, truncated at degree `n` on both sides.
    pub fn free(qyd: QydStructure, n: usize) -> Result<DoubleSpec, BraidedError> {
        let f = qyd.field();
        let d = qyd.dim();
        DoubleSpec::new(qyd, GradedQuotient::free(f, d, n), GradedQuotient::free(f, d, n))
    }

    /// The minimal double: `U^- = T(V)/I(V, delta)`, `U^+ = T(V*)/I(V*, delta)`.
    pub fn minimal(qyd: QydStructure, n: usize) -> Result<DoubleSpec, BraidedError> {
        let left = crate::ops::minimal_left_quotient(&qyd, n)?;
        let right = crate::ops::minimal_right_quotient(&qyd, n)?;
        DoubleSpec::new(qyd, left, right)
    }

    /// `S(V) ⋊ kG ⋉ S(V*)`.
    pub fn symmetric(qyd: QydStructure, n: usize) -> Result<DoubleSpec, BraidedError> {
        let f = qyd.field();
        let d = qyd.dim();
        let left = symmetric_quotient(f, d, Growth::Append, n)?;
        let right = symmetric_quotient(f, d, Growth::Append, n)?;
        DoubleSpec::new(qyd, left, right)
    }

    pub fn qyd(&self) -> &QydStructure {
        &self.qyd
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        self.qyd.group()
    }

    pub fn field(&self) -> Field {
        self.qyd.field()
    }

    pub fn dim(&self) -> usize {
        self.qyd.dim()
    }

    pub fn left(&self) -> &GradedQuotient {
        &self.left
    }

    pub fn right(&self) -> &GradedQuotient {
        &self.right
    }

    pub fn truncation(&self) -> usize {
        self.left.truncation().min(self.right.truncation())
    }

    /// Echelon bases of the left relations `I^-_n ⊂ V^{⊗n}`.
    pub fn left_relations(&self, n: usize) -> Rref {
        self.left.relations_full(n)
    }

    pub fn right_relations(&self, n: usize) -> Rref {
        self.right.relations_full(n)
    }

    pub fn one(&self) -> NfElement {
        NfElement::monomial(self.field(), Vec::new(), 0, Vec::new(), self.field().one())
    }

    pub fn generator(&self, x: Gen) -> NfElement {
        let f = self.field();
        match x {
            Gen::V(i) => self.reduce_raw(&[((vec![i], 0, Vec::new()), f.one())]).expect("degree one"),
            Gen::G(g) => NfElement::monomial(f, Vec::new(), g, Vec::new(), f.one()),
            Gen::F(j) => self.reduce_raw(&[((Vec::new(), 0, vec![j]), f.one())]).expect("degree one"),
        }
    }

    pub fn left_word(&self, w: &[u8]) -> Result<NfElement, BraidedError> {
        self.reduce_raw(&[((w.to_vec(), 0, Vec::new()), self.field().one())])
    }

    pub fn right_word(&self, w: &[u8]) -> Result<NfElement, BraidedError> {
        self.reduce_raw(&[((Vec::new(), 0, w.to_vec()), self.field().one())])
    }

    /// Element `g` of the group algebra with coefficients.
    pub fn group_element(&self, coeffs: &[(Elem, Scalar)]) -> NfElement {
        let mut e = NfElement::zero(self.field());
        for (g, c) in coeffs {
            e.add_term((Vec::new(), *g, Vec::new()), c.clone());
        }
        e
    }

    /// Reduces raw terms (arbitrary words) to normal form.
    pub fn reduce_raw(&self, raw: &[(Key, Scalar)]) -> Result<NfElement, BraidedError> {
        let mut out = NfElement::zero(self.field());
        for ((a, g, b), c) in raw {
            if c.is_zero() {
                continue;
            }
            let la = self.left.reduce_word(a)?;
            let rb = self.right.reduce_word(b)?;
            for (wa, ca) in self.left.lift(a.len(), &la) {
                let cac = &ca * c;
                for (wb, cb) in self.right.lift(b.len(), &rb) {
                    out.add_term((wa.clone(), *g, wb), &cac * &cb);
                }
            }
        }
        Ok(out)
    }

    /// `right word * left word` in the free double, as raw terms.
    fn mult_rw(&self, b: &[u8], a: &[u8]) -> Arc<Terms> {
        let one = self.field().one();
        if b.is_empty() || a.is_empty() {
            return Arc::new(vec![((a.to_vec(), 0, b.to_vec()), one)]);
        }
        let key = (b.to_vec(), a.to_vec());
        if let Some(t) = self.memo.read().unwrap().get(&key) {
            return t.clone();
        }
        let group = self.group();
        let (b0, f) = (&b[..b.len() - 1], b[b.len() - 1] as usize);
        let mut acc: HashMap<Key, Scalar> = HashMap::new();
        let mut push = |k: Key, c: Scalar| {
            if c.is_zero() {
                return;
            }
            match acc.get_mut(&k) {
                Some(s) => *s += &c,
                None => {
                    acc.insert(k, c);
                }
            }
        };
        // (b0 a) f
        for ((x, k, y), c) in self.mult_rw(b0, a).iter() {
            let mut y2 = y.clone();
            y2.push(f as u8);
            push((x.clone(), *k, y2), c.clone());
        }
        // sum_i sum_h <f, L_h v_i> (b0 a'_{i,h}) h
        for i in 0..a.len() {
            for (&h, l) in self.qyd.family() {
                let c = l.get(f, a[i] as usize);
                if c.is_zero() {
                    continue;
                }
                let moved = apply_diagonal(self.qyd.module().act(h), &a[i + 1..]);
                for (suffix, c2) in moved {
                    let mut a2 = a[..i].to_vec();
                    a2.extend_from_slice(&suffix);
                    let coeff = c * &c2;
                    let rt = self.qyd.module().act(h).transpose();
                    for ((x, k, y), c3) in self.mult_rw(b0, &a2).iter() {
                        for (y2, c4) in apply_diagonal(&rt, y) {
                            push((x.clone(), group.mul(*k, h), y2), &(&coeff * c3) * &c4);
                        }
                    }
                }
            }
        }
        let mut terms: Terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|x, y| x.0.cmp(&y.0));
        let terms = Arc::new(terms);
        self.memo.write().unwrap().insert(key, terms.clone());
        terms
    }

    /// Product of normal-form elements.
    pub fn mul(&self, x: &NfElement, y: &NfElement) -> Result<NfElement, BraidedError> {
        let group = self.group().clone();
        let rho = self.qyd.module();
        let mut raw: Vec<(Key, Scalar)> = Vec::new();
        for ((a, g, b), c) in &x.terms {
            for ((a2, g2, b2), c2) in &y.terms {
                let c12 = c * c2;
                let gt = rho.act(*g2).transpose();
                for ((xw, h, yw), c3) in self.mult_rw(b, a2).iter() {
                    let left_moved = apply_diagonal(rho.act(*g), xw);
                    let right_moved = apply_diagonal(&gt, yw);
                    let gg = group.mul(group.mul(*g, *h), *g2);
                    let c123 = &c12 * c3;
                    for (lx, cl) in &left_moved {
                        let mut left = a.clone();
                        left.extend_from_slice(lx);
                        let cc = &c123 * cl;
                        for (ry, cr) in &right_moved {
                            let mut right = ry.clone();
                            right.extend_from_slice(b2);
                            raw.push(((left.clone(), gg, right), &cc * cr));
                        }
                    }
                }
            }
        }
        self.reduce_raw(&raw)
    }

    /// Normal form of a product of generators, multiplied left to right.
    pub fn straighten(&self, word: &[Gen]) -> Result<NfElement, BraidedError> {
        let mut acc = self.one();
        for &x in word {
            acc = self.mul(&acc, &self.generator(x))?;
        }
        Ok(acc)
    }

    pub fn commutator(&self, x: &NfElement, y: &NfElement) -> Result<NfElement, BraidedError> {
        Ok(self.mul(x, y)?.sub(&self.mul(y, x)?))
    }

    /// Harish-Chandra Gram matrices in degree `n` on the standard monomial bases.
    pub fn harish_chandra_gram(&self, n: usize) -> Result<HcGram, BraidedError> {
        let order = self.group().order();
        let f = self.field();
        let rows = self.right.basis(n).to_vec();
        let cols = self.left.basis(n).to_vec();
        let mut per_element = vec![Matrix::zeros(f, rows.len(), cols.len()); order];
        let mut scalar = Matrix::zeros(f, rows.len(), cols.len());
        for (i, phi) in rows.iter().enumerate() {
            let pe = self.right_word(phi)?;
            for (j, b) in cols.iter().enumerate() {
                let be = self.left_word(b)?;
                let part = self.mul(&pe, &be)?.group_part(order);
                for (g, c) in part.iter().enumerate() {
                    if !c.is_zero() {
                        per_element[g].set(i, j, c.clone());
                        scalar.add_to(i, j, c);
                    }
                }
            }
        }
        let scalar_rank = scalar.rank();
        Ok(HcGram { degree: n, per_element, scalar, scalar_rank })
    }

    /// For each degree `1..=n`, positive-degree elements commuting with all of `V*`
    /// (left) or all of `V` (right), modulo the relations.
    pub fn minimality_check(&self, n: usize) -> Result<MinimalityReport, BraidedError> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let d = self.dim();
        let order = self.group().order();
        let f = self.field();
        for k in 1..=n.min(self.truncation()) {
            // [f_a, b] lies in U^-_{k-1} ⊗ kG.
            let basis = self.left.basis(k).to_vec();
            let lower = self.left.dim(k - 1);
            let mut cols = Vec::new();
            for b in &basis {
                let be = self.left_word(b)?;
                let mut col = vector::zeros(f, d * lower * order);
                for a in 0..d {
                    let c = self.commutator(&self.generator(Gen::F(a as u8)), &be)?;
                    for ((x, g, y), val) in c.terms() {
                        if !y.is_empty() || x.len() != k - 1 {
                            return Err(BraidedError::Check(format!("commutator [f, b] left the expected space in degree {k}")));
                        }
                        let xi = self.left.basis_index(x).expect("normal form");
                        col[(a * lower + xi) * order + *g as usize] += val;
                    }
                }
                cols.push(col);
            }
            let m = Matrix::from_columns(f, d * lower * order, &cols)?;
            left.push(m.kernel_basis().len());
            let basis = self.right.basis(k).to_vec();
            let lower = self.right.dim(k - 1);
            let mut cols = Vec::new();
            for phi in &basis {
                let pe = self.right_word(phi)?;
                let mut col = vector::zeros(f, d * lower * order);
                for a in 0..d {
                    let c = self.commutator(&pe, &self.generator(Gen::V(a as u8)))?;
                    for ((x, g, y), val) in c.terms() {
                        if !x.is_empty() || y.len() != k - 1 {
                            return Err(BraidedError::Check(format!("commutator [phi, v] left the expected space in degree {k}")));
                        }
                        let yi = self.right.basis_index(y).expect("normal form");
                        col[(a * order + *g as usize) * lower + yi] += val;
                    }
                }
                cols.push(col);
            }
            let m = Matrix::from_columns(f, d * lower * order, &cols)?;
            right.push(m.kernel_basis().len());
        }
        let first_violation = left
            .iter()
            .zip(&right)
            .position(|(a, b)| *a > 0 || *b > 0)
            .map(|i| i + 1);
        Ok(MinimalityReport { left_violations: left, right_violations: right, first_violation })
    }

    /// Matrices of `v_i`, `g`, `f_j` on `U^-_{<=n} ⊗ L_rho`, basis ordered by degree,
    /// standard monomial and then the basis of `L`.
    pub fn standard_module(&self, rho: &GModule, n: usize) -> Result<StandardModule, BraidedError> {
        if rho.group().as_ref() != self.group().as_ref() || rho.field() != self.field() {
            return Err(BraidedError::Input("the module is over a different group or field".into()));
        }
        if n > self.left.truncation() {
            return Err(BraidedError::Truncation(format!("degree {n} exceeds truncation {}", self.left.truncation())));
        }
        let f = self.field();
        let l = rho.dim();
        let mut offsets = vec![0];
        for k in 0..=n {
            offsets.push(offsets[k] + self.left.dim(k) * l);
        }
        let total = offsets[n + 1];
        let index = |w: &[u8], i: usize| offsets[w.len()] + self.left.basis_index(w).expect("normal form") * l + i;
        let mut v_mats = Vec::new();
        for a in 0..self.dim() as u8 {
            let mut m = Matrix::zeros(f, total, total);
            for k in 0..n {
                for b in self.left.basis(k) {
                    let mut w = b.clone();
                    w.push(a);
                    let red = self.left.reduce_word(&w)?;
                    for (u, c) in self.left.lift(k + 1, &red) {
                        for i in 0..l {
                            m.set(index(&u, i), index(b, i), c.clone());
                        }
                    }
                }
            }
            v_mats.push(m);
        }
        let mut g_mats = Vec::new();
        for g in self.group().elements() {
            let mut m = Matrix::zeros(f, total, total);
            let rg = rho.act(g);
            for k in 0..=n {
                for b in self.left.basis(k) {
                    let moved = self.reduce_raw(&apply_diagonal(self.qyd.module().act(g), b).into_iter().map(|(w, c)| ((w, 0, Vec::new()), c)).collect::<Vec<_>>())?;
                    for ((u, _, _), c) in moved.terms() {
                        for i in 0..l {
                            for j in 0..l {
                                let r = rg.get(j, i);
                                if !r.is_zero() {
                                    m.add_to(index(u, j), index(b, i), &(c * r));
                                }
                            }
                        }
                    }
                }
            }
            g_mats.push(m);
        }
        let mut f_mats = Vec::new();
        for a in 0..self.dim() as u8 {
            let mut m = Matrix::zeros(f, total, total);
            let fe = self.generator(Gen::F(a));
            for k in 0..=n {
                for b in self.left.basis(k) {
                    let prod = self.mul(&fe, &self.left_word(b)?)?;
                    for ((x, h, y), c) in prod.terms() {
                        if !y.is_empty() {
                            continue;
                        }
                        let rh = rho.act(*h);
                        for i in 0..l {
                            for j in 0..l {
                                let r = rh.get(j, i);
                                if !r.is_zero() {
                                    m.add_to(index(x, j), index(b, i), &(c * r));
                                }
                            }
                        }
                    }
                }
            }
            f_mats.push(m);
        }
        Ok(StandardModule { degree: n, offsets, v: v_mats, g: g_mats, f: f_mats })
    }

    /// Associativity `(xy)z = x(yz)` over all triples of generators.
    pub fn associativity_generators(&self) -> Result<CheckReport, BraidedError> {
        let gens = self.generators();
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    let (ex, ey, ez) = (self.generator(*x), self.generator(*y), self.generator(*z));
                    let l = self.mul(&self.mul(&ex, &ey)?, &ez)?;
                    let r = self.mul(&ex, &self.mul(&ey, &ez)?)?;
                    if l != r {
                        return Ok(CheckReport::fail(format!("{x:?} {y:?} {z:?}")));
                    }
                }
            }
        }
        Ok(CheckReport::ok())
    }

    /// Associativity on random products of generators: each word of length at most
    /// `max_len` is split at a random point and both halves multiplied first.
    pub fn associativity_random(&self, samples: usize, max_len: usize, seed: u64) -> Result<CheckReport, BraidedError> {
        let gens = self.generators();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let len = rng.gen_range(1..=max_len);
            let word: Vec<Gen> = (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
            let cut = rng.gen_range(0..=len);
            let whole = self.straighten(&word)?;
            let split = self.mul(&self.straighten(&word[..cut])?, &self.straighten(&word[cut..])?)?;
            if whole != split {
                return Ok(CheckReport::fail(format!("{word:?} split at {cut}")));
            }
        }
        Ok(CheckReport::ok())
    }

    /// All generators: basis of `V`, group elements, basis of `V*`.
    pub fn generators(&self) -> Vec<Gen> {
        let mut gens: Vec<Gen> = (0..self.dim() as u8).map(Gen::V).collect();
        gens.extend(self.group().elements().map(Gen::G));
        gens.extend((0..self.dim() as u8).map(Gen::F));
        gens
    }

    /// Ranks of straightened products in each bidegree `(a, b)` with `a + b <= n`:
    /// every interleaving of `a` letters from `V` and `b` from `V*`, times each group
    /// element, is straightened and the rank of the results is recorded next to the
    /// number of normal-form monomials.
    pub fn pbw_slices(&self, n: usize) -> Result<Vec<PbwSlice>, BraidedError> {
        let bidegrees: Vec<(usize, usize)> = (0..=n).flat_map(|total| (0..=total).map(move |a| (a, total - a))).collect();
        bidegrees.into_par_iter().map(|(a, b)| self.pbw_slice(a, b)).collect()
    }

    fn pbw_slice(&self, a: usize, b: usize) -> Result<PbwSlice, BraidedError> {
        let d = self.dim();
        let order = self.group().order();
        let lb = self.left.basis(a).to_vec();
        let rb = self.right.basis(b).to_vec();
        let index: HashMap<Key, usize> = lb
            .iter()
            .flat_map(|x| self.group().elements().map(move |g| (x.clone(), g)))
            .flat_map(|(x, g)| rb.iter().map(move |y| (x.clone(), g, y.clone())))
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        let normal = lb.len() * order * rb.len();
        let mut vectors = Vec::new();
        for pattern in interleavings(a, b) {
            for letters in all_words(d, a + b) {
                let word: Vec<Gen> = pattern
                    .iter()
                    .zip(&letters)
                    .map(|(&is_v, &l)| if is_v { Gen::V(l) } else { Gen::F(l) })
                    .collect();
                let base = self.straighten(&word)?;
                for g in self.group().elements() {
                    let e = self.mul(&base, &self.generator(Gen::G(g)))?;
                    let mut v = vector::zeros(self.field(), normal);
                    for ((x, h, y), c) in e.terms() {
                        if x.len() == a && y.len() == b {
                            v[index[&(x.clone(), *h, y.clone())]] = c.clone();
                        }
                    }
                    vectors.push(v);
                }
            }
        }
        let rank = Rref::span(self.field(), normal, vectors).rank();
        Ok(PbwSlice { left_degree: a, right_degree: b, normal_monomials: normal, straightened_rank: rank })
    }

    /// Left ideal generators `r` with `[f, r] ≡ 0` modulo `I^- ⊗ kG` for all `f`, and
    /// right generators `phi` with `[phi, v] ≡ 0`; together with G-stability this makes
    /// the relations triangular.
    pub fn generator_commutator_check(&self, left: &[Vec<(Word, Scalar)>], right: &[Vec<(Word, Scalar)>]) -> Result<CheckReport, BraidedError> {
        let free = DoubleSpec::free(self.qyd.clone(), self.truncation())?;
        for (k, r) in left.iter().enumerate() {
            let mut e = NfElement::zero(self.field());
            for (w, c) in r {
                e = e.add(&free.left_word(w)?.scale(c));
            }
            for a in 0..self.dim() as u8 {
                let c = free.commutator(&free.generator(Gen::F(a)), &e)?;
                let reduced = self.reduce_raw(&c.terms().iter().map(|(k, v)| (k.clone(), v.clone())).collect::<Vec<_>>())?;
                if !reduced.is_zero() {
                    return Ok(CheckReport::fail(format!("left generator {k}: [f_{a}, r] is not in the ideal")));
                }
            }
        }
        for (k, r) in right.iter().enumerate() {
            let mut e = NfElement::zero(self.field());
            for (w, c) in r {
                e = e.add(&free.right_word(w)?.scale(c));
            }
            for a in 0..self.dim() as u8 {
                let c = free.commutator(&e, &free.generator(Gen::V(a)))?;
                let reduced = self.reduce_raw(&c.terms().iter().map(|(k, v)| (k.clone(), v.clone())).collect::<Vec<_>>())?;
                if !reduced.is_zero() {
                    return Ok(CheckReport::fail(format!("right generator {k}: [phi, v_{a}] is not in the ideal")));
                }
            }
        }
        Ok(CheckReport::ok())
    }
}

fn interleavings(a: usize, b: usize) -> Vec<Vec<bool>> {
    if a == 0 && b == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    if a > 0 {
        for mut rest in interleavings(a - 1, b) {
            rest.insert(0, true);
            out.push(rest);
        }
    }
    if b > 0 {
        for mut rest in interleavings(a, b - 1) {
            rest.insert(0, false);
            out.push(rest);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct PbwSlice {
    pub left_degree: usize,
    pub right_degree: usize,
    pub normal_monomials: usize,
    pub straightened_rank: usize,
}

#[derive(Clone, Debug)]
pub struct HcGram {
    pub degree: usize,
    /// Coefficient of each group element, rows indexed by the `U^+` basis.
    pub per_element: Vec<Matrix>,
    /// The image under the counit.
    pub scalar: Matrix,
    pub scalar_rank: usize,
}

impl HcGram {
    pub fn scalar_nondegenerate(&self) -> bool {
        self.scalar.rows() == self.scalar.cols() && self.scalar_rank == self.scalar.rows()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalityReport {
    /// Dimension of the space of offending elements per degree, starting at degree 1.
    pub left_violations: Vec<usize>,
    pub right_violations: Vec<usize>,
    pub first_violation: Option<usize>,
}

impl MinimalityReport {
    pub fn minimal(&self) -> bool {
        self.first_violation.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct StandardModule {
    pub degree: usize,
    /// Start of each degree block; the last entry is the total dimension.
    pub offsets: Vec<usize>,
    pub v: Vec<Matrix>,
    pub g: Vec<Matrix>,
    pub f: Vec<Matrix>,
}

impl StandardModule {
    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// `[f, v] = beta(f, v)` and `g v g^{-1} = g(v)` on the part of the module below
    /// the top degree, where no truncation interferes.
    pub fn check_relations(&self, q: &QydStructure) -> CheckReport {
        let f = q.field();
        let below = self.offsets[self.degree];
        let group = q.group();
        let restrict = |m: &Matrix| {
            let mut out = Matrix::zeros(f, m.rows(), below);
            for r in 0..m.rows() {
                for c in 0..below {
                    out.set(r, c, m.get(r, c).clone());
                }
            }
            out
        };
        for a in 0..q.dim() {
            for b in 0..q.dim() {
                let lhs = self.f[a].mul(&self.v[b]).unwrap().sub(&self.v[b].mul(&self.f[a]).unwrap()).unwrap();
                let mut rhs = Matrix::zeros(f, self.dim(), self.dim());
                for (h, c) in q.beta(a, b) {
                    rhs = rhs.add(&self.g[h as usize].scale(&c)).unwrap();
                }
                if restrict(&lhs) != restrict(&rhs) {
                    return CheckReport::fail(format!("[f_{a}, v_{b}] != beta(f_{a}, v_{b})"));
                }
            }
        }
        for g in group.elements() {
            let gi = group.inv(g);
            for b in 0..q.dim() {
                let lhs = self.g[g as usize].mul(&self.v[b]).unwrap().mul(&self.g[gi as usize]).unwrap();
                let mut rhs = Matrix::zeros(f, self.dim(), self.dim());
                for c in 0..q.dim() {
                    let x = q.module().act(g).get(c, b);
                    if !x.is_zero() {
                        rhs = rhs.add(&self.v[c].scale(x)).unwrap();
                    }
                }
                if restrict(&lhs) != restrict(&rhs) {
                    return CheckReport::fail(format!("g v_{b} g^-1 != g(v_{b}) for g = {}", group.label(g)));
                }
            }
            for h in group.elements() {
                if self.g[g as usize].mul(&self.g[h as usize]).unwrap() != self.g[group.mul(g, h) as usize] {
                    return CheckReport::fail("group action is not multiplicative");
                }
            }
        }
        CheckReport::ok()
    }
}

/// `(phi, b)_H` for words via the quasibraided factorial: the `kG` legs are multiplied
/// in order and the `V` legs are paired with `phi` leg by leg.
pub fn hc_formula(q: &QydStructure, phi: &[u8], b: &[u8]) -> Result<Vec<Scalar>, BraidedError> {
    let n = b.len();
    let order = q.group().order();
    let f = q.field();
    let mut out = vec![f.zero(); order];
    if phi.len() != n {
        return Ok(out);
    }
    let op = quasibraided_factorial(q, n)?;
    let Codomain::QuasiFactorial { group_leg } = &op.codomain else { unreachable!() };
    let d = q.dim();
    let base = group_leg.len() * d;
    let col = crate::tensor::word_index(b, d);
    for row in 0..op.matrix.rows() {
        let c = op.matrix.get(row, col);
        if c.is_zero() {
            continue;
        }
        let pairs = crate::tensor::index_word(row, base, n);
        let mut g = 0;
        let mut ok = true;
        for (k, &p) in pairs.iter().enumerate() {
            let (s, j) = (p as usize / d, p as usize % d);
            if j != phi[k] as usize {
                ok = false;
                break;
            }
            g = q.group().mul(g, group_leg[s]);
        }
        if ok {
            out[g as usize] += c;
        }
    }
    Ok(out)
}

/// The double `k[x] ⊗ A ⊗ k[y]` over a finite-dimensional algebra `A` with central
/// `a`, where `x` spans a trivial module, `delta(x) = a ⊗ x` and `<y, x> = lambda`.
#[derive(Clone, Debug)]
pub struct CentralLineDouble {
    pub algebra: crate::nichols::FiniteAlgebra,
    pub a: Vec<Scalar>,
    pub lambda: Scalar,
}

/// An element `sum x^i h_{ij} y^j`, keyed by `(i, j)`.
pub type LineElement = BTreeMap<(usize, usize), Vec<Scalar>>;

impl CentralLineDouble {
    pub fn new(algebra: crate::nichols::FiniteAlgebra, a: Vec<Scalar>, lambda: Scalar) -> Result<CentralLineDouble, BraidedError> {
        if a.len() != algebra.dim() {
            return Err(BraidedError::Input("central element has the wrong length".into()));
        }
        if !algebra.is_central(&a) {
            return Err(BraidedError::Check("the coaction element is not central".into()));
        }
        Ok(CentralLineDouble { algebra, a, lambda })
    }

    fn field(&self) -> Field {
        self.lambda.field()
    }

    /// `y^j x^k` by moving one `y` at a time across `x^k` with `y x = x y + lambda a`.
    fn y_pow_x_pow(&self, j: usize, k: usize) -> LineElement {
        let f = self.field();
        let one = self.algebra.unit();
        let mut out: LineElement = BTreeMap::new();
        if j == 0 || k == 0 {
            out.insert((k, j), one);
            return out;
        }
        // y^j x^k = (y^{j-1} x^k) y + k lambda a (y^{j-1} x^{k-1}).
        for ((i, m), h) in self.y_pow_x_pow(j - 1, k) {
            add_line(&mut out, (i, m + 1), &h);
        }
        let coeff = &f.int(k as i64) * &self.lambda;
        let scaled_a = vector::scaled(&coeff, &self.a);
        for ((i, m), h) in self.y_pow_x_pow(j - 1, k - 1) {
            add_line(&mut out, (i, m), &self.algebra.mul(&scaled_a, &h));
        }
        out
    }

    /// `(y^n, x^n)_H` by straightening.
    pub fn hc_straighten(&self, n: usize) -> Vec<Scalar> {
        let e = self.y_pow_x_pow(n, n);
        e.get(&(0, 0)).cloned().unwrap_or_else(|| vector::zeros(self.field(), self.algebra.dim()))
    }

    /// `(y^n, x^n)_H` from the quasibraided factorial `x^n -> prod_k k (a ⊗ x)^{⊗n}`:
    /// the `A` legs are multiplied and each `x` paired with `y`.
    pub fn hc_factorial(&self, n: usize) -> Vec<Scalar> {
        let f = self.field();
        let mut coeff = f.one();
        for k in 1..=n {
            coeff = &coeff * &f.int(k as i64);
        }
        let mut h = self.algebra.unit();
        for _ in 0..n {
            h = self.algebra.mul(&h, &self.a);
            coeff = &coeff * &self.lambda;
        }
        vector::scaled(&coeff, &h)
    }

    /// `[y, x^n] = n lambda a x^{n-1}`, so the double is minimal iff this never vanishes.
    pub fn commutator_y_xn(&self, n: usize) -> LineElement {
        let mut e = self.y_pow_x_pow(1, n);
        let one = self.algebra.unit();
        add_line(&mut e, (n, 1), &vector::scaled(&-self.field().one(), &one));
        e.retain(|_, v| !vector::is_zero(v));
        e
    }
}

fn add_line(e: &mut LineElement, key: (usize, usize), h: &[Scalar]) {
    let slot = e.entry(key).or_insert_with(|| vector::zeros(h[0].field(), h.len()));
    vector::axpy(slot, &h[0].field().one(), h);
}
