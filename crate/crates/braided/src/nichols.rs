//! Degree-truncated Nichols-Woronowicz algebras, their deformed versions, and the
//! bosonisation `B(Y) ⋊ kG` with its coproduct on generators.

use std::collections::HashMap;
use std::sync::Arc;

use exact_linalg::{vector, Field, Matrix, Scalar};
use serde::Serialize;

use crate::generic::GenericParams;
use crate::gmodule::{GModule, YDModule};
use crate::group::{Elem, FinGroup};
use crate::ops::{deformed_factorial, nichols_quotient};
use crate::quotient::GradedQuotient;
use crate::tensor::{apply_diagonal, pow, Word};
use crate::BraidedError;

/// A graded quotient of `T(V)` with its multiplication, known to degree `N`.
#[derive(Clone, Debug)]
pub struct TruncatedGradedAlgebra {
    quotient: GradedQuotient,
    module: Option<YDModule>,
}

impl TruncatedGradedAlgebra {
    pub fn new(quotient: GradedQuotient, module: Option<YDModule>) -> TruncatedGradedAlgebra {
        TruncatedGradedAlgebra { quotient, module }
    }

    /// `B(Y)` to degree `n`.
    pub fn nichols(y: &YDModule, n: usize) -> Result<TruncatedGradedAlgebra, BraidedError> {
        let psi = y.braiding()?;
        Ok(TruncatedGradedAlgebra { quotient: nichols_quotient(&psi, n)?, module: Some(y.clone()) })
    }

    pub fn quotient(&self) -> &GradedQuotient {
        &self.quotient
    }

    pub fn module(&self) -> Option<&YDModule> {
        self.module.as_ref()
    }

    pub fn truncation(&self) -> usize {
        self.quotient.truncation()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.quotient.dims()
    }

    /// Standard monomials of degree `n` (the chosen complement).
    pub fn complement(&self, n: usize) -> &[Word] {
        self.quotient.basis(n)
    }

    /// Coordinates of the image of a word.
    pub fn element(&self, w: &[u8]) -> Result<Vec<Scalar>, BraidedError> {
        self.quotient.reduce_word(w)
    }

    pub fn product(&self, a_deg: usize, a: &[Scalar], b_deg: usize, b: &[Scalar]) -> Result<Vec<Scalar>, BraidedError> {
        self.quotient.mul(a_deg, a, b_deg, b)
    }

    /// Products of basis elements of degrees `i` and `j`, one coordinate vector per pair.
    pub fn structure_constants(&self, i: usize, j: usize) -> Result<Vec<Vec<Vec<Scalar>>>, BraidedError> {
        let f = self.quotient.field();
        (0..self.quotient.dim(i))
            .map(|a| {
                let ea = vector::unit(f, self.quotient.dim(i), a);
                (0..self.quotient.dim(j))
                    .map(|b| self.product(i, &ea, j, &vector::unit(f, self.quotient.dim(j), b)))
                    .collect()
            })
            .collect()
    }

    /// `(ab)c = a(bc)` on all basis triples of total degree at most the truncation.
    pub fn associative(&self) -> Result<bool, BraidedError> {
        let n = self.truncation();
        let f = self.quotient.field();
        for i in 1..=n {
            for j in 1..=n - i {
                for k in 1..=n - i - j {
                    for a in 0..self.quotient.dim(i) {
                        for b in 0..self.quotient.dim(j) {
                            for c in 0..self.quotient.dim(k) {
                                let ea = vector::unit(f, self.quotient.dim(i), a);
                                let eb = vector::unit(f, self.quotient.dim(j), b);
                                let ec = vector::unit(f, self.quotient.dim(k), c);
                                let l = self.product(i + j, &self.product(i, &ea, j, &eb)?, k, &ec)?;
                                let r = self.product(i, &ea, j + k, &self.product(j, &eb, k, &ec)?)?;
                                if l != r {
                                    return Ok(false);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// `rho(g)^{⊗n}` preserves the degree-`n` relations for every `g`.
    pub fn relations_stable(&self, module: &GModule) -> bool {
        for n in 1..=self.truncation() {
            let rel = self.quotient.relations_full(n);
            for g in module.group().elements() {
                let m = module.tensor_power_action(g, n);
                for row in rel.rows() {
                    if !rel.contains(&m.apply(row)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Graded dimensions of `B(Y)` in degrees `0..=n`.
pub fn nichols_hilbert(y: &YDModule, n: usize) -> Result<Vec<usize>, BraidedError> {
    Ok(TruncatedGradedAlgebra::nichols(y, n)?.dims())
}

/// Product in the quotient of homogeneous elements.
pub fn nichols_product(alg: &TruncatedGradedAlgebra, a_deg: usize, a: &[Scalar], b_deg: usize, b: &[Scalar]) -> Result<Vec<Scalar>, BraidedError> {
    alg.product(a_deg, a, b_deg, b)
}

/// Graded dimensions of `V^{⊗n} / ker [n]!_{Psi,tau}` for `n = 0..=N`.
pub fn deformed_nichols_hilbert(y: &YDModule, n: usize, params: &GenericParams) -> Result<Vec<usize>, BraidedError> {
    let psi = y.braiding()?;
    let d = y.dim();
    let mut dims = Vec::new();
    for k in 0..=n {
        if k < 2 {
            dims.push(pow(d, k));
        } else {
            dims.push(pow(d, k) - deformed_factorial(&psi, k, params)?.dim);
        }
    }
    let undeformed = nichols_hilbert(y, n)?;
    if dims.iter().zip(&undeformed).any(|(a, b)| a < b) {
        return Err(BraidedError::Check("a deformed dimension fell below the Nichols dimension".into()));
    }
    Ok(dims)
}

/// A finite-dimensional unital algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    field: Field,
    table: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

impl FiniteAlgebra {
    pub fn new(field: Field, table: Vec<Vec<Vec<Scalar>>>, unit: Vec<Scalar>) -> Result<FiniteAlgebra, BraidedError> {
        let n = unit.len();
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(BraidedError::Input("structure constants have the wrong shape".into()));
        }
        Ok(FiniteAlgebra { field, table, unit })
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn unit(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.dim());
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    vector::axpy(&mut out, &(x * y), &self.table[i][j]);
                }
            }
        }
        out
    }

    pub fn is_central(&self, a: &[Scalar]) -> bool {
        (0..self.dim()).all(|i| {
            let e = vector::unit(self.field, self.dim(), i);
            self.mul(a, &e) == self.mul(&e, a)
        })
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        let f = self.field;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let (a, b, c) = (vector::unit(f, n, i), vector::unit(f, n, j), vector::unit(f, n, k));
                    self.mul(&self.mul(&a, &b), &c) == self.mul(&a, &self.mul(&b, &c))
                })
            })
        })
    }
}

/// `B ⋊ kG` for a truncated `B = B(Y)`: basis `(standard monomial, g)`.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    algebra: TruncatedGradedAlgebra,
    module: YDModule,
    group: Arc<FinGroup>,
}

type SmashKey = (Word, Elem);
pub type SmashElement = HashMap<SmashKey, Scalar>;
pub type SmashTensor = HashMap<(SmashKey, SmashKey), Scalar>;

fn push<K: std::hash::Hash + Eq>(map: &mut HashMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let remove = match map.get_mut(&k) {
        Some(slot) => {
            *slot += &c;
            slot.is_zero()
        }
        None => {
            map.insert(k, c);
            false
        }
    };
    if remove {
        map.retain(|_, v| !v.is_zero());
    }
}

impl SmashProduct {
    pub fn new(y: &YDModule, n: usize) -> Result<SmashProduct, BraidedError> {
        Ok(SmashProduct { algebra: TruncatedGradedAlgebra::nichols(y, n)?, module: y.clone(), group: y.group().clone() })
    }

    pub fn algebra(&self) -> &TruncatedGradedAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    /// Total dimension, available when `B(Y)` vanishes in the top built degree.
    pub fn total_dim(&self) -> Option<usize> {
        let dims = self.algebra.dims();
        (*dims.last().unwrap() == 0).then(|| dims.iter().sum::<usize>() * self.group.order())
    }

    /// The basis as `(word, g)` in degree order.
    pub fn basis(&self) -> Vec<SmashKey> {
        let mut out = Vec::new();
        for n in 0..=self.algebra.truncation() {
            for w in self.algebra.complement(n) {
                for g in self.group.elements() {
                    out.push((w.clone(), g));
                }
            }
        }
        out
    }

    pub fn word(&self, w: &[u8], g: Elem) -> Result<SmashElement, BraidedError> {
        let mut out = HashMap::new();
        let red = self.algebra.element(w)?;
        for (u, c) in self.algebra.quotient().lift(w.len(), &red) {
            push(&mut out, (u, g), c);
        }
        Ok(out)
    }

    /// `(b g)(b' g') = b g(b') gg'`.
    pub fn mul(&self, x: &SmashElement, y: &SmashElement) -> Result<SmashElement, BraidedError> {
        let mut out = HashMap::new();
        for ((b, g), c) in x {
            for ((b2, g2), c2) in y {
                let gg = self.group.mul(*g, *g2);
                for (moved, c3) in apply_diagonal(self.module.base().act(*g), b2) {
                    let mut w = b.clone();
                    w.extend_from_slice(&moved);
                    if w.len() > self.algebra.truncation() {
                        if self.total_dim().is_some() {
                            continue;
                        }
                        return Err(BraidedError::Truncation(format!("product of degree {} exceeds truncation", w.len())));
                    }
                    for ((u, g3), c4) in self.word(&w, gg)? {
                        push(&mut out, (u, g3), &(&(c * c2) * &c3) * &c4);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn tensor_mul(&self, x: &SmashTensor, y: &SmashTensor) -> Result<SmashTensor, BraidedError> {
        let mut out = HashMap::new();
        for ((a, b), c) in x {
            for ((a2, b2), c2) in y {
                let left = self.mul(&HashMap::from([(a.clone(), self.field().one())]), &HashMap::from([(a2.clone(), self.field().one())]))?;
                let right = self.mul(&HashMap::from([(b.clone(), self.field().one())]), &HashMap::from([(b2.clone(), self.field().one())]))?;
                let cc = c * c2;
                for (l, cl) in &left {
                    for (r, cr) in &right {
                        push(&mut out, (l.clone(), r.clone()), &(&cc * cl) * cr);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Delta(v_i) = v_i ⊗ 1 + sum_h h ⊗ P_h v_i`.
    pub fn coproduct_generator(&self, i: u8) -> SmashTensor {
        let f = self.field();
        let mut out = HashMap::new();
        push(&mut out, ((vec![i], 0), (Vec::new(), 0)), f.one());
        for (&h, p) in self.module.grading() {
            for j in 0..self.module.dim() {
                let c = p.get(j, i as usize);
                if !c.is_zero() {
                    push(&mut out, ((Vec::new(), h), (vec![j as u8], 0)), c.clone());
                }
            }
        }
        out
    }

    pub fn coproduct_group(&self, g: Elem) -> SmashTensor {
        HashMap::from([(((Vec::new(), g), (Vec::new(), g)), self.field().one())])
    }

    /// `Delta` of a word in the generators of `V`.
    pub fn coproduct_word(&self, w: &[u8]) -> Result<SmashTensor, BraidedError> {
        let mut acc = self.coproduct_group(0);
        for &x in w {
            acc = self.tensor_mul(&acc, &self.coproduct_generator(x))?;
        }
        Ok(acc)
    }

    /// The smash product as an algebra with structure constants on [`SmashProduct::basis`].
    pub fn finite_algebra(&self) -> Result<FiniteAlgebra, BraidedError> {
        if self.total_dim().is_none() {
            return Err(BraidedError::Truncation("B(Y) is not known to vanish above the truncation".into()));
        }
        let basis = self.basis();
        let index: HashMap<SmashKey, usize> = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let f = self.field();
        let n = basis.len();
        let to_vec = |e: &SmashElement| {
            let mut v = vector::zeros(f, n);
            for (k, c) in e {
                v[index[k]] = c.clone();
            }
            v
        };
        let mut table = Vec::with_capacity(n);
        for a in &basis {
            let mut row = Vec::with_capacity(n);
            for b in &basis {
                let prod = if a.0.len() + b.0.len() > self.algebra.truncation() {
                    HashMap::new()
                } else {
                    self.mul(&HashMap::from([(a.clone(), f.one())]), &HashMap::from([(b.clone(), f.one())]))?
                };
                row.push(to_vec(&prod));
            }
            table.push(row);
        }
        let unit = to_vec(&HashMap::from([((Vec::new(), 0), f.one())]));
        FiniteAlgebra::new(f, table, unit)
    }

    /// Coordinates of an element on [`SmashProduct::basis`].
    pub fn coordinates(&self, e: &SmashElement) -> Vec<Scalar> {
        let basis = self.basis();
        basis.iter().map(|k| e.get(k).cloned().unwrap_or_else(|| self.field().zero())).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BosonisationReport {
    pub relations_checked: usize,
    pub coproduct_multiplicative: bool,
    pub grouplike_consistent: bool,
    pub witness: Option<String>,
    pub total_dim: Option<usize>,
}

impl BosonisationReport {
    pub fn pass(&self) -> bool {
        self.coproduct_multiplicative && self.grouplike_consistent
    }
}

/// `Delta` kills every defining relation of `B(Y)` of degree `<= n`, and
/// `Delta(g) Delta(v) Delta(g^{-1}) = Delta(g(v))`.
pub fn bosonisation_check(y: &YDModule, n: usize) -> Result<BosonisationReport, BraidedError> {
    let smash = SmashProduct::new(y, n)?;
    let mut checked = 0;
    let mut witness = None;
    for k in 1..=n {
        for (idx, rel) in smash.algebra.quotient().new_relations(k).iter().enumerate() {
            checked += 1;
            let mut total: SmashTensor = HashMap::new();
            for (w, c) in rel {
                for (key, v) in smash.coproduct_word(w)? {
                    push(&mut total, key, c * &v);
                }
            }
            if !total.is_empty() && witness.is_none() {
                witness = Some(format!("relation {idx} of degree {k}"));
            }
        }
    }
    let mut grouplike = true;
    let g = y.group();
    for x in g.elements() {
        for i in 0..y.dim() as u8 {
            let lhs = smash.tensor_mul(
                &smash.tensor_mul(&smash.coproduct_group(x), &smash.coproduct_generator(i))?,
                &smash.coproduct_group(g.inv(x)),
            )?;
            let mut rhs: SmashTensor = HashMap::new();
            for (w, c) in apply_diagonal(y.base().act(x), &[i]) {
                for (k, v) in smash.coproduct_generator(w[0]) {
                    push(&mut rhs, k, &c * &v);
                }
            }
            if lhs != rhs {
                grouplike = false;
            }
        }
    }
    Ok(BosonisationReport {
        relations_checked: checked,
        coproduct_multiplicative: witness.is_none(),
        grouplike_consistent: grouplike,
        witness,
        total_dim: smash.total_dim(),
    })
}

/// `Y = V` over `Z_2` with the generator acting by `-1` and everything graded at it, so
/// that `Psi = -tau` and `B(Y) = Λ V`.
pub fn exterior_yd(field: Field, dim: usize) -> Result<YDModule, BraidedError> {
    let group = Arc::new(FinGroup::cyclic(2)?);
    let minus = Matrix::identity(field, dim).scale(&-field.one());
    let base = GModule::from_generator_images(group.clone(), field, &[minus])?;
    let s = group.generators()[0];
    Ok(YDModule::from_basis_degrees(base, &vec![s; dim]))
}

#[derive(Clone, Debug, Serialize)]
pub struct KaplanskyReport {
    pub dim_v: usize,
    pub total_dim: Option<usize>,
    pub expected_dim: usize,
    pub omega_central: bool,
    pub omega_square_zero: bool,
    pub bosonisation: BosonisationReport,
}

impl KaplanskyReport {
    pub fn pass(&self) -> bool {
        self.total_dim == Some(self.expected_dim) && self.omega_central && self.omega_square_zero && self.bosonisation.pass()
    }
}

/// `Λ V ⋊ k Z_2` for even `dim V`: dimension `2^{n+1}`, with the top form `omega`
/// central and square zero.
pub fn kaplansky(field: Field, dim: usize) -> Result<(KaplanskyReport, SmashProduct), BraidedError> {
    if dim % 2 != 0 || dim == 0 {
        return Err(BraidedError::Input("the example needs an even, positive dimension".into()));
    }
    let y = exterior_yd(field, dim)?;
    let degree = 2 * dim;
    let smash = SmashProduct::new(&y, degree)?;
    let top: Word = (0..dim as u8).collect();
    let omega = smash.word(&top, 0)?;
    let mut central = true;
    let mut gens: Vec<SmashElement> = (0..dim as u8).map(|i| smash.word(&[i], 0)).collect::<Result<_, _>>()?;
    gens.extend(y.group().elements().map(|g| HashMap::from([((Vec::new(), g), field.one())])));
    for x in &gens {
        if smash.mul(&omega, x)? != smash.mul(x, &omega)? {
            central = false;
        }
    }
    let square_zero = smash.mul(&omega, &omega)?.is_empty() && !omega.is_empty();
    let bosonisation = bosonisation_check(&y, dim + 1)?;
    let report = KaplanskyReport {
        dim_v: dim,
        total_dim: smash.total_dim(),
        expected_dim: 1 << (dim + 1),
        omega_central: central,
        omega_square_zero: square_zero,
        bosonisation,
    };
    Ok((report, smash))
}
