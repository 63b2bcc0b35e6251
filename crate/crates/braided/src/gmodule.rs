//! Finite-dimensional representations of finite groups, and Yetter-Drinfeld modules over `kG`.

use std::collections::BTreeMap;
use std::sync::Arc;

use exact_linalg::{vector, Field, Matrix, Rref, Scalar};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::group::{Elem, FinGroup};
use crate::BraidedError;

/// A representation `g -> rho(g)` of a finite group by invertible matrices.
#[derive(Clone, Debug)]
pub struct GModule {
    group: Arc<FinGroup>,
    field: Field,
    dim: usize,
    rho: Vec<Matrix>,
}

/// Outcome of the irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Irreducibility {
    /// The commutant is one-dimensional (absolutely irreducible).
    Irreducible,
    /// A proper nonzero invariant subspace was found; its dimension is recorded.
    Reducible(usize),
    /// The commutant is larger than the scalars but no invariant subspace was found.
    Undetermined,
}

impl GModule {
    /// Validates the homomorphism property exhaustively.
    pub fn new(group: Arc<FinGroup>, field: Field, rho: Vec<Matrix>) -> Result<GModule, BraidedError> {
        if rho.len() != group.order() {
            return Err(BraidedError::Input(format!(
                "{} matrices for a group of order {}",
                rho.len(),
                group.order()
            )));
        }
        let dim = rho.first().map(Matrix::rows).unwrap_or(0);
        for m in &rho {
            if m.rows() != dim || m.cols() != dim || m.field() != field {
                return Err(BraidedError::Input("module matrices of inconsistent shape or field".into()));
            }
        }
        let module = GModule { group, field, dim, rho };
        module.verify()?;
        Ok(module)
    }

    /// Extends images of the group's generators along the stored generator words.
    pub fn from_generator_images(
        group: Arc<FinGroup>,
        field: Field,
        images: &[Matrix],
    ) -> Result<GModule, BraidedError> {
        if images.len() != group.generators().len() {
            return Err(BraidedError::Input(format!(
                "{} generator images for {} generators",
                images.len(),
                group.generators().len()
            )));
        }
        let dim = images.first().map(Matrix::rows).unwrap_or(0);
        let rho = group
            .elements()
            .map(|g| {
                let mut m = Matrix::identity(field, dim);
                for &k in group.word(g) {
                    m = m.mul(&images[k])?;
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>, BraidedError>>()?;
        GModule::new(group, field, rho)
    }

    fn verify(&self) -> Result<(), BraidedError> {
        if !self.rho[0].is_identity() {
            return Err(BraidedError::Check("rho(e) is not the identity".into()));
        }
        for g in self.group.elements() {
            for h in self.group.elements() {
                let lhs = self.act(g).mul(self.act(h))?;
                if &lhs != self.act(self.group.mul(g, h)) {
                    return Err(BraidedError::Check(format!(
                        "rho({})rho({}) != rho({})",
                        self.group.label(g),
                        self.group.label(h),
                        self.group.label(self.group.mul(g, h))
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn trivial(group: Arc<FinGroup>, field: Field, dim: usize) -> GModule {
        let rho = vec![Matrix::identity(field, dim); group.order()];
        GModule { group, field, dim, rho }
    }

    /// The sign character of a permutation group.
    pub fn sign(group: Arc<FinGroup>, field: Field) -> GModule {
        let rho = group
            .elements()
            .map(|g| {
                let p = group.perm(g);
                let mut seen = vec![false; p.len()];
                let mut parity = 0;
                for s in 0..p.len() {
                    let mut len = 0;
                    let mut x = s;
                    while !seen[x] {
                        seen[x] = true;
                        x = p[x] as usize;
                        len += 1;
                    }
                    if len > 0 {
                        parity += len - 1;
                    }
                }
                Matrix::from_i64(field, 1, 1, &[if parity % 2 == 0 { 1 } else { -1 }])
            })
            .collect();
        GModule { group, field, dim: 1, rho }
    }

    /// The permutation module on the points moved by the group.
    pub fn permutation(group: Arc<FinGroup>, field: Field) -> GModule {
        let n = group.degree();
        let rho = group
            .elements()
            .map(|g| {
                let mut m = Matrix::zeros(field, n, n);
                for (i, &j) in group.perm(g).iter().enumerate() {
                    m.set(j as usize, i, field.one());
                }
                m
            })
            .collect();
        GModule { group, field, dim: n, rho }
    }

    /// Geometric representation of a Coxeter group on the span of its simple roots.
    ///
    /// The group's generators must be the simple reflections, in the order of the
    /// rows of `cartan`; `s_i(a_j) = a_j - cartan[i][j] * a_i`.
    pub fn coxeter(group: Arc<FinGroup>, field: Field, cartan: &[Vec<i64>]) -> Result<GModule, BraidedError> {
        let r = cartan.len();
        let images: Vec<Matrix> = (0..r)
            .map(|i| {
                let mut m = Matrix::identity(field, r);
                for j in 0..r {
                    m.add_to(i, j, &field.int(-cartan[i][j]));
                }
                m
            })
            .collect();
        GModule::from_generator_images(group, field, &images)
    }

    /// Reflection representation of `S_n` (type `A_{n-1}`, simple-root basis).
    pub fn symmetric_reflection(group: Arc<FinGroup>, field: Field) -> Result<GModule, BraidedError> {
        let r = group.generators().len();
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        GModule::coxeter(group, field, &cartan)
    }

    /// Reflection representation of the dihedral group of order `2m` for
    /// crystallographic `m` in {2, 3, 4, 6}.
    pub fn dihedral_reflection(group: Arc<FinGroup>, field: Field, m: usize) -> Result<GModule, BraidedError> {
        let (a12, a21) = match m {
            2 => (0, 0),
            3 => (-1, -1),
            4 => (-1, -2),
            6 => (-1, -3),
            _ => {
                return Err(BraidedError::Input(format!(
                    "no rational reflection representation for the dihedral group with m = {m}"
                )))
            }
        };
        GModule::coxeter(group, field, &[vec![2, a12], vec![a21, 2]])
    }

    /// One-dimensional module of a cyclic group with the generator acting by `q`.
    pub fn cyclic_character(group: Arc<FinGroup>, q: Scalar) -> Result<GModule, BraidedError> {
        let field = q.field();
        GModule::from_generator_images(group, field, &[Matrix::new(field, 1, 1, vec![q])?])
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn act(&self, g: Elem) -> &Matrix {
        &self.rho[g as usize]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.rho
    }

    /// `g(v)` on a coordinate vector.
    pub fn act_vec(&self, g: Elem, v: &[Scalar]) -> Vec<Scalar> {
        self.rho[g as usize].apply(v)
    }

    /// The right action on the dual: `<f <| g, v> = <f, g(v)>`, i.e. `rho(g)^T f`.
    pub fn right_act(&self, f: &[Scalar], g: Elem) -> Vec<Scalar> {
        let m = &self.rho[g as usize];
        (0..self.dim)
            .map(|j| {
                let mut s = self.field.zero();
                for i in 0..self.dim {
                    let a = m.get(i, j);
                    if !a.is_zero() && !f[i].is_zero() {
                        s += &(a * &f[i]);
                    }
                }
                s
            })
            .collect()
    }

    /// Dual module, stored as a left module via `g -> (rho(g)^{-1})^T`.
    pub fn dual(&self) -> GModule {
        let rho = self
            .group
            .elements()
            .map(|g| self.rho[self.group.inv(g) as usize].transpose())
            .collect();
        GModule { group: self.group.clone(), field: self.field, dim: self.dim, rho }
    }

    pub fn tensor(&self, other: &GModule) -> Result<GModule, BraidedError> {
        self.check_compatible(other)?;
        let rho = self
            .group
            .elements()
            .map(|g| self.act(g).kron(other.act(g)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GModule { group: self.group.clone(), field: self.field, dim: self.dim * other.dim, rho })
    }

    pub fn direct_sum(&self, other: &GModule) -> Result<GModule, BraidedError> {
        self.check_compatible(other)?;
        let n = self.dim + other.dim;
        let rho = self
            .group
            .elements()
            .map(|g| {
                let mut m = Matrix::zeros(self.field, n, n);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, self.act(g).get(i, j).clone());
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, other.act(g).get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Ok(GModule { group: self.group.clone(), field: self.field, dim: n, rho })
    }

    fn check_compatible(&self, other: &GModule) -> Result<(), BraidedError> {
        if self.group != other.group {
            return Err(BraidedError::Input("modules over different groups".into()));
        }
        if self.field != other.field {
            return Err(BraidedError::Input("modules over different fields".into()));
        }
        Ok(())
    }

    pub fn character(&self) -> Vec<Scalar> {
        self.rho.iter().map(Matrix::trace).collect()
    }

    /// Whether `map: self -> target` commutes with the actions.
    pub fn is_intertwiner(&self, target: &GModule, map: &Matrix) -> bool {
        map.rows() == target.dim
            && map.cols() == self.dim
            && self.group.generators().iter().all(|&g| {
                target.act(g).mul(map).ok() == map.mul(self.act(g)).ok()
            })
    }

    /// `rho(g)^{⊗n}`.
    pub fn tensor_power_action(&self, g: Elem, n: usize) -> Matrix {
        let mut m = Matrix::identity(self.field, 1);
        for _ in 0..n {
            m = m.kron(self.act(g)).expect("same field");
        }
        m
    }

    /// Invariants as the common fixed space of the generators.
    pub fn fixed_space(&self) -> Rref {
        let mut rows = Vec::new();
        for &g in self.group.generators() {
            let d = self.act(g).sub(&Matrix::identity(self.field, self.dim)).expect("shape");
            rows.extend(d.row_vectors());
        }
        let ker = Rref::span(self.field, self.dim, rows).kernel_basis();
        Rref::span(self.field, self.dim, ker)
    }

    /// Invariants as the image of the averaging operator; needs `|G|` invertible.
    pub fn reynolds_invariants(&self) -> Option<Rref> {
        let n = self.field.int(self.group.order() as i64).inv()?;
        let mut avg = Matrix::zeros(self.field, self.dim, self.dim);
        for m in &self.rho {
            avg = avg.add(m).expect("shape");
        }
        let avg = avg.scale(&n);
        Some(Rref::span(self.field, self.dim, avg.transpose().row_vectors()))
    }

    /// Basis of `End_G(V)`, by solving `X rho(g) = rho(g) X` on the generators.
    pub fn commutant_basis(&self) -> Vec<Matrix> {
        let d = self.dim;
        let mut rows = Vec::new();
        for &g in self.group.generators() {
            let r = self.act(g);
            for i in 0..d {
                for j in 0..d {
                    let mut row = vector::zeros(self.field, d * d);
                    for k in 0..d {
                        row[i * d + k] += r.get(k, j);
                        row[k * d + j] -= r.get(i, k);
                    }
                    rows.push(row);
                }
            }
        }
        Rref::span(self.field, d * d, rows)
            .kernel_basis()
            .into_iter()
            .map(|v| Matrix::new(self.field, d, d, v).expect("shape"))
            .collect()
    }

    /// Smallest invariant subspace containing `v`.
    pub fn spin(&self, v: &[Scalar]) -> Rref {
        let mut span = Rref::span(self.field, self.dim, vec![v.to_vec()]);
        loop {
            let mut rows = span.rows().to_vec();
            for &g in self.group.generators() {
                for r in span.rows() {
                    rows.push(self.act_vec(g, r));
                }
            }
            let next = Rref::span(self.field, self.dim, rows);
            if next.rank() == span.rank() {
                return span;
            }
            span = next;
        }
    }

    pub fn irreducibility(&self) -> Irreducibility {
        if self.dim <= 1 {
            return Irreducibility::Irreducible;
        }
        let comm = self.commutant_basis();
        if comm.len() == 1 {
            return Irreducibility::Irreducible;
        }
        for i in 0..self.dim {
            let s = self.spin(&vector::unit(self.field, self.dim, i));
            if s.rank() < self.dim {
                return Irreducibility::Reducible(s.rank());
            }
        }
        for x in &comm {
            for c in self.eigenvalue_candidates(x) {
                let shifted = x.sub(&Matrix::identity(self.field, self.dim).scale(&c)).expect("shape");
                let k = shifted.kernel_basis().len();
                if k > 0 && k < self.dim {
                    return Irreducibility::Reducible(k);
                }
            }
        }
        Irreducibility::Undetermined
    }

    /// Every element of a small prime field, or the integers up to `dim * max |x_ij|`
    /// for an integral rational matrix.
    fn eigenvalue_candidates(&self, x: &Matrix) -> Vec<Scalar> {
        if let Some(all) = self.field.elements() {
            return if all.len() <= 257 { all } else { vec![self.field.zero()] };
        }
        let mut bound: i64 = 0;
        for i in 0..x.rows() {
            for j in 0..x.cols() {
                match x.get(i, j).as_rational() {
                    Some(r) if r.is_integer() => match r.to_integer().to_i64() {
                        Some(v) => bound = bound.max(v.abs()),
                        None => return vec![self.field.zero()],
                    },
                    _ => return vec![self.field.zero()],
                }
            }
        }
        let bound = bound.saturating_mul(self.dim as i64).min(1000);
        (-bound..=bound).map(|c| self.field.int(c)).collect()
    }
}

/// A Yetter-Drinfeld module over `kG`: a module graded by projectors `P_h`.
#[derive(Clone, Debug)]
pub struct YDModule {
    base: GModule,
    grading: BTreeMap<Elem, Matrix>,
}

/// Result of [`YDModule::check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YdReport {
    pub pass: bool,
    pub failure: Option<String>,
}

impl YDModule {
    /// Stores the grading as given; nothing is checked until [`YDModule::check`].
    pub fn new(base: GModule, grading: BTreeMap<Elem, Matrix>) -> YDModule {
        let grading = grading.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        YDModule { base, grading }
    }

    /// Grading in which basis vector `i` lies in the component `degrees[i]`.
    pub fn from_basis_degrees(base: GModule, degrees: &[Elem]) -> YDModule {
        let f = base.field();
        let d = base.dim();
        let mut grading: BTreeMap<Elem, Matrix> = BTreeMap::new();
        for (i, &h) in degrees.iter().enumerate() {
            grading.entry(h).or_insert_with(|| Matrix::zeros(f, d, d)).set(i, i, f.one());
        }
        YDModule::new(base, grading)
    }

    /// Everything in the identity component.
    pub fn trivially_graded(base: GModule) -> YDModule {
        let d = base.dim();
        let degrees = vec![0; d];
        YDModule::from_basis_degrees(base, &degrees)
    }

    pub fn base(&self) -> &GModule {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        self.base.group()
    }

    pub fn grading(&self) -> &BTreeMap<Elem, Matrix> {
        &self.grading
    }

    /// Idempotence, orthogonality, completeness and `rho(g) P_h rho(g)^{-1} = P_{ghg^{-1}}`.
    pub fn check(&self) -> YdReport {
        let fail = |msg: String| YdReport { pass: false, failure: Some(msg) };
        let f = self.field();
        let d = self.dim();
        let g = self.group();
        let mut total = Matrix::zeros(f, d, d);
        for (&h, p) in &self.grading {
            if p.rows() != d || p.cols() != d {
                return fail(format!("projector at {} has the wrong shape", g.label(h)));
            }
            if &p.mul(p).expect("shape") != p {
                return fail(format!("projector at {} is not idempotent", g.label(h)));
            }
            for (&k, q) in &self.grading {
                if h != k && !p.mul(q).expect("shape").is_zero() {
                    return fail(format!("projectors at {} and {} are not orthogonal", g.label(h), g.label(k)));
                }
            }
            total = total.add(p).expect("shape");
        }
        if !total.is_identity() {
            return fail("projectors do not sum to the identity".into());
        }
        let zero = Matrix::zeros(f, d, d);
        for x in g.elements() {
            let r = self.base.act(x);
            let rinv = self.base.act(g.inv(x));
            for h in g.elements() {
                let p = self.grading.get(&h).unwrap_or(&zero);
                let moved = r.mul(p).and_then(|m| m.mul(rinv)).expect("shape");
                let target = self.grading.get(&g.conj(x, h)).unwrap_or(&zero);
                if &moved != target {
                    return fail(format!(
                        "conjugation axiom fails at g = {}, h = {}",
                        g.label(x),
                        g.label(h)
                    ));
                }
            }
        }
        YdReport { pass: true, failure: None }
    }

    /// The braiding `Psi(y ⊗ z) = h(z) ⊗ y` for `y` in degree `h`.
    pub fn braiding(&self) -> Result<Matrix, BraidedError> {
        let report = self.check();
        if !report.pass {
            return Err(BraidedError::Check(report.failure.unwrap_or_default()));
        }
        Ok(self.braiding_unchecked())
    }

    pub(crate) fn braiding_unchecked(&self) -> Matrix {
        let f = self.field();
        let d = self.dim();
        let mut psi = Matrix::zeros(f, d * d, d * d);
        for (&h, p) in &self.grading {
            let r = self.base.act(h);
            // Column (y, z) of Psi is sum_h rho(h) e_z ⊗ P_h e_y.
            for y in 0..d {
                for z in 0..d {
                    for a in 0..d {
                        let ra = r.get(a, z);
                        if ra.is_zero() {
                            continue;
                        }
                        for b in 0..d {
                            let pb = p.get(b, y);
                            if !pb.is_zero() {
                                psi.add_to(a * d + b, y * d + z, &(ra * pb));
                            }
                        }
                    }
                }
            }
        }
        psi
    }

    /// The coaction `v -> sum_h h ⊗ P_h v` as a family `L_h = P_h`.
    pub fn coaction_family(&self) -> BTreeMap<Elem, Matrix> {
        self.grading.clone()
    }

    /// Graded dual: `V*` with `(V*)_h` dual to `V_{h^{-1}}`, stored as a left module.
    pub fn dual(&self) -> YDModule {
        let g = self.group().clone();
        let grading = self
            .grading
            .iter()
            .map(|(&h, p)| (g.inv(h), p.transpose()))
            .collect();
        YDModule::new(self.base.dual(), grading)
    }
}
