//! Quasi-Yetter-Drinfeld structures over `kG`: a module with a family `{L_h}` encoding
//! the quasicoaction `delta(v) = sum_h h ⊗ L_h(v)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use exact_linalg::{Field, Matrix, Scalar};
use serde::Serialize;

use crate::gmodule::{GModule, YDModule};
use crate::group::{Elem, FinGroup};
use crate::tensor::{on_legs, pow};
use crate::BraidedError;

#[derive(Clone, Debug)]
pub struct QydStructure {
    module: GModule,
    family: BTreeMap<Elem, Matrix>,
}

/// Pass/fail with the first violating witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub pass: bool,
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn ok() -> CheckReport {
        CheckReport { pass: true, witness: None }
    }

    pub fn fail(w: impl Into<String>) -> CheckReport {
        CheckReport { pass: false, witness: Some(w.into()) }
    }
}

/// A pair of maps `mu: V -> W`, `nu: W -> V`.
#[derive(Clone, Debug)]
pub struct SubquotientPair {
    pub mu: Matrix,
    pub nu: Matrix,
}

impl QydStructure {
    /// Keeps only nonzero `L_h`; shapes are validated, the YD identity is not.
    pub fn new(module: GModule, family: BTreeMap<Elem, Matrix>) -> Result<QydStructure, BraidedError> {
        let d = module.dim();
        for (&h, m) in &family {
            if h as usize >= module.group().order() {
                return Err(BraidedError::Input(format!("group element {h} out of range")));
            }
            if m.rows() != d || m.cols() != d || m.field() != module.field() {
                return Err(BraidedError::Input(format!("L_{h} has the wrong shape or field")));
            }
        }
        let family = family.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        Ok(QydStructure { module, family })
    }

    pub fn zero(module: GModule) -> QydStructure {
        QydStructure { module, family: BTreeMap::new() }
    }

    /// The honest coaction of a Yetter-Drinfeld module.
    pub fn from_yd(y: &YDModule) -> QydStructure {
        QydStructure { module: y.base().clone(), family: y.coaction_family() }
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        self.module.group()
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn family(&self) -> &BTreeMap<Elem, Matrix> {
        &self.family
    }

    pub fn l(&self, h: Elem) -> Option<&Matrix> {
        self.family.get(&h)
    }

    pub fn support(&self) -> Vec<Elem> {
        self.family.keys().copied().collect()
    }

    /// `beta(f, v) = sum_h <f, L_h v> h` on basis vectors, as coefficients per element.
    pub fn beta(&self, f: usize, v: usize) -> Vec<(Elem, Scalar)> {
        self.family
            .iter()
            .filter_map(|(&h, m)| {
                let c = m.get(f, v);
                (!c.is_zero()).then(|| (h, c.clone()))
            })
            .collect()
    }

    /// `delta` as a `(|G| dim) x dim` matrix into `kG ⊗ V`, group leg most significant.
    pub fn delta_matrix(&self) -> Matrix {
        let d = self.dim();
        let n = self.group().order();
        let mut m = Matrix::zeros(self.field(), n * d, d);
        for (&h, l) in &self.family {
            for i in 0..d {
                for j in 0..d {
                    m.set(h as usize * d + i, j, l.get(i, j).clone());
                }
            }
        }
        m
    }

    /// `sum_h L_h`.
    pub fn total(&self) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(self.field(), d, d);
        for l in self.family.values() {
            m = m.add(l).expect("shape");
        }
        m
    }

    /// `rho(g) L_h = L_{ghg^{-1}} rho(g)` for all `g, h`.
    pub fn check(&self) -> CheckReport {
        let g = self.group();
        let d = self.dim();
        let zero = Matrix::zeros(self.field(), d, d);
        for x in g.elements() {
            let r = self.module.act(x);
            for h in g.elements() {
                let lh = self.family.get(&h).unwrap_or(&zero);
                let lc = self.family.get(&g.conj(x, h)).unwrap_or(&zero);
                if r.mul(lh).expect("shape") != lc.mul(r).expect("shape") {
                    return CheckReport::fail(format!(
                        "g = {}, h = {}: g L_h != L_(ghg^-1) g",
                        g.label(x),
                        g.label(h)
                    ));
                }
            }
        }
        CheckReport::ok()
    }

    /// `Y(V) = kG ⊗ V` with `g(x ⊗ v) = gxg^{-1} ⊗ g(v)`, graded by `x`, with
    /// `mu = delta` and `nu = epsilon ⊗ id`.
    pub fn build_yv(&self) -> Result<(YDModule, SubquotientPair), BraidedError> {
        let report = self.check();
        if !report.pass {
            return Err(BraidedError::Check(report.witness.unwrap_or_default()));
        }
        let g = self.group().clone();
        let f = self.field();
        let d = self.dim();
        let n = g.order();
        let rho = g
            .elements()
            .map(|x| {
                let mut conj = Matrix::zeros(f, n, n);
                for y in g.elements() {
                    conj.set(g.conj(x, y) as usize, y as usize, f.one());
                }
                conj.kron(self.module.act(x)).expect("field")
            })
            .collect();
        let base = GModule::new(g.clone(), f, rho)?;
        let mut grading = BTreeMap::new();
        for x in g.elements() {
            let mut e = Matrix::zeros(f, n, n);
            e.set(x as usize, x as usize, f.one());
            grading.insert(x, e.kron(&Matrix::identity(f, d)).expect("field"));
        }
        let yd = YDModule::new(base, grading);
        let mut nu = Matrix::zeros(f, d, n * d);
        for x in 0..n {
            for i in 0..d {
                nu.set(i, x * d + i, f.one());
            }
        }
        Ok((yd, SubquotientPair { mu: self.delta_matrix(), nu }))
    }

    /// `L^V_h = nu L^W_h mu` along intertwiners `mu: V -> W`, `nu: W -> V`.
    pub fn induce_subquotient(&self, v: &GModule, pair: &SubquotientPair) -> Result<QydStructure, BraidedError> {
        if !v.is_intertwiner(&self.module, &pair.mu) {
            return Err(BraidedError::Check("mu is not a module map".into()));
        }
        if !self.module.is_intertwiner(v, &pair.nu) {
            return Err(BraidedError::Check("nu is not a module map".into()));
        }
        let family = self
            .family
            .iter()
            .map(|(&h, l)| Ok((h, pair.nu.mul(l)?.mul(&pair.mu)?)))
            .collect::<Result<BTreeMap<_, _>, BraidedError>>()?;
        QydStructure::new(v.clone(), family)
    }

    /// `L_h = sum_k t_k L^(k)_h` over structures on one module.
    pub fn mix(parts: &[(Scalar, &QydStructure)]) -> Result<QydStructure, BraidedError> {
        let first = parts.first().ok_or_else(|| BraidedError::Input("empty mixture".into()))?;
        let module = first.1.module.clone();
        let mut family: BTreeMap<Elem, Matrix> = BTreeMap::new();
        for (t, q) in parts {
            if q.module.group() != module.group() || q.module.matrices() != module.matrices() {
                return Err(BraidedError::Input("mixture of structures on different modules".into()));
            }
            for (&h, l) in &q.family {
                let term = l.scale(t);
                let entry = family.entry(h).or_insert_with(|| Matrix::zeros(module.field(), module.dim(), module.dim()));
                *entry = entry.add(&term)?;
            }
        }
        QydStructure::new(module, family)
    }

    /// The right quasicoaction on `V*`: `f -> sum_h (f ∘ L_h) ⊗ h`, as `(f∘L_h)` coordinates.
    pub fn right_coaction(&self, f: &[Scalar]) -> Vec<(Elem, Vec<Scalar>)> {
        self.family
            .iter()
            .map(|(&h, l)| {
                let img: Vec<Scalar> = (0..self.dim())
                    .map(|j| {
                        let mut s = self.field().zero();
                        for i in 0..self.dim() {
                            if !f[i].is_zero() {
                                s += &(&f[i] * l.get(i, j));
                            }
                        }
                        s
                    })
                    .collect();
                (h, img)
            })
            .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
            .collect()
    }
}

/// One-dimensional structures `h.v = alpha(h) v`, `delta(v) = p ⊗ v`.
#[derive(Clone, Debug, Serialize)]
pub struct OneDimReport {
    pub multiplicative: bool,
    pub central: bool,
    pub qyd_pass: bool,
    pub pass: bool,
}

pub fn classify_1dim_check(
    group: &Arc<FinGroup>,
    alpha: &[Scalar],
    p: &[Scalar],
) -> Result<OneDimReport, BraidedError> {
    let n = group.order();
    if alpha.len() != n || p.len() != n {
        return Err(BraidedError::Input("character and central element need one value per element".into()));
    }
    let field = alpha[0].field();
    let multiplicative = alpha[0].is_one()
        && group
            .elements()
            .all(|a| group.elements().all(|b| alpha[group.mul(a, b) as usize] == &alpha[a as usize] * &alpha[b as usize]));
    let central = group.is_central(p);
    let qyd_pass = if multiplicative {
        let rho = alpha.iter().map(|a| Matrix::new(field, 1, 1, vec![a.clone()])).collect::<Result<Vec<_>, _>>()?;
        let module = GModule::new(group.clone(), field, rho)?;
        let family = group
            .elements()
            .map(|h| Ok((h, Matrix::new(field, 1, 1, vec![p[h as usize].clone()])?)))
            .collect::<Result<BTreeMap<_, _>, BraidedError>>()?;
        QydStructure::new(module, family)?.check().pass
    } else {
        false
    };
    Ok(OneDimReport { multiplicative, central, qyd_pass, pass: multiplicative && central && qyd_pass })
}

/// Braid equation `Psi_12 Psi_23 Psi_12 = Psi_23 Psi_12 Psi_23`, plus invertibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidReport {
    pub braid_equation: bool,
    pub invertible: bool,
}

pub fn braid_equation_check(psi: &Matrix, d: usize) -> BraidReport {
    let p12 = on_legs(psi, d, 0, 2, 3);
    let p23 = on_legs(psi, d, 1, 2, 3);
    let lhs = p12.mul(&p23).and_then(|m| m.mul(&p12)).expect("shape");
    let rhs = p23.mul(&p12).and_then(|m| m.mul(&p23)).expect("shape");
    BraidReport { braid_equation: lhs == rhs, invertible: psi.rank() == psi.rows() }
}

/// A finite family of mutually compatible braidings on one space.
#[derive(Clone, Debug)]
pub struct CompatibleFamily {
    dim: usize,
    braidings: Vec<Matrix>,
}

impl CompatibleFamily {
    /// Checks each braid equation and `Psi'_12 Psi_23 Psi_12 = Psi_23 Psi_12 Psi'_23`
    /// for every ordered pair.
    pub fn new(dim: usize, braidings: Vec<Matrix>) -> Result<CompatibleFamily, BraidedError> {
        for (i, psi) in braidings.iter().enumerate() {
            if psi.rows() != dim * dim || psi.cols() != dim * dim {
                return Err(BraidedError::Input(format!("braiding {i} has the wrong shape")));
            }
            let rep = braid_equation_check(psi, dim);
            if !rep.braid_equation {
                return Err(BraidedError::Check(format!("braiding {i} fails the braid equation")));
            }
        }
        for (i, a) in braidings.iter().enumerate() {
            for (j, b) in braidings.iter().enumerate() {
                if i == j {
                    continue;
                }
                let b12 = on_legs(b, dim, 0, 2, 3);
                let a23 = on_legs(a, dim, 1, 2, 3);
                let a12 = on_legs(a, dim, 0, 2, 3);
                let b23 = on_legs(b, dim, 1, 2, 3);
                let lhs = b12.mul(&a23)?.mul(&a12)?;
                let rhs = a23.mul(&a12)?.mul(&b23)?;
                if lhs != rhs {
                    return Err(BraidedError::Check(format!("braidings {i} and {j} are not compatible")));
                }
            }
        }
        Ok(CompatibleFamily { dim, braidings })
    }

    /// `Psi_Pi^{1,n} = sum_Psi Psi_{n,n+1} ... Psi_{12}` on `V^{⊗(n+1)}`.
    pub fn psi_one(&self, n: usize) -> Matrix {
        let f = self.braidings[0].field();
        let size = pow(self.dim, n + 1);
        let mut total = Matrix::zeros(f, size, size);
        for psi in &self.braidings {
            let mut m = Matrix::identity(f, size);
            for k in 0..n {
                m = on_legs(psi, self.dim, k, 2, n + 1).mul(&m).expect("shape");
            }
            total = total.add(&m).expect("shape");
        }
        total
    }

    /// `Psi_Pi^{m,n} = (Psi^{1,n})_{1..n+1} (Psi^{1,n})_{2..n+2} ... (Psi^{1,n})_{m..m+n}`.
    pub fn psi(&self, m: usize, n: usize) -> Matrix {
        let f = self.braidings[0].field();
        let one = self.psi_one(n);
        let mut total = Matrix::identity(f, pow(self.dim, m + n));
        for k in 0..m {
            total = total.mul(&on_legs(&one, self.dim, k, n + 1, m + n)).expect("shape");
        }
        total
    }

    pub fn braidings(&self) -> &[Matrix] {
        &self.braidings
    }
}
