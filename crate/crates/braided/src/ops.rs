//! Braided and quasibraided integers and factorials, the Woronowicz symmetriser and
//! its deformations.
//!
//! Dense operators are assembled for moderate degrees; the degree-by-degree kernel
//! computations used by the quotient towers work with sparse images of basis words.

use std::collections::HashMap;

use exact_linalg::{vector, Field, Matrix, Rref, Scalar};

use crate::generic::{specialise_matrix, GenericParams};
use crate::group::Elem;
use crate::quotient::{GradedQuotient, Growth};
use crate::qyd::{braid_equation_check, CompatibleFamily, QydStructure};
use crate::tensor::{apply_diagonal, flip, index_word, on_legs, pow, word_index, Word};
use crate::BraidedError;

/// Default largest degree for the permutation-sum oracle.
pub const ORACLE_CAP: usize = 5;

/// Where a degree-`n` operator lands. `group_leg` lists the group elements spanning the
/// `kG` legs (the support of the quasicoaction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Codomain {
    /// `V^{⊗n}`.
    Tensor,
    /// `V^{⊗(n-1)} ⊗ kG ⊗ V`.
    QuasiInteger { group_leg: Vec<Elem> },
    /// `(kG ⊗ V)^{⊗n}`.
    QuasiFactorial { group_leg: Vec<Elem> },
    /// `V* ⊗ kG ⊗ V*^{⊗(n-1)}`.
    RightQuasiInteger { group_leg: Vec<Elem> },
    /// `(V* ⊗ kG)^{⊗n}`.
    RightQuasiFactorial { group_leg: Vec<Elem> },
}

#[derive(Clone, Debug)]
pub struct DegreeOperator {
    pub degree: usize,
    pub dim: usize,
    pub codomain: Codomain,
    pub matrix: Matrix,
}

impl DegreeOperator {
    pub fn expected_rows(&self) -> usize {
        let (d, n) = (self.dim, self.degree);
        match &self.codomain {
            Codomain::Tensor => pow(d, n),
            Codomain::QuasiInteger { group_leg } | Codomain::RightQuasiInteger { group_leg } => {
                if n == 0 {
                    0
                } else {
                    pow(d, n - 1) * group_leg.len() * d
                }
            }
            Codomain::QuasiFactorial { group_leg } | Codomain::RightQuasiFactorial { group_leg } => {
                pow(group_leg.len() * d, n)
            }
        }
    }

    pub fn check_shape(&self) -> Result<(), BraidedError> {
        if self.matrix.cols() != pow(self.dim, self.degree) || self.matrix.rows() != self.expected_rows() {
            return Err(BraidedError::Input(format!(
                "operator of degree {} on dim {} has shape {}x{}",
                self.degree,
                self.dim,
                self.matrix.rows(),
                self.matrix.cols()
            )));
        }
        Ok(())
    }

    /// `self ∘ other` for endomorphisms of `V^{⊗n}` feeding this operator.
    pub fn after(&self, other: &DegreeOperator) -> Result<DegreeOperator, BraidedError> {
        if other.codomain != Codomain::Tensor || other.degree != self.degree || other.dim != self.dim {
            return Err(BraidedError::Input("operators do not compose".into()));
        }
        let out = DegreeOperator {
            degree: self.degree,
            dim: self.dim,
            codomain: self.codomain.clone(),
            matrix: self.matrix.mul(&other.matrix)?,
        };
        out.check_shape()?;
        Ok(out)
    }

    pub fn kernel(&self) -> Rref {
        Rref::span(self.matrix.field(), self.matrix.cols(), self.matrix.kernel_basis())
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// `dim V` for a square braiding matrix on `V ⊗ V`.
pub fn braiding_dim(psi: &Matrix) -> Result<usize, BraidedError> {
    let n = psi.rows();
    let d = (n as f64).sqrt().round() as usize;
    if !psi.is_square() || d * d != n {
        return Err(BraidedError::Input(format!("{}x{} is not an operator on V ⊗ V", psi.rows(), psi.cols())));
    }
    Ok(d)
}

fn checked_braiding(psi: &Matrix) -> Result<usize, BraidedError> {
    let d = braiding_dim(psi)?;
    if !braid_equation_check(psi, d).braid_equation {
        return Err(BraidedError::Check("the operator does not satisfy the braid equation".into()));
    }
    Ok(d)
}

fn tensor_op(degree: usize, dim: usize, matrix: Matrix) -> DegreeOperator {
    DegreeOperator { degree, dim, codomain: Codomain::Tensor, matrix }
}

fn integer_matrix(psi: &Matrix, d: usize, n: usize) -> Matrix {
    let f = psi.field();
    let size = pow(d, n);
    let mut term = Matrix::identity(f, size);
    let mut total = term.clone();
    for k in 1..n {
        term = term.mul(&on_legs(psi, d, n - 1 - k, 2, n)).expect("shape");
        total = total.add(&term).expect("shape");
    }
    total
}

/// `[n]_Psi = id + Psi_{n-1,n} + Psi_{n-1,n} Psi_{n-2,n-1} + ... + Psi_{n-1,n} ... Psi_{12}`.
pub fn braided_integer(psi: &Matrix, n: usize) -> Result<DegreeOperator, BraidedError> {
    let d = checked_braiding(psi)?;
    Ok(tensor_op(n, d, integer_matrix(psi, d, n)))
}

fn factorial_from(integers: impl Fn(usize) -> Matrix, f: Field, d: usize, n: usize) -> Matrix {
    let mut total = Matrix::identity(f, pow(d, n));
    for k in 2..=n {
        let factor = integers(k).kron(&Matrix::identity(f, pow(d, n - k))).expect("field");
        total = total.mul(&factor).expect("shape");
    }
    total
}

/// `[n]!_Psi = ([2]_Psi ⊗ id) ... ([n-1]_Psi ⊗ id) [n]_Psi`.
pub fn braided_factorial(psi: &Matrix, n: usize) -> Result<DegreeOperator, BraidedError> {
    let d = checked_braiding(psi)?;
    Ok(tensor_op(n, d, factorial_from(|k| integer_matrix(psi, d, k), psi.field(), d, n)))
}

/// Columns of `Psi` as sparse lists `(x, y, c)` with `Psi(e_a ⊗ e_b) = sum c e_x ⊗ e_y`.
#[derive(Clone, Debug)]
pub struct SparseBraiding {
    dim: usize,
    columns: Vec<Vec<(u8, u8, Scalar)>>,
}

impl SparseBraiding {
    pub fn new(psi: &Matrix) -> Result<SparseBraiding, BraidedError> {
        let d = braiding_dim(psi)?;
        let columns = (0..d * d)
            .map(|c| {
                (0..d * d)
                    .filter(|&r| !psi.get(r, c).is_zero())
                    .map(|r| ((r / d) as u8, (r % d) as u8, psi.get(r, c).clone()))
                    .collect()
            })
            .collect();
        Ok(SparseBraiding { dim: d, columns })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Applies `Psi` on legs `i, i+1` (zero-based) to a sparse tensor.
    pub fn apply_at(&self, terms: &HashMap<Word, Scalar>, i: usize) -> HashMap<Word, Scalar> {
        let mut out: HashMap<Word, Scalar> = HashMap::new();
        for (w, c) in terms {
            let col = w[i] as usize * self.dim + w[i + 1] as usize;
            for (x, y, a) in &self.columns[col] {
                let mut u = w.clone();
                u[i] = *x;
                u[i + 1] = *y;
                accumulate(&mut out, u, c * a);
            }
        }
        out
    }

    /// `[n]_Psi` applied to one basis word.
    pub fn integer_image(&self, w: &[u8]) -> HashMap<Word, Scalar> {
        let n = w.len();
        let one = self.unit_scalar();
        let start: HashMap<Word, Scalar> = HashMap::from([(w.to_vec(), one)]);
        let mut total = start.clone();
        // The k-th term carries letter n-1-k to the end: Psi at legs (n-1-k, n-k) acts first.
        for k in 1..n {
            let mut term = start.clone();
            for i in n - 1 - k..n - 1 {
                term = self.apply_at(&term, i);
            }
            for (u, c) in term {
                accumulate(&mut total, u, c);
            }
        }
        total.retain(|_, c| !c.is_zero());
        total
    }

    fn unit_scalar(&self) -> Scalar {
        self.columns
            .iter()
            .flatten()
            .next()
            .map(|(_, _, c)| c.field().one())
            .expect("a braiding has nonzero entries")
    }
}

fn accumulate(map: &mut HashMap<Word, Scalar>, w: Word, c: Scalar) {
    match map.get_mut(&w) {
        Some(slot) => *slot += &c,
        None => {
            map.insert(w, c);
        }
    }
}

/// A reduced word for `sigma` (one-line notation) found by insertion sort: the returned
/// adjacent transpositions `s_i` (zero-based `i`) sort `sigma` when applied in order.
pub fn reduced_word(sigma: &[usize]) -> Vec<usize> {
    let mut a = sigma.to_vec();
    let mut word = Vec::new();
    for j in 1..a.len() {
        let mut i = j;
        while i > 0 && a[i - 1] > a[i] {
            a.swap(i - 1, i);
            word.push(i - 1);
            i -= 1;
        }
    }
    word
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// `sum_{sigma in S_n} Psi_sigma`, each term taken along an insertion-sort reduced word.
pub fn woronowicz_oracle(psi: &Matrix, n: usize, cap: usize) -> Result<DegreeOperator, BraidedError> {
    if n > cap {
        return Err(BraidedError::CapExceeded(format!("oracle degree {n} exceeds cap {cap}")));
    }
    let d = checked_braiding(psi)?;
    let f = psi.field();
    let sparse = SparseBraiding::new(psi)?;
    let words: Vec<Vec<usize>> = permutations(n).iter().map(|s| reduced_word(s)).collect();
    let size = pow(d, n);
    let mut m = Matrix::zeros(f, size, size);
    for col in 0..size {
        let w = index_word(col, d, n);
        for word in &words {
            let mut t = HashMap::from([(w.clone(), f.one())]);
            for &i in word {
                t = sparse.apply_at(&t, i);
            }
            for (u, c) in t {
                m.add_to(word_index(&u, d), col, &c);
            }
        }
    }
    Ok(tensor_op(n, d, m))
}

/// Index of a group element inside a `group_leg` list.
fn leg_positions(group_leg: &[Elem]) -> HashMap<Elem, usize> {
    group_leg.iter().enumerate().map(|(i, &h)| (h, i)).collect()
}

/// Sparse image of a basis word under the left quasibraided integer, as terms
/// `(word of length n-1, h, j, c)` meaning `c * word ⊗ h ⊗ v_j`.
pub fn quasi_integer_terms(q: &QydStructure, w: &[u8]) -> Vec<(Word, Elem, usize, Scalar)> {
    let d = q.dim();
    let mut out = Vec::new();
    for i in 0..w.len() {
        for (&h, l) in q.family() {
            let vi = w[i] as usize;
            let moved = apply_diagonal(q.module().act(h), &w[i + 1..]);
            for j in 0..d {
                let a = l.get(j, vi);
                if a.is_zero() {
                    continue;
                }
                for (suffix, c) in &moved {
                    let mut word = w[..i].to_vec();
                    word.extend_from_slice(suffix);
                    out.push((word, h, j, a * c));
                }
            }
        }
    }
    out
}

/// Sparse image of a dual basis word under the right quasibraided integer, as terms
/// `(j, h, word of length n-1, c)` meaning `c * f_j ⊗ h ⊗ word`.
pub fn right_quasi_integer_terms(q: &QydStructure, w: &[u8]) -> Vec<(usize, Elem, Word, Scalar)> {
    let d = q.dim();
    let mut out = Vec::new();
    for i in 0..w.len() {
        for (&h, l) in q.family() {
            let fi = w[i] as usize;
            // f_a ◁ h = rho(h)^T f_a, a diagonal action on the prefix.
            let moved = apply_diagonal(&q.module().act(h).transpose(), &w[..i]);
            for j in 0..d {
                let a = l.get(fi, j);
                if a.is_zero() {
                    continue;
                }
                for (prefix, c) in &moved {
                    let mut word = prefix.clone();
                    word.extend_from_slice(&w[i + 1..]);
                    out.push((j, h, word, a * c));
                }
            }
        }
    }
    out
}

/// The left quasibraided integer `V^{⊗n} -> V^{⊗(n-1)} ⊗ kG ⊗ V`.
pub fn quasibraided_integer(q: &QydStructure, n: usize) -> Result<DegreeOperator, BraidedError> {
    require_qyd(q)?;
    let d = q.dim();
    let group_leg = q.support();
    let pos = leg_positions(&group_leg);
    let s = group_leg.len();
    let mut m = Matrix::zeros(q.field(), if n == 0 { 0 } else { pow(d, n - 1) * s * d }, pow(d, n));
    for col in 0..pow(d, n) {
        let w = index_word(col, d, n);
        for (word, h, j, c) in quasi_integer_terms(q, &w) {
            m.add_to((word_index(&word, d) * s + pos[&h]) * d + j, col, &c);
        }
    }
    let op = DegreeOperator { degree: n, dim: d, codomain: Codomain::QuasiInteger { group_leg }, matrix: m };
    op.check_shape()?;
    Ok(op)
}

fn quasi_factorial_terms(q: &QydStructure, w: &[u8], pos: &HashMap<Elem, usize>) -> Vec<(Vec<usize>, Scalar)> {
    // Pairs are listed from the first leg; each pair is encoded as `s * d + j`.
    if w.is_empty() {
        return vec![(Vec::new(), q.field().one())];
    }
    let d = q.dim();
    let mut out = Vec::new();
    for (word, h, j, c) in quasi_integer_terms(q, w) {
        for (mut pairs, c2) in quasi_factorial_terms(q, &word, pos) {
            pairs.push(pos[&h] * d + j);
            out.push((pairs, &c * &c2));
        }
    }
    out
}

fn right_quasi_factorial_terms(q: &QydStructure, w: &[u8], pos: &HashMap<Elem, usize>) -> Vec<(Vec<usize>, Scalar)> {
    if w.is_empty() {
        return vec![(Vec::new(), q.field().one())];
    }
    let s = pos.len();
    let mut out = Vec::new();
    for (j, h, word, c) in right_quasi_integer_terms(q, w) {
        for (rest, c2) in right_quasi_factorial_terms(q, &word, pos) {
            let mut pairs = vec![j * s + pos[&h]];
            pairs.extend(rest);
            out.push((pairs, &c * &c2));
        }
    }
    out
}

fn require_qyd(q: &QydStructure) -> Result<(), BraidedError> {
    let rep = q.check();
    if !rep.pass {
        return Err(BraidedError::Check(rep.witness.unwrap_or_default()));
    }
    Ok(())
}

/// `([1]~ ⊗ id) ... [n]~ : V^{⊗n} -> (kG ⊗ V)^{⊗n}`.
pub fn quasibraided_factorial(q: &QydStructure, n: usize) -> Result<DegreeOperator, BraidedError> {
    require_qyd(q)?;
    let d = q.dim();
    let group_leg = q.support();
    let pos = leg_positions(&group_leg);
    let base = group_leg.len() * d;
    let mut m = Matrix::zeros(q.field(), pow(base, n), pow(d, n));
    for col in 0..pow(d, n) {
        let w = index_word(col, d, n);
        for (pairs, c) in quasi_factorial_terms(q, &w, &pos) {
            let row = pairs.iter().fold(0, |acc, &p| acc * base + p);
            m.add_to(row, col, &c);
        }
    }
    let op = DegreeOperator { degree: n, dim: d, codomain: Codomain::QuasiFactorial { group_leg }, matrix: m };
    op.check_shape()?;
    Ok(op)
}

/// The right quasibraided integer on `V*^{⊗n}`.
pub fn right_quasibraided_integer(q: &QydStructure, n: usize) -> Result<DegreeOperator, BraidedError> {
    require_qyd(q)?;
    let d = q.dim();
    let group_leg = q.support();
    let pos = leg_positions(&group_leg);
    let s = group_leg.len();
    let rest = if n == 0 { 0 } else { pow(d, n - 1) };
    let mut m = Matrix::zeros(q.field(), rest * s * d, pow(d, n));
    for col in 0..pow(d, n) {
        let w = index_word(col, d, n);
        for (j, h, word, c) in right_quasi_integer_terms(q, &w) {
            m.add_to((j * s + pos[&h]) * rest + word_index(&word, d), col, &c);
        }
    }
    let op = DegreeOperator { degree: n, dim: d, codomain: Codomain::RightQuasiInteger { group_leg }, matrix: m };
    op.check_shape()?;
    Ok(op)
}

/// The right quasibraided factorial `V*^{⊗n} -> (V* ⊗ kG)^{⊗n}`.
pub fn right_quasibraided_factorial(q: &QydStructure, n: usize) -> Result<DegreeOperator, BraidedError> {
    require_qyd(q)?;
    let d = q.dim();
    let group_leg = q.support();
    let pos = leg_positions(&group_leg);
    let base = group_leg.len() * d;
    let mut m = Matrix::zeros(q.field(), pow(base, n), pow(d, n));
    for col in 0..pow(d, n) {
        let w = index_word(col, d, n);
        for (pairs, c) in right_quasi_factorial_terms(q, &w, &pos) {
            let row = pairs.iter().fold(0, |acc, &p| acc * base + p);
            m.add_to(row, col, &c);
        }
    }
    let op = DegreeOperator { degree: n, dim: d, codomain: Codomain::RightQuasiFactorial { group_leg }, matrix: m };
    op.check_shape()?;
    Ok(op)
}

/// `delta^{⊗n}: V^{⊗n} -> (kG ⊗ V)^{⊗n}` with the group legs restricted to `group_leg`.
pub fn delta_power(q: &QydStructure, group_leg: &[Elem], n: usize) -> Matrix {
    let d = q.dim();
    let s = group_leg.len();
    let mut delta = Matrix::zeros(q.field(), s * d, d);
    for (k, h) in group_leg.iter().enumerate() {
        if let Some(l) = q.l(*h) {
            for i in 0..d {
                for j in 0..d {
                    delta.set(k * d + i, j, l.get(i, j).clone());
                }
            }
        }
    }
    let mut m = Matrix::identity(q.field(), 1);
    for _ in 0..n {
        m = m.kron(&delta).expect("field");
    }
    m
}

/// `(epsilon ⊗ id)^{⊗n}: (kG ⊗ V)^{⊗n} -> V^{⊗n}`.
pub fn counit_power(field: Field, d: usize, group_leg_len: usize, n: usize) -> Matrix {
    let mut pi = Matrix::zeros(field, d, group_leg_len * d);
    for k in 0..group_leg_len {
        for i in 0..d {
            pi.set(i, k * d + i, field.one());
        }
    }
    let mut m = Matrix::identity(field, 1);
    for _ in 0..n {
        m = m.kron(&pi).expect("field");
    }
    m
}

/// `[n]!_{Psi,tau}` at the given values `u_2, ..., u_n`.
pub fn deformed_factorial_at(psi: &Matrix, n: usize, us: &[Scalar]) -> Result<Matrix, BraidedError> {
    let d = braiding_dim(psi)?;
    if us.len() + 1 < n {
        return Err(BraidedError::Input(format!("degree {n} needs {} deformation parameters", n - 1)));
    }
    let f = psi.field();
    let tau = flip(f, d);
    let integers = |k: usize| {
        integer_matrix(psi, d, k)
            .add(&integer_matrix(&tau, d, k).scale(&us[k - 2]))
            .expect("shape")
    };
    Ok(factorial_from(integers, f, d, n))
}

/// A kernel that agreed across all random specialisations.
#[derive(Clone, Debug)]
pub struct StableKernel {
    pub degree: usize,
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<Vec<Scalar>>,
    pub trials: usize,
}

/// Kernel of `[n]!_{Psi,tau}` at generic `u_k`, via repeated random specialisation.
pub fn deformed_factorial(psi: &Matrix, n: usize, params: &GenericParams) -> Result<StableKernel, BraidedError> {
    let d = braiding_dim(psi)?;
    CompatibleFamily::new(d, vec![psi.clone(), flip(psi.field(), d)])?;
    if psi.field().characteristic() != 0 && psi.field().characteristic() != params.modulus {
        return Err(BraidedError::Input(
            "generic specialisation needs a field of size at least 2^31; use rationals".into(),
        ));
    }
    if params.names.len() + 1 < n {
        return Err(BraidedError::Input(format!("degree {n} needs {} deformation parameters", n - 1)));
    }
    let field = params.field();
    let local = specialise_matrix(psi, field)?;
    let mut reference: Option<Rref> = None;
    for (t, us) in params.samples().iter().enumerate() {
        let m = deformed_factorial_at(&local, n, us)?;
        let kernel = Rref::span(field, m.cols(), m.kernel_basis());
        match &reference {
            None => reference = Some(kernel),
            Some(r) if r.rows() != kernel.rows() => {
                return Err(BraidedError::Unstable(format!(
                    "degree {n}: trial {t} gives kernel dimension {} against {}",
                    kernel.rank(),
                    r.rank()
                )))
            }
            Some(_) => {}
        }
    }
    let r = reference.expect("at least two trials");
    Ok(StableKernel { degree: n, field, dim: r.rank(), basis: r.rows().to_vec(), trials: params.trials })
}

/// `T(V)/I` with `I_n = ker [n]!_Psi`, built degree by degree.
pub fn nichols_quotient(psi: &Matrix, max_degree: usize) -> Result<GradedQuotient, BraidedError> {
    let sparse = SparseBraiding::new(psi)?;
    checked_braiding(psi)?;
    let d = sparse.dim();
    GradedQuotient::build(psi.field(), d, Growth::Append, max_degree, |n, partial| {
        if n == 1 {
            return Ok(Vec::new());
        }
        partial.kernel_step(n, partial.ext_dim(n), |w| {
            let mut out = vector::zeros(psi.field(), partial.ext_dim(n));
            for (u, c) in sparse.integer_image(w) {
                vector::axpy(&mut out, &c, &partial.ext_coords(&u)?);
            }
            Ok(out)
        })
    })
}

/// The left minimal quotient `T(V)/I(V, delta)`, with `I_n = ker` of the quasibraided
/// factorial, built degree by degree.
pub fn minimal_left_quotient(q: &QydStructure, max_degree: usize) -> Result<GradedQuotient, BraidedError> {
    require_qyd(q)?;
    let d = q.dim();
    let group_leg = q.support();
    let pos = leg_positions(&group_leg);
    let s = group_leg.len();
    let field = q.field();
    GradedQuotient::build(field, d, Growth::Append, max_degree, |n, partial| {
        let a = partial.dim(n - 1);
        let target = a * s * d;
        partial.kernel_step(n, target, |w| {
            let mut out = vector::zeros(field, target);
            for (word, h, j, c) in quasi_integer_terms(q, w) {
                let red = partial.reduce_word(&word)?;
                for (r, x) in red.iter().enumerate() {
                    if !x.is_zero() {
                        out[(r * s + pos[&h]) * d + j] += &(x * &c);
                    }
                }
            }
            Ok(out)
        })
    })
}

/// The right minimal quotient `T(V*)/I(V*, delta)`, grown by prepending.
pub fn minimal_right_quotient(q: &QydStructure, max_degree: usize) -> Result<GradedQuotient, BraidedError> {
    require_qyd(q)?;
    let d = q.dim();
    let group_leg = q.support();
    let pos = leg_positions(&group_leg);
    let s = group_leg.len();
    let field = q.field();
    GradedQuotient::build(field, d, Growth::Prepend, max_degree, |n, partial| {
        let a = partial.dim(n - 1);
        let target = d * s * a;
        partial.kernel_step(n, target, |w| {
            let mut out = vector::zeros(field, target);
            for (j, h, word, c) in right_quasi_integer_terms(q, w) {
                let red = partial.reduce_word(&word)?;
                for (r, x) in red.iter().enumerate() {
                    if !x.is_zero() {
                        out[(j * s + pos[&h]) * a + r] += &(x * &c);
                    }
                }
            }
            Ok(out)
        })
    })
}
