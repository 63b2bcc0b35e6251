//! Degree-truncated graded quotients `T(V)/I` of tensor algebras, built degree by degree.
//!
//! Degree `n` is presented as a quotient of `A_{n-1} ⊗ V` (growth by appending) or
//! of `V ⊗ A_{n-1}` (growth by prepending). Each degree keeps the echelon basis of
//! the new relations in those coordinates; the chosen complement is spanned by the
//! non-pivot coordinates, which are the standard monomials. With the lexicographic
//! order this is the same complement as the non-pivot basis tensors of the full
//! relation space `I_n ⊂ V^{⊗n}`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use exact_linalg::{vector, Field, Matrix, Rref, Scalar};

use crate::tensor::{all_words, pow, Word};
use crate::BraidedError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Growth {
    /// `I_n ⊇ I_{n-1} ⊗ V`; degree `n` is a quotient of `A_{n-1} ⊗ V`.
    Append,
    /// `I_n ⊇ V ⊗ I_{n-1}`; degree `n` is a quotient of `V ⊗ A_{n-1}`.
    Prepend,
}

#[derive(Clone, Debug)]
struct Level {
    relations: Rref,
    basis: Vec<Word>,
    ext_position: Vec<usize>,
    basis_index: HashMap<Word, usize>,
}

/// A graded quotient of `T(V)` known up to a truncation degree.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    field: Field,
    dim: usize,
    growth: Growth,
    levels: Vec<Level>,
    memo: Arc<RwLock<HashMap<Word, Vec<Scalar>>>>,
}

impl GradedQuotient {
    fn degree_zero(field: Field, dim: usize, growth: Growth) -> GradedQuotient {
        let level = Level {
            relations: Rref::empty(field, 1),
            basis: vec![Vec::new()],
            ext_position: vec![0],
            basis_index: HashMap::from([(Vec::new(), 0)]),
        };
        GradedQuotient { field, dim, growth, levels: vec![level], memo: Arc::default() }
    }

    /// Builds degrees `1..=max_degree`; `step(n, partial)` returns the new relations of
    /// degree `n` in extended coordinates of the partial quotient.
    pub fn build<F>(field: Field, dim: usize, growth: Growth, max_degree: usize, mut step: F) -> Result<GradedQuotient, BraidedError>
    where
        F: FnMut(usize, &GradedQuotient) -> Result<Vec<Vec<Scalar>>, BraidedError>,
    {
        if dim > 255 {
            return Err(BraidedError::CapExceeded("generating spaces are limited to dimension 255".into()));
        }
        let mut q = GradedQuotient::degree_zero(field, dim, growth);
        for n in 1..=max_degree {
            let rels = step(n, &q)?;
            q.push_level(rels);
        }
        Ok(q)
    }

    /// The tensor algebra itself.
    pub fn free(field: Field, dim: usize, max_degree: usize) -> GradedQuotient {
        GradedQuotient::build(field, dim, Growth::Append, max_degree, |_, _| Ok(Vec::new())).expect("free")
    }

    fn push_level(&mut self, rels: Vec<Vec<Scalar>>) {
        let prev_dim = self.levels.last().unwrap().basis.len();
        let cols = prev_dim * self.dim;
        let relations = Rref::span(self.field, cols, rels);
        let ext_position = relations.free_columns();
        let n = self.levels.len();
        let basis: Vec<Word> = ext_position.iter().map(|&e| self.ext_word(n, e)).collect();
        let basis_index = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        self.levels.push(Level { relations, basis, ext_position, basis_index });
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> usize {
        self.dim
    }

    pub fn growth(&self) -> Growth {
        self.growth
    }

    /// Highest degree built.
    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.levels[n].basis.len()
    }

    /// Graded dimensions in degrees `0..=truncation`.
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.basis.len()).collect()
    }

    /// Standard monomials of degree `n`, in lexicographic order.
    pub fn basis(&self, n: usize) -> &[Word] {
        &self.levels[n].basis
    }

    pub fn basis_index(&self, w: &[u8]) -> Option<usize> {
        self.levels.get(w.len())?.basis_index.get(w).copied()
    }

    /// Number of extended coordinates feeding degree `n`.
    pub fn ext_dim(&self, n: usize) -> usize {
        self.levels[n - 1].basis.len() * self.dim
    }

    /// The word behind extended coordinate `e` of degree `n`.
    pub fn ext_word(&self, n: usize, e: usize) -> Word {
        let prev = &self.levels[n - 1].basis;
        match self.growth {
            Growth::Append => {
                let mut w = prev[e / self.dim].clone();
                w.push((e % self.dim) as u8);
                w
            }
            Growth::Prepend => {
                let mut w = vec![(e / prev.len()) as u8];
                w.extend_from_slice(&prev[e % prev.len()]);
                w
            }
        }
    }

    /// Extended coordinates of a word of length `n`, before reduction in degree `n`.
    pub fn ext_coords(&self, w: &[u8]) -> Result<Vec<Scalar>, BraidedError> {
        let n = w.len();
        if n == 0 {
            return Err(BraidedError::Input("extended coordinates need a nonempty word".into()));
        }
        self.check_degree(n - 1)?;
        let p = self.levels[n - 1].basis.len();
        let mut out = vector::zeros(self.field, p * self.dim);
        match self.growth {
            Growth::Append => {
                let prefix = self.reduce_word(&w[..n - 1])?;
                let a = w[n - 1] as usize;
                for (i, c) in prefix.into_iter().enumerate() {
                    out[i * self.dim + a] = c;
                }
            }
            Growth::Prepend => {
                let suffix = self.reduce_word(&w[1..])?;
                let a = w[0] as usize;
                for (i, c) in suffix.into_iter().enumerate() {
                    out[a * p + i] = c;
                }
            }
        }
        Ok(out)
    }

    /// Reduces extended coordinates of degree `n` to normal-form coordinates.
    pub fn project(&self, n: usize, mut ext: Vec<Scalar>) -> Vec<Scalar> {
        let level = &self.levels[n];
        level.relations.reduce(&mut ext);
        level.ext_position.iter().map(|&e| ext[e].clone()).collect()
    }

    fn check_degree(&self, n: usize) -> Result<(), BraidedError> {
        if n > self.truncation() {
            return Err(BraidedError::Truncation(format!(
                "degree {n} exceeds truncation {}",
                self.truncation()
            )));
        }
        Ok(())
    }

    /// Normal-form coordinates of a word.
    pub fn reduce_word(&self, w: &[u8]) -> Result<Vec<Scalar>, BraidedError> {
        let n = w.len();
        self.check_degree(n)?;
        if n == 0 {
            return Ok(vec![self.field.one()]);
        }
        if let Some(&i) = self.levels[n].basis_index.get(w) {
            return Ok(vector::unit(self.field, self.levels[n].basis.len(), i));
        }
        if let Some(v) = self.memo.read().unwrap().get(w) {
            return Ok(v.clone());
        }
        let ext = self.ext_coords(w)?;
        let v = self.project(n, ext);
        self.memo.write().unwrap().insert(w.to_vec(), v.clone());
        Ok(v)
    }

    /// Normal-form coordinates of a homogeneous combination of words of length `n`.
    pub fn reduce_terms(&self, n: usize, terms: &[(Word, Scalar)]) -> Result<Vec<Scalar>, BraidedError> {
        let mut out = vector::zeros(self.field, self.dim(n));
        for (w, c) in terms {
            if w.len() != n {
                return Err(BraidedError::Input("inhomogeneous combination".into()));
            }
            vector::axpy(&mut out, c, &self.reduce_word(w)?);
        }
        Ok(out)
    }

    /// Normal-form representative as standard monomials with coefficients.
    pub fn lift(&self, n: usize, coords: &[Scalar]) -> Vec<(Word, Scalar)> {
        coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.levels[n].basis[i].clone(), c.clone()))
            .collect()
    }

    /// Product of homogeneous elements given in normal-form coordinates.
    pub fn mul(&self, a_deg: usize, a: &[Scalar], b_deg: usize, b: &[Scalar]) -> Result<Vec<Scalar>, BraidedError> {
        let n = a_deg + b_deg;
        self.check_degree(n)?;
        let mut out = vector::zeros(self.field, self.dim(n));
        for (wa, ca) in self.lift(a_deg, a) {
            for (wb, cb) in self.lift(b_deg, b) {
                let mut w = wa.clone();
                w.extend_from_slice(&wb);
                vector::axpy(&mut out, &(&ca * &cb), &self.reduce_word(&w)?);
            }
        }
        Ok(out)
    }

    /// Echelon basis of the full relation space `I_n ⊂ V^{⊗n}`.
    pub fn relations_full(&self, n: usize) -> Rref {
        let words = all_words(self.dim, n);
        let cols: Vec<Vec<Scalar>> = words.iter().map(|w| self.reduce_word(w).expect("within truncation")).collect();
        let map = Matrix::from_columns(self.field, self.dim(n), &cols).expect("shape");
        Rref::span(self.field, pow(self.dim, n), map.kernel_basis())
    }

    /// Basis of the degree-`n` relations modulo those forced by lower degrees, as
    /// combinations of words.
    pub fn new_relations(&self, n: usize) -> Vec<Vec<(Word, Scalar)>> {
        let level = &self.levels[n];
        level
            .relations
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (self.ext_word(n, e), c.clone()))
                    .collect()
            })
            .collect()
    }

    /// Extended-coordinate relations for the two-sided ideal generated by homogeneous
    /// elements `gens` (each a combination of words of a common length `k`).
    pub fn ideal_step(&self, n: usize, gens: &[Vec<(Word, Scalar)>]) -> Result<Vec<Vec<Scalar>>, BraidedError> {
        let mut rows = Vec::new();
        for g in gens {
            let Some(k) = g.first().map(|(w, _)| w.len()) else { continue };
            if k == 0 || k > n {
                continue;
            }
            for x in self.basis(n - k).to_vec() {
                let mut row = vector::zeros(self.field, self.ext_dim(n));
                for (w, c) in g {
                    let word = match self.growth {
                        Growth::Append => [x.as_slice(), w.as_slice()].concat(),
                        Growth::Prepend => [w.as_slice(), x.as_slice()].concat(),
                    };
                    vector::axpy(&mut row, c, &self.ext_coords(&word)?);
                }
                rows.push(row);
            }
        }
        Ok(rows)
    }

    /// Extended-coordinate relations given as the kernel of a linear map evaluated on
    /// the extended basis words.
    pub fn kernel_step<F>(&self, n: usize, target_dim: usize, mut image: F) -> Result<Vec<Vec<Scalar>>, BraidedError>
    where
        F: FnMut(&[u8]) -> Result<Vec<Scalar>, BraidedError>,
    {
        let ext = self.ext_dim(n);
        let mut columns = Vec::with_capacity(ext);
        for e in 0..ext {
            let w = self.ext_word(n, e);
            let col = image(&w)?;
            if col.len() != target_dim {
                return Err(BraidedError::Input("image of wrong length".into()));
            }
            columns.push(col);
        }
        let m = Matrix::from_columns(self.field, target_dim, &columns)?;
        Ok(m.kernel_basis())
    }
}
