//! Tensor-power bookkeeping. Basis tensors of `V^{⊗n}` are words over `0..dim`,
//! ordered lexicographically with the leftmost leg most significant.

use exact_linalg::{Field, Matrix, Scalar};

/// A basis tensor (or monomial) as a list of basis indices.
pub type Word = Vec<u8>;

pub fn pow(d: usize, n: usize) -> usize {
    d.pow(n as u32)
}

pub fn word_index(w: &[u8], d: usize) -> usize {
    w.iter().fold(0, |acc, &x| acc * d + x as usize)
}

pub fn index_word(mut idx: usize, d: usize, n: usize) -> Word {
    let mut w = vec![0u8; n];
    for slot in w.iter_mut().rev() {
        *slot = (idx % d) as u8;
        idx /= d;
    }
    w
}

/// All words of length `n` in lexicographic order.
pub fn all_words(d: usize, n: usize) -> Vec<Word> {
    (0..pow(d, n)).map(|i| index_word(i, d, n)).collect()
}

/// `I^{⊗first} ⊗ op ⊗ I^{⊗rest}` where `op` acts on `width` consecutive legs.
pub fn on_legs(op: &Matrix, d: usize, first: usize, width: usize, total: usize) -> Matrix {
    let f = op.field();
    let left = Matrix::identity(f, pow(d, first));
    let right = Matrix::identity(f, pow(d, total - first - width));
    left.kron(op).and_then(|m| m.kron(&right)).expect("same field")
}

/// The flip `x ⊗ y -> y ⊗ x` on `V ⊗ V`.
pub fn flip(field: Field, d: usize) -> Matrix {
    let mut m = Matrix::zeros(field, d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            m.set(b * d + a, a * d + b, field.one());
        }
    }
    m
}

/// Permutation of legs: the tensor in leg `i` moves to leg `perm[i]`.
pub fn leg_permutation(field: Field, d: usize, perm: &[usize]) -> Matrix {
    let n = perm.len();
    let size = pow(d, n);
    let mut m = Matrix::zeros(field, size, size);
    for (idx, w) in all_words(d, n).into_iter().enumerate() {
        let mut out = vec![0u8; n];
        for (i, &p) in perm.iter().enumerate() {
            out[p] = w[i];
        }
        m.set(word_index(&out, d), idx, field.one());
    }
    m
}

/// Sparse image of the basis tensor `w` under `A_1 ⊗ ... ⊗ A_n` (one matrix per leg).
pub fn apply_legwise(mats: &[&Matrix], w: &[u8]) -> Vec<(Word, Scalar)> {
    let mut acc: Vec<(Word, Scalar)> = vec![(Vec::new(), mats[0].field().one())];
    for (m, &x) in mats.iter().zip(w) {
        let mut next = Vec::new();
        for r in 0..m.rows() {
            let c = m.get(r, x as usize);
            if c.is_zero() {
                continue;
            }
            for (prefix, coeff) in &acc {
                let mut p = prefix.clone();
                p.push(r as u8);
                next.push((p, coeff * c));
            }
        }
        acc = next;
    }
    acc
}

/// Image of the word under `rho(g)^{⊗n}` for a single matrix `m`.
pub fn apply_diagonal(m: &Matrix, w: &[u8]) -> Vec<(Word, Scalar)> {
    if w.is_empty() {
        return vec![(Vec::new(), m.field().one())];
    }
    let mats: Vec<&Matrix> = vec![m; w.len()];
    apply_legwise(&mats, w)
}

/// Density of the coordinate vector of a tensor given in sparse form.
pub fn densify(field: Field, d: usize, n: usize, terms: &[(Word, Scalar)]) -> Vec<Scalar> {
    let mut v = vec![field.zero(); pow(d, n)];
    for (w, c) in terms {
        v[word_index(w, d)] += c;
    }
    v
}
