use exact_linalg::{vector, Field, Matrix, Rref, Scalar};
use proptest::prelude::*;

fn flip(field: Field) -> Matrix {
    let mut m = Matrix::zeros(field, 4, 4);
    for i in 0..2 {
        for j in 0..2 {
            m.set(j * 2 + i, i * 2 + j, field.one());
        }
    }
    m
}

#[test]
fn identity_has_trivial_kernel() {
    assert!(Matrix::identity(Field::Rationals, 2).kernel_basis().is_empty());
}

#[test]
fn single_row_over_gf2() {
    let f = Field::prime(2).unwrap();
    let m = Matrix::from_i64(f, 1, 2, &[1, 1]);
    assert_eq!(m.kernel_basis(), vec![vec![f.one(), f.one()]]);
}

#[test]
fn antisymmetriser_kernel_on_two_dims() {
    // id + (-tau) on V⊗V with dim V = 2.
    let q = Field::Rationals;
    let m = Matrix::identity(q, 4).sub(&flip(q)).unwrap();
    let ker = m.kernel_basis();
    assert_eq!(ker.len(), 3);
    // The image is spanned by v1⊗v2 - v2⊗v1 ... and the matrix id - tau kills symmetric tensors.
    let sym = Matrix::identity(q, 4).add(&flip(q)).unwrap();
    let ker_sym = sym.kernel_basis();
    assert_eq!(ker_sym.len(), 1);
    let expected = vec![q.zero(), q.one(), q.int(-1), q.zero()];
    let span = Rref::span(q, 4, ker_sym);
    assert!(span.contains(&expected));
}

#[test]
fn kron_examples() {
    let q = Field::Rationals;
    let i6 = Matrix::identity(q, 2).kron(&Matrix::identity(q, 3)).unwrap();
    assert!(i6.is_identity() && i6.rows() == 6);
    let swap = Matrix::from_i64(q, 2, 2, &[0, 1, 1, 0]);
    let two = Matrix::from_i64(q, 1, 1, &[2]);
    assert_eq!(swap.kron(&two).unwrap(), Matrix::from_i64(q, 2, 2, &[0, 2, 2, 0]));
    assert!(swap.kron(&Matrix::identity(Field::Prime(3), 1)).is_err());
}

#[test]
fn flip_on_first_legs_of_three() {
    let q = Field::Rationals;
    let m = flip(q).kron(&Matrix::identity(q, 2)).unwrap();
    // Oracle: enumerate images of the eight basis tensors (a,b,c) -> (b,a,c).
    let mut expected = Matrix::zeros(q, 8, 8);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                expected.set(b * 4 + a * 2 + c, a * 4 + b * 2 + c, q.one());
            }
        }
    }
    assert_eq!(m, expected);
}

#[test]
fn inverse_roundtrip() {
    let q = Field::Rationals;
    let m = Matrix::from_i64(q, 3, 3, &[2, 1, 0, 0, 1, 3, 1, 0, 1]);
    let inv = m.inverse().unwrap();
    assert!(m.mul(&inv).unwrap().is_identity());
    let singular = Matrix::from_i64(q, 2, 2, &[1, 2, 2, 4]);
    assert!(singular.inverse().is_none());
}

#[test]
fn zero_size_matrices() {
    let q = Field::Rationals;
    assert!(Matrix::zeros(q, 0, 3).kernel_basis().len() == 3);
    assert!(Matrix::zeros(q, 2, 0).kernel_basis().is_empty());
}

#[test]
fn intersection_of_subspaces() {
    let q = Field::Rationals;
    let a = Rref::span(q, 3, vec![vector::unit(q, 3, 0), vector::unit(q, 3, 1)]);
    let b = Rref::span(q, 3, vec![vector::unit(q, 3, 1), vector::unit(q, 3, 2)]);
    let c = a.intersect(&b);
    assert_eq!(c.rank(), 1);
    assert!(c.contains(&vector::unit(q, 3, 1)));
    assert_eq!(a.join(&b).rank(), 3);
}

fn rational_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |e| Matrix::from_i64(Field::Rationals, rows, cols, &e))
}

fn check_kernel(m: &Matrix) -> Result<(), TestCaseError> {
    let ker = m.kernel_basis();
    prop_assert_eq!(m.rank() + ker.len(), m.cols());
    for v in &ker {
        prop_assert!(vector::is_zero(&m.apply(v)));
    }
    let span = Rref::span(m.field(), m.cols(), ker.clone());
    prop_assert_eq!(span.rank(), ker.len());
    Ok(())
}

fn all_vectors(field: Field, n: usize) -> Vec<Vec<Scalar>> {
    let elems = field.elements().unwrap();
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                elems.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    out
}

proptest! {
    #[test]
    fn rank_nullity_over_q(m in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| rational_matrix(r, c))) {
        check_kernel(&m)?;
    }

    #[test]
    fn rank_nullity_with_rational_entries(
        num in prop::collection::vec(-5i64..=5, 12),
        den in prop::collection::vec(1i64..=4, 12),
    ) {
        let q = Field::Rationals;
        let data = num.iter().zip(&den).map(|(&n, &d)| q.ratio(n, d).unwrap()).collect();
        let m = Matrix::new(q, 3, 4, data).unwrap();
        check_kernel(&m)?;
    }

    #[test]
    fn kron_is_associative(
        a in rational_matrix(2, 1), b in rational_matrix(1, 2), c in rational_matrix(2, 2),
    ) {
        let left = a.kron(&b).unwrap().kron(&c).unwrap();
        let right = a.kron(&b.kron(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kron_is_multiplicative(a in rational_matrix(2, 2), b in rational_matrix(2, 2), c in rational_matrix(2, 2), d in rational_matrix(2, 2)) {
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn prime_kernel_matches_enumeration(
        p in prop::sample::select(vec![2u64, 3, 5]),
        rows in 1usize..4, cols in 1usize..4,
        seed in prop::collection::vec(0i64..5, 9),
    ) {
        let f = Field::prime(p).unwrap();
        let m = Matrix::from_i64(f, rows, cols, &seed[..rows * cols]);
        check_kernel(&m)?;
        let span = Rref::span(f, cols, m.kernel_basis());
        let brute: Vec<Vec<Scalar>> = all_vectors(f, cols)
            .into_iter()
            .filter(|v| vector::is_zero(&m.apply(v)))
            .collect();
        prop_assert_eq!(brute.len() as u64, p.pow(span.rank() as u32));
        for v in &brute {
            prop_assert!(span.contains(v));
        }
    }

    #[test]
    fn modular_rank_never_exceeds_rational_rank(m in rational_matrix(4, 4)) {
        let f = Field::prime(5).unwrap();
        let reduced: Vec<Scalar> = m.entries().iter()
            .map(|x| f.from_rational(x.as_rational().unwrap()).unwrap()).collect();
        let mp = Matrix::new(f, 4, 4, reduced).unwrap();
        prop_assert!(mp.rank() <= m.rank());
    }
}
