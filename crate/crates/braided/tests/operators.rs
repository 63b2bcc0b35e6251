use std::collections::HashMap;
use std::sync::Arc;

use braided::catalog::*;
use braided::generic::GenericParams;
use braided::gmodule::{GModule, YDModule};
use braided::group::FinGroup;
use braided::nichols::nichols_hilbert;
use braided::ops::*;
use braided::qyd::{braid_equation_check, QydStructure};
use braided::suite::ideal_grows;
use braided::tensor::{densify, index_word, pow};
use braided::{Field, Matrix, Rref};
use proptest::prelude::*;

fn dense_of_sparse(psi: &Matrix, n: usize) -> Matrix {
    let sparse = SparseBraiding::new(psi).unwrap();
    let d = sparse.dim();
    let f = psi.field();
    let cols: Vec<_> = (0..pow(d, n))
        .map(|c| {
            let terms: Vec<_> = sparse.integer_image(&index_word(c, d, n)).into_iter().collect();
            densify(f, d, n, &terms)
        })
        .collect();
    Matrix::from_columns(f, pow(d, n), &cols).unwrap()
}

#[test]
fn sparse_and_dense_integers_agree() {
    for (name, y) in yd_examples().unwrap() {
        let psi = y.braiding().unwrap();
        for n in 1..=3 {
            assert_eq!(dense_of_sparse(&psi, n), braided_integer(&psi, n).unwrap().matrix, "{name} n={n}");
        }
    }
}

#[test]
fn factorial_matches_symmetriser() {
    for (name, y) in yd_examples().unwrap() {
        let psi = y.braiding().unwrap();
        let top = if y.dim() >= 5 { 3 } else { 4 };
        for n in 1..=top {
            let a = braided_factorial(&psi, n).unwrap();
            let b = woronowicz_oracle(&psi, n, 6).unwrap();
            assert_eq!(a.matrix, b.matrix, "{name} n={n}");
        }
    }
}

#[test]
fn oracle_refuses_oversized_degree() {
    let psi = flip_yd(Field::Rationals, 2).braiding().unwrap();
    assert!(woronowicz_oracle(&psi, 6, 5).is_err());
}

#[test]
fn reduced_words_sort() {
    let sigma = vec![2, 0, 3, 1];
    let word = reduced_word(&sigma);
    let mut a = sigma.clone();
    for i in &word {
        a.swap(*i, i + 1);
    }
    assert_eq!(a, vec![0, 1, 2, 3]);
    // Length equals the number of inversions.
    assert_eq!(word.len(), 3);
}

#[test]
fn non_braiding_is_rejected() {
    let f = Field::Rationals;
    let bad = Matrix::from_i64(f, 4, 4, &[1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1]);
    assert!(!braid_equation_check(&bad, 2).braid_equation);
    assert!(braided_factorial(&bad, 2).is_err());
    assert!(braided_integer(&Matrix::identity(f, 3), 2).is_err());
}

#[test]
fn nichols_ideals_are_two_sided() {
    for (name, y) in yd_examples().unwrap() {
        let psi = y.braiding().unwrap();
        let q = nichols_quotient(&psi, 3).unwrap();
        assert_eq!(ideal_grows(&q), None, "{name}");
    }
}

#[test]
fn quasi_factorial_kernel_equals_braided_factorial_kernel_for_yd() {
    for (name, y) in yd_examples().unwrap() {
        let q = QydStructure::from_yd(&y);
        let psi = y.braiding().unwrap();
        for n in 1..=3 {
            let a = braided_factorial(&psi, n).unwrap().kernel();
            let b = quasibraided_factorial(&q, n).unwrap().kernel();
            assert!(a.contains_space(&b) && b.contains_space(&a), "{name} n={n}");
        }
    }
}

#[test]
fn counit_recovers_braided_factorial_for_yd() {
    // With delta the YD coaction, (epsilon ⊗ id)^{⊗n} of the quasibraided factorial
    // is the braided factorial.
    for (name, y) in yd_examples().unwrap() {
        let q = QydStructure::from_yd(&y);
        let psi = y.braiding().unwrap();
        for n in 1..=3 {
            let qf = quasibraided_factorial(&q, n).unwrap();
            let eps = counit_power(q.field(), q.dim(), q.support().len(), n);
            assert_eq!(eps.mul(&qf.matrix).unwrap(), braided_factorial(&psi, n).unwrap().matrix, "{name} n={n}");
        }
    }
}

#[test]
fn left_and_right_minimal_quotients_of_yd_match_nichols() {
    for (name, y) in yd_examples().unwrap() {
        let q = QydStructure::from_yd(&y);
        let nichols = nichols_hilbert(&y, 3).unwrap();
        assert_eq!(minimal_left_quotient(&q, 3).unwrap().dims(), nichols, "{name}");
        assert_eq!(minimal_right_quotient(&q, 3).unwrap().dims(), nichols_hilbert(&y.dual(), 3).unwrap(), "{name}");
    }
}

#[test]
fn quasi_integer_shapes() {
    let q = pathological(Field::Rationals).unwrap();
    for n in 1..=3 {
        let op = quasibraided_integer(&q, n).unwrap();
        assert_eq!(op.matrix.rows(), op.expected_rows());
        let op = right_quasibraided_integer(&q, n).unwrap();
        assert_eq!(op.matrix.rows(), op.expected_rows());
        let op = right_quasibraided_factorial(&q, n).unwrap();
        assert_eq!(op.matrix.rows(), op.expected_rows());
    }
}

#[test]
fn deformed_factorial_at_zero_is_braided_factorial() {
    let psi = y_s3(Field::Rationals).unwrap().braiding().unwrap();
    let f = psi.field();
    for n in 2..=3 {
        let zeros = vec![f.zero(); n - 1];
        assert_eq!(deformed_factorial_at(&psi, n, &zeros).unwrap(), braided_factorial(&psi, n).unwrap().matrix);
    }
}

#[test]
fn deformed_factorial_is_stable_and_seed_independent() {
    let psi = y_s3(Field::Rationals).unwrap().braiding().unwrap();
    let p1 = GenericParams::indexed("u", 2..=3, 4, 1).unwrap();
    let p2 = GenericParams::indexed("u", 2..=3, 4, 99).unwrap();
    for n in 2..=3 {
        let a = deformed_factorial(&psi, n, &p1).unwrap();
        let b = deformed_factorial(&psi, n, &p2).unwrap();
        assert_eq!(a.dim, b.dim);
        let ra = Rref::span(a.field, pow(3, n), a.basis.clone());
        let rb = Rref::span(b.field, pow(3, n), b.basis.clone());
        assert!(ra.contains_space(&rb) && rb.contains_space(&ra));
    }
    // Kernel dimension can only drop at a generic point.
    let k = deformed_factorial(&psi, 2, &p1).unwrap().dim;
    assert!(k <= braided_factorial(&psi, 2).unwrap().kernel().rank());
}

#[test]
fn deformed_factorial_rejects_small_prime_fields() {
    let psi = flip_yd(Field::prime(5).unwrap(), 2).braiding().unwrap();
    let p = GenericParams::indexed("u", 2..=2, 3, 0).unwrap();
    assert!(deformed_factorial(&psi, 2, &p).is_err());
    assert!(GenericParams::new(vec!["u".into()], 1, 0).is_err());
}

/// A diagonal YD module over `C_6` in `GF(7)`: basis vector `i` in degree `g^{a_i}`,
/// the generator acting by `3^{b_i}` (3 generates `GF(7)^*`).
fn diagonal_yd(degrees: &[u32], weights: &[u32]) -> YDModule {
    let f = Field::prime(7).unwrap();
    let g = Arc::new(FinGroup::cyclic(6).unwrap());
    let gen = g.generators()[0];
    let d = degrees.len();
    let mut act = Matrix::zeros(f, d, d);
    for (i, &b) in weights.iter().enumerate() {
        act.set(i, i, f.int(3).pow(b));
    }
    let m = GModule::from_generator_images(g.clone(), f, &[act]).unwrap();
    let mut power = HashMap::new();
    let mut x = g.identity();
    for k in 0..6 {
        power.insert(k, x);
        x = g.mul(gen, x);
    }
    YDModule::from_basis_degrees(m, &degrees.iter().map(|a| power[&(a % 6)]).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn diagonal_braidings_satisfy_braid_equation(
        degrees in proptest::collection::vec(0u32..6, 1..=3),
        weights in proptest::collection::vec(0u32..6, 3),
    ) {
        let y = diagonal_yd(&degrees, &weights[..degrees.len()]);
        prop_assert!(y.check().pass);
        let psi = y.braiding().unwrap();
        let r = braid_equation_check(&psi, y.dim());
        prop_assert!(r.braid_equation && r.invertible);
        prop_assert_eq!(dense_of_sparse(&psi, 3), braided_integer(&psi, 3).unwrap().matrix);
    }

    #[test]
    fn line_nichols_dims_follow_the_order_of_q(a in 0u32..6, b in 0u32..6) {
        // Psi = q flip with q = 3^{ab}; B has dimension ord(q) unless q = 1.
        let y = diagonal_yd(&[a], &[b]);
        let f = Field::prime(7).unwrap();
        let q = f.int(3).pow(a * b);
        let order = (1..=6).find(|k| q.pow(*k).is_one()).unwrap() as usize;
        let dims = nichols_hilbert(&y, 6).unwrap();
        for (n, dim) in dims.iter().enumerate() {
            let expected = if order == 1 || n < order { 1 } else { 0 };
            prop_assert_eq!(*dim, expected, "q = {}, degree {}", q, n);
        }
    }

    #[test]
    fn factorial_kernel_contains_shifted_lower_kernels(degrees in proptest::collection::vec(0u32..6, 2), weights in proptest::collection::vec(0u32..6, 2)) {
        let y = diagonal_yd(&degrees, &weights);
        let psi = y.braiding().unwrap();
        let d = y.dim();
        let f = psi.field();
        let k2 = braided_factorial(&psi, 2).unwrap().kernel();
        let k3 = braided_factorial(&psi, 3).unwrap().kernel();
        for r in k2.rows() {
            for j in 0..d {
                let e = exact_linalg::vector::unit(f, d, j);
                prop_assert!(k3.contains(&exact_linalg::vector::kron(r, &e)));
                prop_assert!(k3.contains(&exact_linalg::vector::kron(&e, r)));
            }
        }
    }
}
