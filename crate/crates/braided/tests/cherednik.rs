use std::collections::BTreeMap;
use std::sync::Arc;

use braided::catalog::*;
use braided::cherednik::*;
use braided::gmodule::{GModule, Irreducibility};
use braided::group::FinGroup;
use braided::poly::Poly;
use braided::{Field, Matrix};
use proptest::prelude::*;

#[test]
fn reflections_of_small_groups() {
    let m = s3_reflection(Field::Rationals).unwrap();
    let refl = find_reflections(&m);
    assert_eq!(refl.len(), 3);
    assert!(reflection_covariance_check(&m, &refl).pass);
    for r in &refl {
        // 1 - rho(s) = coroot ⊗ root, and <root, coroot> = 2 for an involution.
        let dot: braided::Scalar = r.root.iter().zip(&r.coroot).map(|(a, b)| a * b).fold(Field::Rationals.zero(), |x, y| &x + &y);
        assert_eq!(dot, Field::Rationals.int(2));
    }
    // C_4 on a line over GF(5): every nontrivial element is a (complex) reflection.
    let c4 = c4_line().unwrap();
    let refl = find_reflections(&c4);
    assert_eq!(refl.len(), 3);
    assert!(reflection_covariance_check(&c4, &refl).pass);
    let d4 = GModule::dihedral_reflection(Arc::new(FinGroup::dihedral(4).unwrap()), Field::Rationals, 4).unwrap();
    assert_eq!(find_reflections(&d4).len(), 4);
}

#[test]
fn class_constant_parameters_are_required() {
    let f = Field::Rationals;
    let m = s3_reflection(f).unwrap();
    let refl = find_reflections(&m);
    let mut values = BTreeMap::new();
    for (i, r) in refl.iter().enumerate() {
        values.insert(r.element, f.int(i as i64 + 1));
    }
    assert!(CherednikParams::from_element_values(&m, f.one(), &values).is_err());
    // The raw family built from these values breaks equivariance.
    let raw = delta_from_element_values(&m, &f.one(), &values).unwrap();
    assert!(!raw.check().pass);
    let uniform: BTreeMap<_, _> = refl.iter().map(|r| (r.element, f.int(7))).collect();
    let p = CherednikParams::from_element_values(&m, f.one(), &uniform).unwrap();
    assert!(delta_tc(&m, &p).unwrap().check().pass);
}

#[test]
fn delta_tc_shapes_and_commutativity() {
    let f = Field::Rationals;
    let (m, p) = s3_cherednik(f, 1, 1).unwrap();
    let q = delta_tc(&m, &p).unwrap();
    assert_eq!(q.support().len(), 4);
    let r = commutativity_classification_check(&m, &q);
    assert!(r.pass());
    assert!(r.reflection_form && r.delta_tc_shape);
    assert_eq!(r.irreducibility, Irreducibility::Irreducible);
    // The pathological structure has a noncommutative left half.
    let path = pathological(f).unwrap();
    let r = commutativity_classification_check(path.module(), &path);
    assert!(!r.left_commutative);
    assert!(!r.delta_tc_shape);
}

#[test]
fn pbw_across_fields_and_parameters() {
    for field in [Field::Rationals, Field::prime(5).unwrap(), Field::prime(3).unwrap(), Field::prime(2).unwrap()] {
        for (t, c) in [(1, 1), (0, 1), (1, 0), (2, 3)] {
            let (m, p) = s3_cherednik(field, t, c).unwrap();
            let r = cherednik_algebra(&m, &p, 3).unwrap().pbw_report(3).unwrap();
            assert!(r.pass(), "{field} t={t} c={c}: {:?}", r.witness);
        }
    }
    let (m, p) = c4_cherednik(1, 1).unwrap();
    assert!(cherednik_algebra(&m, &p, 4).unwrap().pbw_report(4).unwrap().pass());
}

#[test]
fn commutator_formula_matches_straightening() {
    let (m, p) = s3_cherednik(Field::prime(5).unwrap(), 2, 3).unwrap();
    let alg = cherednik_algebra(&m, &p, 2).unwrap();
    assert!(alg.commutator_check().unwrap().pass);
}

#[test]
fn dunkl_on_explicit_polynomials() {
    let f = Field::Rationals;
    let (m, p) = s3_cherednik(f, 1, 1).unwrap();
    let alg = cherednik_algebra(&m, &p, 4).unwrap();
    let x0 = Poly::variable(f, 2, 0);
    let x1 = Poly::variable(f, 2, 1);
    let phi = x0.mul(&x0).mul(&x1).add(&x1.scale(&f.int(5)));
    for v in 0..2 {
        let r = alg.dunkl_commutator(&phi, v).unwrap();
        assert!(r.agree);
    }
    assert!(alg.dunkl_check(3).unwrap().pass);
}

#[test]
fn polynomial_division_by_linear_forms() {
    let f = Field::Rationals;
    let x = Poly::variable(f, 2, 0);
    let y = Poly::variable(f, 2, 1);
    let l = [f.one(), f.int(-1)];
    let p = x.mul(&x).sub(&y.mul(&y));
    assert_eq!(p.divide_linear(&l).unwrap(), x.add(&y));
    assert!(x.divide_linear(&l).is_err());
    assert!(x.mul(&y).divide_linear(&l).is_err());
    let swap = Matrix::from_i64(f, 2, 2, &[0, 1, 1, 0]);
    assert_eq!(x.substitute(&swap), y);
}

#[test]
fn restricted_cyclic_group() {
    let (m, p) = c4_cherednik(0, 1).unwrap();
    let r = restricted_dims(&m, &p, 5, 3).unwrap();
    assert_eq!(r.coinvariant_dims, vec![1, 1, 1, 1, 0, 0]);
    assert_eq!(r.coinvariant_total, Some(4));
    assert_eq!(r.restricted_dim, Some(64));
    assert!(r.triangular);
    assert!(r.minimal);
}

#[test]
fn restricted_needs_t_zero() {
    let (m, p) = s3_cherednik(Field::Rationals, 1, 1).unwrap();
    assert!(restricted_algebra(&m, &p, 3).is_err());
}

#[test]
fn modular_restricted_s3() {
    // Over GF(5), |G| is invertible and the coinvariant algebra keeps its dimensions.
    let (m, p) = s3_cherednik(Field::prime(5).unwrap(), 0, 1).unwrap();
    let r = restricted_dims(&m, &p, 4, 2).unwrap();
    assert_eq!(r.coinvariant_dims, vec![1, 2, 2, 1, 0]);
    assert_eq!(r.restricted_dim, Some(216));
    assert!(r.averaging_agrees);
}

#[test]
fn violation_degree_prediction() {
    assert_eq!(predicted_violation_degree(&s3_reflection(Field::Rationals).unwrap(), 6).unwrap(), None);
    assert_eq!(predicted_violation_degree(&s3_reflection(Field::prime(3).unwrap()).unwrap(), 6).unwrap(), Some(3));
    // Over GF(5) the first invariant has degree 2.
    assert_eq!(predicted_violation_degree(&s3_reflection(Field::prime(5).unwrap()).unwrap(), 6).unwrap(), Some(10));
    let (m, p) = s3_cherednik(Field::prime(5).unwrap(), 1, 1).unwrap();
    assert!(cherednik_algebra(&m, &p, 4).unwrap().spec.minimality_check(4).unwrap().minimal());
}

#[test]
fn reflection_yd_cocycle() {
    let m = s3_reflection(Field::Rationals).unwrap();
    let r = build_reflection_yd(&m).unwrap();
    assert!(r.cocycle_ok);
    assert!(r.y_g.check().pass);
    assert!(r.y_pi.check().pass);
    assert_eq!(r.y_pi.dim(), 5);
    for (i, refl) in r.reflections.iter().enumerate() {
        assert_eq!(r.lambda[refl.element as usize][i], Field::Rationals.int(-1));
    }
    let c4 = build_reflection_yd(&c4_line().unwrap()).unwrap();
    assert!(c4.cocycle_ok && c4.y_g.check().pass);
}

#[test]
fn embedding_reports() {
    let f = Field::Rationals;
    let (m, p) = s3_cherednik(f, 0, 1).unwrap();
    let r = embed_mc_check(&m, &p, 3).unwrap();
    assert!(r.pass(), "{:?}", r.witness);
    assert_eq!(r.invariants_vanish, Some(true));
    let (m, p) = s3_cherednik(f, 1, 1).unwrap();
    let r = embed_mc_check(&m, &p, 3).unwrap();
    assert!(r.pass(), "{:?}", r.witness);
    assert_eq!(r.kappa0.as_deref(), Some("3"));
    assert_eq!(r.t_prime.as_deref(), Some("1/3"));
    let (m, p) = s3_cherednik(f, 2, 3).unwrap();
    assert!(embed_mc_check(&m, &p, 3).unwrap().pass());
}

#[test]
fn embedding_fails_without_reflection_parameters() {
    let f = Field::Rationals;
    let (m, p) = s3_cherednik(f, 1, 0).unwrap();
    let r = embed_mc_check(&m, &p, 3).unwrap();
    assert!(r.degenerate);
    assert!(!r.pass());
    let (m, p) = s3_cherednik(f, 0, 0).unwrap();
    assert!(!embed_mc_check(&m, &p, 3).unwrap().pass());
}

#[test]
fn symmetric_power_dimensions() {
    assert_eq!(symmetric_power_dim(2, 3), 4);
    assert_eq!(symmetric_power_dim(3, 2), 6);
    assert_eq!(symmetric_power_dim(1, 7), 1);
    assert_eq!(symmetric_power_dim(4, 0), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn pbw_holds_for_random_parameters(t in 0i64..7, c in 0i64..7) {
        let f = Field::prime(7).unwrap();
        let (m, p) = s3_cherednik(f, t, c).unwrap();
        let alg = cherednik_algebra(&m, &p, 3).unwrap();
        prop_assert!(alg.pbw_report(3).unwrap().pass());
        prop_assert!(alg.commutator_check().unwrap().pass);
    }

    #[test]
    fn dunkl_agrees_on_random_polynomials(coeffs in proptest::collection::vec(-3i64..=3, 10)) {
        let f = Field::Rationals;
        let (m, p) = s3_cherednik(f, 1, 2).unwrap();
        let alg = cherednik_algebra(&m, &p, 4).unwrap();
        let mut phi = Poly::zero(f, 2);
        let monomials = [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2], [3, 0], [2, 1], [1, 2], [0, 3]];
        for (mono, c) in monomials.iter().zip(&coeffs) {
            phi.add_term(mono.to_vec(), f.int(*c));
        }
        for v in 0..2 {
            prop_assert!(alg.dunkl_commutator(&phi, v).unwrap().agree);
        }
    }
}
