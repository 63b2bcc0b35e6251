use braided::catalog::*;
use braided::cherednik::fomin_kirillov_dims;
use braided::generic::GenericParams;
use braided::nichols::*;
use braided::Field;

#[test]
fn symmetric_and_exterior_algebras() {
    for field in [Field::Rationals, Field::prime(5).unwrap()] {
        assert_eq!(nichols_hilbert(&flip_yd(field, 2), 4).unwrap(), vec![1, 2, 3, 4, 5]);
    }
    // In characteristic 2 the flip gives k[x, y]/(x^2, y^2).
    assert_eq!(nichols_hilbert(&flip_yd(Field::prime(2).unwrap(), 2), 4).unwrap(), vec![1, 2, 1, 0, 0]);
    assert_eq!(nichols_hilbert(&minus_flip_yd(Field::Rationals, 2).unwrap(), 3).unwrap(), vec![1, 2, 1, 0]);
    assert_eq!(nichols_hilbert(&minus_flip_yd(Field::Rationals, 4).unwrap(), 5).unwrap(), vec![1, 4, 6, 4, 1, 0]);
}

#[test]
fn positive_characteristic_truncates_symmetric_powers() {
    // The braided factorial of flip is n!, so over GF(p) the line stops at degree p.
    assert_eq!(nichols_hilbert(&flip_yd(Field::prime(3).unwrap(), 1), 4).unwrap(), vec![1, 1, 1, 0, 0]);
}

#[test]
fn nichols_algebra_is_associative_and_stable() {
    let y = y_s3(Field::Rationals).unwrap();
    let alg = TruncatedGradedAlgebra::nichols(&y, 4).unwrap();
    assert!(alg.associative().unwrap());
    assert!(alg.relations_stable(y.base()));
    let x = alg.element(&[0]).unwrap();
    // Each transposition squares to zero in the Fomin-Kirillov algebra.
    assert!(nichols_product(&alg, 1, &x, 1, &x).unwrap().iter().all(|c| c.is_zero()));
}

#[test]
fn fomin_kirillov_three() {
    let r = fomin_kirillov_dims(3, 5).unwrap();
    assert_eq!(r.generators, 3);
    assert_eq!(r.quadratic_relation_dim, 5);
    assert_eq!(r.en_dims, vec![1, 3, 4, 3, 1, 0]);
    assert_eq!(r.nichols_dims, r.en_dims);
    assert!(r.en_matches_nichols);
    assert!(r.listed_relations_match);
    assert!(r.u_zero_matches);
}

#[test]
fn fomin_kirillov_four_low_degrees() {
    let r = fomin_kirillov_dims(4, 3).unwrap();
    assert_eq!(r.generators, 6);
    assert_eq!(r.en_dims, vec![1, 6, 19, 42]);
    assert!(r.en_matches_nichols);
    assert!(r.listed_relations_match);
}

#[test]
fn bosonisation_of_catalog_modules() {
    for (name, y) in [
        ("q-line", q_line().unwrap()),
        ("Y-S3", y_s3(Field::Rationals).unwrap()),
        ("minus-flip-2", minus_flip_yd(Field::Rationals, 2).unwrap()),
    ] {
        let r = bosonisation_check(&y, 3).unwrap();
        assert!(r.pass(), "{name}: {:?}", r.witness);
    }
}

#[test]
fn kaplansky_examples() {
    let (r, smash) = kaplansky(Field::Rationals, 2).unwrap();
    assert!(r.pass());
    assert_eq!(r.total_dim, Some(8));
    let alg = smash.finite_algebra().unwrap();
    assert_eq!(alg.dim(), 8);
    assert!(alg.is_associative());
    let (r, _) = kaplansky(Field::prime(3).unwrap(), 2).unwrap();
    assert!(r.pass());
    assert!(kaplansky(Field::Rationals, 3).is_err());
}

#[test]
fn smash_product_needs_a_finite_nichols_algebra() {
    let smash = SmashProduct::new(&flip_yd(Field::Rationals, 1), 3).unwrap();
    assert_eq!(smash.total_dim(), None);
    assert!(smash.finite_algebra().is_err());
}

#[test]
fn deformed_nichols_of_y_s3() {
    let y = y_s3(Field::Rationals).unwrap();
    let params = GenericParams::indexed("u", 2..=3, 3, 5).unwrap();
    let dims = deformed_nichols_hilbert(&y, 3, &params).unwrap();
    let plain = nichols_hilbert(&y, 3).unwrap();
    assert_eq!(dims[..2], plain[..2]);
    for (a, b) in dims.iter().zip(&plain) {
        assert!(a >= b);
    }
}
