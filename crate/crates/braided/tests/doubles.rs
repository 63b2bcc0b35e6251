use braided::catalog::*;
use braided::cherednik::{cherednik_algebra, delta_tc};
use braided::double::*;
use braided::gmodule::GModule;
use braided::qyd::QydStructure;
use braided::Field;
use proptest::prelude::*;

#[test]
fn pairing_satisfies_the_yd_condition_on_catalog() {
    for (name, q) in qyd_examples().unwrap() {
        assert!(yd_pairing_check(&q).pass, "{name}");
    }
}

#[test]
fn pathological_commutator() {
    let f = Field::Rationals;
    let q = pathological(f).unwrap();
    let spec = DoubleSpec::minimal(q, 3).unwrap();
    let s = spec.group().generators()[0];
    let lhs = spec.straighten(&[Gen::F(0), Gen::V(1)]).unwrap();
    let rhs = spec.straighten(&[Gen::V(1), Gen::F(0)]).unwrap().add(&spec.generator(Gen::G(s)));
    assert_eq!(lhs, rhs);
    // beta(f_2, .) = 0, so f_2 commutes with V.
    for v in 0..2 {
        let c = spec.commutator(&spec.generator(Gen::F(1)), &spec.generator(Gen::V(v))).unwrap();
        assert!(c.is_zero());
    }
}

#[test]
fn free_double_has_tensor_algebra_slices() {
    let q = QydStructure::from_yd(&y_s3(Field::Rationals).unwrap());
    let spec = DoubleSpec::free(q, 3).unwrap();
    for s in spec.pbw_slices(3).unwrap() {
        let expected = 3usize.pow(s.left_degree as u32) * 6 * 3usize.pow(s.right_degree as u32);
        assert_eq!(s.normal_monomials, expected);
        assert_eq!(s.straightened_rank, expected);
    }
    assert!(spec.associativity_generators().unwrap().pass);
}

#[test]
fn minimal_doubles_are_associative() {
    for (name, q) in qyd_examples().unwrap() {
        let spec = DoubleSpec::minimal(q, 3).unwrap();
        assert!(spec.associativity_generators().unwrap().pass, "{name}");
        assert!(spec.associativity_random(100, 3, 11).unwrap().pass, "{name}");
    }
}

#[test]
fn weyl_standard_module_is_differentiation() {
    let f = Field::Rationals;
    let t = f.int(2);
    let spec = DoubleSpec::minimal(weyl(f, t.clone()).unwrap(), 5).unwrap();
    let trivial = GModule::trivial(spec.group().clone(), f, 1);
    let m = spec.standard_module(&trivial, 5).unwrap();
    assert_eq!(m.dim(), 6);
    assert!(m.check_relations(spec.qyd()).pass);
    for k in 1..=5 {
        assert_eq!(*m.f[0].get(k - 1, k), &f.int(k as i64) * &t);
        assert!(m.v[0].get(k, k - 1).is_one());
    }
}

#[test]
fn cherednik_standard_module_relations() {
    let f = Field::Rationals;
    let (m, p) = s3_cherednik(f, 1, 1).unwrap();
    let alg = cherednik_algebra(&m, &p, 3).unwrap();
    let sign = GModule::sign(m.group().clone(), f);
    let std = alg.spec.standard_module(&sign, 3).unwrap();
    assert_eq!(std.offsets, vec![0, 1, 3, 6, 10]);
    assert!(std.check_relations(alg.spec.qyd()).pass);
}

#[test]
fn weyl_is_minimal_in_characteristic_zero_but_not_three() {
    let q = Field::Rationals;
    let spec = DoubleSpec::minimal(weyl(q, q.one()).unwrap(), 4).unwrap();
    assert!(spec.minimality_check(4).unwrap().minimal());
    let f3 = Field::prime(3).unwrap();
    // The minimal double already kills x^3.
    let minimal = DoubleSpec::minimal(weyl(f3, f3.one()).unwrap(), 4).unwrap();
    assert_eq!(minimal.left().dims(), vec![1, 1, 1, 0, 0]);
    assert!(minimal.minimality_check(4).unwrap().minimal());
    let spec = DoubleSpec::symmetric(weyl(f3, f3.one()).unwrap(), 4).unwrap();
    let r = spec.minimality_check(4).unwrap();
    // In k[x] the cube is central, since [d/dx, x^3] = 3 x^2 = 0.
    assert_eq!(r.first_violation, Some(3));
    assert_eq!(r.left_violations, vec![0, 0, 1, 0]);
}

#[test]
fn hc_gram_of_weyl_is_factorial() {
    let f = Field::Rationals;
    let t = f.int(3);
    let spec = DoubleSpec::minimal(weyl(f, t.clone()).unwrap(), 4).unwrap();
    let mut expected = f.one();
    for n in 1..=4 {
        expected = &(&expected * &f.int(n as i64)) * &t;
        let g = spec.harish_chandra_gram(n).unwrap();
        assert_eq!(*g.scalar.get(0, 0), expected);
    }
}

#[test]
fn hc_gram_agrees_with_factorial_formula() {
    for q in [QydStructure::from_yd(&y_s3(Field::Rationals).unwrap()), pathological(Field::Rationals).unwrap()] {
        let spec = DoubleSpec::minimal(q.clone(), 3).unwrap();
        for n in 1..=3 {
            let g = spec.harish_chandra_gram(n).unwrap();
            for (i, phi) in spec.right().basis(n).iter().enumerate() {
                for (j, b) in spec.left().basis(n).iter().enumerate() {
                    let formula = hc_formula(&q, phi, b).unwrap();
                    for (h, c) in formula.iter().enumerate() {
                        assert_eq!(g.per_element[h].get(i, j), c);
                    }
                }
            }
        }
    }
}

#[test]
fn hc_gram_nondegenerate_for_y_s3() {
    let spec = DoubleSpec::minimal(QydStructure::from_yd(&y_s3(Field::Rationals).unwrap()), 4).unwrap();
    for n in 0..=4 {
        assert!(spec.harish_chandra_gram(n).unwrap().scalar_nondegenerate(), "degree {n}");
    }
}

#[test]
fn central_line_double_needs_a_central_element() {
    let f = Field::Rationals;
    let (_, smash) = braided::nichols::kaplansky(f, 2).unwrap();
    let alg = smash.finite_algebra().unwrap();
    let s = smash.algebra().module().unwrap().group().generators()[0];
    let one_plus_s = smash.coordinates(&[((Vec::new(), 0), f.one()), ((Vec::new(), s), f.one())].into_iter().collect());
    // s anticommutes with V, so 1 + s is not central.
    assert!(CentralLineDouble::new(alg.clone(), one_plus_s, f.one()).is_err());
    // With a = 1 the double is the Weyl algebra and the pairing is n! lambda^n.
    let line = CentralLineDouble::new(alg.clone(), alg.unit(), f.int(2)).unwrap();
    let mut expected = f.one();
    for n in 0..=4 {
        if n > 0 {
            expected = &(&expected * &f.int(n as i64)) * &f.int(2);
        }
        let value: Vec<_> = alg.unit().iter().map(|x| x * &expected).collect();
        assert_eq!(line.hc_straighten(n), value);
        assert_eq!(line.hc_factorial(n), value);
    }
    assert!(!line.commutator_y_xn(3).is_empty());
}

#[test]
fn cherednik_commutator_by_straightening() {
    let f = Field::Rationals;
    let (m, p) = s3_cherednik(f, 1, 1).unwrap();
    let q = delta_tc(&m, &p).unwrap();
    let spec = DoubleSpec::symmetric(q.clone(), 2).unwrap();
    for a in 0..2u8 {
        for b in 0..2u8 {
            let c = spec.commutator(&spec.generator(Gen::F(a)), &spec.generator(Gen::V(b))).unwrap();
            let expected = spec.group_element(&q.beta(a as usize, b as usize));
            assert_eq!(c, expected);
        }
    }
}

#[test]
fn truncation_is_reported() {
    let spec = DoubleSpec::minimal(weyl(Field::Rationals, Field::Rationals.one()).unwrap(), 2).unwrap();
    assert!(spec.straighten(&[Gen::V(0), Gen::V(0), Gen::V(0)]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cherednik_words_associate(word in proptest::collection::vec(0usize..10, 1..=4), cut in 0usize..=4) {
        let f = Field::prime(5).unwrap();
        let (m, p) = s3_cherednik(f, 1, 2).unwrap();
        let alg = cherednik_algebra(&m, &p, 4).unwrap();
        let gens = alg.spec.generators();
        let w: Vec<Gen> = word.iter().map(|i| gens[i % gens.len()]).collect();
        let cut = cut.min(w.len());
        let whole = alg.spec.straighten(&w).unwrap();
        let split = alg.spec.mul(&alg.spec.straighten(&w[..cut]).unwrap(), &alg.spec.straighten(&w[cut..]).unwrap()).unwrap();
        prop_assert_eq!(whole, split);
    }
}
