use std::collections::BTreeMap;
use std::sync::Arc;

use braided::catalog::*;
use braided::gmodule::{GModule, Irreducibility, YDModule};
use braided::group::{cycle_label, parse_cycles, FinGroup};
use braided::qyd::{braid_equation_check, classify_1dim_check, QydStructure};
use braided::{Field, Matrix};

#[test]
fn small_groups_have_expected_orders_and_classes() {
    let s3 = FinGroup::symmetric(3).unwrap();
    assert_eq!(s3.order(), 6);
    assert!(s3.verify_axioms());
    assert_eq!(s3.conjugacy_classes().len(), 3);
    assert!(!s3.is_abelian());
    let s4 = FinGroup::symmetric(4).unwrap();
    assert_eq!(s4.order(), 24);
    assert_eq!(s4.conjugacy_classes().len(), 5);
    let d4 = FinGroup::dihedral(4).unwrap();
    assert_eq!(d4.order(), 8);
    assert_eq!(d4.conjugacy_classes().len(), 5);
    let c5 = FinGroup::cyclic(5).unwrap();
    assert!(c5.is_abelian());
    assert_eq!(c5.conjugacy_classes().len(), 5);
    assert_eq!(FinGroup::trivial().order(), 1);
}

#[test]
fn identity_is_element_zero_and_inverses_work() {
    let g = FinGroup::symmetric(4).unwrap();
    assert_eq!(g.identity(), 0);
    for a in g.elements() {
        assert_eq!(g.mul(a, g.inv(a)), 0);
        assert_eq!(g.mul(g.identity(), a), a);
    }
}

#[test]
fn cycle_notation_round_trips() {
    let g = FinGroup::symmetric(4).unwrap();
    for a in g.elements() {
        let label = cycle_label(g.perm(a));
        assert_eq!(parse_cycles(&label, 4).unwrap(), g.perm(a));
        assert_eq!(g.find_label(&label), Some(a));
    }
    assert!(parse_cycles("(1 1)", 3).is_err());
}

#[test]
fn composition_applies_the_right_factor_first() {
    let g = FinGroup::symmetric(3).unwrap();
    let a = g.find_label(&cycle_label(&parse_cycles("(1 2)", 3).unwrap())).unwrap();
    let b = g.find_label(&cycle_label(&parse_cycles("(2 3)", 3).unwrap())).unwrap();
    let ab = g.perm(g.mul(a, b));
    // (1 2)(2 3) sends 3 to 2 and then to 1.
    assert_eq!(ab[2], 0);
}

#[test]
fn group_cap_is_enforced() {
    assert!(FinGroup::symmetric_capped(5, 100).is_err());
    assert!(FinGroup::symmetric_capped(4, 24).is_ok());
}

#[test]
fn reflection_module_is_irreducible_and_has_no_invariants() {
    let m = s3_reflection(Field::Rationals).unwrap();
    assert_eq!(m.dim(), 2);
    assert_eq!(m.irreducibility(), Irreducibility::Irreducible);
    assert_eq!(m.fixed_space().rank(), 0);
    assert_eq!(m.reynolds_invariants().unwrap().rank(), 0);
    let perm = GModule::permutation(m.group().clone(), Field::Rationals);
    assert!(matches!(perm.irreducibility(), Irreducibility::Reducible(_)));
    assert_eq!(perm.fixed_space().rank(), 1);
}

#[test]
fn modular_permutation_module_has_no_reynolds_operator() {
    let g = Arc::new(FinGroup::symmetric(3).unwrap());
    let perm = GModule::permutation(g, Field::prime(3).unwrap());
    assert!(perm.reynolds_invariants().is_none());
    assert_eq!(perm.fixed_space().rank(), 1);
}

#[test]
fn dual_and_tensor_are_modules() {
    let m = s3_reflection(Field::Rationals).unwrap();
    let g = m.group().clone();
    let dual = m.dual();
    let t = m.tensor(&dual).unwrap();
    for a in g.elements() {
        for b in g.elements() {
            assert_eq!(t.act(a).mul(t.act(b)).unwrap(), *t.act(g.mul(a, b)));
        }
    }
    // The invariants of V ⊗ V* are the identity map.
    assert_eq!(t.fixed_space().rank(), 1);
    let chi = m.character();
    let chi_dual = dual.character();
    for a in g.elements() {
        assert_eq!(chi_dual[a as usize], chi[g.inv(a) as usize]);
    }
}

#[test]
fn catalog_yd_modules_pass_and_braid() {
    for (name, y) in yd_examples().unwrap() {
        assert!(y.check().pass, "{name}");
        let psi = y.braiding().unwrap();
        let r = braid_equation_check(&psi, y.dim());
        assert!(r.braid_equation && r.invertible, "{name}");
        assert!(y.dual().check().pass, "{name} dual");
    }
}

#[test]
fn catalog_qyd_structures_pass() {
    for (name, q) in qyd_examples().unwrap() {
        assert!(q.check().pass, "{name}");
    }
}

#[test]
fn wrong_grading_breaks_yd_compatibility() {
    // S_3 acting on its reflection module with everything graded at one transposition.
    let m = s3_reflection(Field::Rationals).unwrap();
    let g = m.group().clone();
    let s = g.elements().find(|&a| g.element_order(a) == 2).unwrap();
    let y = YDModule::from_basis_degrees(m, &[s, s]);
    assert!(!y.check().pass);
}

#[test]
fn non_equivariant_family_is_rejected() {
    let m = s3_reflection(Field::Rationals).unwrap();
    let g = m.group().clone();
    let f = Field::Rationals;
    let s = g.elements().find(|&a| g.element_order(a) == 2).unwrap();
    let q = QydStructure::new(m, BTreeMap::from([(s, Matrix::identity(f, 2))])).unwrap();
    assert!(!q.check().pass);
}

#[test]
fn one_dimensional_classification() {
    let g = Arc::new(FinGroup::cyclic(4).unwrap());
    let f = Field::prime(5).unwrap();
    let gen = g.generators()[0];
    let mut chi = vec![f.zero(); 4];
    let mut x = g.identity();
    let mut v = f.one();
    for _ in 0..4 {
        chi[x as usize] = v.clone();
        x = g.mul(gen, x);
        v = &v * &f.int(2);
    }
    let p: Vec<_> = g.elements().map(|a| if a == gen { f.one() } else { f.zero() }).collect();
    let r = classify_1dim_check(&g, &chi, &p).unwrap();
    assert!(r.pass);
    let mut bad = chi.clone();
    bad[gen as usize] = f.int(3);
    assert!(!classify_1dim_check(&g, &bad, &p).unwrap().multiplicative);
    let s3 = Arc::new(FinGroup::symmetric(3).unwrap());
    let q = Field::Rationals;
    let trivial: Vec<_> = s3.elements().map(|_| q.one()).collect();
    let point: Vec<_> = s3.elements().map(|a| if a == 1 { q.one() } else { q.zero() }).collect();
    let r = classify_1dim_check(&s3, &trivial, &point).unwrap();
    assert!(!r.central);
    assert!(!r.pass);
}

#[test]
fn mixing_quasi_yd_structures() {
    let q = Field::Rationals;
    let m = s3_reflection(q).unwrap();
    let (_, params) = s3_cherednik(q, 1, 1).unwrap();
    let a = braided::cherednik::delta_tc(&m, &params).unwrap();
    let b = QydStructure::zero(m);
    let mixed = QydStructure::mix(&[(q.int(2), &a), (q.int(5), &b)]).unwrap();
    assert!(mixed.check().pass);
    assert_eq!(mixed.total(), a.total().scale(&q.int(2)));
}

#[test]
fn yd_structures_embed_as_quasi_yd() {
    let y = y_s3(Field::Rationals).unwrap();
    let q = QydStructure::from_yd(&y);
    assert!(q.check().pass);
    let (yv, _) = q.build_yv().unwrap();
    assert!(yv.check().pass);
}
