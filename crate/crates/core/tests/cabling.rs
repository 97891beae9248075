//! The cabling identities relating the colored invariants, on small knots.

mod common;

use lg_core::braid::builtin_knot_table;
use lg_core::colored::{
    alexander_burau, lg_to_v, specialization_records, v_to_lg, verify_specializations, Cable21Form, ColoredError,
    InvariantEngine,
};
use lg_core::laurent::LaurentPoly;
use std::sync::OnceLock;

fn engine() -> &'static InvariantEngine {
    static ENGINE: OnceLock<InvariantEngine> = OnceLock::new();
    ENGINE.get_or_init(|| InvariantEngine::new().unwrap())
}

#[test]
fn parallel_identity_for_two_strands() {
    for rec in common::cabling_knots() {
        engine().check_parallel_identity(&rec.braid, 2).unwrap_or_else(|e| panic!("{}: {e}", rec.name));
    }
}

#[test]
fn parallel_identity_for_three_strands_on_two_braids() {
    for name in ["0_1", "3_1"] {
        engine().check_parallel_identity(&common::knot(name).braid, 3).unwrap();
    }
}

#[test]
fn both_routes_to_the_second_invariant_agree() {
    for rec in common::cabling_knots() {
        let direct = engine().lg2_direct(&rec.braid).unwrap();
        assert_eq!(engine().lg2_via_cable(&rec.braid).unwrap(), direct, "{}", rec.name);
        let v2 = engine().v2_via_cable(&rec.braid).unwrap();
        assert_eq!(v_to_lg(&v2, 2), direct, "{}", rec.name);
        assert_eq!(lg_to_v(&direct, 2).unwrap(), v2, "{}", rec.name);
    }
}

#[test]
fn trefoil_second_invariant() {
    let lg2 = engine().lg2_direct(&common::knot("3_1").braid).unwrap();
    assert!(!lg2.is_one());
    assert!(lg2.terms().iter().all(|(m, _)| m.s() % 2 == 0));
    assert_eq!(lg2.s_span(), 8);
}

#[test]
fn typeset_arguments_do_not_extract_a_polynomial() {
    assert!(engine().v2_via_cable_as_typeset(&common::knot("0_1").braid).unwrap().is_one());
    for name in ["3_1", "4_1"] {
        assert!(engine().v2_via_cable_as_typeset(&common::knot(name).braid).is_err(), "{name}");
    }
}

#[test]
fn twisted_cable_identity_forms() {
    for rec in common::cabling_knots() {
        let b = &rec.braid;
        assert!(engine().cable21_identity(b, Cable21Form::Derived).unwrap(), "{}", rec.name);
        assert!(!engine().cable21_identity(b, Cable21Form::Conjectured).unwrap(), "{}", rec.name);
        assert!(!engine().cable21_identity(b, Cable21Form::ConjecturedGeneralPattern).unwrap(), "{}", rec.name);
    }
}

#[test]
fn links_are_rejected_where_a_knot_is_required() {
    let hopf = "2 | 1 1".parse().unwrap();
    assert!(matches!(engine().lg2_direct(&hopf), Err(ColoredError::NotAKnot(_))));
    assert!(matches!(engine().check_parallel_identity(&hopf, 2), Err(ColoredError::NotAKnot(_))));
    assert!(matches!(engine().check_parallel_identity(&common::knot("3_1").braid, 4), Err(ColoredError::Unsupported(_))));
}

#[test]
fn alexander_oracle() {
    let t = |a| LaurentPoly::mono(1, a, 0);
    assert!(alexander_burau(&common::knot("0_1").braid).unwrap().is_one());
    assert_eq!(alexander_burau(&common::knot("3_1").braid).unwrap(), &(&t(1) + &t(-1)) - &LaurentPoly::one());
    assert_eq!(
        alexander_burau(&common::knot("4_1").braid).unwrap(),
        &LaurentPoly::constant(3) - &(&t(1) + &t(-1))
    );
}

#[test]
fn specializations_on_the_census() {
    for rec in builtin_knot_table().into_iter().filter(|r| r.crossings <= 6) {
        for n in [1, 2] {
            for check in verify_specializations(engine(), &rec, n).unwrap() {
                assert!(check.pass, "{check:?}");
            }
        }
    }
}

#[test]
fn a_wrong_polynomial_fails_the_specializations() {
    let rec = common::knot("3_1");
    let bogus = LaurentPoly::mono(1, 2, 0);
    let checks = specialization_records(&rec.name, &bogus, 1, rec.alexander.as_ref(), rec.genus);
    assert!(checks.iter().any(|c| !c.pass));
}
