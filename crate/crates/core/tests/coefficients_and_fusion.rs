//! Multiplicities, cabling coefficients and tensor-product decompositions.

mod common;

use lg_core::colored::{coeff_a, coeff_b2, coeff_b2_typeset, multiplicities, sum_rule};
use lg_core::laurent::{mono_rat, RatFunc};
use lg_core::repcore::{
    build_module, decompose, fuse, fusion_rule, modified_dimension, tensor_power_of_generator, Character, Decomposition,
};

fn decomposition(entries: &[((u32, i32), u32)]) -> Decomposition {
    entries.iter().copied().collect()
}

#[test]
fn triangles_match_the_tabulated_values() {
    let shown = common::displayed_triangles();
    for (n, rows) in (1..=5).zip(&shown) {
        assert_eq!(&multiplicities(n).rows, rows, "n = {n}");
    }
    // The tabulated n = 6 triangle lacks the row k = 2; every other row agrees.
    let mut six = multiplicities(6).rows;
    assert_eq!(six.remove(2), vec![10, 45, 45, 10]);
    assert_eq!(six, shown[5]);
}

#[test]
fn triangles_are_symmetric_and_count_dimensions() {
    for n in 1..=8u32 {
        let m = multiplicities(n);
        let mut dim = 0u64;
        for (k, l, mult) in m.entries() {
            assert_eq!(mult, m.get(k as i64, n as i64 - 1 - k as i64 - l as i64), "n={n} k={k} l={l}");
            dim += mult * 4 * (k as u64 + 1);
        }
        assert_eq!(dim, 4u64.pow(n));
    }
}

#[test]
fn triangles_agree_with_character_decomposition() {
    for n in 1..=6 {
        let from_characters = tensor_power_of_generator(n).unwrap();
        let from_recursion: Decomposition =
            multiplicities(n).entries().map(|(k, l, m)| ((k, l as i32), m as u32)).collect();
        assert_eq!(from_characters, from_recursion, "n = {n}");
    }
}

#[test]
fn weighted_sum_vanishes_beyond_one_strand() {
    assert!(sum_rule(1).is_one());
    for n in 2..=6 {
        assert!(sum_rule(n).is_zero(), "n = {n}: {}", sum_rule(n));
    }
}

#[test]
fn coefficients_are_ratios_of_modified_dimensions() {
    let base = modified_dimension(0, 1, 0, 0);
    for n in 1..=4 {
        for (k, l, _) in multiplicities(n).entries() {
            let ratio = &modified_dimension(k, n as i32, l as i32, (k % 2) as u8) / &base;
            assert_eq!(ratio, coeff_a(n, k, l), "n={n} k={k} l={l}");
        }
    }
}

#[test]
fn characters_of_constructed_modules() {
    for n in 0..=2 {
        for offset in [0, 1] {
            assert_eq!(Character::of_module(&build_module(n, offset, 0)), Character::typical(n, 1, offset));
        }
    }
}

#[test]
fn tabulated_decompositions() {
    assert_eq!(tensor_power_of_generator(2).unwrap(), decomposition(&[((0, 0), 1), ((0, 1), 1), ((1, 0), 1)]));
    assert_eq!(
        tensor_power_of_generator(3).unwrap(),
        decomposition(&[((0, 0), 1), ((0, 1), 3), ((0, 2), 1), ((1, 0), 2), ((1, 1), 2), ((2, 0), 1)])
    );
    assert_eq!(
        fuse((1, 0), (1, 0)).unwrap(),
        decomposition(&[((0, 1), 1), ((0, 2), 1), ((1, 1), 2), ((2, 0), 1), ((2, 1), 1), ((3, 0), 1)])
    );
    assert_eq!(
        fuse((2, 0), (2, 0)).unwrap(),
        decomposition(&[
            ((0, 2), 1),
            ((0, 3), 1),
            ((1, 2), 2),
            ((2, 1), 1),
            ((2, 2), 1),
            ((3, 1), 2),
            ((4, 0), 1),
            ((4, 1), 1),
            ((5, 0), 1)
        ])
    );
}

#[test]
fn closed_fusion_rule_matches_characters() {
    for n in 0..=4 {
        for m in 0..=4 {
            assert_eq!(fuse((n, 0), (m, 0)).unwrap(), fusion_rule(n, m), "{n} ⊗ {m}");
        }
    }
}

#[test]
fn non_characters_leave_a_residue() {
    let mut ch = Character::typical(1, 1, 0);
    ch.poly = &ch.poly - &Character::typical(0, 1, 0).poly;
    assert!(decompose(&ch).is_err());
}

#[test]
fn solved_cable_coefficients_against_the_typeset_ones() {
    let solved = coeff_b2().unwrap();
    let [b00, b01, b10] = coeff_b2_typeset();
    assert_eq!(solved.b00, b00);
    assert_eq!(solved.b01, b01);
    // the typeset third coefficient carries the opposite sign
    assert_eq!(solved.b10, -b10);
}

#[test]
fn cable_coefficients_translate_into_the_parallel_coefficients() {
    let c = coeff_b2().unwrap();
    let to_lg = |x: &RatFunc| x.substitute_monomial([[-2, 0], [-1, -1]]).unwrap();
    assert_eq!(to_lg(&c.b00), &mono_rat(2, 0) * &coeff_a(2, 0, 0));
    assert_eq!(to_lg(&c.b01), &mono_rat(-2, -2) * &coeff_a(2, 0, 1));
    assert_eq!(to_lg(&c.b10), -coeff_a(2, 1, 0));
}
