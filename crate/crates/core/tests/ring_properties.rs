//! Algebraic laws of the exact Laurent and rational-function arithmetic.

use lg_core::laurent::{gcd, LaurentPoly, RatFunc};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -3i32..=3, -6i64..=6), 0..6).prop_map(LaurentPoly::from_triples)
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("non-zero", |p| !p.is_zero())
}

fn exponent_matrix() -> impl Strategy<Value = [[i32; 2]; 2]> {
    [[-2i32..=2, -2i32..=2], [-2i32..=2, -2i32..=2]]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!(-&(-&a), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn gcd_divides_and_is_maximal(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let ac = &a * &c;
        let bc = &b * &c;
        let g = gcd(&ac, &bc);
        prop_assert!(ac.exact_div(&g).is_ok());
        prop_assert!(bc.exact_div(&g).is_ok());
        // the common factor survives
        prop_assert!(g.exact_div(&gcd(&c, &c)).is_ok());
    }

    #[test]
    fn monomial_substitution_is_a_ring_homomorphism(a in poly(), b in poly(), m in exponent_matrix()) {
        prop_assert_eq!((&a * &b).substitute_monomial(m), &a.substitute_monomial(m) * &b.substitute_monomial(m));
        prop_assert_eq!((&a + &b).substitute_monomial(m), &a.substitute_monomial(m) + &b.substitute_monomial(m));
    }

    #[test]
    fn halving_undoes_squaring_the_first_variable(a in poly()) {
        prop_assert_eq!(a.substitute_monomial([[2, 0], [0, 1]]).halve_s_exponents().unwrap(), a);
    }

    #[test]
    fn json_roundtrip(a in poly()) {
        prop_assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn fractions_add_and_cancel(a in nonzero_poly(), b in nonzero_poly(), c in poly(), d in nonzero_poly()) {
        let x = RatFunc::new(a.clone(), b.clone()).unwrap();
        let y = RatFunc::new(c.clone(), d.clone()).unwrap();
        let sum = RatFunc::new(&(&a * &d) + &(&c * &b), &b * &d).unwrap();
        prop_assert_eq!(&x + &y, sum);
        prop_assert!((&x * &x.inv().unwrap()).is_one());
        // reduced representations are canonical
        let scaled = RatFunc::new(&a * &d, &b * &d).unwrap();
        prop_assert_eq!(scaled.num(), x.num());
        prop_assert_eq!(scaled.den(), x.den());
    }
}
