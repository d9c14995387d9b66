//! Property tests: ring axioms for the scalars, the specialization
//! homomorphism, and agreement of exact equality with prime-field equality.

use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use webcalc_core::combinatorics::{cross_count, SubsetLabel};
use webcalc_core::scalar::{
    specialize, Assignment, Expo, FieldElem, FpPoint, LaurentPoly, PRIMES,
};

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        (
            prop::collection::vec(-3i32..=3, 0..3),
            -9i128..=9,
        ),
        0..6,
    )
    .prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (exps, c) in terms {
            p.add_term(Expo::new(exps), c);
        }
        p
    })
}

fn arb_elem() -> impl Strategy<Value = FieldElem> {
    (arb_poly(), 1i64..=4, prop::bool::ANY).prop_map(|(num, m, div_u)| {
        let mut x = FieldElem::from_poly(num);
        if m > 1 {
            x = x.div_qint(m);
        }
        if div_u {
            x = x.div_udiff(1, 2);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
    }

    #[test]
    fn field_ring_axioms(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
        prop_assert!((&a + &b).equals(&(&b + &a)));
        prop_assert!((&a * &b).equals(&(&b * &a)));
        prop_assert!((&(&a + &b) + &c).equals(&(&a + &(&b + &c))));
        prop_assert!((&(&a * &b) * &c).equals(&(&a * &(&b * &c))));
        prop_assert!((&a * &(&b + &c)).equals(&(&(&a * &b) + &(&a * &c))));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip()).is_one());
        }
    }

    #[test]
    fn exact_equality_matches_three_prime_points(a in arb_elem(), b in arb_elem()) {
        // a and a+b agree exactly iff b = 0; either way, exact comparison
        // must agree with comparison after specializing at 3 prime points
        let sum = &a + &b;
        let exact_equal = a.equals(&sum);
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut spec_equal = true;
        for p in PRIMES {
            let pt = FpPoint::random(&mut rng, 2, p);
            let (Ok(xa), Ok(xs)) = (a.eval_fp(&pt), sum.eval_fp(&pt)) else {
                continue;
            };
            if xa != xs {
                spec_equal = false;
            }
        }
        // exact equality implies specialized equality; the converse holds
        // with overwhelming probability for these degree ranges
        prop_assert_eq!(exact_equal, spec_equal);
    }

    #[test]
    fn specialize_is_homomorphism(a in arb_elem(), b in arb_elem()) {
        let assignment = Assignment {
            v: FieldElem::constant(2),
            u: vec![FieldElem::constant(3), FieldElem::constant(7), FieldElem::constant(-5)],
        };
        let lhs = specialize(&(&a * &b), &assignment).unwrap();
        let rhs = &specialize(&a, &assignment).unwrap() * &specialize(&b, &assignment).unwrap();
        prop_assert!(lhs.equals(&rhs));
        let lhs = specialize(&(&a + &b), &assignment).unwrap();
        let rhs = &specialize(&a, &assignment).unwrap() + &specialize(&b, &assignment).unwrap();
        prop_assert!(lhs.equals(&rhs));
    }

    #[test]
    fn cross_count_identity(
        sv in prop::collection::btree_set(1u8..=8, 0..5),
        tv in prop::collection::btree_set(1u8..=8, 0..5),
    ) {
        let s = SubsetLabel::new(sv.iter().copied().collect());
        let t = SubsetLabel::new(tv.iter().copied().collect());
        let cap = sv.intersection(&tv).count();
        prop_assert_eq!(
            cross_count(&s, &t) + cross_count(&t, &s),
            s.len() * t.len() - cap
        );
    }

    #[test]
    fn scalar_print_parse_roundtrip(a in arb_elem()) {
        let printed = a.to_string();
        let parsed = webcalc_core::scalar::parse_scalar(&printed).unwrap();
        prop_assert!(a.equals(&parsed), "roundtrip failed for {}", printed);
    }
}
