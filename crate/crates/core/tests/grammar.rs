//! Grammar round-trip: printing any term and parsing it back is structural
//! identity.

use proptest::prelude::*;

use webcalc_core::rep::coil::Direction;
use webcalc_core::scalar::FieldElem;
use webcalc_core::web::ast::{Gen, WebTerm};
use webcalc_core::web::parse;

fn arb_label() -> impl Strategy<Value = i32> {
    1i32..=3
}

fn arb_signed() -> impl Strategy<Value = i32> {
    prop_oneof![1i32..=3, (-3i32..=-1)]
}

fn arb_word() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(arb_signed(), 1..4)
}

fn arb_gen() -> impl Strategy<Value = Gen> {
    prop_oneof![
        (arb_label(), arb_label()).prop_map(|(k, l)| Gen::Merge(k, l)),
        (arb_label(), arb_label()).prop_map(|(k, l)| Gen::Split(k, l)),
        (arb_label(), arb_label()).prop_map(|(k, l)| Gen::DMerge(k, l)),
        (arb_label(), arb_label()).prop_map(|(k, l)| Gen::DSplit(k, l)),
        arb_label().prop_map(Gen::CapL),
        arb_label().prop_map(Gen::CapR),
        arb_label().prop_map(Gen::CupL),
        arb_label().prop_map(Gen::CupR),
        (arb_signed(), arb_signed()).prop_map(|(a, b)| Gen::Over(a, b)),
        (arb_signed(), arb_signed()).prop_map(|(a, b)| Gen::Under(a, b)),
    ]
}

fn arb_term() -> impl Strategy<Value = WebTerm> {
    let leaf = prop_oneof![
        arb_gen().prop_map(WebTerm::Gen),
        arb_word().prop_map(WebTerm::Id),
        (arb_word(), prop::bool::ANY).prop_map(|(w, fwd)| WebTerm::CoilSlice(
            w,
            if fwd { Direction::Winding } else { Direction::Inverse }
        )),
    ];
    leaf.prop_recursive(3, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| WebTerm::tensor(a, b)),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| WebTerm::compose(a, b)),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| WebTerm::SkeinTensor(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| WebTerm::Sum(Box::new(a), Box::new(b))),
            (-5i32..=5, inner.clone()).prop_map(|(e, t)| WebTerm::Scale(
                FieldElem::v(e),
                Box::new(t)
            )),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_parse_roundtrip(t in arb_term()) {
        let printed = t.to_string();
        let parsed = parse(&printed);
        prop_assert!(parsed.is_ok(), "unparseable: {printed}");
        prop_assert_eq!(parsed.unwrap(), t, "printed as {}", printed);
    }

    #[test]
    fn flips_involutive(t in arb_term()) {
        prop_assert_eq!(t.flip_updown().flip_updown(), t.clone());
        prop_assert_eq!(t.flip_leftright().flip_leftright(), t);
    }
}
