//! Property tests on signatures and presentations.

mod common;

use fenchel::presentation::canonical_presentation;
use fenchel::signature::{Classification, NecSignature, PeriodCycle, Rational, Sign};
use proptest::prelude::*;

fn arb_signature() -> impl Strategy<Value = NecSignature> {
    let cycle = prop::collection::vec(2u32..8, 0..5).prop_map(PeriodCycle::new);
    (
        0u32..4,
        any::<bool>(),
        prop::collection::vec(2u32..12, 0..5),
        prop::collection::vec(cycle, 0..3),
    )
        .prop_filter_map("genus 0 needs sign +", |(g, minus, periods, cycles)| {
            let sign = if minus { Sign::Minus } else { Sign::Plus };
            if minus && g == 0 {
                return None;
            }
            NecSignature::new(g, sign, periods, cycles).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parse_render_round_trip(s in arb_signature()) {
        let text = s.to_string();
        let back: NecSignature = text.parse().unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn area_invariant_under_rotation_and_period_order(s in arb_signature(), t in 0usize..5) {
        let mut moved = s.clone();
        moved.proper_periods.reverse();
        for c in &mut moved.cycles {
            if !c.is_empty() {
                *c = c.rotated(t % c.len());
            }
        }
        prop_assert_eq!(moved.area(), s.area());
    }

    #[test]
    fn non_hyperbolic_iff_area_not_positive(s in arb_signature()) {
        let non_hyp = s.classify() == Classification::NonHyperbolic;
        prop_assert_eq!(non_hyp, s.area() <= Rational::from_integer(0));
    }

    #[test]
    fn relators_are_orientation_preserving(s in arb_signature()) {
        for rel in canonical_presentation(&s).relators {
            prop_assert_eq!(rel.word.character(), 1, "{}", rel.word);
        }
    }
}

#[test]
fn whitespace_is_ignored() {
    let a: NecSignature = " ( 1 ; - ; [ 2 , 3 ] ; { ( 2 , 2 ) , ( - ) } ) "
        .parse()
        .unwrap();
    assert_eq!(a.to_string(), "(1;-;[2,3];{(2,2),(-)})");
}

#[test]
fn random_generator_is_admissible() {
    for s in common::random_admissible(5, 50, 6) {
        assert_eq!(s.classify(), Classification::AdmissibleProperNec, "{s}");
    }
}
