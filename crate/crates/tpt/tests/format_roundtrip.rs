use proptest::prelude::*;
use tpt::format::{format_sym2, format_tpt1, parse_input, parse_tpt1, Input};
use tpt_core::{SymmetricFamily2, TransitionModel, TransitionTensor};

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        any::<f64>().prop_filter("finite", |x| x.is_finite()),
        0.0f64..=1.0,
        Just(-0.0),
        Just(f64::MIN_POSITIVE / 4.0),
    ]
}

fn tensor() -> impl Strategy<Value = TransitionTensor> {
    (3usize..=4, 2usize..=3).prop_flat_map(|(m, n)| {
        proptest::collection::vec(finite(), n.pow(m as u32))
            .prop_map(move |entries| TransitionTensor::new(m, n, entries).unwrap())
    })
}

proptest! {
    #[test]
    fn tpt1_round_trip_is_bit_exact(t in tensor()) {
        let back = parse_tpt1(&format_tpt1(&t)).unwrap();
        prop_assert_eq!(back.order(), t.order());
        let bits = |t: &TransitionTensor| t.entries().iter().map(|x| x.to_bits()).collect::<Vec<_>>();
        prop_assert_eq!(bits(&back), bits(&t));
    }

    #[test]
    fn sym2_round_trip(m in 3usize..=40, a in 0.0f64..=1.0) {
        let f = SymmetricFamily2::new(m, a).unwrap();
        prop_assert_eq!(parse_input(&format_sym2(&f)).unwrap(), Input::Family(f));
    }

    #[test]
    fn parser_never_panics(text in "\\PC{0,200}") {
        let _ = parse_input(&text);
    }
}

#[test]
fn materialized_family_survives_the_file_format() {
    let f = SymmetricFamily2::new(8, 0.1).unwrap();
    let t = f.materialize().unwrap();
    assert_eq!(parse_tpt1(&format_tpt1(&t)).unwrap(), t);
    assert_eq!(
        SymmetricFamily2::recognize(&parse_tpt1(&format_tpt1(&t)).unwrap()),
        Some(f)
    );
}
