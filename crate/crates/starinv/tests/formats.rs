use proptest::prelude::*;
use starinv::record::{read_records, ElementRecord};
use starinv::text::{format_element, parse_list, parse_ring, ring_spec};
use starinv_core::lab::{random_element, RankProfile};
use starinv_core::linalg::ExactSolver;
use starinv_core::ring::{RingContext, RingElement};

const RINGS: [&str; 10] = [
    "zmod:6",
    "zmod:24",
    "mat:2:F2:transpose",
    "mat:2:F3:transpose",
    "mat:2:F2^2:ctranspose",
    "mat:3:F3^2:ctranspose",
    "mat:2:Q:transpose",
    "mat:3:Q:transpose",
    "mat:2:Qi:transpose",
    "mat:3:Qi:ctranspose",
];

fn round_trips(a: &RingElement) -> bool {
    let ctx = a.context();
    let listed = parse_list(&ctx, &format_element(a)).ok() == Some(a.clone());
    let json = ElementRecord::of(a).to_json();
    let recorded = read_records(&json).ok() == Some(vec![a.clone()]);
    listed && recorded
}

#[test]
fn ring_specs_round_trip() {
    for s in RINGS {
        let ctx = parse_ring(s).unwrap();
        assert_eq!(ring_spec(&ctx), s);
    }
}

#[test]
fn fractions_and_gaussians_round_trip() {
    let ctx = parse_ring("mat:2:Qi:ctranspose").unwrap();
    for s in ["[[1/2, -3/4 i], [5+2i, -i]]", "[[0, 1/3-1/7 i], [i, -22/7]]"] {
        let a = parse_list(&ctx, s).unwrap();
        assert!(round_trips(&a), "{s}");
    }
}

#[test]
fn several_records_in_one_file() {
    let ctx = parse_ring("zmod:12").unwrap();
    let elems: Vec<RingElement> = (0..12).map(|v| parse_list(&ctx, &v.to_string()).unwrap()).collect();
    let src: String = elems.iter().map(|e| ElementRecord::of(e).to_json() + "\n").collect();
    assert_eq!(read_records(&src).unwrap(), elems);
}

fn context(i: usize) -> RingContext {
    parse_ring(RINGS[i]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn printed_elements_parse_back(i in 0..RINGS.len(), seed in any::<u64>(), bound in 1i64..40) {
        let ctx = context(i);
        let a = random_element(&ctx, bound, RankProfile::Any, seed);
        prop_assert!(round_trips(&a));
        // Inner inverses carry fractions over the rationals.
        if let Ok(x) = ctx.inner_inverse(&a) {
            prop_assert!(round_trips(&x));
        }
    }
}
