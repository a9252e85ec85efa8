mod common;

use common::*;
use starinv_core::error::RingError;
use starinv_core::inverse::InverseClass;
use starinv_core::linalg::ExactSolver;
use starinv_core::lab::*;
use starinv_core::ring::{FieldSpec, Involution, RingContext, StarRing};

#[test]
fn oracle_reports() {
    let z = zmod(6);
    let o = Oracle::new(&z).unwrap();
    let rep = o.report(&ints(&z, &[2]), 4);
    assert!(rep.regular && rep.ep && rep.validated && rep.uniqueness_holds());
    for c in [InverseClass::MoorePenrose, InverseClass::Group, InverseClass::Core, InverseClass::DualCore] {
        assert_eq!(rep.value(c), Some(&ints(&z, &[2])));
        assert_eq!(rep.class(c).count, 1);
    }
    let z = zmod(4);
    let rep = Oracle::new(&z).unwrap().report(&ints(&z, &[2]), 4);
    assert!(!rep.regular && rep.classes.iter().all(|c| c.count == 0));
    for ctx in finite_contexts() {
        let o = Oracle::new(&ctx).unwrap();
        let rep = o.report(&ctx.one(), 2);
        assert!(rep.unit && rep.projection);
        for c in InverseClass::ALL {
            assert!(rep.class(c).solutions.contains(&ctx.one()));
        }
    }
    assert!(matches!(Oracle::new(&q(2)), Err(RingError::NotEnumerable { .. })));
}

#[test]
fn theorem_examples() {
    let r = q(2);
    let v = verify_theorem(&r, TheoremId::BothCores, &ints(&r, &[2, 0, 0, 0]), &TheoremParams::with_n(2)).unwrap();
    assert_eq!(v.bits(), "1111111");
    assert!(v.passed() && v.formulas.len() >= 4);

    let v = verify_theorem(&r, TheoremId::CoreUnit, &ints(&r, &[0, 1, 0, 0]), &TheoremParams::with_n(2)).unwrap();
    assert!(v.agree() && v.conditions.iter().all(|c| !c.holds));

    let params = TheoremParams { a_inner: Some(ints(&r, &[1, 0, 0, 0])), ..TheoremParams::with_n(2) };
    let v = verify_theorem(&r, TheoremId::RegularUnits, &ints(&r, &[1, 1, 0, 0]), &params).unwrap();
    assert!(v.passed() && v.conditions.iter().all(|c| c.holds));
    assert!(v.values.iter().any(|(name, u)| *name == "u" && *u == ints(&r, &[1, 0, 1, 2])));

    let z = zmod(6);
    let v = verify_theorem(&z, TheoremId::CoreUnit, &ints(&z, &[2]), &TheoremParams::with_n(2)).unwrap();
    assert!(v.passed());
    assert_eq!(v.values, vec![("p", ints(&z, &[3])), ("u", ints(&z, &[1]))]);
}

#[test]
fn parameter_errors() {
    let r = q(2);
    let a = ints(&r, &[1, 0, 0, 0]);
    assert!(matches!(
        verify_theorem(&r, TheoremId::PowerStarCore, &a, &TheoremParams::with_n(1)),
        Err(LabError::Exponent { .. })
    ));
    // Without an inner inverse the solver supplies one.
    assert!(verify_theorem(&r, TheoremId::RegularUnits, &a, &TheoremParams::with_n(2)).unwrap().passed());
    let bad = TheoremParams { a_inner: Some(r.zero()), ..TheoremParams::with_n(2) };
    assert!(matches!(verify_theorem(&r, TheoremId::RegularUnits, &a, &bad), Err(LabError::BadInner)));
    assert!(matches!(
        verify_theorem(&r, TheoremId::Jacobson, &a, &TheoremParams::with_n(1)),
        Err(LabError::MissingParameter(_))
    ));
}

#[test]
fn theorem_codes_round_trip() {
    for t in TheoremId::ALL {
        assert_eq!(TheoremId::parse(t.code()), Some(t));
        assert_eq!(TheoremId::parse(&t.code().to_lowercase()), Some(t));
    }
    assert_eq!(TheoremId::ALL.len(), 13);
    assert!(TheoremId::parse("T9.9").is_none());
}

#[test]
fn exhaustive_sweeps_pass() {
    let f2 = RingContext::matrix(2, FieldSpec::prime(2).unwrap(), Involution::Transpose).unwrap();
    for ctx in [zmod(6), zmod(12), f2] {
        let cfg = SweepConfig::new(TheoremId::ALL.to_vec(), Sampler::Exhaustive);
        let s = sweep(&ctx, &cfg, &mut |_| {}).unwrap();
        assert_eq!(s.failures(), 0, "{ctx:?}");
        assert_eq!(s.elements, ctx.size().unwrap() as usize);
    }
    let cfg = SweepConfig::new(TheoremId::ALL.to_vec(), Sampler::Exhaustive);
    assert!(matches!(sweep(&q(2), &cfg, &mut |_| {}), Err(RingError::NotEnumerable { .. })));
}

#[test]
fn random_rational_sweep() {
    let mut cfg = SweepConfig::new(TheoremId::ALL.to_vec(), Sampler::Random { count: 200, entry_bound: 3 });
    cfg.seed = 42;
    let mut first = Vec::new();
    let s = sweep(&q(3), &cfg, &mut |item| first.push(format!("{item:?}"))).unwrap();
    assert_eq!(s.failures(), 0);
    assert_eq!(s.elements, 200);
    let mut second = Vec::new();
    sweep(&q(3), &cfg, &mut |item| second.push(format!("{item:?}"))).unwrap();
    assert_eq!(first, second);
}

#[test]
fn random_elements_are_reproducible() {
    let r = q(2);
    let a = random_element(&r, 5, RankProfile::Full, 9);
    assert_eq!(a, random_element(&r, 5, RankProfile::Full, 9));
    assert!(r.is_unit(&a));
    let e = random_element(&r, 5, RankProfile::Idempotent(1), 9);
    assert!(r.is_idempotent(&e));
}
