mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use starinv_core::inverse::*;
use starinv_core::lab::{sample_element, RankProfile};
use starinv_core::linalg::ExactSolver;
use starinv_core::ring::{FieldSpec, Involution, RingContext, StarRing};

#[test]
fn one_sided_inverses() {
    let (r, a) = idempotent_example(Involution::Transpose);
    assert_eq!(one_three_inverse(&r, &a).unwrap(), ints(&r, &[1, 0, 0, 0]));
    assert_eq!(one_four_inverse(&r, &a), Err(InverseError::NotOneFourInvertible));
    let r = q(2);
    assert_eq!(one_three_inverse(&r, &ints(&r, &[0, 1, 0, 0])).unwrap(), ints(&r, &[0, 0, 1, 0]));
    assert_eq!(
        one_four_inverse(&r, &ints(&r, &[1, 1, 0, 0])).unwrap(),
        fracs(&r, &[(1, 2), (0, 1), (1, 2), (0, 1)])
    );
    assert_eq!(one_three_inverse(&r, &r.one()).unwrap(), r.one());
}

#[test]
fn moore_penrose() {
    let (r, a) = idempotent_example(Involution::ConjugateTranspose);
    let expect = gauss(&r, &[((1, 2), (0, 1)), ((0, 1), (0, 1)), ((0, 1), (-1, 2)), ((0, 1), (0, 1))]);
    assert_eq!(mp_inverse(&r, &a).unwrap(), expect);
    assert_eq!(mp_by_gram(&r, &a).unwrap(), expect);
    let (r, a) = idempotent_example(Involution::Transpose);
    assert!(matches!(mp_inverse(&r, &a), Err(InverseError::NotMPInvertible { .. })));
    let r = q(2);
    assert_eq!(mp_inverse(&r, &ints(&r, &[2, 0, 0, 0])).unwrap(), fracs(&r, &[(1, 2), (0, 1), (0, 1), (0, 1)]));
}

#[test]
fn group_core_and_dual_core() {
    let r = q(2);
    let a = ints(&r, &[1, 1, 0, 0]);
    assert_eq!(group_inverse(&r, &a).unwrap(), a);
    assert_eq!(core_inverse(&r, &a, 2).unwrap(), ints(&r, &[1, 0, 0, 0]));
    let dual = fracs(&r, &[(1, 2), (1, 2), (1, 2), (1, 2)]);
    assert_eq!(dual_core_inverse(&r, &a, 2).unwrap(), dual);
    assert_eq!(group_from_core(&r, &a, Some(&ints(&r, &[1, 0, 0, 0]))).unwrap(), a);
    assert_eq!(group_from_dual_core(&r, &a, Some(&dual)).unwrap(), a);

    let nil = ints(&r, &[0, 1, 0, 0]);
    assert!(matches!(group_inverse(&r, &nil), Err(InverseError::NotGroupInvertible { .. })));
    assert!(matches!(core_inverse(&r, &nil, 2), Err(InverseError::NotCoreInvertible { .. })));

    let (r, a) = idempotent_example(Involution::Transpose);
    assert_eq!(core_inverse(&r, &a, 2).unwrap(), ints(&r, &[1, 0, 0, 0]));
    assert!(matches!(dual_core_inverse(&r, &a, 2), Err(InverseError::NotDualCoreInvertible { .. })));

    let z = zmod(6);
    assert_eq!(group_inverse(&z, &ints(&z, &[2])).unwrap(), ints(&z, &[2]));
    let p = ints(&q(2), &[1, 0, 0, 0]);
    assert_eq!(dual_core_inverse(&q(2), &p, 3).unwrap(), p);
}

#[test]
fn hermitian_units() {
    let r = q(2);
    let a = ints(&r, &[1, 1, 0, 0]);
    let (uc, value) = unit_characterization_core(&r, &a, 1).unwrap();
    assert_eq!(uc.p, ints(&r, &[0, 0, 0, 1]));
    assert_eq!(uc.u, ints(&r, &[1, 1, 0, 1]));
    assert!(uc.projection);
    assert_eq!(value, ints(&r, &[1, 0, 0, 0]));
    let (uc, value) = unit_characterization_core(&r, &a, 2).unwrap();
    assert_eq!(uc.u, ints(&r, &[1, 1, 0, 1]));
    assert_eq!(value, ints(&r, &[1, 0, 0, 0]));
    let (uc, value) = unit_characterization_core(&r, &r.one(), 3).unwrap();
    assert!(r.is_zero(&uc.p) && r.is_one(&uc.u) && r.is_one(&value));

    assert_eq!(core_from_hermitian_unit(&r, &a, &ints(&r, &[0, 0, 0, 1]), 1).unwrap(), ints(&r, &[1, 0, 0, 0]));
    let d = ints(&r, &[2, 0, 0, 0]);
    assert_eq!(
        core_from_hermitian_unit(&r, &d, &ints(&r, &[0, 0, 0, 3]), 2).unwrap(),
        fracs(&r, &[(1, 2), (0, 1), (0, 1), (0, 1)])
    );
    let nil = ints(&r, &[0, 1, 0, 0]);
    for p in [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 2], [0, 0, 0, -1]] {
        assert!(matches!(
            core_from_hermitian_unit(&r, &nil, &ints(&r, &p), 2),
            Err(InverseError::UnitNotInvertible(_))
        ));
    }
    assert_eq!(core_from_hermitian_unit(&r, &nil, &r.one(), 2), Err(InverseError::NotAnnihilating));
    assert_eq!(core_from_hermitian_unit(&r, &a, &ints(&r, &[0, 1, 0, 0]), 2), Err(InverseError::BadHermitian));
}

#[test]
fn projections_in_residues() {
    let z = zmod(6);
    let all: Vec<_> = z.elements().unwrap().into_iter().filter(|e| z.is_projection(e)).collect();
    assert_eq!(all.len(), 4);
    let v = projection_uniqueness(&z, &ints(&z, &[2]), 1, ProjectionMode::Core, Some(&all)).unwrap();
    assert_eq!(v.matching, vec![ints(&z, &[3])]);
    assert_eq!(v.unique(), Some(true));
    let v = projection_uniqueness(&z, &z.zero(), 1, ProjectionMode::Core, Some(&all)).unwrap();
    assert_eq!(v.matching, vec![z.one()]);
    let f2 = RingContext::matrix(2, FieldSpec::prime(2).unwrap(), Involution::Transpose).unwrap();
    let all: Vec<_> = f2.elements().unwrap().into_iter().filter(|e| f2.is_projection(e)).collect();
    let v = projection_uniqueness(&f2, &f2.one(), 2, ProjectionMode::Core, Some(&all)).unwrap();
    assert_eq!(v.matching, vec![f2.zero()]);
    let v = projection_uniqueness(&q(2), &q(2).one(), 2, ProjectionMode::Core, None).unwrap();
    assert_eq!(v.unique(), None);
}

#[test]
fn ep_elements() {
    let r = q(2);
    let v = ep_characterization(&r, &ints(&r, &[2, 0, 0, 0]), 1).unwrap();
    assert!(v.agree() && v.is_ep());
    let unit = v.unit.unwrap();
    assert_eq!(unit.p, ints(&r, &[0, 0, 0, 1]));
    assert_eq!(unit.u, ints(&r, &[2, 0, 0, 1]));
    let v = ep_characterization(&r, &ints(&r, &[1, 1, 0, 0]), 2).unwrap();
    assert!(v.agree() && !v.is_ep());
    let v = ep_characterization(&r, &ints(&r, &[1, 2, 3, 4]), 3).unwrap();
    assert!(v.is_ep() && r.is_zero(&v.unit.unwrap().p));
}

#[test]
fn inverses_along_an_element() {
    let r = q(2);
    let a = ints(&r, &[1, 1, 0, 0]);
    let along = inverse_along(&r, &a, &a).unwrap();
    assert_eq!(along.value, a);
    assert_eq!(along.u, ints(&r, &[1, 1, 0, 1]));
    let d = ints(&r, &[2, 0, 0, 0]);
    assert_eq!(inverse_along(&r, &d, &r.star(&d)).unwrap().value, fracs(&r, &[(1, 2), (0, 1), (0, 1), (0, 1)]));
    let u = ints(&r, &[1, 2, 3, 4]);
    assert_eq!(inverse_along(&r, &u, &r.one()).unwrap().value, r.invert(&u).unwrap());
    assert!(matches!(inverse_along(&r, &ints(&r, &[0, 1, 0, 0]), &r.one()), Err(InverseError::NotInvertibleAlong { .. })));
}

#[test]
fn regular_units() {
    let r = q(2);
    let a = ints(&r, &[1, 1, 0, 0]);
    let ru = regular_unit_characterization(&r, &a, &ints(&r, &[1, 0, 0, 0]), 2).unwrap();
    assert_eq!(ru.u, ints(&r, &[1, 0, 1, 2]));
    assert_eq!(ru.v, ints(&r, &[2, 0, 0, 1]));
    assert_eq!(ru.invertible, [true; 4]);
    assert_eq!(ru.inverses.unwrap().core, ints(&r, &[1, 0, 0, 0]));

    let (r, a) = idempotent_example(Involution::Transpose);
    let ru = regular_unit_characterization(&r, &a, &a, 2).unwrap();
    assert_eq!(ru.u, r.from_int_pairs(&[(1, 0), (0, 0), (0, 1), (0, 0)]).unwrap());
    assert_eq!(ru.invertible, [false; 4]);
    assert!(ru.inverses.is_none());

    let z = zmod(6);
    let two = ints(&z, &[2]);
    let ru = regular_unit_characterization(&z, &two, &two, 2).unwrap();
    assert_eq!(ru.u, ints(&z, &[5]));
    let four = ru.inverses.unwrap();
    for c in [InverseClass::Core, InverseClass::DualCore, InverseClass::MoorePenrose, InverseClass::Group] {
        assert_eq!(four.get(c), Some(&two));
    }
    assert_eq!(regular_unit_characterization(&z, &two, &z.one(), 2).unwrap_err(), InverseError::NotRegularPair);
}

#[test]
fn power_star_along_and_sandwich() {
    let r = q(2);
    let d = ints(&r, &[2, 0, 0, 0]);
    let v = invertible_along_power_star(&r, &d, 2).unwrap();
    assert!(v.along);
    assert_eq!(v.x.clone().unwrap(), fracs(&r, &[(1, 8), (0, 1), (0, 1), (0, 1)]));
    assert_eq!(v.inverses.unwrap().mp, fracs(&r, &[(1, 2), (0, 1), (0, 1), (0, 1)]));
    let (g, a) = idempotent_example(Involution::Transpose);
    let v = invertible_along_power_star(&g, &a, 2).unwrap();
    assert!(!v.along && v.y.is_none());
    let v = invertible_along_power_star(&r, &r.one(), 3).unwrap();
    assert!(v.inverses.unwrap().core == r.one());

    let w = prop44_witness(&r, &d, &fracs(&r, &[(1, 8), (0, 1), (0, 1), (0, 1)]), 2).unwrap();
    assert_eq!(w.solution, fracs(&r, &[(1, 16), (0, 1), (0, 1), (0, 1)]));
    assert_eq!(prop44_witness(&r, &r.one(), &r.one(), 3).unwrap().solution, r.one());
    assert_eq!(prop44_witness(&g, &a, &g.one(), 2), Err(InverseError::BadWitness));
}

#[test]
fn jacobson_and_dedekind() {
    let r = q(2);
    let v = jacobson_partner(&r, &ints(&r, &[0, 1, 0, 0]), &ints(&r, &[0, 0, 1, 0]));
    assert!(v.agree());
    assert_eq!(v.partner.unwrap(), fracs(&r, &[(1, 1), (0, 1), (0, 1), (1, 2)]));
    let v = jacobson_partner(&r, &ints(&r, &[1, 2, 3, 4]), &r.zero());
    assert!(r.is_one(&v.ab_inverse.unwrap()) && r.is_one(&v.ba_inverse.unwrap()));
    let z = zmod(5);
    let v = jacobson_partner(&z, &ints(&z, &[2]), &ints(&z, &[3]));
    assert_eq!(v.ab_inverse, Some(ints(&z, &[3])));

    let dc = dedekind_core(&r, &ints(&r, &[1, 1, 0, 0])).unwrap();
    assert_eq!(dc.m, ints(&r, &[1, 1, 1, 2]));
    assert_eq!(dc.value, ints(&r, &[1, 0, 0, 0]));
    let z = zmod(6);
    let dc = dedekind_core(&z, &ints(&z, &[2])).unwrap();
    assert_eq!((dc.p, dc.m, dc.value), (ints(&z, &[3]), z.one(), ints(&z, &[2])));
}

#[test]
fn portfolio_of_transpose_example() {
    let (r, a) = idempotent_example(Involution::Transpose);
    let p = portfolio(&r, &a, 2).unwrap();
    assert_eq!(p.core.value(), Some(&ints(&r, &[1, 0, 0, 0])));
    assert!(!p.dual_core.exists() && !p.mp.exists() && !p.ep);
    assert!(p.core.routes.len() >= 2);
    let p = portfolio(&r, &r.one(), 2).unwrap();
    for c in InverseClass::ALL {
        assert_eq!(p.class(c).value(), Some(&r.one()));
    }
}

fn contexts() -> Vec<RingContext> {
    let mut out = Vec::new();
    for k in 1..=3 {
        out.push(q(k));
        out.push(qi(k, Involution::ConjugateTranspose));
        out.push(qi(k, Involution::Transpose));
        out.push(RingContext::matrix(k, FieldSpec::prime(3).unwrap(), Involution::Transpose).unwrap());
        out.push(RingContext::matrix(k, FieldSpec::prime_square(3).unwrap(), Involution::ConjugateTranspose).unwrap());
    }
    out.push(zmod(36));
    out.push(zmod(60));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn portfolio_invariants(c in 0..17usize, seed in any::<u64>(), stratum in 0usize..8, n in 2u32..=3) {
        let ctx = contexts()[c];
        let k = match ctx.kind() { starinv_core::ring::RingKind::Matrix { k, .. } => k, _ => 2 };
        let strata = RankProfile::strata(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = sample_element(&ctx, 4, strata[stratum % strata.len()], &mut rng);
        let p = portfolio(&ctx, &a, n).unwrap();
        for class in InverseClass::ALL {
            if let Some(x) = p.class(class).value() {
                prop_assert!(check::class(&ctx, class, &a, x), "{:?}", class);
            }
        }
        prop_assert_eq!(p.mp.exists(), p.one_three.exists() && p.one_four.exists());
        prop_assert_eq!(p.core.exists(), p.group.exists() && p.one_three.exists());
        prop_assert_eq!(p.dual_core.exists(), p.group.exists() && p.one_four.exists());
        prop_assert_eq!(p.ep, p.core.exists() && p.dual_core.exists() && p.core.value() == p.dual_core.value());
        for (_, w) in p.witnesses.iter() {
            prop_assert!(w.equation.holds(&ctx, &a, &w.value, w.n));
        }
        let other = portfolio(&ctx, &a, n + 1).unwrap();
        for class in InverseClass::ALL {
            if !matches!(class, InverseClass::Inner | InverseClass::OneThree | InverseClass::OneFour) {
                prop_assert_eq!(p.class(class).value(), other.class(class).value());
            }
        }
        let b = sample_element(&ctx, 4, RankProfile::Any, &mut rng);
        prop_assert!(jacobson_partner(&ctx, &a, &b).agree());
    }
}
