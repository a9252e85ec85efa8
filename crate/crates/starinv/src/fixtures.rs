//! Known values, re-derived on demand.
//!
//! The centre piece is `a = [[1, i], [0, 0]]` over `Q(i)` with the plain
//! transpose: an idempotent with `a a* = 0`, core invertible but with no
//! dual core or Moore-Penrose inverse. Over `F_5` the same matrix with
//! `i = 2` keeps every one of these properties and is small enough for
//! exhaustive search.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use starinv_core::inverse::{
    core_inverse, dual_core_inverse, group_inverse, invertible_along_power_star, jacobson_partner, mp_inverse,
    one_four_inverse, one_three_inverse, portfolio, projection_uniqueness, InverseClass, InverseError,
    ProjectionMode,
};
use starinv_core::lab::{sample_element, verify_theorem, LabError, Oracle, RankProfile, TheoremId, TheoremParams};
use starinv_core::linalg::{ExactSolver, LinalgError};
use starinv_core::ring::{RingContext, RingElement, Side, StarRing};

use crate::text::{parse_list, parse_ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub group: &'static str,
    pub name: String,
    pub pass: bool,
}

struct Sink {
    group: &'static str,
    out: Vec<Fixture>,
}

impl Sink {
    fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.out.push(Fixture {
            group: self.group,
            name: name.into(),
            pass,
        });
    }
}

fn ring(s: &str) -> RingContext {
    parse_ring(s).expect("fixture ring")
}

fn el(ctx: &RingContext, s: &str) -> RingElement {
    parse_list(ctx, s).expect("fixture element")
}

/// The transpose idempotent over `Q(i)` and its companions.
pub fn idempotent_example() -> Vec<Fixture> {
    let mut s = Sink { group: "idempotent", out: Vec::new() };
    let r = ring("mat:2:Qi:transpose");
    let a = el(&r, "[[1, i], [0, 0]]");
    let e11 = el(&r, "[[1, 0], [0, 0]]");
    let st = r.star(&a);
    let st2 = r.pow(&st, 2);

    s.check("a^2 = a", r.pow(&a, 2) == a);
    s.check("a a* = 0", r.is_zero(&r.mul(&a, &st)));
    s.check("a* a = [[1, i], [i, -1]]", r.mul(&st, &a) == el(&r, "[[1, i], [i, -1]]"));
    let divisor = r.mul(&st2, &a);
    s.check("a = [[1, 0], [0, 0]] (a*)^2 a", r.mul(&e11, &divisor) == a);
    s.check(
        "solver witness for a in R (a*)^2 a is [[1, 0], [0, 0]]",
        r.solve_left(&a, &divisor).map(|w| w.solution) == Ok(e11.clone()),
    );
    s.check(
        "a not in R a (a*)^2 a",
        matches!(r.solve_left(&a, &r.prod(&[&a, &st2, &a])), Err(LinalgError::NotInIdeal(_))),
    );
    s.check("a (a*)^2 = 0, so a not in a (a*)^2 R", r.is_zero(&r.mul(&a, &st2)) && !r.in_right_ideal(&a, &r.mul(&a, &st2)));
    s.check("no Moore-Penrose inverse", matches!(mp_inverse(&r, &a), Err(InverseError::NotMPInvertible { .. })));
    s.check("core inverse is [[1, 0], [0, 0]]", core_inverse(&r, &a, 2) == Ok(e11.clone()));
    s.check(
        "no dual core inverse",
        matches!(dual_core_inverse(&r, &a, 2), Err(InverseError::NotDualCoreInvertible { .. })),
    );
    s.check("{1,3}-inverse is [[1, 0], [0, 0]]", one_three_inverse(&r, &a) == Ok(e11.clone()));
    s.check("no {1,4}-inverse", one_four_inverse(&r, &a) == Err(InverseError::NotOneFourInvertible));
    s.check("group inverse is a", group_inverse(&r, &a) == Ok(a.clone()));
    let along = invertible_along_power_star(&r, &a, 2);
    s.check("(a*)^2 not invertible along a", matches!(along, Ok(v) if !v.along && v.y.is_none()));
    let left = r.decomposition_check(&r.annihilator(&a, Side::Left), &r.ideal_subspace(&st2, Side::Left));
    s.check("left annihilator and R (a*)^2 form a direct sum", left.sum_is_all && left.intersection_is_zero);
    let right = r.decomposition_check(&r.annihilator(&a, Side::Right), &r.ideal_subspace(&st2, Side::Right));
    s.check("right annihilator and (a*)^2 R do not span", !right.sum_is_all);
    let params = TheoremParams { a_inner: Some(a.clone()), ..TheoremParams::with_n(2) };
    let v = verify_theorem(&r, TheoremId::RegularUnits, &a, &params);
    s.check(
        "u = [[1, 0], [i, 0]] is singular for a^- = a",
        matches!(&v, Ok(v) if v.passed() && v.bits() == "000000"
            && v.values.iter().any(|(n, u)| *n == "u" && *u == el(&r, "[[1, 0], [i, 0]]"))),
    );
    s.out
}

/// Worked values for small elements.
pub fn derived() -> Vec<Fixture> {
    let mut s = Sink { group: "derived", out: Vec::new() };
    let q = ring("mat:2:Q:transpose");
    let a = el(&q, "[[1, 1], [0, 0]]");
    let p = portfolio(&q, &a, 2);
    s.check(
        "[[1, 1], [0, 0]]: core [[1, 0], [0, 0]], dual core [[1/2, 1/2], [1/2, 1/2]], not EP",
        matches!(&p, Ok(p) if p.core.value() == Some(&el(&q, "[[1, 0], [0, 0]]"))
            && p.dual_core.value() == Some(&el(&q, "[[1/2, 1/2], [1/2, 1/2]]")) && !p.ep),
    );
    let params = TheoremParams { a_inner: Some(el(&q, "[[1, 0], [0, 0]]")), ..TheoremParams::with_n(2) };
    let v = verify_theorem(&q, TheoremId::RegularUnits, &a, &params);
    s.check(
        "[[1, 1], [0, 0]]: u = [[1, 0], [1, 2]] and all four units invertible",
        matches!(&v, Ok(v) if v.passed() && v.bits() == "111111"
            && v.values.iter().any(|(n, u)| *n == "u" && *u == el(&q, "[[1, 0], [1, 2]]"))),
    );
    let d = el(&q, "[[2, 0], [0, 0]]");
    let v = verify_theorem(&q, TheoremId::BothCores, &d, &TheoremParams::with_n(2));
    s.check("diag(2, 0): both-cores statement, all conditions hold", matches!(&v, Ok(v) if v.passed() && v.bits() == "1111111"));
    s.check("diag(2, 0): Moore-Penrose inverse diag(1/2, 0)", mp_inverse(&q, &d) == Ok(el(&q, "[[1/2, 0], [0, 0]]")));
    let c = ring("mat:2:Qi:ctranspose");
    s.check(
        "[[1, i], [0, 0]] with conjugate transpose: Moore-Penrose inverse [[1/2, 0], [-1/2 i, 0]]",
        mp_inverse(&c, &el(&c, "[[1, i], [0, 0]]")) == Ok(el(&c, "[[1/2, 0], [-1/2 i, 0]]")),
    );
    let z = ring("zmod:6");
    let two = el(&z, "2");
    let rep = Oracle::new(&z).map(|o| o.report(&two, 4));
    s.check(
        "Z/6: every unique inverse of 2 is 2",
        matches!(&rep, Ok(r) if [InverseClass::MoorePenrose, InverseClass::Group, InverseClass::Core, InverseClass::DualCore]
            .iter().all(|&c| r.value(c) == Some(&two) && r.class(c).count == 1)),
    );
    let v = verify_theorem(&z, TheoremId::CoreUnit, &two, &TheoremParams::with_n(2));
    s.check(
        "Z/6: unit statement for 2 gives p = 3, u = 1",
        matches!(&v, Ok(v) if v.passed() && v.values == vec![("p", el(&z, "3")), ("u", el(&z, "1"))]),
    );
    let projections: Vec<RingElement> = z.elements().unwrap_or_default().into_iter().filter(|e| z.is_projection(e)).collect();
    let pu = projection_uniqueness(&z, &two, 1, ProjectionMode::Core, Some(&projections));
    s.check("Z/6: the only matching projection for 2 is 3", matches!(&pu, Ok(v) if v.matching == vec![el(&z, "3")]));
    let j = jacobson_partner(&q, &el(&q, "[[0, 1], [0, 0]]"), &el(&q, "[[0, 0], [1, 0]]"));
    s.check(
        "partner of 1 + ab is diag(1, 1/2)",
        j.agree() && j.partner == Some(el(&q, "[[1, 0], [0, 1/2]]")),
    );
    let one = q.one();
    let p = portfolio(&q, &one, 2);
    s.check(
        "identity: every class exists with value 1",
        matches!(&p, Ok(p) if InverseClass::ALL.iter().all(|&c| p.class(c).value() == Some(&one))),
    );
    s.out
}

/// Elements that must be rejected, and why.
pub fn negative() -> Vec<Fixture> {
    let mut s = Sink { group: "negative", out: Vec::new() };
    let q = ring("mat:2:Q:transpose");
    let nil = el(&q, "[[0, 1], [0, 0]]");
    s.check("nilpotent: no group inverse", matches!(group_inverse(&q, &nil), Err(InverseError::NotGroupInvertible { .. })));
    s.check("nilpotent: no core inverse", matches!(core_inverse(&q, &nil, 2), Err(InverseError::NotCoreInvertible { .. })));
    for (t, n) in [(TheoremId::CoreUnitFirst, 1), (TheoremId::CoreUnit, 2), (TheoremId::CoreUnit, 3)] {
        let v = verify_theorem(&q, t, &nil, &TheoremParams::with_n(n));
        s.check(
            format!("nilpotent: unit statement conditions all false (n = {n})"),
            matches!(&v, Ok(v) if v.passed() && v.conditions.iter().all(|c| !c.holds)),
        );
    }
    let z = ring("zmod:4");
    let two = el(&z, "2");
    s.check("Z/4: 2 has no inner inverse", matches!(z.inner_inverse(&two), Err(LinalgError::NotRegular)));
    s.check(
        "Z/4: 2 has no inverse in any class",
        matches!(portfolio(&z, &two, 2), Ok(p) if InverseClass::ALL.iter().all(|&c| !p.class(c).exists())),
    );
    s.check(
        "Z/4: 2 is rejected by the regular-unit statement",
        matches!(verify_theorem(&z, TheoremId::RegularUnits, &two, &TheoremParams::with_n(2)), Err(LabError::NotRegular)),
    );
    s.check(
        "Z/4: exhaustive search finds no inverse of 2",
        matches!(Oracle::new(&z).map(|o| o.report(&two, 1)), Ok(r) if !r.regular),
    );

    // Every inner inverse of the F_5 image, and a sampled family over Q(i):
    // x + (1 - x a) Y + Z (1 - a x) runs through all inner inverses.
    let f5 = ring("mat:2:F5:transpose");
    let a5 = el(&f5, "[[1, 2], [0, 0]]");
    s.check("F_5 image: a^2 = a and a a* = 0", f5.pow(&a5, 2) == a5 && f5.is_zero(&f5.mul(&a5, &f5.star(&a5))));
    let inners = match Oracle::new(&f5) {
        Ok(o) => o.solutions(InverseClass::Inner, &a5).into_iter().map(|i| o.element(i).clone()).collect(),
        Err(_) => Vec::new(),
    };
    s.check(format!("F_5 image: {} inner inverses found", inners.len()), inners.len() == 125);
    let singular = |r: &RingContext, a: &RingElement, x: &RingElement| {
        let params = TheoremParams { a_inner: Some(x.clone()), ..TheoremParams::with_n(2) };
        matches!(verify_theorem(r, TheoremId::RegularUnits, a, &params), Ok(v) if v.passed() && v.bits() == "000000")
    };
    s.check(
        "F_5 image: u singular for every inner inverse",
        !inners.is_empty() && inners.iter().all(|x| singular(&f5, &a5, x)),
    );
    let r = ring("mat:2:Qi:transpose");
    let a = el(&r, "[[1, i], [0, 0]]");
    let x = r.inner_inverse(&a).expect("matrices are regular");
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let family: Vec<RingElement> = (0..25)
        .map(|_| {
            let y = sample_element(&r, 5, RankProfile::Any, &mut rng);
            let zz = sample_element(&r, 5, RankProfile::Any, &mut rng);
            let left = r.prod(&[&r.one_minus(&r.mul(&x, &a)), &y]);
            let right = r.prod(&[&zz, &r.one_minus(&r.mul(&a, &x))]);
            r.add(&r.add(&x, &left), &right)
        })
        .collect();
    s.check(
        "over Q(i): u singular for 25 sampled inner inverses",
        family.iter().all(|y| r.prod(&[&a, y, &a]) == a && singular(&r, &a, y)),
    );
    s.out
}

pub fn all() -> Vec<Fixture> {
    let mut out = idempotent_example();
    out.extend(derived());
    out.extend(negative());
    out
}
