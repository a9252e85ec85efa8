use super::{agree, check, check_exponent, ensure, is_fatal, pow, star_pow, InverseClass, InverseError};
use crate::linalg::ExactSolver;

type Res<R> = Result<<R as crate::ring::StarRing>::Elem, InverseError<<R as crate::ring::StarRing>::Elem>>;

/// `x = w*` where `w a* a = a`.
pub fn one_three_inverse<R: ExactSolver>(r: &R, a: &R::Elem) -> Res<R> {
    let gram = r.mul(&r.star(a), a);
    let w = r
        .left_divide(a, &gram)
        .ok_or(InverseError::NotOneThreeInvertible)?;
    let x = r.star(&w);
    ensure(check::one_three(r, a, &x), InverseClass::OneThree, "axa = a, (ax)* = ax")?;
    Ok(x)
}

/// `y = m*` where `a a* m = a`.
pub fn one_four_inverse<R: ExactSolver>(r: &R, a: &R::Elem) -> Res<R> {
    let gram = r.mul(a, &r.star(a));
    let m = r
        .right_divide(a, &gram)
        .ok_or(InverseError::NotOneFourInvertible)?;
    let y = r.star(&m);
    ensure(check::one_four(r, a, &y), InverseClass::OneFour, "aya = a, (ya)* = ya")?;
    Ok(y)
}

fn mp_failure<R: ExactSolver>(r: &R, a: &R::Elem) -> InverseError<R::Elem> {
    let s = r.star(a);
    InverseError::NotMPInvertible {
        one_three: r.in_left_ideal(a, &r.mul(&s, a)),
        one_four: r.in_right_ideal(a, &r.mul(a, &s)),
    }
}

/// `a^(1,4) a a^(1,3)`.
pub fn mp_by_composition<R: ExactSolver>(r: &R, a: &R::Elem) -> Res<R> {
    match (one_three_inverse(r, a), one_four_inverse(r, a)) {
        (Ok(x), Ok(y)) => Ok(r.prod(&[&y, a, &x])),
        (Err(e), _) | (_, Err(e)) => Err(passthrough(e).unwrap_or_else(|| mp_failure(r, a))),
    }
}

/// `a* a x^2 a*` where `a = a a* a x`.
pub fn mp_by_gram<R: ExactSolver>(r: &R, a: &R::Elem) -> Res<R> {
    let s = r.star(a);
    let x = r
        .right_divide(a, &r.prod(&[a, &s, a]))
        .ok_or_else(|| mp_failure(r, a))?;
    Ok(r.prod(&[&s, a, &x, &x, &s]))
}

pub fn mp_inverse<R: ExactSolver>(r: &R, a: &R::Elem) -> Res<R> {
    let composed = mp_by_composition(r, a);
    let gram = mp_by_gram(r, a);
    let (x, g) = match (composed, gram) {
        (Ok(x), Ok(g)) => (x, g),
        (Err(e), Err(_)) => return Err(e),
        _ => {
            return Err(InverseError::RouteDisagreement {
                class: InverseClass::MoorePenrose,
                route: "existence",
            })
        }
    };
    agree(&[("composition", &x), ("gram", &g)], InverseClass::MoorePenrose)?;
    ensure(check::moore_penrose(r, a, &x), InverseClass::MoorePenrose, "Penrose equations")?;
    Ok(x)
}

/// `yax = y^2 a = a x^2` where `a = a^2 x = y a^2`.
pub fn group_inverse<R: ExactSolver>(r: &R, a: &R::Elem) -> Res<R> {
    let sq = r.mul(a, a);
    let x = r.right_divide(a, &sq);
    let y = r.left_divide(a, &sq);
    let (Some(x), Some(y)) = (x, y) else {
        return Err(InverseError::NotGroupInvertible {
            right: r.in_right_ideal(a, &sq),
            left: r.in_left_ideal(a, &sq),
        });
    };
    let yax = r.prod(&[&y, a, &x]);
    let yya = r.prod(&[&y, &y, a]);
    let axx = r.prod(&[a, &x, &x]);
    agree(&[("yax", &yax), ("y^2 a", &yya), ("a x^2", &axx)], InverseClass::Group)?;
    ensure(check::group(r, a, &yax), InverseClass::Group, "axa = a, xax = x, ax = xa")?;
    Ok(yax)
}

fn core_failure<R: ExactSolver>(r: &R, a: &R::Elem, n: u32) -> InverseError<R::Elem> {
    InverseError::NotCoreInvertible {
        power_star: r.in_left_ideal(a, &r.mul(&star_pow(r, a, n), a)),
        power: r.in_left_ideal(a, &pow(r, a, n)),
    }
}

fn dual_core_failure<R: ExactSolver>(r: &R, a: &R::Elem, n: u32) -> InverseError<R::Elem> {
    InverseError::NotDualCoreInvertible {
        power_star: r.in_right_ideal(a, &r.mul(a, &star_pow(r, a, n))),
        power: r.in_right_ideal(a, &pow(r, a, n)),
    }
}

fn passthrough<E>(e: InverseError<E>) -> Option<InverseError<E>> {
    is_fatal(&e).then_some(e)
}

/// `a# a a^(1,3)`.
pub fn core_by_composition<R: ExactSolver>(r: &R, a: &R::Elem) -> Res<R> {
    match (group_inverse(r, a), one_three_inverse(r, a)) {
        (Ok(g), Ok(x)) => {
            let v = r.prod(&[&g, a, &x]);
            ensure(check::core(r, a, &v), InverseClass::Core, "axa = a, xR = aR, Rx = Ra*")?;
            Ok(v)
        }
        (Err(e), _) | (_, Err(e)) => Err(passthrough(e).unwrap_or_else(|| core_failure(r, a, 2))),
    }
}

/// `(a^(n-1) s*, s)` where `a = s (a*)^n a`, provided also `a in R a^n`.
pub fn core_by_power_star<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    n: u32,
) -> Result<(R::Elem, R::Elem), InverseError<R::Elem>> {
    check_exponent(n, 2)?;
    let s = r.left_divide(a, &r.mul(&star_pow(r, a, n), a));
    let power = r.in_left_ideal(a, &pow(r, a, n));
    match s {
        Some(s) if power => {
            let v = r.mul(&pow(r, a, n - 1), &r.star(&s));
            ensure(check::core(r, a, &v), InverseClass::Core, "axa = a, xR = aR, Rx = Ra*")?;
            Ok((v, s))
        }
        s => Err(InverseError::NotCoreInvertible {
            power_star: s.is_some(),
            power,
        }),
    }
}

/// Core inverse by composition, cross-checked against the power-star route.
pub fn core_inverse<R: ExactSolver>(r: &R, a: &R::Elem, n: u32) -> Res<R> {
    check_exponent(n, 2)?;
    let composed = core_by_composition(r, a);
    let witness = core_by_power_star(r, a, n);
    match (composed, witness) {
        (Ok(c), Ok((w, _))) => {
            agree(&[("composition", &c), ("power-star", &w)], InverseClass::Core)?;
            Ok(c)
        }
        (Err(e), Err(_)) => Err(passthrough(e).unwrap_or_else(|| core_failure(r, a, n))),
        (Err(e), Ok(_)) | (Ok(_), Err(e)) => Err(passthrough(e).unwrap_or(InverseError::RouteDisagreement {
            class: InverseClass::Core,
            route: "existence",
        })),
    }
}

/// `a^(1,4) a a#`.
pub fn dual_core_by_composition<R: ExactSolver>(r: &R, a: &R::Elem) -> Res<R> {
    match (group_inverse(r, a), one_four_inverse(r, a)) {
        (Ok(g), Ok(y)) => {
            let v = r.prod(&[&y, a, &g]);
            ensure(check::dual_core(r, a, &v), InverseClass::DualCore, "axa = a, Rx = Ra, xR = a*R")?;
            Ok(v)
        }
        (Err(e), _) | (_, Err(e)) => Err(passthrough(e).unwrap_or_else(|| dual_core_failure(r, a, 2))),
    }
}

/// `(t* a^(n-1), t)` where `a = a (a*)^n t`, provided also `a in a^n R`.
pub fn dual_core_by_power_star<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    n: u32,
) -> Result<(R::Elem, R::Elem), InverseError<R::Elem>> {
    check_exponent(n, 2)?;
    let t = r.right_divide(a, &r.mul(a, &star_pow(r, a, n)));
    let power = r.in_right_ideal(a, &pow(r, a, n));
    match t {
        Some(t) if power => {
            let v = r.mul(&r.star(&t), &pow(r, a, n - 1));
            ensure(check::dual_core(r, a, &v), InverseClass::DualCore, "axa = a, Rx = Ra, xR = a*R")?;
            Ok((v, t))
        }
        t => Err(InverseError::NotDualCoreInvertible {
            power_star: t.is_some(),
            power,
        }),
    }
}

pub fn dual_core_inverse<R: ExactSolver>(r: &R, a: &R::Elem, n: u32) -> Res<R> {
    check_exponent(n, 2)?;
    let composed = dual_core_by_composition(r, a);
    let witness = dual_core_by_power_star(r, a, n);
    match (composed, witness) {
        (Ok(c), Ok((w, _))) => {
            agree(&[("composition", &c), ("power-star", &w)], InverseClass::DualCore)?;
            Ok(c)
        }
        (Err(e), Err(_)) => Err(passthrough(e).unwrap_or_else(|| dual_core_failure(r, a, n))),
        (Err(e), Ok(_)) | (Ok(_), Err(e)) => Err(passthrough(e).unwrap_or(InverseError::RouteDisagreement {
            class: InverseClass::DualCore,
            route: "existence",
        })),
    }
}

/// `(a⊕)^2 a`; must equal the group inverse.
pub fn group_from_core<R: ExactSolver>(r: &R, a: &R::Elem, core: Option<&R::Elem>) -> Res<R> {
    let c = core.ok_or(InverseError::MissingPrerequisite("core inverse"))?;
    Ok(r.prod(&[c, c, a]))
}

/// `a (a_⊕)^2`.
pub fn group_from_dual_core<R: ExactSolver>(r: &R, a: &R::Elem, dual: Option<&R::Elem>) -> Res<R> {
    let d = dual.ok_or(InverseError::MissingPrerequisite("dual core inverse"))?;
    Ok(r.prod(&[a, d, d]))
}
