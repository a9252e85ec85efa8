use super::{agree, check, check_exponent, ensure, pow, star_pow, InverseClass, InverseError};
use crate::linalg::{ExactSolver, MembershipWitness};
use crate::ring::Side;

/// `a^‖d` with the units it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlongInverse<E> {
    pub d: E,
    pub d_inner: E,
    /// `d a + 1 - d d^-`
    pub u: E,
    /// `a d + 1 - d^- d`
    pub v: E,
    pub value: E,
}

/// Inverse of `a` along a regular `d`: `u^-1 d = d v^-1`.
pub fn inverse_along<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    d: &R::Elem,
) -> Result<AlongInverse<R::Elem>, InverseError<R::Elem>> {
    let d_inner = r.inner_inverse(d).map_err(|_| InverseError::DNotRegular)?;
    let one = r.one();
    let u = r.sub(&r.add(&r.mul(d, a), &one), &r.mul(d, &d_inner));
    let v = r.sub(&r.add(&r.mul(a, d), &one), &r.mul(&d_inner, d));
    let (u_inv, v_inv) = match (r.invert(&u), r.invert(&v)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(_), Err(_)) => {
            let dad = r.prod(&[d, a, d]);
            return Err(InverseError::NotInvertibleAlong {
                left: r.in_left_ideal(d, &dad),
                right: r.in_right_ideal(d, &dad),
            });
        }
        _ => return Err(InverseError::Inconsistent("u and v differ in invertibility")),
    };
    let value = r.mul(&u_inv, d);
    if value != r.mul(d, &v_inv) {
        return Err(InverseError::Inconsistent("u^-1 d != d v^-1"));
    }
    let ok = r.prod(&[&value, a, d]) == *d
        && r.prod(&[d, a, &value]) == *d
        && r.in_right_ideal(&value, d)
        && r.in_left_ideal(&value, d);
    if !ok {
        return Err(InverseError::Inconsistent("inverse along d fails yad = d = day, y in dR and Rd"));
    }
    Ok(AlongInverse {
        d: d.clone(),
        d_inner,
        u,
        v,
        value,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourInverses<E> {
    pub core: E,
    pub dual_core: E,
    pub mp: E,
    pub group: E,
}

impl<E> FourInverses<E> {
    pub fn get(&self, class: InverseClass) -> Option<&E> {
        match class {
            InverseClass::Core => Some(&self.core),
            InverseClass::DualCore => Some(&self.dual_core),
            InverseClass::MoorePenrose => Some(&self.mp),
            InverseClass::Group => Some(&self.group),
            _ => None,
        }
    }
}

fn validate_four<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    four: FourInverses<R::Elem>,
) -> Result<FourInverses<R::Elem>, InverseError<R::Elem>> {
    ensure(check::core(r, a, &four.core), InverseClass::Core, "axa = a, xR = aR, Rx = Ra*")?;
    ensure(check::dual_core(r, a, &four.dual_core), InverseClass::DualCore, "axa = a, Rx = Ra, xR = a*R")?;
    ensure(check::moore_penrose(r, a, &four.mp), InverseClass::MoorePenrose, "Penrose equations")?;
    ensure(check::group(r, a, &four.group), InverseClass::Group, "axa = a, xax = x, ax = xa")?;
    Ok(four)
}

/// The four units built from an inner inverse and their verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularUnits<E> {
    /// `(a*)^n a + 1 - a^- a`
    pub u: E,
    /// `a (a*)^n + 1 - a a^-`
    pub v: E,
    /// `a^- a (a*)^n a + 1 - a^- a`
    pub s: E,
    /// `a (a*)^n a a^- + 1 - a a^-`
    pub t: E,
    /// Invertibility of `u`, `v`, `s`, `t`.
    pub invertible: [bool; 4],
    pub inverses: Option<FourInverses<E>>,
}

impl<E> RegularUnits<E> {
    pub fn agree(&self) -> bool {
        self.invertible.iter().all(|&b| b == self.invertible[0])
    }
}

pub fn regular_unit_characterization<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    a_inner: &R::Elem,
    n: u32,
) -> Result<RegularUnits<R::Elem>, InverseError<R::Elem>> {
    check_exponent(n, 2)?;
    if !check::inner(r, a, a_inner) {
        return Err(InverseError::NotRegularPair);
    }
    let sn = star_pow(r, a, n);
    let e = r.mul(a_inner, a);
    let f = r.mul(a, a_inner);
    let not_e = r.one_minus(&e);
    let not_f = r.one_minus(&f);
    let u = r.add(&r.mul(&sn, a), &not_e);
    let v = r.add(&r.mul(a, &sn), &not_f);
    let s = r.add(&r.prod(&[&e, &sn, a]), &not_e);
    let t = r.add(&r.prod(&[a, &sn, a, a_inner]), &not_f);
    let u_inv = r.invert(&u).ok();
    let v_inv = r.invert(&v).ok();
    let invertible = [u_inv.is_some(), v_inv.is_some(), r.is_unit(&s), r.is_unit(&t)];
    let inverses = match (u_inv, v_inv) {
        (Some(u_inv), Some(v_inv)) => {
            let right = r.star(&r.mul(&v_inv, a));
            let left = r.star(&r.mul(a, &u_inv));
            let core = r.mul(&pow(r, a, n - 1), &right);
            let dual_core = r.mul(&left, &pow(r, a, n - 1));
            let mp = r.prod(&[&left, &pow(r, a, 2 * n - 1), &right]);
            let group = r.prod(&[&core, &core, a]);
            Some(validate_four(
                r,
                a,
                FourInverses {
                    core,
                    dual_core,
                    mp,
                    group,
                },
            )?)
        }
        _ => None,
    };
    Ok(RegularUnits {
        u,
        v,
        s,
        t,
        invertible,
        inverses,
    })
}

/// Memberships `a in a (a*)^n a R` and `a in R a (a*)^n a` with their witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlongPowerStar<E> {
    /// `x` with `a = a (a*)^n a x`.
    pub x: Option<E>,
    /// `y` with `a = y a (a*)^n a`.
    pub y: Option<E>,
    /// `(a*)^n` is invertible along `a`.
    pub along: bool,
    pub inverses: Option<FourInverses<E>>,
}

impl<E> AlongPowerStar<E> {
    pub fn right_member(&self) -> bool {
        self.x.is_some()
    }

    pub fn left_member(&self) -> bool {
        self.y.is_some()
    }

    pub fn verdict(&self) -> bool {
        self.x.is_some() && self.y.is_some()
    }
}

pub fn invertible_along_power_star<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    n: u32,
) -> Result<AlongPowerStar<R::Elem>, InverseError<R::Elem>> {
    check_exponent(n, 2)?;
    let sn = star_pow(r, a, n);
    let m = r.prod(&[a, &sn, a]);
    let x = r.right_divide(a, &m);
    let y = r.left_divide(a, &m);
    let along = match inverse_along(r, &sn, a) {
        Ok(_) => true,
        Err(InverseError::NotInvertibleAlong { .. }) | Err(InverseError::DNotRegular) => false,
        Err(e) => return Err(e),
    };
    let inverses = match (&x, &y) {
        (Some(x), Some(y)) => {
            let s = r.star(a);
            let ys = r.star(y);
            let xs = r.star(x);
            let core = r.prod(&[&pow(r, a, n - 1), &s, &ys]);
            let dual_core = r.prod(&[&xs, &s, &pow(r, a, n - 1)]);
            let mp = r.prod(&[&xs, &s, &pow(r, a, 2 * n - 1), &s, &ys]);
            let group = r.prod(&[&core, &core, a]);
            let group_alt = r.prod(&[a, &dual_core, &dual_core]);
            agree(&[("core^2 a", &group), ("a dual^2", &group_alt)], InverseClass::Group)?;
            Some(validate_four(
                r,
                a,
                FourInverses {
                    core,
                    dual_core,
                    mp,
                    group,
                },
            )?)
        }
        _ => None,
    };
    Ok(AlongPowerStar { x, y, along, inverses })
}

/// From `a = x a (a*)^n a`, the witness `r = a* x* x* a` of `a = a^n a* a^n r`.
pub fn prop44_witness<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    x: &R::Elem,
    n: u32,
) -> Result<MembershipWitness<R::Elem>, InverseError<R::Elem>> {
    check_exponent(n, 1)?;
    let s = r.star(a);
    let sn = star_pow(r, a, n);
    if r.prod(&[x, a, &sn, a]) != *a {
        return Err(InverseError::BadWitness);
    }
    let xs = r.star(x);
    let w = r.prod(&[&s, &xs, &xs, a]);
    let an = pow(r, a, n);
    if r.prod(&[&an, &s, &an, &w]) != *a {
        return Err(InverseError::Inconsistent("a != a^n a* a^n r"));
    }
    Ok(MembershipWitness {
        solution: w,
        side: Side::Right,
    })
}

/// From `a = a (a*)^n a x`, the witness `r = a x* x* a*` of `a = r a^n a* a^n`.
pub fn prop44_witness_mirror<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    x: &R::Elem,
    n: u32,
) -> Result<MembershipWitness<R::Elem>, InverseError<R::Elem>> {
    check_exponent(n, 1)?;
    let s = r.star(a);
    let sn = star_pow(r, a, n);
    if r.prod(&[a, &sn, a, x]) != *a {
        return Err(InverseError::BadWitness);
    }
    let xs = r.star(x);
    let w = r.prod(&[a, &xs, &xs, &s]);
    let an = pow(r, a, n);
    if r.prod(&[&w, &an, &s, &an]) != *a {
        return Err(InverseError::Inconsistent("a != r a^n a* a^n"));
    }
    Ok(MembershipWitness {
        solution: w,
        side: Side::Left,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{GaussianRationals, Rationals};
    use crate::ring::{Involution, MatrixRing, StarRing, Zmod};
    use num_complex::Complex;
    use num_rational::BigRational;

    fn q() -> MatrixRing<Rationals> {
        MatrixRing::new(2, Rationals, Involution::Transpose)
    }

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn along_itself_is_group_inverse() {
        let r = q();
        let a = r.from_ints(&[1, 1, 0, 0]);
        let al = inverse_along(&r, &a, &a).unwrap();
        assert_eq!(al.value, a);
        assert_eq!(al.u, r.from_ints(&[1, 1, 0, 1]));
        let d = r.from_ints(&[2, 0, 0, 0]);
        let al = inverse_along(&r, &d, &r.star(&d)).unwrap();
        assert_eq!(al.value, r.diag(alloc::vec![frac(1, 2), frac(0, 1)]));
        let sing = r.from_ints(&[1, 2, 2, 4]);
        assert!(matches!(
            inverse_along(&r, &sing, &r.one()),
            Err(InverseError::NotInvertibleAlong { left: false, right: false })
        ));
        let u = r.from_ints(&[1, 1, 0, 1]);
        assert_eq!(inverse_along(&r, &u, &r.one()).unwrap().value, r.from_ints(&[1, -1, 0, 1]));
        let z9 = Zmod::new(9).unwrap();
        assert_eq!(inverse_along(&z9, &1, &3), Err(InverseError::DNotRegular));
    }

    #[test]
    fn regular_units_for_idempotent() {
        let r = q();
        let a = r.from_ints(&[1, 1, 0, 0]);
        let res = regular_unit_characterization(&r, &a, &r.from_ints(&[1, 0, 0, 0]), 2).unwrap();
        assert_eq!(res.u, r.from_ints(&[1, 0, 1, 2]));
        assert_eq!(res.v, r.from_ints(&[2, 0, 0, 1]));
        assert!(res.agree() && res.invertible[0]);
        let four = res.inverses.unwrap();
        assert_eq!(four.core, r.from_ints(&[1, 0, 0, 0]));
        assert_eq!(four.mp, r.element(alloc::vec![frac(1, 2), frac(0, 1), frac(1, 2), frac(0, 1)]));
        assert_eq!(four.group, a);
        assert_eq!(
            regular_unit_characterization(&r, &a, &r.zero(), 2),
            Err(InverseError::NotRegularPair)
        );
    }

    #[test]
    fn regular_units_on_transpose_example() {
        let r = MatrixRing::new(2, GaussianRationals, Involution::Transpose);
        let c = |re: i64, im: i64| Complex::new(frac(re, 1), frac(im, 1));
        let a = r.element(alloc::vec![c(1, 0), c(0, 1), c(0, 0), c(0, 0)]);
        let res = regular_unit_characterization(&r, &a, &a, 2).unwrap();
        assert_eq!(res.u, r.element(alloc::vec![c(1, 0), c(0, 0), c(0, 1), c(0, 0)]));
        assert_eq!(res.invertible, [false; 4]);
        assert!(res.inverses.is_none());
        let ap = invertible_along_power_star(&r, &a, 2).unwrap();
        assert!(!ap.left_member() && !ap.right_member());
        assert!(!ap.verdict() && !ap.along);
    }

    #[test]
    fn residue_units() {
        let z = Zmod::new(6).unwrap();
        let res = regular_unit_characterization(&z, &2, &2, 2).unwrap();
        assert_eq!(res.u, 5);
        let four = res.inverses.unwrap();
        assert_eq!((four.core, four.dual_core, four.mp, four.group), (2, 2, 2, 2));
    }

    #[test]
    fn power_star_along_diagonal() {
        let r = q();
        let a = r.from_ints(&[2, 0, 0, 0]);
        let ap = invertible_along_power_star(&r, &a, 2).unwrap();
        assert!(ap.verdict() && ap.along);
        assert_eq!(ap.x.clone().unwrap(), r.diag(alloc::vec![frac(1, 8), frac(0, 1)]));
        assert_eq!(ap.inverses.unwrap().mp, r.diag(alloc::vec![frac(1, 2), frac(0, 1)]));
        let one = invertible_along_power_star(&r, &r.one(), 3).unwrap();
        assert_eq!(one.inverses.unwrap().core, r.one());
    }

    #[test]
    fn prop44_witnesses() {
        let r = q();
        let a = r.from_ints(&[2, 0, 0, 0]);
        let x = r.diag(alloc::vec![frac(1, 8), frac(0, 1)]);
        let w = prop44_witness(&r, &a, &x, 2).unwrap();
        assert_eq!(w.solution, r.diag(alloc::vec![frac(1, 16), frac(0, 1)]));
        let w = prop44_witness_mirror(&r, &a, &x, 2).unwrap();
        assert_eq!(w.solution, r.diag(alloc::vec![frac(1, 16), frac(0, 1)]));
        assert_eq!(prop44_witness(&r, &r.one(), &r.one(), 3).unwrap().solution, r.one());
        assert_eq!(prop44_witness(&r, &a, &r.one(), 2), Err(InverseError::BadWitness));
    }
}
