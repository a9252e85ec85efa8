use alloc::vec::Vec;

use super::classes::{core_by_composition, dual_core_by_composition, group_inverse, mp_inverse};
use super::{agree, check, check_exponent, ensure, is_fatal, pow, InverseClass, InverseError};
use crate::linalg::ExactSolver;
use crate::ring::{enumerate, StarRing};

/// `p`, `u = a^n + p` and `u^-1` for one exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCharacterization<E> {
    pub p: E,
    pub projection: bool,
    pub n: u32,
    pub u: E,
    pub u_inverse: E,
}

/// Core inverse from an invertible `u = a^n + p`: `a^(n-1) u^-1` for
/// `n >= 2`; for `n = 1` both `u^-1 a u^-1` and `(u* u)^-1 a*`, which must agree.
fn core_from_unit<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    n: u32,
    u: &R::Elem,
    u_inv: &R::Elem,
) -> Result<R::Elem, InverseError<R::Elem>> {
    if n >= 2 {
        return Ok(r.mul(&pow(r, a, n - 1), u_inv));
    }
    let sandwich = r.prod(&[u_inv, a, u_inv]);
    let gram = r.mul(&r.star(u), u);
    let gram_inv = r.invert(&gram).map_err(|_| InverseError::Inconsistent("u* u singular for a unit u"))?;
    let normal = r.mul(&gram_inv, &r.star(a));
    agree(&[("u^-1 a u^-1", &sandwich), ("(u* u)^-1 a*", &normal)], InverseClass::Core)?;
    Ok(sandwich)
}

/// Mirror: `u^-1 a^(n-1)`, or `u^-1 a u^-1 = a* (u u*)^-1` for `n = 1`.
fn dual_core_from_unit<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    n: u32,
    u: &R::Elem,
    u_inv: &R::Elem,
) -> Result<R::Elem, InverseError<R::Elem>> {
    if n >= 2 {
        return Ok(r.mul(u_inv, &pow(r, a, n - 1)));
    }
    let sandwich = r.prod(&[u_inv, a, u_inv]);
    let gram = r.mul(u, &r.star(u));
    let gram_inv = r.invert(&gram).map_err(|_| InverseError::Inconsistent("u u* singular for a unit u"))?;
    let normal = r.mul(&r.star(a), &gram_inv);
    agree(&[("u^-1 a u^-1", &sandwich), ("a* (u u*)^-1", &normal)], InverseClass::DualCore)?;
    Ok(sandwich)
}

fn unit_of<R: ExactSolver>(r: &R, a: &R::Elem, p: &R::Elem, n: u32) -> Result<(R::Elem, R::Elem), InverseError<R::Elem>> {
    let u = r.add(&pow(r, a, n), p);
    let inv = r.invert(&u).map_err(InverseError::UnitNotInvertible)?;
    Ok((u, inv))
}

/// Builds `p = 1 - a a⊕`, checks it, and recovers `a⊕` from `u = a^n + p`.
pub fn unit_characterization_core<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    n: u32,
) -> Result<(UnitCharacterization<R::Elem>, R::Elem), InverseError<R::Elem>> {
    check_exponent(n, 1)?;
    let core = core_by_composition(r, a)?;
    let p = r.one_minus(&r.mul(a, &core));
    ensure(r.is_projection(&p), InverseClass::Core, "1 - a a⊕ is a projection")?;
    ensure(r.is_zero(&r.mul(&p, a)), InverseClass::Core, "(1 - a a⊕) a = 0")?;
    let (u, u_inverse) = unit_of(r, a, &p, n).map_err(|_| InverseError::Inconsistent("a^n + p singular for core invertible a"))?;
    let recovered = core_from_unit(r, a, n, &u, &u_inverse)?;
    agree(&[("composition", &core), ("unit", &recovered)], InverseClass::Core)?;
    Ok((
        UnitCharacterization {
            p,
            projection: true,
            n,
            u,
            u_inverse,
        },
        recovered,
    ))
}

/// Builds `q = 1 - a_⊕ a` and recovers `a_⊕` from `a^n + q`.
pub fn unit_characterization_dual<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    n: u32,
) -> Result<(UnitCharacterization<R::Elem>, R::Elem), InverseError<R::Elem>> {
    check_exponent(n, 1)?;
    let dual = dual_core_by_composition(r, a)?;
    let q = r.one_minus(&r.mul(&dual, a));
    ensure(r.is_projection(&q), InverseClass::DualCore, "1 - a_⊕ a is a projection")?;
    ensure(r.is_zero(&r.mul(a, &q)), InverseClass::DualCore, "a (1 - a_⊕ a) = 0")?;
    let (u, u_inverse) =
        unit_of(r, a, &q, n).map_err(|_| InverseError::Inconsistent("a^n + q singular for dual core invertible a"))?;
    let recovered = dual_core_from_unit(r, a, n, &u, &u_inverse)?;
    agree(&[("composition", &dual), ("unit", &recovered)], InverseClass::DualCore)?;
    Ok((
        UnitCharacterization {
            p: q,
            projection: true,
            n,
            u,
            u_inverse,
        },
        recovered,
    ))
}

/// Core inverse from any Hermitian `p` with `pa = 0` and `a^n + p` invertible.
pub fn core_from_hermitian_unit<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    p: &R::Elem,
    n: u32,
) -> Result<R::Elem, InverseError<R::Elem>> {
    check_exponent(n, 1)?;
    if !r.is_hermitian(p) {
        return Err(InverseError::BadHermitian);
    }
    if !r.is_zero(&r.mul(p, a)) {
        return Err(InverseError::NotAnnihilating);
    }
    let (u, u_inv) = unit_of(r, a, p, n)?;
    let v = core_from_unit(r, a, n, &u, &u_inv)?;
    ensure(check::core(r, a, &v), InverseClass::Core, "axa = a, xR = aR, Rx = Ra*")?;
    Ok(v)
}

/// Mirror of [`core_from_hermitian_unit`] with `aq = 0`.
pub fn dual_core_from_hermitian_unit<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    q: &R::Elem,
    n: u32,
) -> Result<R::Elem, InverseError<R::Elem>> {
    check_exponent(n, 1)?;
    if !r.is_hermitian(q) {
        return Err(InverseError::BadHermitian);
    }
    if !r.is_zero(&r.mul(a, q)) {
        return Err(InverseError::NotAnnihilating);
    }
    let (u, u_inv) = unit_of(r, a, q, n)?;
    let v = dual_core_from_unit(r, a, n, &u, &u_inv)?;
    ensure(check::dual_core(r, a, &v), InverseClass::DualCore, "axa = a, Rx = Ra, xR = a*R")?;
    Ok(v)
}

/// Which annihilation condition a projection must meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectionMode {
    /// `pa = 0`
    Core,
    /// `ap = 0`
    DualCore,
    /// `pa = ap = 0`
    Ep,
}

impl ProjectionMode {
    pub fn annihilates<R: StarRing>(self, r: &R, a: &R::Elem, p: &R::Elem) -> bool {
        let left = || r.is_zero(&r.mul(p, a));
        let right = || r.is_zero(&r.mul(a, p));
        match self {
            ProjectionMode::Core => left(),
            ProjectionMode::DualCore => right(),
            ProjectionMode::Ep => left() && right(),
        }
    }

    /// `p` annihilates `a` and `a^n + p` is a unit.
    pub fn admits<R: ExactSolver>(self, r: &R, a: &R::Elem, p: &R::Elem, n: u32) -> bool {
        self.annihilates(r, a, p) && r.is_unit(&r.add(&pow(r, a, n), p))
    }
}

/// Projections `q` satisfying the mode's conditions, against the canonical one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionVerdict<E> {
    pub canonical: Option<E>,
    pub matching: Vec<E>,
    /// Whether `matching` came from enumerating every projection.
    pub exhaustive: bool,
}

impl<E: PartialEq> ProjectionVerdict<E> {
    /// `None` when only the canonical projection was checked.
    pub fn unique(&self) -> Option<bool> {
        self.exhaustive
            .then(|| self.matching.len() == 1 && self.canonical.as_ref() == self.matching.first())
    }
}

/// Canonical projection for the mode: `1 - a a⊕`, `1 - a_⊕ a`, or `1 - a# a`
/// for EP elements.
pub fn canonical_projection<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    mode: ProjectionMode,
) -> Result<Option<R::Elem>, InverseError<R::Elem>> {
    let soft = |res: Result<R::Elem, InverseError<R::Elem>>| match res {
        Ok(v) => Ok(Some(v)),
        Err(e) if is_fatal(&e) => Err(e),
        Err(_) => Ok(None),
    };
    Ok(match mode {
        ProjectionMode::Core => soft(core_by_composition(r, a))?.map(|c| r.one_minus(&r.mul(a, &c))),
        ProjectionMode::DualCore => soft(dual_core_by_composition(r, a))?.map(|d| r.one_minus(&r.mul(&d, a))),
        ProjectionMode::Ep => {
            let c = soft(core_by_composition(r, a))?;
            let d = soft(dual_core_by_composition(r, a))?;
            match (c, d) {
                (Some(c), Some(d)) if c == d => {
                    let g = group_inverse(r, a)?;
                    Some(r.one_minus(&r.mul(&g, a)))
                }
                _ => None,
            }
        }
    })
}

/// Checks that exactly one projection meets the mode's conditions and that it
/// is the canonical one. `projections` lists every projection of the ring; when
/// absent the ring is enumerated, and rings that cannot be enumerated fall back
/// to checking the canonical projection only.
pub fn projection_uniqueness<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    n: u32,
    mode: ProjectionMode,
    projections: Option<&[R::Elem]>,
) -> Result<ProjectionVerdict<R::Elem>, InverseError<R::Elem>> {
    check_exponent(n, 1)?;
    let canonical = canonical_projection(r, a, mode)?;
    let owned;
    let pool: Option<&[R::Elem]> = match projections {
        Some(p) => Some(p),
        None => match enumerate(r) {
            Ok(all) => {
                owned = all.filter(|q| r.is_projection(q)).collect::<Vec<_>>();
                Some(&owned)
            }
            Err(_) => None,
        },
    };
    let (matching, exhaustive) = match pool {
        Some(pool) => (
            pool.iter().filter(|q| mode.admits(r, a, q, n)).cloned().collect(),
            true,
        ),
        None => (
            canonical
                .iter()
                .filter(|q| r.is_projection(q) && mode.admits(r, a, q, n))
                .cloned()
                .collect(),
            false,
        ),
    };
    Ok(ProjectionVerdict {
        canonical,
        matching,
        exhaustive,
    })
}

/// EP decided three ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpVerdict<E> {
    /// `a†` and `a#` exist and are equal.
    pub via_mp_group: bool,
    /// `a⊕` and `a_⊕` exist and are equal.
    pub via_core: bool,
    /// `p = 1 - a# a` is Hermitian, `pa = ap = 0`, `a^n + p` is a unit.
    pub via_unit: bool,
    pub unit: Option<UnitCharacterization<E>>,
}

impl<E> EpVerdict<E> {
    pub fn agree(&self) -> bool {
        self.via_mp_group == self.via_core && self.via_core == self.via_unit
    }

    pub fn is_ep(&self) -> bool {
        self.agree() && self.via_core
    }
}

fn optional<E>(res: Result<E, InverseError<E>>) -> Result<Option<E>, InverseError<E>> {
    match res {
        Ok(v) => Ok(Some(v)),
        Err(e) if is_fatal(&e) => Err(e),
        Err(_) => Ok(None),
    }
}

pub fn ep_characterization<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    n: u32,
) -> Result<EpVerdict<R::Elem>, InverseError<R::Elem>> {
    check_exponent(n, 1)?;
    let mp = optional(mp_inverse(r, a))?;
    let group = optional(group_inverse(r, a))?;
    let via_mp_group = matches!((&mp, &group), (Some(m), Some(g)) if m == g);
    let core = optional(core_by_composition(r, a))?;
    let dual = optional(dual_core_by_composition(r, a))?;
    let via_core = matches!((&core, &dual), (Some(c), Some(d)) if c == d);
    let mut unit = None;
    if let Some(g) = &group {
        let p = r.one_minus(&r.mul(g, a));
        if r.is_hermitian(&p) && ProjectionMode::Ep.annihilates(r, a, &p) {
            if let Ok((u, u_inverse)) = unit_of(r, a, &p, n) {
                unit = Some(UnitCharacterization {
                    projection: r.is_idempotent(&p),
                    p,
                    n,
                    u,
                    u_inverse,
                });
            }
        }
    }
    Ok(EpVerdict {
        via_mp_group,
        via_core,
        via_unit: unit.is_some(),
        unit,
    })
}

/// Invertibility of `1 + ab` and `1 + ba`, with the partner formula
/// `(1 + ba)^-1 = 1 - b (1 + ab)^-1 a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobsonVerdict<E> {
    pub ab_inverse: Option<E>,
    pub ba_inverse: Option<E>,
    pub partner: Option<E>,
    pub partner_ok: Option<bool>,
}

impl<E> JacobsonVerdict<E> {
    pub fn agree(&self) -> bool {
        self.ab_inverse.is_some() == self.ba_inverse.is_some() && self.partner_ok != Some(false)
    }
}

pub fn jacobson_partner<R: ExactSolver>(r: &R, a: &R::Elem, b: &R::Elem) -> JacobsonVerdict<R::Elem> {
    let one = r.one();
    let ab = r.add(&one, &r.mul(a, b));
    let ba = r.add(&one, &r.mul(b, a));
    let ab_inverse = r.invert(&ab).ok();
    let ba_inverse = r.invert(&ba).ok();
    let partner = ab_inverse
        .as_ref()
        .map(|w| r.sub(&one, &r.prod(&[b, w, a])));
    let partner_ok = partner
        .as_ref()
        .map(|x| r.is_one(&r.mul(&ba, x)) && r.is_one(&r.mul(x, &ba)));
    JacobsonVerdict {
        ab_inverse,
        ba_inverse,
        partner,
        partner_ok,
    }
}

/// `p = 1 - a a⊕`, `m = a* a + p` and the core inverse `m^-1 a*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedekindCore<E> {
    pub p: E,
    pub m: E,
    pub m_inverse: E,
    pub value: E,
    pub left_invertible: bool,
    pub right_invertible: bool,
}

pub fn dedekind_core<R: ExactSolver>(r: &R, a: &R::Elem) -> Result<DedekindCore<R::Elem>, InverseError<R::Elem>> {
    let core = core_by_composition(r, a)?;
    let p = r.one_minus(&r.mul(a, &core));
    let m = r.add(&r.mul(&r.star(a), a), &p);
    let one = r.one();
    let left_invertible = r.left_divide(&one, &m).is_some();
    let right_invertible = r.right_divide(&one, &m).is_some();
    let m_inverse = r.invert(&m).map_err(InverseError::UnitNotInvertible)?;
    let value = r.mul(&m_inverse, &r.star(a));
    agree(&[("composition", &core), ("(a* a + p)^-1 a*", &value)], InverseClass::Core)?;
    Ok(DedekindCore {
        p,
        m,
        m_inverse,
        value,
        left_invertible,
        right_invertible,
    })
}

/// `Some(a* a = 1)` when `a a* = 1`, otherwise `None`.
pub fn dedekind_companion<R: StarRing>(r: &R, a: &R::Elem) -> Option<bool> {
    let s = r.star(a);
    r.is_one(&r.mul(a, &s)).then(|| r.is_one(&r.mul(&s, a)))
}
