//! Generalized inverses computed through [`ExactSolver`].
//!
//! Every class has at least two routes; [`portfolio`] runs them all, checks
//! that they agree and validates each value against the defining equations.

mod along;
mod classes;
mod portfolio;
mod units;

use thiserror::Error;

use crate::linalg::{ExactSolver, NotInvertible};
use crate::ring::StarRing;

pub use along::{
    inverse_along, invertible_along_power_star, prop44_witness, prop44_witness_mirror,
    regular_unit_characterization, AlongInverse, AlongPowerStar, FourInverses, RegularUnits,
};
pub use classes::{
    core_by_composition, core_by_power_star, core_inverse, dual_core_by_composition,
    dual_core_by_power_star, dual_core_inverse, group_from_core, group_from_dual_core,
    group_inverse, mp_by_composition, mp_by_gram, mp_inverse, one_four_inverse,
    one_three_inverse,
};
pub use portfolio::{portfolio, ClassResult, InversePortfolio, Route, WitnessSet};
pub use units::{
    canonical_projection, core_from_hermitian_unit, dedekind_companion, dedekind_core, dual_core_from_hermitian_unit,
    ep_characterization, jacobson_partner, projection_uniqueness, unit_characterization_core,
    unit_characterization_dual, DedekindCore, EpVerdict, JacobsonVerdict, ProjectionMode, ProjectionVerdict,
    UnitCharacterization,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InverseClass {
    Inner,
    OneThree,
    OneFour,
    MoorePenrose,
    Group,
    Core,
    DualCore,
}

impl InverseClass {
    pub const ALL: [InverseClass; 7] = [
        InverseClass::Inner,
        InverseClass::OneThree,
        InverseClass::OneFour,
        InverseClass::MoorePenrose,
        InverseClass::Group,
        InverseClass::Core,
        InverseClass::DualCore,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InverseClass::Inner => "inner",
            InverseClass::OneThree => "one-three",
            InverseClass::OneFour => "one-four",
            InverseClass::MoorePenrose => "mp",
            InverseClass::Group => "group",
            InverseClass::Core => "core",
            InverseClass::DualCore => "dual-core",
        }
    }
}

/// Why an inverse could not be produced. Membership flags record which of
/// the conditions held, so callers can report per-condition truth values.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InverseError<E> {
    #[error("element is not regular")]
    NotRegular,
    #[error("no {{1,3}}-inverse: a is not in R a* a")]
    NotOneThreeInvertible,
    #[error("no {{1,4}}-inverse: a is not in a a* R")]
    NotOneFourInvertible,
    #[error("no Moore-Penrose inverse (one-three: {one_three}, one-four: {one_four})")]
    NotMPInvertible { one_three: bool, one_four: bool },
    #[error("no group inverse (a in a^2 R: {right}, a in R a^2: {left})")]
    NotGroupInvertible { right: bool, left: bool },
    #[error("no core inverse (a in R (a*)^n a: {power_star}, a in R a^n: {power})")]
    NotCoreInvertible { power_star: bool, power: bool },
    #[error("no dual core inverse (a in a (a*)^n R: {power_star}, a in a^n R: {power})")]
    NotDualCoreInvertible { power_star: bool, power: bool },
    #[error("missing prerequisite: {0}")]
    MissingPrerequisite(&'static str),
    #[error("p is not Hermitian")]
    BadHermitian,
    #[error("p does not annihilate a")]
    NotAnnihilating,
    #[error("unit candidate is not invertible")]
    UnitNotInvertible(NotInvertible<E>),
    #[error("d is not regular")]
    DNotRegular,
    #[error("not invertible along d (d in R d a d: {left}, d in d a d R: {right})")]
    NotInvertibleAlong { left: bool, right: bool },
    #[error("a a^- a != a")]
    NotRegularPair,
    #[error("witness fails its equation")]
    BadWitness,
    #[error("routes disagree for {class:?} ({route})")]
    RouteDisagreement {
        class: InverseClass,
        route: &'static str,
    },
    #[error("{class:?} value fails {equation}")]
    ValidationFailed {
        class: InverseClass,
        equation: &'static str,
    },
    #[error("inconsistent result: {0}")]
    Inconsistent(&'static str),
    #[error("exponent {n} below minimum {min}")]
    InvalidExponent { n: u32, min: u32 },
}

pub(crate) fn check_exponent<E>(n: u32, min: u32) -> Result<(), InverseError<E>> {
    if n < min {
        Err(InverseError::InvalidExponent { n, min })
    } else {
        Ok(())
    }
}

/// Errors that signal a broken computation rather than non-existence.
pub(crate) fn is_fatal<E>(e: &InverseError<E>) -> bool {
    matches!(
        e,
        InverseError::ValidationFailed { .. } | InverseError::RouteDisagreement { .. } | InverseError::Inconsistent(_)
    )
}

pub(crate) fn ensure<E>(cond: bool, class: InverseClass, equation: &'static str) -> Result<(), InverseError<E>> {
    if cond {
        Ok(())
    } else {
        Err(InverseError::ValidationFailed { class, equation })
    }
}

/// Definitional checks. Each one uses only ring arithmetic and ideal
/// membership, never the routes that produced `x`.
pub mod check {
    use super::*;

    pub fn inner<R: StarRing>(r: &R, a: &R::Elem, x: &R::Elem) -> bool {
        r.prod(&[a, x, a]) == *a
    }

    pub fn outer<R: StarRing>(r: &R, a: &R::Elem, x: &R::Elem) -> bool {
        r.prod(&[x, a, x]) == *x
    }

    pub fn one_three<R: StarRing>(r: &R, a: &R::Elem, x: &R::Elem) -> bool {
        inner(r, a, x) && r.is_hermitian(&r.mul(a, x))
    }

    pub fn one_four<R: StarRing>(r: &R, a: &R::Elem, x: &R::Elem) -> bool {
        inner(r, a, x) && r.is_hermitian(&r.mul(x, a))
    }

    /// The four Penrose equations.
    pub fn moore_penrose<R: StarRing>(r: &R, a: &R::Elem, x: &R::Elem) -> bool {
        one_three(r, a, x) && one_four(r, a, x) && outer(r, a, x)
    }

    pub fn group<R: StarRing>(r: &R, a: &R::Elem, x: &R::Elem) -> bool {
        inner(r, a, x) && outer(r, a, x) && r.mul(a, x) == r.mul(x, a)
    }

    /// `axa = a`, `xR = aR`, `Rx = Ra*`.
    pub fn core<R: ExactSolver>(r: &R, a: &R::Elem, x: &R::Elem) -> bool {
        let s = r.star(a);
        inner(r, a, x)
            && r.in_right_ideal(x, a)
            && r.in_right_ideal(a, x)
            && r.in_left_ideal(x, &s)
            && r.in_left_ideal(&s, x)
    }

    /// `axa = a`, `Rx = Ra`, `xR = a*R`.
    pub fn dual_core<R: ExactSolver>(r: &R, a: &R::Elem, x: &R::Elem) -> bool {
        let s = r.star(a);
        inner(r, a, x)
            && r.in_left_ideal(x, a)
            && r.in_left_ideal(a, x)
            && r.in_right_ideal(x, &s)
            && r.in_right_ideal(&s, x)
    }

    pub fn class<R: ExactSolver>(r: &R, class: InverseClass, a: &R::Elem, x: &R::Elem) -> bool {
        match class {
            InverseClass::Inner => inner(r, a, x),
            InverseClass::OneThree => one_three(r, a, x),
            InverseClass::OneFour => one_four(r, a, x),
            InverseClass::MoorePenrose => moore_penrose(r, a, x),
            InverseClass::Group => group(r, a, x),
            InverseClass::Core => core(r, a, x),
            InverseClass::DualCore => dual_core(r, a, x),
        }
    }
}

/// `a^n`, with `a^0 = 1`.
pub(crate) fn pow<R: StarRing>(r: &R, a: &R::Elem, n: u32) -> R::Elem {
    r.pow(a, n)
}

/// `(a*)^n`.
pub(crate) fn star_pow<R: StarRing>(r: &R, a: &R::Elem, n: u32) -> R::Elem {
    r.pow(&r.star(a), n)
}

/// Fails with [`InverseError::RouteDisagreement`] unless all values are equal.
pub(crate) fn agree<E: PartialEq>(
    values: &[(&'static str, &E)],
    class: InverseClass,
) -> Result<(), InverseError<E>> {
    if let Some(((_, first), rest)) = values.split_first() {
        for (route, v) in rest {
            if v != first {
                return Err(InverseError::RouteDisagreement { class, route });
            }
        }
    }
    Ok(())
}
