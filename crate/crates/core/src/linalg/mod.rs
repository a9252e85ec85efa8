//! Exact solvers: invertibility, one-sided ideal membership, inner inverses
//! and subspace arithmetic.
//!
//! Matrix rings reduce everything to Gauss-Jordan elimination; `Z/nZ`
//! solves linear congruences in closed form and represents ideals and
//! annihilators as explicit element lists.

pub(crate) mod elimination;
mod matrix_solver;
mod subspace;
mod zmod_solver;

use thiserror::Error;

pub use subspace::{Decomposition, Subspace, SubspaceBasis};

use crate::ring::{Side, StarRing};

/// Certificate that an element `u` is not a unit: a nonzero `witness` with
/// `u * witness = 0`. For residues `gcd` carries `gcd(u, n) > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotInvertible<E> {
    pub witness: E,
    pub gcd: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinalgError<E> {
    #[error("element is not invertible")]
    NotInvertible(NotInvertible<E>),
    #[error("target is not in the {0:?} ideal")]
    NotInIdeal(Side),
    #[error("element is not regular")]
    NotRegular,
}

/// A solution of `witness * a = target` (left) or `a * witness = target` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipWitness<E> {
    pub solution: E,
    pub side: Side,
}

/// Exact solving on top of [`StarRing`].
///
/// Implementors supply the raw solvers; the provided methods re-check every
/// witness by multiplication before handing it out.
pub trait ExactSolver: StarRing {
    /// Two-sided inverse, or a zero-divisor certificate.
    fn invert(&self, u: &Self::Elem) -> Result<Self::Elem, NotInvertible<Self::Elem>>;

    /// Some `x` with `x * a = target`.
    fn left_divide(&self, target: &Self::Elem, a: &Self::Elem) -> Option<Self::Elem>;

    /// Some `x` with `a * x = target`.
    fn right_divide(&self, target: &Self::Elem, a: &Self::Elem) -> Option<Self::Elem>;

    /// Some `x` with `a x a = a`.
    fn find_inner_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// `{x : x a = 0}` (left) or `{x : a x = 0}` (right).
    fn annihilator(&self, a: &Self::Elem, side: Side) -> Subspace<Self::Elem>;

    /// `R a` (left) or `a R` (right).
    fn ideal_subspace(&self, a: &Self::Elem, side: Side) -> Subspace<Self::Elem>;

    fn decomposition_check(
        &self,
        s1: &Subspace<Self::Elem>,
        s2: &Subspace<Self::Elem>,
    ) -> Decomposition;

    fn is_unit(&self, u: &Self::Elem) -> bool {
        self.invert(u).is_ok()
    }

    /// Decides `target in R a`.
    fn solve_left(
        &self,
        target: &Self::Elem,
        a: &Self::Elem,
    ) -> Result<MembershipWitness<Self::Elem>, LinalgError<Self::Elem>> {
        let x = self
            .left_divide(target, a)
            .ok_or(LinalgError::NotInIdeal(Side::Left))?;
        assert!(self.mul(&x, a) == *target, "left witness fails its equation");
        Ok(MembershipWitness {
            solution: x,
            side: Side::Left,
        })
    }

    /// Decides `target in a R`.
    fn solve_right(
        &self,
        target: &Self::Elem,
        a: &Self::Elem,
    ) -> Result<MembershipWitness<Self::Elem>, LinalgError<Self::Elem>> {
        let x = self
            .right_divide(target, a)
            .ok_or(LinalgError::NotInIdeal(Side::Right))?;
        assert!(self.mul(a, &x) == *target, "right witness fails its equation");
        Ok(MembershipWitness {
            solution: x,
            side: Side::Right,
        })
    }

    /// `target = x a` for some `x`.
    fn in_left_ideal(&self, target: &Self::Elem, a: &Self::Elem) -> bool {
        self.left_divide(target, a).is_some()
    }

    /// `target = a x` for some `x`.
    fn in_right_ideal(&self, target: &Self::Elem, a: &Self::Elem) -> bool {
        self.right_divide(target, a).is_some()
    }

    fn inner_inverse(&self, a: &Self::Elem) -> Result<Self::Elem, LinalgError<Self::Elem>> {
        let x = self.find_inner_inverse(a).ok_or(LinalgError::NotRegular)?;
        assert!(self.prod(&[a, &x, a]) == *a, "inner inverse fails axa = a");
        Ok(x)
    }
}
