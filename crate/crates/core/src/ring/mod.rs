//! Rings with involution.
//!
//! [`StarRing`] is the interface every algorithm in this crate computes
//! through. Concrete instances are [`MatrixRing`] over one of the exact fields
//! and [`Zmod`]; [`RingContext`] wraps all of them behind a runtime
//! description so rings can be chosen from text.

mod context;
pub(crate) mod matrix;
mod zmod;

use core::fmt::Debug;

pub use context::{FieldSpec, Payload, RingContext, RingElement, RingKind};
pub use matrix::{Involution, Matrix, MatrixRing};
pub use zmod::Zmod;

use crate::error::RingError;

/// Largest finite ring that may be enumerated unless a caller raises the bound.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1_000_000;

/// A unital ring with an involution `a -> a*`: additive, reverses products,
/// and squares to the identity.
///
/// Elements are plain values; every operation returns a fresh value.
pub trait StarRing {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    /// Image of an integer under the unique unital map from `Z`.
    fn from_int(&self, v: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn star(&self, a: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a^0 = 1`, `a^n = a * a^(n-1)`.
    fn pow(&self, a: &Self::Elem, n: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(a, &acc);
        }
        acc
    }

    /// Left-to-right product of `factors`; the empty product is `1`.
    fn prod(&self, factors: &[&Self::Elem]) -> Self::Elem {
        match factors.split_first() {
            None => self.one(),
            Some((first, rest)) => rest
                .iter()
                .fold((*first).clone(), |acc, f| self.mul(&acc, f)),
        }
    }

    /// `1 - a`.
    fn one_minus(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.one(), a)
    }

    fn is_hermitian(&self, a: &Self::Elem) -> bool {
        self.star(a) == *a
    }

    fn is_idempotent(&self, a: &Self::Elem) -> bool {
        self.mul(a, a) == *a
    }

    /// Hermitian idempotent.
    fn is_projection(&self, a: &Self::Elem) -> bool {
        self.is_hermitian(a) && self.is_idempotent(a)
    }

    /// Number of elements, `None` for infinite rings.
    fn size(&self) -> Option<u64>;

    /// The `idx`-th element of a fixed enumeration (finite rings only).
    fn element_at(&self, idx: u64) -> Option<Self::Elem>;

    /// Position of `a` in the enumeration of [`StarRing::element_at`].
    fn index_of(&self, a: &Self::Elem) -> Option<u64>;
}

/// Left or right: `x a` versus `a x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Iterator over every element of a finite ring, each exactly once.
pub struct Elements<'r, R: StarRing> {
    ring: &'r R,
    next: u64,
    size: u64,
}

impl<R: StarRing> Iterator for Elements<'_, R> {
    type Item = R::Elem;

    fn next(&mut self) -> Option<R::Elem> {
        if self.next >= self.size {
            return None;
        }
        let e = self.ring.element_at(self.next);
        self.next += 1;
        e
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.size - self.next) as usize;
        (left, Some(left))
    }
}

/// Enumerates `ring` if it has at most `limit` elements.
pub fn enumerate_with_limit<R: StarRing>(
    ring: &R,
    limit: u64,
) -> Result<Elements<'_, R>, RingError> {
    match ring.size() {
        Some(size) if size <= limit => Ok(Elements {
            ring,
            next: 0,
            size,
        }),
        size => Err(RingError::NotEnumerable { size }),
    }
}

/// Enumerates `ring` under [`DEFAULT_ENUMERATION_LIMIT`].
pub fn enumerate<R: StarRing>(ring: &R) -> Result<Elements<'_, R>, RingError> {
    enumerate_with_limit(ring, DEFAULT_ENUMERATION_LIMIT)
}
