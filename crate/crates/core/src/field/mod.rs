//! Exact scalar fields.
//!
//! Every field carries an automorphism of order at most two, [`Field::conj`]:
//! complex conjugation on the Gaussian rationals, Frobenius on `F_{p^2}` and
//! the identity elsewhere. The conjugate-transpose involution on matrix rings
//! is built from it.

mod gaussian;
mod prime;
mod quadratic;
mod rational;

use core::fmt::Debug;

pub use gaussian::{Gaussian, GaussianRationals};
pub use prime::PrimeField;
pub use quadratic::{Fp2, QuadraticField};
pub use rational::Rationals;

pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// The field automorphism of order dividing two.
    fn conj(&self, a: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Number of elements, `None` when infinite.
    fn size(&self) -> Option<u64>;

    /// The `idx`-th element in a fixed enumeration order (finite fields only).
    fn element_at(&self, idx: u64) -> Option<Self::Elem>;

    /// Inverse of [`Field::element_at`].
    fn index_of(&self, a: &Self::Elem) -> Option<u64>;

    /// `a - f*b`, the elimination kernel.
    fn sub_mul(&self, a: &Self::Elem, f: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(f, b))
    }

    /// `sum x_i y_i`.
    fn dot<'a, I>(&self, terms: I) -> Self::Elem
    where
        I: IntoIterator<Item = (&'a Self::Elem, &'a Self::Elem)>,
        Self::Elem: 'a,
    {
        terms
            .into_iter()
            .fold(self.zero(), |acc, (x, y)| self.add(&acc, &self.mul(x, y)))
    }
}

/// Inverse modulo a prime via Fermat; `p` fits in 32 bits so products fit in `u64`.
pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
