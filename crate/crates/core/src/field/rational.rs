use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Field;

/// A sum of rational products kept over a common denominator and reduced
/// once at the end; normalizing after every product dominates the cost.
#[derive(Clone, Debug)]
pub(crate) struct Accumulator {
    num: BigInt,
    den: BigInt,
}

impl Accumulator {
    pub(crate) fn new(start: &BigRational) -> Self {
        Accumulator {
            num: start.numer().clone(),
            den: start.denom().clone(),
        }
    }

    pub(crate) fn zero() -> Self {
        Accumulator {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    /// Adds `sign * x * y`.
    pub(crate) fn add_prod(&mut self, x: &BigRational, y: &BigRational, negate: bool) {
        if x.is_zero() || y.is_zero() {
            return;
        }
        let mut p = x.numer() * y.numer();
        if negate {
            p = -p;
        }
        let d = match (x.denom().is_one(), y.denom().is_one()) {
            (true, true) => None,
            (true, false) => Some(y.denom().clone()),
            (false, true) => Some(x.denom().clone()),
            (false, false) => Some(x.denom() * y.denom()),
        };
        match d {
            None if self.den.is_one() => self.num += p,
            None => self.num += p * &self.den,
            Some(d) if d == self.den => self.num += p,
            Some(d) => {
                if self.den.is_one() {
                    self.num = &self.num * &d + p;
                } else {
                    self.num = &self.num * &d + p * &self.den;
                }
                self.den *= d;
            }
        }
    }

    pub(crate) fn finish(self) -> BigRational {
        if self.den.is_one() {
            return BigRational::from_integer(self.num);
        }
        reduce(self.num, self.den)
    }
}

/// `num / den` in lowest terms, with a machine-word gcd when both fit.
pub(crate) fn reduce(num: BigInt, den: BigInt) -> BigRational {
    if num.is_zero() {
        return BigRational::zero();
    }
    match (num.to_i128(), den.to_i128()) {
        (Some(n), Some(d)) if n != i128::MIN && d != i128::MIN => {
            let g = n.gcd(&d);
            let (n, d) = if d < 0 { (-n / g, -d / g) } else { (n / g, d / g) };
            BigRational::new_raw(BigInt::from(n), BigInt::from(d))
        }
        _ => {
            let r = BigRational::new(num, den);
            debug_assert!(r.denom().is_positive());
            r
        }
    }
}

/// `a + b`, or `a - b` when `negate`.
pub(crate) fn add(a: &BigRational, b: &BigRational, negate: bool) -> BigRational {
    if b.is_zero() {
        return a.clone();
    }
    let bn = if negate { -b.numer() } else { b.numer().clone() };
    if a.is_zero() {
        return BigRational::new_raw(bn, b.denom().clone());
    }
    if a.denom() == b.denom() {
        if a.denom().is_one() {
            return BigRational::from_integer(a.numer() + bn);
        }
        return reduce(a.numer() + bn, a.denom().clone());
    }
    reduce(a.numer() * b.denom() + bn * a.denom(), a.denom() * b.denom())
}

pub(crate) fn mul(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_zero() || b.is_zero() {
        return BigRational::zero();
    }
    if a.denom().is_one() && b.denom().is_one() {
        return BigRational::from_integer(a.numer() * b.numer());
    }
    reduce(a.numer() * b.numer(), a.denom() * b.denom())
}

/// The rational numbers with arbitrary-precision numerator and denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        add(a, b, false)
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        add(a, b, true)
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        mul(a, b)
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn conj(&self, a: &BigRational) -> BigRational {
        a.clone()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn size(&self) -> Option<u64> {
        None
    }

    fn element_at(&self, _idx: u64) -> Option<BigRational> {
        None
    }

    fn index_of(&self, _a: &BigRational) -> Option<u64> {
        None
    }

    fn sub_mul(&self, a: &BigRational, f: &BigRational, b: &BigRational) -> BigRational {
        if f.is_zero() || b.is_zero() {
            a.clone()
        } else {
            let mut acc = Accumulator::new(a);
            acc.add_prod(f, b, true);
            acc.finish()
        }
    }

    fn dot<'a, I>(&self, terms: I) -> BigRational
    where
        I: IntoIterator<Item = (&'a BigRational, &'a BigRational)>,
    {
        let mut acc = Accumulator::zero();
        for (x, y) in terms {
            acc.add_prod(x, y, false);
        }
        acc.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn big(v: i128) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn reduce_matches_ratio_new() {
        let huge = big(i128::MAX) * big(6);
        let cases = [
            (big(6), big(-4)),
            (big(-6), big(4)),
            (big(0), big(-7)),
            (big(i128::MIN), big(2)),
            (big(7), big(i128::MIN)),
            (huge.clone(), big(-4)),
            (big(3), huge),
        ];
        for (n, d) in cases {
            let r = reduce(n.clone(), d.clone());
            assert_eq!(r, BigRational::new(n, d));
            assert!(r.denom().is_positive());
        }
    }

    #[test]
    fn arithmetic_matches_ratio_ops() {
        let vals: Vec<BigRational> = [(0, 1), (1, 1), (-3, 1), (1, 2), (-5, 6), (7, 6), (4, 9)]
            .iter()
            .map(|&(n, d)| BigRational::new(big(n), big(d)))
            .collect();
        for a in &vals {
            for b in &vals {
                assert_eq!(add(a, b, false), a + b);
                assert_eq!(add(a, b, true), a - b);
                assert_eq!(mul(a, b), a * b);
            }
        }
    }
}
