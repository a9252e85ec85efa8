use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rational::{self, Accumulator};
use super::Field;

/// `p/q + (r/s) i` with exact rational parts.
pub type Gaussian = Complex<BigRational>;

/// The field `Q(i)`; its automorphism is complex conjugation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GaussianRationals;

impl Field for GaussianRationals {
    type Elem = Gaussian;

    fn zero(&self) -> Gaussian {
        Gaussian::zero()
    }

    fn one(&self) -> Gaussian {
        Gaussian::one()
    }

    fn from_i64(&self, v: i64) -> Gaussian {
        Gaussian::new(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
    }

    fn add(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian::new(rational::add(&a.re, &b.re, false), rational::add(&a.im, &b.im, false))
    }

    fn sub(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian::new(rational::add(&a.re, &b.re, true), rational::add(&a.im, &b.im, true))
    }

    fn mul(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        // Skip the four-product formula when one side is real.
        if b.im.is_zero() {
            return Gaussian::new(rational::mul(&a.re, &b.re), rational::mul(&a.im, &b.re));
        }
        if a.im.is_zero() {
            return Gaussian::new(rational::mul(&a.re, &b.re), rational::mul(&a.re, &b.im));
        }
        let mut re = Accumulator::zero();
        let mut im = Accumulator::zero();
        re.add_prod(&a.re, &b.re, false);
        re.add_prod(&a.im, &b.im, true);
        im.add_prod(&a.re, &b.im, false);
        im.add_prod(&a.im, &b.re, false);
        Gaussian::new(re.finish(), im.finish())
    }

    fn neg(&self, a: &Gaussian) -> Gaussian {
        -a
    }

    fn inv(&self, a: &Gaussian) -> Option<Gaussian> {
        if a.is_zero() {
            return None;
        }
        let norm = &a.re * &a.re + &a.im * &a.im;
        Some(Gaussian::new(&a.re / &norm, -(&a.im / &norm)))
    }

    fn conj(&self, a: &Gaussian) -> Gaussian {
        a.conj()
    }

    fn is_zero(&self, a: &Gaussian) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &Gaussian) -> bool {
        a.re.is_one() && a.im.is_zero()
    }

    fn size(&self) -> Option<u64> {
        None
    }

    fn element_at(&self, _idx: u64) -> Option<Gaussian> {
        None
    }

    fn index_of(&self, _a: &Gaussian) -> Option<u64> {
        None
    }

    fn sub_mul(&self, a: &Gaussian, f: &Gaussian, b: &Gaussian) -> Gaussian {
        if f.is_zero() || b.is_zero() {
            a.clone()
        } else {
            let mut re = Accumulator::new(&a.re);
            let mut im = Accumulator::new(&a.im);
            re.add_prod(&f.re, &b.re, true);
            re.add_prod(&f.im, &b.im, false);
            im.add_prod(&f.re, &b.im, true);
            im.add_prod(&f.im, &b.re, true);
            Gaussian::new(re.finish(), im.finish())
        }
    }

    fn dot<'a, I>(&self, terms: I) -> Gaussian
    where
        I: IntoIterator<Item = (&'a Gaussian, &'a Gaussian)>,
    {
        let mut re = Accumulator::zero();
        let mut im = Accumulator::zero();
        for (x, y) in terms {
            re.add_prod(&x.re, &y.re, false);
            re.add_prod(&x.im, &y.im, true);
            im.add_prod(&x.re, &y.im, false);
            im.add_prod(&x.im, &y.re, false);
        }
        Gaussian::new(re.finish(), im.finish())
    }
}
