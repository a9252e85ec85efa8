#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use starinv_core::ring::{FieldSpec, Involution, Matrix, Payload, RingContext, RingElement};

pub fn q(k: usize) -> RingContext {
    RingContext::matrix(k, FieldSpec::Rational, Involution::Transpose).unwrap()
}

pub fn qi(k: usize, inv: Involution) -> RingContext {
    RingContext::matrix(k, FieldSpec::Gaussian, inv).unwrap()
}

pub fn zmod(n: u64) -> RingContext {
    RingContext::modular(n).unwrap()
}

pub fn ints(ctx: &RingContext, v: &[i64]) -> RingElement {
    ctx.from_ints(v).unwrap()
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational matrix from `(numerator, denominator)` pairs.
pub fn fracs(ctx: &RingContext, v: &[(i64, i64)]) -> RingElement {
    let k = (v.len() as f64).sqrt() as usize;
    let m = Matrix::from_vec(k, k, v.iter().map(|&(n, d)| frac(n, d)).collect());
    ctx.element(Payload::Rational(m)).unwrap()
}

/// Gaussian matrix from `((re_n, re_d), (im_n, im_d))`.
pub fn gauss(ctx: &RingContext, v: &[((i64, i64), (i64, i64))]) -> RingElement {
    let k = (v.len() as f64).sqrt() as usize;
    let m = Matrix::from_vec(
        k,
        k,
        v.iter().map(|&((a, b), (c, d))| Complex::new(frac(a, b), frac(c, d))).collect(),
    );
    ctx.element(Payload::Gaussian(m)).unwrap()
}

/// `[[1, i], [0, 0]]` over `Q(i)`.
pub fn idempotent_example(inv: Involution) -> (RingContext, RingElement) {
    let ctx = qi(2, inv);
    let a = ctx.from_int_pairs(&[(1, 0), (0, 1), (0, 0), (0, 0)]).unwrap();
    (ctx, a)
}

/// Every context of the exhaustive sweeps.
pub fn finite_contexts() -> Vec<RingContext> {
    let mut out: Vec<RingContext> = (2..=24).map(zmod).collect();
    out.push(RingContext::matrix(2, FieldSpec::prime(2).unwrap(), Involution::Transpose).unwrap());
    out.push(RingContext::matrix(2, FieldSpec::prime(3).unwrap(), Involution::Transpose).unwrap());
    out.push(RingContext::matrix(2, FieldSpec::prime_square(2).unwrap(), Involution::ConjugateTranspose).unwrap());
    out
}
