use super::{is_prime, Field, PrimeField};

/// `a + b w` in `F_{p^2}`, stored as `[a, b]`.
pub type Fp2 = [u32; 2];

/// The quadratic extension `F_p[w] / (w^2 + e1 w + e0)`.
///
/// The modulus is the lexicographically smallest monic irreducible quadratic
/// in `(e1, e0)` order: `w^2 + 1` for `p = 3 mod 4`, `w^2 + w + 1` for `p = 2`.
/// The automorphism is Frobenius, `x -> x^p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticField {
    base: PrimeField,
    e0: u32,
    e1: u32,
}

impl QuadraticField {
    pub fn new(p: u32) -> Option<Self> {
        if !is_prime(p as u64) {
            return None;
        }
        let base = PrimeField::new(p)?;
        for e1 in 0..p {
            for e0 in 0..p {
                let has_root = (0..p).any(|t| {
                    let v = base.add(&base.mul(&t, &t), &base.add(&base.mul(&e1, &t), &e0));
                    v == 0
                });
                if !has_root {
                    return Some(QuadraticField { base, e0, e1 });
                }
            }
        }
        None
    }

    pub fn characteristic(&self) -> u32 {
        self.base.characteristic()
    }

    /// Coefficients `(e0, e1)` of the defining polynomial `w^2 + e1 w + e0`.
    pub fn modulus(&self) -> (u32, u32) {
        (self.e0, self.e1)
    }

    pub fn from_parts(&self, a: i64, b: i64) -> Fp2 {
        [self.base.reduce(a), self.base.reduce(b)]
    }

    fn pow(&self, a: &Fp2, mut exp: u64) -> Fp2 {
        let mut acc = self.one();
        let mut base = *a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

impl Field for QuadraticField {
    type Elem = Fp2;

    fn zero(&self) -> Fp2 {
        [0, 0]
    }

    fn one(&self) -> Fp2 {
        [self.base.one(), 0]
    }

    fn from_i64(&self, v: i64) -> Fp2 {
        [self.base.reduce(v), 0]
    }

    fn add(&self, a: &Fp2, b: &Fp2) -> Fp2 {
        [self.base.add(&a[0], &b[0]), self.base.add(&a[1], &b[1])]
    }

    fn sub(&self, a: &Fp2, b: &Fp2) -> Fp2 {
        [self.base.sub(&a[0], &b[0]), self.base.sub(&a[1], &b[1])]
    }

    fn mul(&self, a: &Fp2, b: &Fp2) -> Fp2 {
        let f = &self.base;
        // w^2 = -e1 w - e0
        let c0 = f.mul(&a[0], &b[0]);
        let c1 = f.add(&f.mul(&a[0], &b[1]), &f.mul(&a[1], &b[0]));
        let c2 = f.mul(&a[1], &b[1]);
        [
            f.sub(&c0, &f.mul(&c2, &self.e0)),
            f.sub(&c1, &f.mul(&c2, &self.e1)),
        ]
    }

    fn neg(&self, a: &Fp2) -> Fp2 {
        [self.base.neg(&a[0]), self.base.neg(&a[1])]
    }

    fn inv(&self, a: &Fp2) -> Option<Fp2> {
        if self.is_zero(a) {
            return None;
        }
        let q = self.characteristic() as u64;
        Some(self.pow(a, q * q - 2))
    }

    fn conj(&self, a: &Fp2) -> Fp2 {
        self.pow(a, self.characteristic() as u64)
    }

    fn is_zero(&self, a: &Fp2) -> bool {
        a[0] == 0 && a[1] == 0
    }

    fn size(&self) -> Option<u64> {
        let p = self.characteristic() as u64;
        Some(p * p)
    }

    fn element_at(&self, idx: u64) -> Option<Fp2> {
        let p = self.characteristic() as u64;
        (idx < p * p).then(|| [(idx % p) as u32, (idx / p) as u32])
    }

    fn index_of(&self, a: &Fp2) -> Option<u64> {
        let p = self.characteristic() as u64;
        Some(a[0] as u64 + a[1] as u64 * p)
    }
}
