use super::{is_prime, pow_mod, Field};

/// The prime field `F_p`, elements stored as canonical residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Option<Self> {
        is_prime(p as u64).then_some(PrimeField { p })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub(crate) fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.p
    }

    fn from_i64(&self, v: i64) -> u32 {
        self.reduce(v)
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (*a as u64 * *b as u64 % self.p as u64) as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(pow_mod(*a as u64, self.p as u64 - 2, self.p as u64) as u32)
        }
    }

    fn conj(&self, a: &u32) -> u32 {
        *a
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn size(&self) -> Option<u64> {
        Some(self.p as u64)
    }

    fn element_at(&self, idx: u64) -> Option<u32> {
        (idx < self.p as u64).then_some(idx as u32)
    }

    fn index_of(&self, a: &u32) -> Option<u64> {
        Some(*a as u64)
    }
}
