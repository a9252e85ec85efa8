use super::StarRing;

/// `Z / nZ` with the identity involution. Elements are residues in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Zmod {
    n: u64,
}

impl Zmod {
    /// Largest supported modulus; keeps every product inside `u64`.
    pub const MAX_MODULUS: u64 = u32::MAX as u64;

    pub fn new(n: u64) -> Option<Self> {
        (2..=Self::MAX_MODULUS).contains(&n).then_some(Zmod { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn residue(&self, v: i64) -> u64 {
        v.rem_euclid(self.n as i64) as u64
    }
}

impl StarRing for Zmod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_int(&self, v: i64) -> u64 {
        self.residue(v)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.n
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.n - b) % self.n
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.n - a) % self.n
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.n
    }

    fn star(&self, a: &u64) -> u64 {
        *a
    }

    fn size(&self) -> Option<u64> {
        Some(self.n)
    }

    fn element_at(&self, idx: u64) -> Option<u64> {
        (idx < self.n).then_some(idx)
    }

    fn index_of(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
}
