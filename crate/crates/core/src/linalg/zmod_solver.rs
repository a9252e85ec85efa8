use alloc::vec::Vec;

use num_integer::Integer;

use super::{Decomposition, ExactSolver, NotInvertible, Subspace};
use crate::ring::{Side, StarRing, Zmod};

impl Zmod {
    /// Smallest `x` in `[0, n)` with `x a = t (mod n)`.
    ///
    /// Solutions exist iff `g = gcd(a, n)` divides `t`, and then form one
    /// class modulo `n / g`; the least residue of that class is the first hit
    /// an exhaustive scan would find.
    fn divide(&self, t: u64, a: u64) -> Option<u64> {
        let n = self.modulus();
        let g = a.gcd(&n);
        if !t.is_multiple_of(g) {
            return None;
        }
        let m = n / g;
        if m == 1 {
            return Some(0);
        }
        let inv = mod_inverse(a / g % m, m)?;
        Some((t / g % m) * inv % m)
    }

    fn multiples_of(&self, d: u64) -> Vec<u64> {
        (0..self.modulus() / d).map(|i| i * d).collect()
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i64).extended_gcd(&(m as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i64) as u64)
}

impl ExactSolver for Zmod {
    fn invert(&self, u: &u64) -> Result<u64, NotInvertible<u64>> {
        let n = self.modulus();
        let g = u.gcd(&n);
        if g != 1 {
            return Err(NotInvertible {
                witness: n / g,
                gcd: Some(g),
            });
        }
        Ok(mod_inverse(*u, n).expect("coprime residue is a unit"))
    }

    fn left_divide(&self, target: &u64, a: &u64) -> Option<u64> {
        self.divide(*target, *a)
    }

    fn right_divide(&self, target: &u64, a: &u64) -> Option<u64> {
        self.divide(*target, *a)
    }

    fn find_inner_inverse(&self, a: &u64) -> Option<u64> {
        // a x a = x a^2
        self.divide(*a, self.mul(a, a))
    }

    fn annihilator(&self, a: &u64, _side: Side) -> Subspace<u64> {
        let n = self.modulus();
        Subspace::Elements(self.multiples_of(n / a.gcd(&n)))
    }

    fn ideal_subspace(&self, a: &u64, _side: Side) -> Subspace<u64> {
        Subspace::Elements(self.multiples_of(a.gcd(&self.modulus())))
    }

    fn decomposition_check(&self, s1: &Subspace<u64>, s2: &Subspace<u64>) -> Decomposition {
        let (Subspace::Elements(e1), Subspace::Elements(e2)) = (s1, s2) else {
            panic!("residue subspaces are element lists");
        };
        let n = self.modulus() as usize;
        let mut hit = alloc::vec![false; n];
        for x in e1 {
            for y in e2 {
                hit[self.add(x, y) as usize] = true;
            }
        }
        let mut in_first = alloc::vec![false; n];
        for x in e1 {
            in_first[*x as usize] = true;
        }
        Decomposition {
            sum_is_all: hit.iter().all(|&h| h),
            intersection_is_zero: e2.iter().all(|y| *y == 0 || !in_first[*y as usize]),
        }
    }
}
