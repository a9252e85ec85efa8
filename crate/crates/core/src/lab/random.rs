//! Seeded random elements with a chosen rank structure.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::ExactSolver;
use crate::ring::{FieldSpec, RingContext, RingElement, RingKind, StarRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankProfile {
    /// Uniform entries.
    Any,
    /// Invertible, by retrying.
    Full,
    /// `A E` for invertible `A` and a 0/1 diagonal `E` with `r` ones.
    Rank(usize),
    /// `A E A^-1`.
    Idempotent(usize),
    /// `A E A*`.
    Hermitian(usize),
    /// `A N A^-1` with `N` the upper shift.
    Nilpotent,
}

impl RankProfile {
    /// The strata cycled through by sweeps over `k x k` matrices.
    pub fn strata(k: usize) -> Vec<RankProfile> {
        let mut out = vec![RankProfile::Any, RankProfile::Full];
        for r in 1..k {
            out.push(RankProfile::Rank(r));
            out.push(RankProfile::Idempotent(r));
            out.push(RankProfile::Hermitian(r));
        }
        out.push(RankProfile::Nilpotent);
        out
    }
}

const FULL_RANK_ATTEMPTS: usize = 10_000;

fn uniform<G: Rng>(ctx: &RingContext, bound: i64, rng: &mut G) -> RingElement {
    let bound = bound.max(0);
    match ctx.kind() {
        RingKind::Modular(z) => {
            let n = z.modulus();
            ctx.from_ints(&[rng.gen_range(0..n) as i64]).expect("residue")
        }
        RingKind::Matrix { k, field, .. } => {
            let entries: Vec<(i64, i64)> = (0..k * k)
                .map(|_| match field {
                    FieldSpec::Rational => (rng.gen_range(-bound..=bound), 0),
                    FieldSpec::Gaussian => (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)),
                    FieldSpec::Prime(f) => (rng.gen_range(0..f.characteristic()) as i64, 0),
                    FieldSpec::PrimeSquare(f) => {
                        let p = f.characteristic();
                        (rng.gen_range(0..p) as i64, rng.gen_range(0..p) as i64)
                    }
                })
                .collect();
            ctx.from_int_pairs(&entries).expect("entries fit the ring")
        }
    }
}

fn invertible<G: Rng>(ctx: &RingContext, bound: i64, rng: &mut G) -> (RingElement, RingElement) {
    let bound = bound.max(1);
    for _ in 0..FULL_RANK_ATTEMPTS {
        let a = uniform(ctx, bound, rng);
        if let Ok(inv) = ctx.invert(&a) {
            return (a, inv);
        }
    }
    (ctx.one(), ctx.one())
}

/// Diagonal 0/1 matrix with `r` ones in random positions.
fn pattern<G: Rng>(ctx: &RingContext, k: usize, r: usize, rng: &mut G) -> RingElement {
    let mut slots: Vec<usize> = (0..k).collect();
    slots.shuffle(rng);
    let mut d = vec![0i64; k * k];
    for &i in slots.iter().take(r.min(k)) {
        d[i * k + i] = 1;
    }
    ctx.from_ints(&d).expect("pattern fits the ring")
}

fn shift(ctx: &RingContext, k: usize) -> RingElement {
    let mut d = vec![0i64; k * k];
    for i in 0..k.saturating_sub(1) {
        d[i * k + i + 1] = 1;
    }
    ctx.from_ints(&d).expect("shift fits the ring")
}

/// Draws one element from `rng`. Residue rings ignore the profile except
/// [`RankProfile::Full`], which draws a unit.
pub fn sample_element<G: Rng>(ctx: &RingContext, bound: i64, profile: RankProfile, rng: &mut G) -> RingElement {
    let k = match ctx.kind() {
        RingKind::Modular(_) => {
            return match profile {
                RankProfile::Full => invertible(ctx, bound, rng).0,
                _ => uniform(ctx, bound, rng),
            }
        }
        RingKind::Matrix { k, .. } => k,
    };
    match profile {
        RankProfile::Any => uniform(ctx, bound, rng),
        RankProfile::Full => invertible(ctx, bound, rng).0,
        RankProfile::Rank(r) if r >= k => invertible(ctx, bound, rng).0,
        RankProfile::Rank(r) => {
            let (a, _) = invertible(ctx, bound, rng);
            ctx.mul(&a, &pattern(ctx, k, r, rng))
        }
        RankProfile::Idempotent(r) => {
            let (a, inv) = invertible(ctx, bound, rng);
            let e = pattern(ctx, k, r, rng);
            ctx.prod(&[&a, &e, &inv])
        }
        RankProfile::Hermitian(r) => {
            let (a, _) = invertible(ctx, bound, rng);
            let e = pattern(ctx, k, r, rng);
            ctx.prod(&[&a, &e, &ctx.star(&a)])
        }
        RankProfile::Nilpotent => {
            let (a, inv) = invertible(ctx, bound, rng);
            ctx.prod(&[&a, &shift(ctx, k), &inv])
        }
    }
}

/// One element from a fresh generator seeded with `seed`.
pub fn random_element(ctx: &RingContext, bound: i64, profile: RankProfile, seed: u64) -> RingElement {
    sample_element(ctx, bound, profile, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Two independent uniform elements.
pub fn random_pair<G: Rng>(ctx: &RingContext, bound: i64, rng: &mut G) -> (RingElement, RingElement) {
    let a = uniform(ctx, bound, rng);
    let b = uniform(ctx, bound, rng);
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Involution;

    fn q(k: usize) -> RingContext {
        RingContext::matrix(k, FieldSpec::Rational, Involution::Transpose).unwrap()
    }

    #[test]
    fn same_seed_same_element() {
        let ctx = q(3);
        for p in RankProfile::strata(3) {
            assert_eq!(random_element(&ctx, 5, p, 7), random_element(&ctx, 5, p, 7));
        }
    }

    #[test]
    fn profiles_have_their_shape() {
        for k in [2, 3, 4] {
            let ctx = q(k);
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            for _ in 0..10 {
                assert!(ctx.is_unit(&sample_element(&ctx, 5, RankProfile::Full, &mut rng)));
                let e = sample_element(&ctx, 5, RankProfile::Idempotent(1), &mut rng);
                assert!(ctx.is_idempotent(&e));
                let h = sample_element(&ctx, 5, RankProfile::Hermitian(1), &mut rng);
                assert!(ctx.is_hermitian(&h));
                let n = sample_element(&ctx, 5, RankProfile::Nilpotent, &mut rng);
                assert!(ctx.is_zero(&ctx.pow(&n, k as u32)));
                let r = sample_element(&ctx, 5, RankProfile::Rank(k - 1), &mut rng);
                assert!(!ctx.is_unit(&r));
            }
        }
    }

    #[test]
    fn gaussian_hermitian_under_conjugate_transpose() {
        let ctx = RingContext::matrix(2, FieldSpec::Gaussian, Involution::ConjugateTranspose).unwrap();
        let h = random_element(&ctx, 5, RankProfile::Hermitian(1), 3);
        assert!(ctx.is_hermitian(&h));
    }

    #[test]
    fn residues_in_range() {
        let ctx = RingContext::modular(10).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..50 {
            let u = sample_element(&ctx, 5, RankProfile::Full, &mut rng);
            assert!(ctx.is_unit(&u));
        }
    }
}
