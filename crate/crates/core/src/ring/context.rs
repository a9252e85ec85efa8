//! Runtime-selected rings.
//!
//! A [`RingContext`] names one of the concrete rings (matrices over one of
//! four exact fields, or residues modulo `n`). It implements [`StarRing`] and
//! [`ExactSolver`] by dispatching to the concrete implementation, so every
//! generic algorithm runs on it unchanged.

use alloc::vec::Vec;

use num_rational::BigRational;

use super::{Involution, Matrix, MatrixRing, StarRing, Zmod};
use crate::error::RingError;
use crate::field::{Field, Fp2, Gaussian, GaussianRationals, PrimeField, QuadraticField, Rationals};
use crate::linalg::{Decomposition, ExactSolver, NotInvertible, Subspace, SubspaceBasis};

/// Scalar field of a matrix ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Gaussian,
    Prime(PrimeField),
    PrimeSquare(QuadraticField),
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self, RingError> {
        PrimeField::new(p)
            .map(FieldSpec::Prime)
            .ok_or(RingError::InvalidContext("characteristic must be prime"))
    }

    pub fn prime_square(p: u32) -> Result<Self, RingError> {
        QuadraticField::new(p)
            .map(FieldSpec::PrimeSquare)
            .ok_or(RingError::InvalidContext("characteristic must be prime"))
    }

    pub fn size(&self) -> Option<u64> {
        match self {
            FieldSpec::Rational => Rationals.size(),
            FieldSpec::Gaussian => GaussianRationals.size(),
            FieldSpec::Prime(f) => f.size(),
            FieldSpec::PrimeSquare(f) => f.size(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Matrix {
        k: usize,
        field: FieldSpec,
        involution: Involution,
    },
    Modular(Zmod),
}

/// The ambient ring of a [`RingElement`]. Small and `Copy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    kind: RingKind,
}

/// Entries of a ring element, one variant per concrete ring family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Rational(Matrix<BigRational>),
    Gaussian(Matrix<Gaussian>),
    Prime(Matrix<u32>),
    PrimeSquare(Matrix<Fp2>),
    Residue(u64),
}

/// A value in a concrete ring. Equality is exact and includes the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    ctx: RingContext,
    payload: Payload,
}

impl RingElement {
    pub fn context(&self) -> RingContext {
        self.ctx
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    fn check(&self, other: &RingElement) -> Result<(), RingError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(RingError::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check(other)?;
        Ok(self.ctx.add(self, other))
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check(other)?;
        Ok(self.ctx.sub(self, other))
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check(other)?;
        Ok(self.ctx.mul(self, other))
    }

    pub fn neg(&self) -> RingElement {
        self.ctx.neg(self)
    }

    pub fn star(&self) -> RingElement {
        self.ctx.star(self)
    }

    pub fn pow(&self, n: u32) -> RingElement {
        self.ctx.pow(self, n)
    }
}

/// Bridges a concrete ring to [`Payload`].
trait Concrete: ExactSolver {
    fn wrap(e: Self::Elem) -> Payload;
    fn unwrap(p: &Payload) -> Option<&Self::Elem>;
}

macro_rules! concrete {
    ($ring:ty, $variant:ident) => {
        impl Concrete for $ring {
            fn wrap(e: Self::Elem) -> Payload {
                Payload::$variant(e)
            }

            fn unwrap(p: &Payload) -> Option<&Self::Elem> {
                match p {
                    Payload::$variant(e) => Some(e),
                    _ => None,
                }
            }
        }
    };
}

concrete!(MatrixRing<Rationals>, Rational);
concrete!(MatrixRing<GaussianRationals>, Gaussian);
concrete!(MatrixRing<PrimeField>, Prime);
concrete!(MatrixRing<QuadraticField>, PrimeSquare);
concrete!(Zmod, Residue);

macro_rules! dispatch {
    ($ctx:expr, $r:ident => $body:expr) => {
        match $ctx.kind {
            RingKind::Matrix {
                k,
                field: FieldSpec::Rational,
                involution,
            } => {
                let $r = MatrixRing::new(k, Rationals, involution);
                $body
            }
            RingKind::Matrix {
                k,
                field: FieldSpec::Gaussian,
                involution,
            } => {
                let $r = MatrixRing::new(k, GaussianRationals, involution);
                $body
            }
            RingKind::Matrix {
                k,
                field: FieldSpec::Prime(f),
                involution,
            } => {
                let $r = MatrixRing::new(k, f, involution);
                $body
            }
            RingKind::Matrix {
                k,
                field: FieldSpec::PrimeSquare(f),
                involution,
            } => {
                let $r = MatrixRing::new(k, f, involution);
                $body
            }
            RingKind::Modular(z) => {
                let $r = z;
                $body
            }
        }
    };
}

impl RingContext {
    pub fn matrix(k: usize, field: FieldSpec, involution: Involution) -> Result<Self, RingError> {
        if k == 0 {
            return Err(RingError::InvalidContext("matrix size must be positive"));
        }
        Ok(RingContext {
            kind: RingKind::Matrix {
                k,
                field,
                involution,
            },
        })
    }

    pub fn modular(n: u64) -> Result<Self, RingError> {
        Zmod::new(n)
            .map(|z| RingContext {
                kind: RingKind::Modular(z),
            })
            .ok_or(RingError::InvalidContext("modulus must be in [2, 2^32)"))
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn is_matrix(&self) -> bool {
        matches!(self.kind, RingKind::Matrix { .. })
    }

    /// Wraps a payload after checking shape and canonical form.
    pub fn element(&self, payload: Payload) -> Result<RingElement, RingError> {
        let ok = match (&self.kind, &payload) {
            (RingKind::Modular(z), Payload::Residue(v)) => *v < z.modulus(),
            (RingKind::Matrix { k, field, .. }, p) => {
                let square = |rows: usize, cols: usize| rows == *k && cols == *k;
                match (field, p) {
                    (FieldSpec::Rational, Payload::Rational(m)) => square(m.rows(), m.cols()),
                    (FieldSpec::Gaussian, Payload::Gaussian(m)) => square(m.rows(), m.cols()),
                    (FieldSpec::Prime(f), Payload::Prime(m)) => {
                        square(m.rows(), m.cols())
                            && m.entries().iter().all(|&x| x < f.characteristic())
                    }
                    (FieldSpec::PrimeSquare(f), Payload::PrimeSquare(m)) => {
                        square(m.rows(), m.cols())
                            && m.entries()
                                .iter()
                                .all(|x| x[0] < f.characteristic() && x[1] < f.characteristic())
                    }
                    _ => false,
                }
            }
            _ => false,
        };
        if ok {
            Ok(RingElement { ctx: *self, payload })
        } else {
            Err(RingError::BadPayload)
        }
    }

    /// Element with integer entries (row-major) or an integer residue.
    pub fn from_ints(&self, entries: &[i64]) -> Result<RingElement, RingError> {
        let payload = match self.kind {
            RingKind::Modular(z) => match entries {
                [v] => Payload::Residue(z.residue(*v)),
                _ => return Err(RingError::BadPayload),
            },
            RingKind::Matrix { k, field, involution } => {
                if entries.len() != k * k {
                    return Err(RingError::BadPayload);
                }
                match field {
                    FieldSpec::Rational => Payload::Rational(MatrixRing::new(k, Rationals, involution).from_ints(entries)),
                    FieldSpec::Gaussian => {
                        Payload::Gaussian(MatrixRing::new(k, GaussianRationals, involution).from_ints(entries))
                    }
                    FieldSpec::Prime(f) => Payload::Prime(MatrixRing::new(k, f, involution).from_ints(entries)),
                    FieldSpec::PrimeSquare(f) => {
                        Payload::PrimeSquare(MatrixRing::new(k, f, involution).from_ints(entries))
                    }
                }
            }
        };
        Ok(RingElement { ctx: *self, payload })
    }

    /// Element from `(re, im)` integer pairs, row-major. The second part is
    /// the coefficient of `i` over `Q(i)` and of the generator `w` over
    /// `F_{p^2}`; other rings require it to be zero.
    pub fn from_int_pairs(&self, entries: &[(i64, i64)]) -> Result<RingElement, RingError> {
        let payload = match self.kind {
            RingKind::Matrix {
                k,
                field: FieldSpec::Gaussian,
                ..
            } if entries.len() == k * k => {
                let q = Rationals;
                let m = entries
                    .iter()
                    .map(|&(re, im)| Gaussian::new(q.from_i64(re), q.from_i64(im)))
                    .collect();
                Payload::Gaussian(Matrix::from_vec(k, k, m))
            }
            RingKind::Matrix {
                k,
                field: FieldSpec::PrimeSquare(f),
                ..
            } if entries.len() == k * k => {
                let m = entries.iter().map(|&(re, im)| f.from_parts(re, im)).collect();
                Payload::PrimeSquare(Matrix::from_vec(k, k, m))
            }
            _ if entries.iter().all(|&(_, im)| im == 0) => {
                let re: Vec<i64> = entries.iter().map(|&(re, _)| re).collect();
                return self.from_ints(&re);
            }
            _ => return Err(RingError::BadPayload),
        };
        Ok(RingElement { ctx: *self, payload })
    }

    fn get<'a, R: Concrete>(&self, _r: &R, e: &'a RingElement) -> &'a R::Elem {
        assert!(e.ctx == *self, "element from a different ring");
        R::unwrap(&e.payload).expect("payload matches ring")
    }

    fn put<R: Concrete>(&self, _r: &R, e: R::Elem) -> RingElement {
        RingElement {
            ctx: *self,
            payload: R::wrap(e),
        }
    }

    fn subspace_in<R: Concrete>(&self, r: &R, s: &Subspace<RingElement>) -> Subspace<R::Elem> {
        match s {
            Subspace::Basis(b) => Subspace::Basis(SubspaceBasis {
                basis: b.basis.iter().map(|e| self.get(r, e).clone()).collect(),
                ambient: b.ambient,
            }),
            Subspace::Elements(v) => Subspace::Elements(v.iter().map(|e| self.get(r, e).clone()).collect()),
        }
    }

    fn subspace_out<R: Concrete>(&self, r: &R, s: Subspace<R::Elem>) -> Subspace<RingElement> {
        match s {
            Subspace::Basis(b) => Subspace::Basis(SubspaceBasis {
                basis: b.basis.into_iter().map(|e| self.put(r, e)).collect(),
                ambient: b.ambient,
            }),
            Subspace::Elements(v) => Subspace::Elements(v.into_iter().map(|e| self.put(r, e)).collect()),
        }
    }
}

impl StarRing for RingContext {
    type Elem = RingElement;

    fn zero(&self) -> RingElement {
        dispatch!(self, r => self.put(&r, r.zero()))
    }

    fn one(&self) -> RingElement {
        dispatch!(self, r => self.put(&r, r.one()))
    }

    fn from_int(&self, v: i64) -> RingElement {
        dispatch!(self, r => self.put(&r, r.from_int(v)))
    }

    fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        dispatch!(self, r => self.put(&r, r.add(self.get(&r, a), self.get(&r, b))))
    }

    fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        dispatch!(self, r => self.put(&r, r.sub(self.get(&r, a), self.get(&r, b))))
    }

    fn neg(&self, a: &RingElement) -> RingElement {
        dispatch!(self, r => self.put(&r, r.neg(self.get(&r, a))))
    }

    fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        dispatch!(self, r => self.put(&r, r.mul(self.get(&r, a), self.get(&r, b))))
    }

    fn star(&self, a: &RingElement) -> RingElement {
        dispatch!(self, r => self.put(&r, r.star(self.get(&r, a))))
    }

    fn is_zero(&self, a: &RingElement) -> bool {
        dispatch!(self, r => r.is_zero(self.get(&r, a)))
    }

    fn size(&self) -> Option<u64> {
        dispatch!(self, r => r.size())
    }

    fn element_at(&self, idx: u64) -> Option<RingElement> {
        dispatch!(self, r => r.element_at(idx).map(|e| self.put(&r, e)))
    }

    fn index_of(&self, a: &RingElement) -> Option<u64> {
        dispatch!(self, r => r.index_of(self.get(&r, a)))
    }
}

impl ExactSolver for RingContext {
    fn invert(&self, u: &RingElement) -> Result<RingElement, NotInvertible<RingElement>> {
        dispatch!(self, r => r
            .invert(self.get(&r, u))
            .map(|e| self.put(&r, e))
            .map_err(|c| NotInvertible {
                witness: self.put(&r, c.witness),
                gcd: c.gcd,
            }))
    }

    fn left_divide(&self, target: &RingElement, a: &RingElement) -> Option<RingElement> {
        dispatch!(self, r => r.left_divide(self.get(&r, target), self.get(&r, a)).map(|e| self.put(&r, e)))
    }

    fn right_divide(&self, target: &RingElement, a: &RingElement) -> Option<RingElement> {
        dispatch!(self, r => r.right_divide(self.get(&r, target), self.get(&r, a)).map(|e| self.put(&r, e)))
    }

    fn find_inner_inverse(&self, a: &RingElement) -> Option<RingElement> {
        dispatch!(self, r => r.find_inner_inverse(self.get(&r, a)).map(|e| self.put(&r, e)))
    }

    fn annihilator(&self, a: &RingElement, side: super::Side) -> Subspace<RingElement> {
        dispatch!(self, r => { let s = r.annihilator(self.get(&r, a), side); self.subspace_out_for(&r, s) })
    }

    fn ideal_subspace(&self, a: &RingElement, side: super::Side) -> Subspace<RingElement> {
        dispatch!(self, r => { let s = r.ideal_subspace(self.get(&r, a), side); self.subspace_out_for(&r, s) })
    }

    fn decomposition_check(&self, s1: &Subspace<RingElement>, s2: &Subspace<RingElement>) -> Decomposition {
        dispatch!(self, r => self.decompose_in(&r, s1, s2))
    }
}

impl RingContext {
    fn subspace_out_for<R: Concrete>(&self, _r: &R, s: Subspace<R::Elem>) -> Subspace<RingElement> {
        self.subspace_out(_r, s)
    }

    fn decompose_in<R: Concrete>(
        &self,
        r: &R,
        s1: &Subspace<RingElement>,
        s2: &Subspace<RingElement>,
    ) -> Decomposition {
        r.decomposition_check(&self.subspace_in(r, s1), &self.subspace_in(r, s2))
    }

    /// All elements of a finite ring, in enumeration order.
    pub fn elements(&self) -> Result<Vec<RingElement>, RingError> {
        Ok(super::enumerate(self)?.collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_mismatch_is_reported() {
        let z6 = RingContext::modular(6).unwrap();
        let z4 = RingContext::modular(4).unwrap();
        let a = z6.from_int(2);
        let b = z4.from_int(2);
        assert_eq!(a.try_add(&b), Err(RingError::ContextMismatch));
        assert_eq!(a.try_mul(&a).unwrap(), z6.from_int(4));
    }

    #[test]
    fn enumerates_small_rings() {
        let z4 = RingContext::modular(4).unwrap();
        let all = z4.elements().unwrap();
        assert_eq!(all, (0..4).map(|v| z4.from_int(v)).collect::<Vec<_>>());
        let m = RingContext::matrix(2, FieldSpec::prime(2).unwrap(), Involution::Transpose).unwrap();
        assert_eq!(m.elements().unwrap().len(), 16);
        let q = RingContext::matrix(2, FieldSpec::Rational, Involution::Transpose).unwrap();
        assert_eq!(q.elements(), Err(RingError::NotEnumerable { size: None }));
    }

    #[test]
    fn from_ints_builds_matrices() {
        let q = RingContext::matrix(2, FieldSpec::Rational, Involution::Transpose).unwrap();
        let a = q.from_ints(&[1, 2, 3, 4]).unwrap();
        let direct = MatrixRing::new(2, Rationals, Involution::Transpose).from_ints(&[1, 2, 3, 4]);
        assert_eq!(a.payload(), &Payload::Rational(direct));
        assert!(q.from_ints(&[1, 2]).is_err());
    }

    #[test]
    fn rejects_non_canonical_payloads() {
        let f3 = RingContext::matrix(1, FieldSpec::prime(3).unwrap(), Involution::Transpose).unwrap();
        assert!(f3.element(Payload::Prime(Matrix::from_vec(1, 1, alloc::vec![3]))).is_err());
        assert!(f3.element(Payload::Residue(0)).is_err());
    }
}
