//! Exhaustive search over a finite ring using only the definitions.
//!
//! Addition, multiplication and the involution are tabulated once; every
//! principal one-sided ideal is kept as a bit set so conditions like
//! `xR = aR` become set comparisons.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::RingError;
use crate::inverse::{check, InverseClass};
use crate::linalg::ExactSolver;
use crate::ring::{enumerate_with_limit, StarRing};

/// Largest ring the oracle will tabulate.
pub const ORACLE_LIMIT: u64 = 1024;

type Bits = Vec<u64>;

fn bits_with(len: usize, items: impl Iterator<Item = usize>) -> Bits {
    let mut b = vec![0u64; len.div_ceil(64)];
    for i in items {
        b[i / 64] |= 1 << (i % 64);
    }
    b
}

fn subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub struct Oracle<'r, R: StarRing> {
    ring: &'r R,
    elems: Vec<R::Elem>,
    mul: Vec<u32>,
    star: Vec<u32>,
    zero: usize,
    one: usize,
    /// `x R` for every `x`.
    right: Vec<Bits>,
    /// `R x` for every `x`.
    left: Vec<Bits>,
}

/// All solutions of one class, with the first few kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSearch<E> {
    pub count: usize,
    pub solutions: Vec<E>,
}

impl<E> ClassSearch<E> {
    pub fn exists(&self) -> bool {
        self.count > 0
    }

    pub fn value(&self) -> Option<&E> {
        self.solutions.first()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport<E> {
    pub element: E,
    /// Indexed like [`InverseClass::ALL`].
    pub classes: Vec<ClassSearch<E>>,
    pub regular: bool,
    pub idempotent: bool,
    pub projection: bool,
    pub hermitian: bool,
    pub unit: bool,
    /// `a†` and `a#` exist and are equal.
    pub ep: bool,
    /// Every kept solution passed the ring-arithmetic checks of [`check`].
    pub validated: bool,
}

pub(crate) fn class_index(class: InverseClass) -> usize {
    InverseClass::ALL.iter().position(|&c| c == class).unwrap_or(0)
}

impl<E> OracleReport<E> {
    pub fn class(&self, class: InverseClass) -> &ClassSearch<E> {
        &self.classes[class_index(class)]
    }

    pub fn value(&self, class: InverseClass) -> Option<&E> {
        self.class(class).value()
    }

    /// At most one Moore-Penrose, group, core and dual core inverse.
    pub fn uniqueness_holds(&self) -> bool {
        [
            InverseClass::MoorePenrose,
            InverseClass::Group,
            InverseClass::Core,
            InverseClass::DualCore,
        ]
        .iter()
        .all(|&c| self.class(c).count <= 1)
    }
}

impl<'r, R: StarRing> Oracle<'r, R> {
    pub fn new(ring: &'r R) -> Result<Self, RingError> {
        let elems: Vec<R::Elem> = enumerate_with_limit(ring, ORACLE_LIMIT)?.collect();
        let n = elems.len();
        let idx = |e: &R::Elem| ring.index_of(e).expect("finite ring element has an index") as u32;
        let mut mul = Vec::with_capacity(n * n);
        for x in &elems {
            for y in &elems {
                mul.push(idx(&ring.mul(x, y)));
            }
        }
        let star = elems.iter().map(|x| idx(&ring.star(x))).collect();
        let right = (0..n)
            .map(|x| bits_with(n, (0..n).map(|y| mul[x * n + y] as usize)))
            .collect();
        let left = (0..n)
            .map(|x| bits_with(n, (0..n).map(|y| mul[y * n + x] as usize)))
            .collect();
        let zero = idx(&ring.zero()) as usize;
        let one = idx(&ring.one()) as usize;
        Ok(Oracle {
            ring,
            elems,
            mul,
            star,
            zero,
            one,
            right,
            left,
        })
    }

    pub fn ring(&self) -> &'r R {
        self.ring
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[R::Elem] {
        &self.elems
    }

    pub fn element(&self, i: usize) -> &R::Elem {
        &self.elems[i]
    }

    pub fn index(&self, e: &R::Elem) -> usize {
        self.ring.index_of(e).expect("finite ring element has an index") as usize
    }

    fn m(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.elems.len() + y] as usize
    }

    fn m3(&self, x: usize, y: usize, z: usize) -> usize {
        self.m(self.m(x, y), z)
    }

    fn hermitian_idx(&self, x: usize) -> bool {
        self.star[x] as usize == x
    }

    pub fn is_unit(&self, x: usize) -> bool {
        (0..self.size()).any(|y| self.m(x, y) == self.one && self.m(y, x) == self.one)
    }

    /// Every Hermitian element.
    pub fn hermitians(&self) -> Vec<R::Elem> {
        (0..self.size())
            .filter(|&x| self.hermitian_idx(x))
            .map(|x| self.elems[x].clone())
            .collect()
    }

    /// Every Hermitian idempotent.
    pub fn projections(&self) -> Vec<R::Elem> {
        (0..self.size())
            .filter(|&x| self.hermitian_idx(x) && self.m(x, x) == x)
            .map(|x| self.elems[x].clone())
            .collect()
    }

    /// `xy = 1` forces `yx = 1` for all `x`, `y`.
    pub fn dedekind_finite(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..n).all(|y| self.m(x, y) != self.one || self.m(y, x) == self.one))
    }

    fn satisfies(&self, class: InverseClass, a: usize, x: usize) -> bool {
        if self.m3(a, x, a) != a {
            return false;
        }
        let ax = self.m(a, x);
        let xa = self.m(x, a);
        let outer = || self.m3(x, a, x) == x;
        let sa = self.star[a] as usize;
        match class {
            InverseClass::Inner => true,
            InverseClass::OneThree => self.hermitian_idx(ax),
            InverseClass::OneFour => self.hermitian_idx(xa),
            InverseClass::MoorePenrose => self.hermitian_idx(ax) && self.hermitian_idx(xa) && outer(),
            InverseClass::Group => ax == xa && outer(),
            InverseClass::Core => self.right[x] == self.right[a] && self.left[x] == self.left[sa],
            InverseClass::DualCore => self.left[x] == self.left[a] && self.right[x] == self.right[sa],
        }
    }

    /// Indices of every solution for `class`.
    pub fn solutions(&self, class: InverseClass, a: &R::Elem) -> Vec<usize> {
        let ai = self.index(a);
        (0..self.size()).filter(|&x| self.satisfies(class, ai, x)).collect()
    }

    /// Every `y` with `y e d = d = d e y`, `yR ⊆ dR` and `Ry ⊆ Rd`.
    pub fn along(&self, e: &R::Elem, d: &R::Elem) -> Vec<R::Elem> {
        let (ei, di) = (self.index(e), self.index(d));
        (0..self.size())
            .filter(|&y| {
                self.m3(y, ei, di) == di
                    && self.m3(di, ei, y) == di
                    && subset(&self.right[y], &self.right[di])
                    && subset(&self.left[y], &self.left[di])
            })
            .map(|y| self.elems[y].clone())
            .collect()
    }

    /// Searches every class, keeping at most `cap` solutions per class.
    pub fn report(&self, a: &R::Elem, cap: usize) -> OracleReport<R::Elem>
    where
        R: ExactSolver,
    {
        let ai = self.index(a);
        let classes: Vec<ClassSearch<R::Elem>> = InverseClass::ALL
            .iter()
            .map(|&c| {
                let all = self.solutions(c, a);
                ClassSearch {
                    count: all.len(),
                    solutions: all.iter().take(cap.max(1)).map(|&x| self.elems[x].clone()).collect(),
                }
            })
            .collect();
        let validated = InverseClass::ALL
            .iter()
            .zip(&classes)
            .all(|(&c, s)| s.solutions.iter().all(|x| check::class(self.ring, c, a, x)));
        let mp = &classes[class_index(InverseClass::MoorePenrose)];
        let group = &classes[class_index(InverseClass::Group)];
        let ep = mp.exists() && mp.value() == group.value();
        OracleReport {
            element: a.clone(),
            regular: classes[0].exists(),
            idempotent: self.m(ai, ai) == ai,
            projection: self.m(ai, ai) == ai && self.hermitian_idx(ai),
            hermitian: self.hermitian_idx(ai),
            unit: self.is_unit(ai),
            ep,
            validated,
            classes,
        }
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }
}
