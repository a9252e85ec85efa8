use alloc::vec::Vec;

use super::StarRing;
use crate::field::Field;

/// Dense row-major matrix. Ring elements are square; the solvers also use
/// rectangular ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: alloc::vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<T> {
        self.data
    }

    /// Plain transpose, no conjugation.
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

pub(crate) fn identity<F: Field>(f: &F, k: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(k, k, |i, j| if i == j { f.one() } else { f.zero() })
}

pub(crate) fn mat_mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch in product");
    let mut data = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            data.push(f.dot((0..a.cols).map(|l| (a.get(i, l), b.get(l, j)))));
        }
    }
    Matrix::from_vec(a.rows, b.cols, data)
}

/// How the involution acts on a matrix ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Involution {
    /// `a* = a^T`.
    Transpose,
    /// `a* = conj(a)^T` with the field's automorphism; over `Q` and `F_p` this
    /// coincides with the transpose.
    ConjugateTranspose,
}

/// The ring of `k x k` matrices over `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRing<F: Field> {
    k: usize,
    field: F,
    involution: Involution,
}

impl<F: Field> MatrixRing<F> {
    pub fn new(k: usize, field: F, involution: Involution) -> Self {
        assert!(k > 0, "matrix size must be positive");
        MatrixRing {
            k,
            field,
            involution,
        }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn involution(&self) -> Involution {
        self.involution
    }

    /// Builds an element from row-major entries.
    pub fn element(&self, entries: Vec<F::Elem>) -> Matrix<F::Elem> {
        Matrix::from_vec(self.k, self.k, entries)
    }

    pub fn from_ints(&self, entries: &[i64]) -> Matrix<F::Elem> {
        self.element(entries.iter().map(|&v| self.field.from_i64(v)).collect())
    }

    pub fn scalar(&self, c: F::Elem) -> Matrix<F::Elem> {
        let zero = self.field.zero();
        Matrix::from_fn(self.k, self.k, |i, j| if i == j { c.clone() } else { zero.clone() })
    }

    pub fn diag(&self, d: Vec<F::Elem>) -> Matrix<F::Elem> {
        assert_eq!(d.len(), self.k);
        let zero = self.field.zero();
        Matrix::from_fn(self.k, self.k, |i, j| if i == j { d[i].clone() } else { zero.clone() })
    }

    /// Matrix unit `e_ij`.
    pub fn unit(&self, i: usize, j: usize) -> Matrix<F::Elem> {
        let mut m = Matrix::filled(self.k, self.k, self.field.zero());
        m.set(i, j, self.field.one());
        m
    }
}

impl<F: Field> StarRing for MatrixRing<F> {
    type Elem = Matrix<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Matrix::filled(self.k, self.k, self.field.zero())
    }

    fn one(&self) -> Self::Elem {
        identity(&self.field, self.k)
    }

    fn from_int(&self, v: i64) -> Self::Elem {
        self.scalar(self.field.from_i64(v))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Matrix::from_vec(
            self.k,
            self.k,
            a.data.iter().zip(&b.data).map(|(x, y)| self.field.add(x, y)).collect(),
        )
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Matrix::from_vec(
            self.k,
            self.k,
            a.data.iter().zip(&b.data).map(|(x, y)| self.field.sub(x, y)).collect(),
        )
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.map(|x| self.field.neg(x))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        mat_mul(&self.field, a, b)
    }

    fn star(&self, a: &Self::Elem) -> Self::Elem {
        match self.involution {
            Involution::Transpose => a.transpose(),
            Involution::ConjugateTranspose => {
                Matrix::from_fn(self.k, self.k, |i, j| self.field.conj(a.get(j, i)))
            }
        }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.data.iter().all(|x| self.field.is_zero(x))
    }

    fn size(&self) -> Option<u64> {
        let q = self.field.size()?;
        let mut total: u64 = 1;
        for _ in 0..self.k * self.k {
            total = total.checked_mul(q)?;
        }
        Some(total)
    }

    fn element_at(&self, mut idx: u64) -> Option<Self::Elem> {
        let q = self.field.size()?;
        if idx >= self.size()? {
            return None;
        }
        let mut data = Vec::with_capacity(self.k * self.k);
        for _ in 0..self.k * self.k {
            data.push(self.field.element_at(idx % q)?);
            idx /= q;
        }
        Some(Matrix::from_vec(self.k, self.k, data))
    }

    fn index_of(&self, a: &Self::Elem) -> Option<u64> {
        let q = self.field.size()?;
        let mut idx = 0u64;
        for x in a.data.iter().rev() {
            idx = idx.checked_mul(q)?.checked_add(self.field.index_of(x)?)?;
        }
        Some(idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn identity_is_neutral() {
        let r = MatrixRing::new(2, Rationals, Involution::Transpose);
        let a = r.from_ints(&[1, 1, 0, 0]);
        assert_eq!(r.mul(&r.one(), &a), a);
        assert_eq!(r.mul(&a, &r.one()), a);
    }

    #[test]
    fn powers() {
        let r = MatrixRing::new(2, Rationals, Involution::Transpose);
        let idem = r.from_ints(&[1, 1, 0, 0]);
        assert_eq!(r.pow(&idem, 2), idem);
        let nil = r.from_ints(&[0, 1, 0, 0]);
        assert_eq!(r.pow(&nil, 2), r.zero());
        assert_eq!(r.pow(&nil, 0), r.one());
    }

    #[test]
    fn enumeration_order_round_trips() {
        let r = MatrixRing::new(2, PrimeField::new(3).unwrap(), Involution::Transpose);
        assert_eq!(r.size(), Some(81));
        for i in 0..81 {
            let e = r.element_at(i).unwrap();
            assert_eq!(r.index_of(&e), Some(i));
        }
        assert!(r.element_at(81).is_none());
    }
}
