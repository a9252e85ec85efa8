//! Gauss-Jordan elimination over an exact field.
//!
//! Pivots are chosen leftmost column first and, within a column, from the
//! first row at or below the current one with a nonzero entry. Free variables
//! of a consistent system are set to zero. Together this fixes every witness
//! the solvers return.

use alloc::vec::Vec;

use crate::field::Field;
use crate::ring::Matrix;

/// Reduces `m` in place to reduced row-echelon form, only pivoting in the
/// first `pivot_cols` columns. Returns the pivot columns in order.
pub(crate) fn rref_in_place<F: Field>(
    f: &F,
    m: &mut Matrix<F::Elem>,
    pivot_cols: usize,
) -> Vec<usize> {
    let rows = m.rows();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols.min(cols) {
        if r == rows {
            break;
        }
        let Some(src) = (r..rows).find(|&i| !f.is_zero(m.get(i, c))) else {
            continue;
        };
        m.swap_rows(r, src);
        let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
        if !f.is_one(m.get(r, c)) {
            for j in c..cols {
                let v = f.mul(&inv, m.get(r, j));
                m.set(r, j, v);
            }
        }
        for i in 0..rows {
            if i == r || f.is_zero(m.get(i, c)) {
                continue;
            }
            let factor = m.get(i, c).clone();
            for j in c..cols {
                if f.is_zero(m.get(r, j)) {
                    continue;
                }
                let v = f.sub_mul(m.get(i, j), &factor, m.get(r, j));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rref<F: Field>(f: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut m = m.clone();
    let cols = m.cols();
    let pivots = rref_in_place(f, &mut m, cols);
    (m, pivots)
}

pub(crate) fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    rref(f, m).1.len()
}

/// Solves `a X = b`, or `None` when inconsistent.
pub(crate) fn solve_system<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    b: &Matrix<F::Elem>,
) -> Option<Matrix<F::Elem>> {
    assert_eq!(a.rows(), b.rows(), "right-hand side has wrong height");
    let n = a.cols();
    let q = b.cols();
    let mut aug = Matrix::from_fn(a.rows(), n + q, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            b.get(i, j - n).clone()
        }
    });
    let pivots = rref_in_place(f, &mut aug, n);
    for i in pivots.len()..aug.rows() {
        if (n..n + q).any(|j| !f.is_zero(aug.get(i, j))) {
            return None;
        }
    }
    let mut x = Matrix::filled(n, q, f.zero());
    for (row, &c) in pivots.iter().enumerate() {
        for j in 0..q {
            x.set(c, j, aug.get(row, n + j).clone());
        }
    }
    Some(x)
}

/// Basis of `{v : a v = 0}`, one vector per free column in left-to-right order.
pub(crate) fn kernel_basis<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(f, a);
    let n = a.cols();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![f.zero(); n];
        v[free] = f.one();
        for (row, &c) in pivots.iter().enumerate() {
            v[c] = f.neg(r.get(row, free));
        }
        basis.push(v);
    }
    basis
}

/// Nonzero rows of the reduced row-echelon form: a canonical basis of the row space.
pub(crate) fn row_space<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(f, m);
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(rows: usize, cols: usize, v: &[i64]) -> Matrix<num_rational::BigRational> {
        Matrix::from_vec(rows, cols, v.iter().map(|&x| Rationals.from_i64(x)).collect())
    }

    #[test]
    fn rref_picks_leftmost_pivots() {
        let (r, piv) = rref(&Rationals, &q(3, 3, &[0, 2, 4, 0, 1, 2, 1, 0, 1]));
        assert_eq!(piv, [0, 1]);
        assert_eq!(r, q(3, 3, &[1, 0, 1, 0, 1, 2, 0, 0, 0]));
    }

    #[test]
    fn solve_sets_free_variables_to_zero() {
        let a = q(1, 2, &[1, 1]);
        let b = q(1, 1, &[3]);
        assert_eq!(solve_system(&Rationals, &a, &b).unwrap(), q(2, 1, &[3, 0]));
        assert!(solve_system(&Rationals, &q(2, 1, &[0, 0]), &q(2, 1, &[0, 1])).is_none());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = PrimeField::new(5).unwrap();
        let a = Matrix::from_vec(2, 3, alloc::vec![1, 2, 3, 2, 4, 1]);
        let ker = kernel_basis(&f, &a);
        assert_eq!(ker.len(), 3 - rank(&f, &a));
        for v in ker {
            for i in 0..2 {
                let s = (0..3).fold(0, |acc, j| f.add(&acc, &f.mul(a.get(i, j), &v[j])));
                assert_eq!(s, 0);
            }
        }
    }
}
