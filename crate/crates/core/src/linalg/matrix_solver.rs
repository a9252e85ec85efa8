use alloc::vec::Vec;

use super::elimination::{kernel_basis, rank, rref, row_space, solve_system};
use super::{Decomposition, ExactSolver, NotInvertible, Subspace, SubspaceBasis};
use crate::field::Field;
use crate::ring::matrix::identity;
use crate::ring::{Matrix, MatrixRing, Side, StarRing};

impl<F: Field> MatrixRing<F> {
    fn flatten(&self, m: &Matrix<F::Elem>) -> Vec<F::Elem> {
        m.entries().to_vec()
    }

    /// Canonical basis of the span of `gens` in the flattened `k^2`-space.
    fn span(&self, gens: Vec<Vec<F::Elem>>) -> SubspaceBasis<Matrix<F::Elem>> {
        let k = self.dim();
        let ambient = k * k;
        if gens.is_empty() {
            return SubspaceBasis {
                basis: Vec::new(),
                ambient,
            };
        }
        let rows = gens.len();
        let m = Matrix::from_vec(rows, ambient, gens.into_iter().flatten().collect());
        let basis = row_space(self.field(), &m)
            .into_iter()
            .map(|v| Matrix::from_vec(k, k, v))
            .collect();
        SubspaceBasis { basis, ambient }
    }

    /// Matrices with one row (or column) set to `v`, for every position.
    fn placed(&self, vectors: &[Vec<F::Elem>], as_rows: bool) -> Vec<Vec<F::Elem>> {
        let k = self.dim();
        let mut gens = Vec::new();
        for pos in 0..k {
            for v in vectors {
                let mut m = self.zero();
                for (t, x) in v.iter().enumerate() {
                    if as_rows {
                        m.set(pos, t, x.clone());
                    } else {
                        m.set(t, pos, x.clone());
                    }
                }
                gens.push(self.flatten(&m));
            }
        }
        gens
    }

    /// Rank factorization `a = C G`: `C` holds the pivot columns of `a`
    /// (left to right), `G` the nonzero rows of its reduced echelon form.
    pub fn rank_factorization(&self, a: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Matrix<F::Elem>) {
        let k = self.dim();
        let (r, pivots) = rref(self.field(), a);
        let rk = pivots.len();
        let c = Matrix::from_fn(k, rk, |i, j| a.get(i, pivots[j]).clone());
        let g = Matrix::from_fn(rk, k, |i, j| r.get(i, j).clone());
        (c, g)
    }
}

impl<F: Field> ExactSolver for MatrixRing<F> {
    fn invert(&self, u: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>, NotInvertible<Matrix<F::Elem>>> {
        let f = self.field();
        let k = self.dim();
        let ker = kernel_basis(f, u);
        if let Some(v) = ker.into_iter().next() {
            let mut w = self.zero();
            for (i, x) in v.into_iter().enumerate() {
                w.set(i, 0, x);
            }
            return Err(NotInvertible {
                witness: w,
                gcd: None,
            });
        }
        Ok(solve_system(f, u, &identity(f, k)).expect("full rank system is consistent"))
    }

    fn left_divide(&self, target: &Matrix<F::Elem>, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
        // x a = t  <=>  a^T x^T = t^T, one column of x^T per row of x.
        solve_system(self.field(), &a.transpose(), &target.transpose()).map(|x| x.transpose())
    }

    fn right_divide(&self, target: &Matrix<F::Elem>, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
        solve_system(self.field(), a, target)
    }

    fn find_inner_inverse(&self, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
        let f = self.field();
        let k = self.dim();
        let (c, g) = self.rank_factorization(a);
        let rk = c.cols();
        if rk == 0 {
            return Some(self.zero());
        }
        // Left inverse of C: X C = I  <=>  C^T X^T = I.
        let c_left = solve_system(f, &c.transpose(), &identity(f, rk))?.transpose();
        // G has identity columns at the pivots, so its right inverse is a selection.
        let (_, pivots) = rref(f, a);
        let mut g_right = Matrix::filled(k, rk, f.zero());
        for (j, &p) in pivots.iter().enumerate() {
            g_right.set(p, j, f.one());
        }
        debug_assert!(crate::ring::matrix::mat_mul(f, &g, &g_right) == identity(f, rk));
        Some(crate::ring::matrix::mat_mul(f, &g_right, &c_left))
    }

    fn annihilator(&self, a: &Matrix<F::Elem>, side: Side) -> Subspace<Matrix<F::Elem>> {
        let f = self.field();
        let gens = match side {
            // x a = 0: every row v of x has v a = 0, i.e. a^T v^T = 0.
            Side::Left => self.placed(&kernel_basis(f, &a.transpose()), true),
            // a x = 0: every column of x lies in ker a.
            Side::Right => self.placed(&kernel_basis(f, a), false),
        };
        Subspace::Basis(self.span(gens))
    }

    fn ideal_subspace(&self, a: &Matrix<F::Elem>, side: Side) -> Subspace<Matrix<F::Elem>> {
        let f = self.field();
        let gens = match side {
            // Rows of x a range over the row space of a.
            Side::Left => self.placed(&row_space(f, a), true),
            // Columns of a x range over the column space of a.
            Side::Right => self.placed(&row_space(f, &a.transpose()), false),
        };
        Subspace::Basis(self.span(gens))
    }

    fn decomposition_check(
        &self,
        s1: &Subspace<Matrix<F::Elem>>,
        s2: &Subspace<Matrix<F::Elem>>,
    ) -> Decomposition {
        let (Subspace::Basis(b1), Subspace::Basis(b2)) = (s1, s2) else {
            panic!("matrix subspaces are always bases");
        };
        let ambient = b1.ambient_dim();
        let rows: Vec<F::Elem> = b1
            .basis()
            .iter()
            .chain(b2.basis())
            .flat_map(|m| m.entries().iter().cloned())
            .collect();
        let count = b1.rank() + b2.rank();
        let sum_dim = if count == 0 {
            0
        } else {
            rank(self.field(), &Matrix::from_vec(count, ambient, rows))
        };
        Decomposition {
            sum_is_all: sum_dim == ambient,
            intersection_is_zero: count == sum_dim,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::ring::Involution;

    fn ring() -> MatrixRing<Rationals> {
        MatrixRing::new(2, Rationals, Involution::Transpose)
    }

    #[test]
    fn unipotent_inverse() {
        let r = ring();
        let u = r.from_ints(&[1, 1, 0, 1]);
        assert_eq!(r.invert(&u).unwrap(), r.from_ints(&[1, -1, 0, 1]));
    }

    #[test]
    fn singular_matrix_certificate_is_annihilated() {
        let r = ring();
        let u = r.from_ints(&[1, 2, 2, 4]);
        let cert = r.invert(&u).unwrap_err();
        assert!(!r.is_zero(&cert.witness));
        assert!(r.is_zero(&r.mul(&u, &cert.witness)));
    }

    #[test]
    fn inner_inverse_by_rank_factorization() {
        let r = ring();
        let a = r.from_ints(&[1, 1, 0, 0]);
        assert_eq!(r.inner_inverse(&a).unwrap(), r.from_ints(&[1, 0, 0, 0]));
        assert_eq!(r.inner_inverse(&r.zero()).unwrap(), r.zero());
    }

    #[test]
    fn diagonal_right_division() {
        let r = ring();
        let w = r.solve_right(&r.from_ints(&[2, 0, 0, 0]), &r.from_ints(&[4, 0, 0, 0])).unwrap();
        assert_eq!(w.solution, r.diag(alloc::vec![Rationals.one() / Rationals.from_i64(2), Rationals.zero()]));
        let z = r.solve_right(&r.zero(), &r.from_ints(&[3, 1, 4, 1])).unwrap();
        assert_eq!(z.solution, r.zero());
    }

    #[test]
    fn left_ideal_of_nilpotent_is_first_column_zero() {
        let r = ring();
        let Subspace::Basis(b) = r.ideal_subspace(&r.from_ints(&[0, 1, 0, 0]), Side::Left) else {
            unreachable!()
        };
        assert_eq!(b.basis(), &[r.unit(0, 1), r.unit(1, 1)]);
    }

    #[test]
    fn rank_nullity_on_left_multiplication() {
        let r = MatrixRing::new(3, PrimeField::new(3).unwrap(), Involution::Transpose);
        for idx in [0u64, 1, 5, 97, 1000, 19682] {
            let a = r.element_at(idx).unwrap();
            let img = r.ideal_subspace(&a, Side::Left).size_measure();
            let ker = r.annihilator(&a, Side::Left).size_measure();
            assert_eq!(img + ker, 9);
            let img = r.ideal_subspace(&a, Side::Right).size_measure();
            let ker = r.annihilator(&a, Side::Right).size_measure();
            assert_eq!(img + ker, 9);
        }
    }

    #[test]
    fn extreme_subspaces() {
        let r = ring();
        assert_eq!(r.annihilator(&r.one(), Side::Left).size_measure(), 0);
        assert_eq!(r.annihilator(&r.zero(), Side::Right).size_measure(), 4);
        assert_eq!(r.ideal_subspace(&r.one(), Side::Left).size_measure(), 4);
    }
}
