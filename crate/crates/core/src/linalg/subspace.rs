use alloc::vec::Vec;

/// Scalar-linear subspace of a matrix ring, kept in reduced row-echelon form
/// of the row-major flattening so equal subspaces have equal bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis<E> {
    pub(crate) basis: Vec<E>,
    pub(crate) ambient: usize,
}

impl<E> SubspaceBasis<E> {
    pub fn basis(&self) -> &[E] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the whole ring over its scalars (`k^2`).
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
}

/// A one-sided ideal or annihilator: a basis for matrix rings, the explicit
/// element list for `Z/nZ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subspace<E> {
    Basis(SubspaceBasis<E>),
    Elements(Vec<E>),
}

impl<E> Subspace<E> {
    /// Rank of a basis, or the number of listed elements.
    pub fn size_measure(&self) -> usize {
        match self {
            Subspace::Basis(b) => b.rank(),
            Subspace::Elements(v) => v.len(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub sum_is_all: bool,
    pub intersection_is_zero: bool,
}

impl Decomposition {
    pub fn direct_sum(&self) -> bool {
        self.sum_is_all && self.intersection_is_zero
    }
}
