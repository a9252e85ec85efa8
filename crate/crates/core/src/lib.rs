//! Generalized inverses in rings with involution, computed exactly.
//!
//! Rings are matrix rings over `Q`, `Q(i)`, `F_p`, `F_{p^2}` (transpose or
//! conjugate transpose) and residues modulo `n`. Everything here needs only
//! `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod field;
pub mod inverse;
pub mod lab;
pub mod linalg;
pub mod ring;
