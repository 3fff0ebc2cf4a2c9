//! Exact scalars over ℚ and 𝔽ₚ and the dense linear algebra built on them.

mod field;
mod matrix;
mod rational;
mod subspace;

pub use field::{Field, Scalar};
pub use matrix::{Matrix, Rref};
pub use rational::{ParseRationalError, Rational};
pub use subspace::{nullspace_basis, quotient_map, solve_linear, SubspaceBasis};

/// Free function form of [`Matrix::rref`].
pub fn rref(m: &Matrix) -> Rref {
    m.rref()
}
