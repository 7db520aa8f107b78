//! Exact rationals and the linear-algebra kernel: rank, kernels, eigenspaces.

mod echelon;
mod matrix;
pub mod rational;

pub use echelon::{eigenspace, eigenspace_basis, kernel, kernel_basis, rank, rref, span_dim, Rref, Subspace};
pub use matrix::{normalize, Matrix, SparseVec};
pub use rational::{frac, parse_rational, q, Rational};
