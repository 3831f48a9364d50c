//! Matrices over S: Smith normal form, exact solvers and the
//! finite-dimensional k-linear algebra behind stable Hom computations.

mod klinear;
mod matrix;
mod snf;
mod solve;
mod trunc;

pub use klinear::{KMatrix, KSpace};
pub use matrix::{LocalMatrix, MatrixOp, MatrixOrScalar};
pub use snf::{snf, SnfResult};
pub use trunc::{solve_truncated, truncated_exponents};
pub(crate) use solve::scaled_inverse;
pub use solve::{
    cokernel_exponents, is_split_injective, is_surjective, kernel_basis, solve_linear,
    solve_mod_omega, solve_with_snf, split_cokernel,
};
