//! Lanczos quadrature for quadratic forms `u^T f(A) u`, with tools to detect
//! when the resulting Gauss nodes (Ritz values) are symmetric and to compare
//! the iteration counts required with and without that symmetry.
//!
//! Interchangeable pieces are trait objects registered by name:
//! [`function::functions`] (the `f` catalog), [`lanczos::reorthogonalizations`]
//! and [`eigen::dense_solvers`].

pub mod bounds;
pub mod eigen;
pub mod error;
pub mod function;
pub mod io;
pub mod lanczos;
pub mod matrix;
pub mod operator;
pub mod quadrature;
pub mod registry;
pub mod symmetry;

pub use eigen::{
    full_eigen, full_eigen_with, tridiag_eigen, DenseEigenOptions, EigenDecomposition, TridiagonalMatrix, VectorMode,
};
pub use error::{Error, ErrorClass, Result};
pub use function::{parse_function, MatrixFunction};
pub use lanczos::{lanczos, lanczos_mu_sequence, LanczosOptions, LanczosResult, Reorthogonalization};
pub use matrix::DenseMatrix;
pub use operator::SymmetricOperator;
pub use quadrature::{estimate_quadratic_form, golub_welsch, quadratic_form_oracle, QuadratureRule};
