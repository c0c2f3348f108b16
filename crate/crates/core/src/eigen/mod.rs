//! Symmetric eigensolvers: tridiagonal implicit QL, dense cyclic Jacobi,
//! dense Householder + QL, and a one-sided Jacobi SVD.

mod householder;
mod jacobi;
mod svd;
mod tridiagonal;

pub use householder::householder_ql_eigen;
pub use jacobi::jacobi_eigen;
pub(crate) use svd::orthonormal_complement;
pub use svd::{svd, Svd};
pub use tridiagonal::{tridiag_eigen, TridiagonalMatrix, VectorMode};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::operator::SymmetricOperator;
use crate::registry::{no_params, Registry};

/// Environment variable overriding [`DEFAULT_DENSE_CAP`].
pub const DENSE_CAP_ENV: &str = "RITZSYM_DENSE_CAP";
pub const DEFAULT_DENSE_CAP: usize = 2000;

#[derive(Debug, Clone, PartialEq)]
pub enum Eigenvectors {
    FirstRow(Vec<f64>),
    /// Column `j` is the eigenvector of eigenvalue `j`.
    Full(DenseMatrix),
}

/// Eigenvalues in ascending order with the matching eigenvector data.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Eigenvectors,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// First component of each normalized eigenvector.
    pub fn first_components(&self) -> Vec<f64> {
        match &self.eigenvectors {
            Eigenvectors::FirstRow(r) => r.clone(),
            Eigenvectors::Full(q) => q.row(0).to_vec(),
        }
    }

    pub fn vectors(&self) -> Option<&DenseMatrix> {
        match &self.eigenvectors {
            Eigenvectors::Full(q) => Some(q),
            Eigenvectors::FirstRow(_) => None,
        }
    }

    /// `Q^T x` for a full decomposition.
    pub fn project(&self, x: &[f64]) -> Result<Vec<f64>> {
        let q = self
            .vectors()
            .ok_or_else(|| Error::invalid("projection needs full eigenvectors"))?;
        q.matvec_transpose(x)
    }
}

/// Sorts eigenpairs ascending; equal eigenvalues keep their original order.
pub(crate) fn sorted_decomposition(values: Vec<f64>, vectors: Eigenvectors) -> EigenDecomposition {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
    let eigenvalues = order.iter().map(|&i| values[i]).collect();
    let eigenvectors = match vectors {
        Eigenvectors::FirstRow(r) => Eigenvectors::FirstRow(order.iter().map(|&i| r[i]).collect()),
        Eigenvectors::Full(q) => Eigenvectors::Full(DenseMatrix::from_fn(q.rows(), q.cols(), |i, j| q[(i, order[j])])),
    };
    EigenDecomposition {
        eigenvalues,
        eigenvectors,
    }
}

/// A dense symmetric eigensolver producing a full orthonormal decomposition.
pub trait DenseEigenSolver: Send + Sync {
    fn name(&self) -> &'static str;
    fn decompose(&self, a: &DenseMatrix) -> Result<EigenDecomposition>;
}

struct CyclicJacobi;

impl DenseEigenSolver for CyclicJacobi {
    fn name(&self) -> &'static str {
        "jacobi"
    }

    fn decompose(&self, a: &DenseMatrix) -> Result<EigenDecomposition> {
        jacobi_eigen(a)
    }
}

struct HouseholderQl;

impl DenseEigenSolver for HouseholderQl {
    fn name(&self) -> &'static str {
        "householder-ql"
    }

    fn decompose(&self, a: &DenseMatrix) -> Result<EigenDecomposition> {
        householder_ql_eigen(a)
    }
}

pub fn dense_solvers() -> Registry<dyn DenseEigenSolver> {
    let mut reg: Registry<dyn DenseEigenSolver> = Registry::new("dense eigensolver");
    reg.register("jacobi", |p| {
        no_params("jacobi", p)?;
        Ok(Box::new(CyclicJacobi))
    });
    reg.register("householder-ql", |p| {
        no_params("householder-ql", p)?;
        Ok(Box::new(HouseholderQl))
    });
    reg
}

/// Cap and solver choice for dense eigendecompositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseEigenOptions {
    pub cap: usize,
    pub solver: String,
}

impl Default for DenseEigenOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_DENSE_CAP,
            solver: "jacobi".to_string(),
        }
    }
}

impl DenseEigenOptions {
    /// Defaults, with the cap taken from `RITZSYM_DENSE_CAP` when it is set to
    /// a positive integer.
    pub fn from_env() -> Self {
        let cap = std::env::var(DENSE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&c| c > 0)
            .unwrap_or(DEFAULT_DENSE_CAP);
        Self { cap, ..Self::default() }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_solver(mut self, solver: impl Into<String>) -> Self {
        self.solver = solver.into();
        self
    }
}

/// Full eigendecomposition `A = Q diag(lambda) Q^T` with default options.
pub fn full_eigen(a: &SymmetricOperator) -> Result<EigenDecomposition> {
    full_eigen_with(a, &DenseEigenOptions::from_env())
}

pub fn full_eigen_with(a: &SymmetricOperator, opts: &DenseEigenOptions) -> Result<EigenDecomposition> {
    let n = a.dim();
    if n > opts.cap {
        return Err(Error::DenseCapExceeded { n, cap: opts.cap });
    }
    let solver = dense_solvers().build(&opts.solver)?;
    solver.decompose(&a.to_dense())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_is_enforced() {
        let a = SymmetricOperator::dense(DenseMatrix::identity(5)).unwrap();
        let opts = DenseEigenOptions::default().with_cap(4);
        assert!(matches!(
            full_eigen_with(&a, &opts),
            Err(Error::DenseCapExceeded { n: 5, cap: 4 })
        ));
    }

    #[test]
    fn ties_keep_input_order() {
        let d = sorted_decomposition(
            vec![2.0, 1.0, 2.0, 1.0],
            Eigenvectors::FirstRow(vec![0.1, 0.2, 0.3, 0.4]),
        );
        assert_eq!(d.eigenvalues, vec![1.0, 1.0, 2.0, 2.0]);
        assert_eq!(d.first_components(), vec![0.2, 0.4, 0.1, 0.3]);
    }

    #[test]
    fn unknown_solver() {
        let a = SymmetricOperator::dense(DenseMatrix::identity(2)).unwrap();
        let opts = DenseEigenOptions::default().with_solver("lapack");
        assert!(matches!(full_eigen_with(&a, &opts), Err(Error::UnknownStrategy { .. })));
    }
}
