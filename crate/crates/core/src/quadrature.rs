//! Golub-Welsch rules from Jacobi matrices and the Lanczos estimate of
//! `u^T f(A) u`.

use serde::Serialize;

use crate::eigen::{full_eigen_with, tridiag_eigen, DenseEigenOptions, TridiagonalMatrix, VectorMode};
use crate::error::Result;
use crate::function::MatrixFunction;
use crate::lanczos::{lanczos, LanczosOptions, Reorthogonalization};
use crate::matrix::normalized;
use crate::operator::SymmetricOperator;

/// Gauss rule: nodes ascending, weights nonnegative and summing to one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `sum_k tau_k f(theta_k)`; fails on the first node outside the domain of `f`.
    pub fn integrate(&self, f: &dyn MatrixFunction) -> Result<f64> {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| f.eval(x).map(|fx| w * fx))
            .sum()
    }
}

/// Nodes are the eigenvalues of `T`; weights the squared first components of
/// the normalized eigenvectors.
pub fn golub_welsch(t: &TridiagonalMatrix) -> Result<QuadratureRule> {
    let eig = tridiag_eigen(t, VectorMode::FirstRow)?;
    let weights = eig.first_components().iter().map(|c| c * c).collect();
    Ok(QuadratureRule {
        nodes: eig.eigenvalues,
        weights,
    })
}

#[derive(Debug, Clone)]
pub struct QuadraticFormEstimate {
    pub value: f64,
    pub rule: QuadratureRule,
    pub tridiagonal: TridiagonalMatrix,
    pub steps_completed: usize,
    pub breakdown: Option<usize>,
    pub norm_squared: f64,
}

/// `||u||^2 sum_k tau_k f(theta_k)` from an m-step Lanczos run.
pub fn estimate_quadratic_form(
    a: &SymmetricOperator,
    u: &[f64],
    f: &dyn MatrixFunction,
    steps: usize,
    reorth: Box<dyn Reorthogonalization>,
) -> Result<QuadraticFormEstimate> {
    let run = lanczos(a, u, &LanczosOptions::new(steps).reorth(reorth))?;
    let rule = golub_welsch(&run.tridiagonal)?;
    let norm_squared = run.start_norm * run.start_norm;
    let value = norm_squared * rule.integrate(f)?;
    Ok(QuadraticFormEstimate {
        value,
        rule,
        tridiagonal: run.tridiagonal,
        steps_completed: run.steps_completed,
        breakdown: run.breakdown,
        norm_squared,
    })
}

/// Reference value `||u||^2 sum_j mu_j^2 f(lambda_j)` from a dense
/// eigendecomposition.
pub fn quadratic_form_oracle(
    a: &SymmetricOperator,
    u: &[f64],
    f: &dyn MatrixFunction,
    dense: &DenseEigenOptions,
) -> Result<f64> {
    let (v, nrm) = normalized(u)?;
    let eig = full_eigen_with(a, dense)?;
    let mu = eig.project(&v)?;
    let sum = eig
        .eigenvalues
        .iter()
        .zip(&mu)
        .map(|(&l, &m)| f.eval(l).map(|fl| m * m * fl))
        .sum::<Result<f64>>()?;
    Ok(nrm * nrm * sum)
}
