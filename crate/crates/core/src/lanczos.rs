//! The m-step symmetric Lanczos iteration.
//!
//! Starting from `v_1 = u / ||u||`, each step computes `alpha_k = v_k^T A v_k`,
//! forms `u_{k+1} = A v_k - alpha_k v_k - beta_{k-1} v_{k-1}`, and normalizes it
//! with `beta_k = ||u_{k+1}||`. A reorthogonalization strategy may clean
//! `u_{k+1}` against the basis before normalization.

use crate::eigen::{full_eigen_with, DenseEigenOptions, TridiagonalMatrix};
use crate::error::{Error, Result};
use crate::matrix::{axpy, dot, norm2, normalized};
use crate::operator::SymmetricOperator;
use crate::registry::{no_params, Registry};

/// How the new Lanczos direction is cleaned against previous basis vectors.
pub trait Reorthogonalization: Send + Sync {
    fn name(&self) -> &'static str;

    /// Whether every basis vector must be retained during the run.
    fn needs_basis(&self) -> bool;

    fn apply(&self, w: &mut [f64], basis: &[Vec<f64>]);
}

/// Classical three-term recurrence only.
pub struct NoReorthogonalization;

impl Reorthogonalization for NoReorthogonalization {
    fn name(&self) -> &'static str {
        "none"
    }

    fn needs_basis(&self) -> bool {
        false
    }

    fn apply(&self, _w: &mut [f64], _basis: &[Vec<f64>]) {}
}

/// Two passes of classical Gram-Schmidt against all previous basis vectors.
pub struct FullReorthogonalization;

impl Reorthogonalization for FullReorthogonalization {
    fn name(&self) -> &'static str {
        "full"
    }

    fn needs_basis(&self) -> bool {
        true
    }

    fn apply(&self, w: &mut [f64], basis: &[Vec<f64>]) {
        for _ in 0..2 {
            let coeffs: Vec<f64> = basis.iter().map(|q| dot(q, w)).collect();
            for (q, h) in basis.iter().zip(coeffs) {
                axpy(-h, q, w);
            }
        }
    }
}

pub fn reorthogonalizations() -> Registry<dyn Reorthogonalization> {
    let mut reg: Registry<dyn Reorthogonalization> = Registry::new("reorthogonalization");
    reg.register("full", |p| {
        no_params("full", p)?;
        Ok(Box::new(FullReorthogonalization))
    });
    reg.register("none", |p| {
        no_params("none", p)?;
        Ok(Box::new(NoReorthogonalization))
    });
    reg
}

/// Relative factor applied to `||A||_F` for happy-breakdown detection.
pub const BREAKDOWN_RELATIVE_TOL: f64 = 1e-12;

pub struct LanczosOptions {
    pub steps: usize,
    pub reorth: Box<dyn Reorthogonalization>,
    pub keep_basis: bool,
    /// Absolute threshold on `beta_k`; `None` means `1e-12 * ||A||_F`.
    pub breakdown_tol: Option<f64>,
}

impl LanczosOptions {
    /// Full reorthogonalization, basis not returned.
    pub fn new(steps: usize) -> Self {
        Self {
            steps,
            reorth: Box::new(FullReorthogonalization),
            keep_basis: false,
            breakdown_tol: None,
        }
    }

    pub fn reorth(mut self, reorth: Box<dyn Reorthogonalization>) -> Self {
        self.reorth = reorth;
        self
    }

    pub fn keep_basis(mut self, keep: bool) -> Self {
        self.keep_basis = keep;
        self
    }
}

#[derive(Debug, Clone)]
pub struct LanczosResult {
    pub tridiagonal: TridiagonalMatrix,
    /// Orthonormal Lanczos vectors `v_1..v_k`, when requested.
    pub basis: Option<Vec<Vec<f64>>>,
    pub steps_completed: usize,
    /// Step after which `beta_k` fell below the breakdown tolerance; the
    /// Krylov subspace is invariant and `tridiagonal` has that many rows.
    pub breakdown: Option<usize>,
    pub start_norm: f64,
}

pub fn lanczos(a: &SymmetricOperator, u: &[f64], opts: &LanczosOptions) -> Result<LanczosResult> {
    let n = a.dim();
    if u.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: u.len(),
        });
    }
    let m = opts.steps;
    if m == 0 {
        return Err(Error::invalid("number of Lanczos steps must be positive"));
    }
    if m > n {
        return Err(Error::invalid(format!(
            "number of Lanczos steps {m} exceeds the dimension {n}"
        )));
    }
    let (v1, start_norm) = normalized(u)?;
    let tol = opts
        .breakdown_tol
        .unwrap_or(BREAKDOWN_RELATIVE_TOL * a.frobenius_norm());
    let store = opts.keep_basis || opts.reorth.needs_basis();

    let mut alphas = Vec::with_capacity(m);
    let mut betas: Vec<f64> = Vec::with_capacity(m.saturating_sub(1));
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut prev: Option<Vec<f64>> = None;
    let mut v = v1;
    let mut breakdown = None;

    for k in 0..m {
        let mut w = a.apply(&v);
        let alpha = dot(&v, &w);
        if !alpha.is_finite() {
            return Err(Error::NonFinite("Lanczos recurrence"));
        }
        alphas.push(alpha);
        axpy(-alpha, &v, &mut w);
        if let (Some(p), Some(&beta_prev)) = (&prev, betas.last()) {
            axpy(-beta_prev, p, &mut w);
        }
        if store {
            basis.push(v.clone());
        }
        if k + 1 == m {
            break;
        }
        opts.reorth.apply(&mut w, &basis);
        let beta = norm2(&w);
        if !beta.is_finite() {
            return Err(Error::NonFinite("Lanczos recurrence"));
        }
        if beta <= tol {
            breakdown = Some(k + 1);
            break;
        }
        betas.push(beta);
        for x in w.iter_mut() {
            *x /= beta;
        }
        prev = Some(std::mem::replace(&mut v, w));
    }

    let steps_completed = alphas.len();
    Ok(LanczosResult {
        tridiagonal: TridiagonalMatrix::new(alphas, betas)?,
        basis: opts.keep_basis.then_some(basis),
        steps_completed,
        breakdown,
        start_norm,
    })
}

/// Lanczos vectors expressed in the eigenbasis of `A`: `mu_k = Q^T v_k`.
pub fn lanczos_mu_sequence(
    a: &SymmetricOperator,
    u: &[f64],
    steps: usize,
    reorth: Box<dyn Reorthogonalization>,
    dense: &DenseEigenOptions,
) -> Result<Vec<Vec<f64>>> {
    if a.dim() > dense.cap {
        return Err(Error::DenseCapExceeded {
            n: a.dim(),
            cap: dense.cap,
        });
    }
    let run = lanczos(a, u, &LanczosOptions::new(steps).reorth(reorth).keep_basis(true))?;
    let eig = full_eigen_with(a, dense)?;
    run.basis.unwrap_or_default().iter().map(|v| eig.project(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::DenseMatrix;

    fn small() -> SymmetricOperator {
        SymmetricOperator::dense(
            DenseMatrix::from_rows(&[
                vec![2.0, -1.0, 0.0, 0.5],
                vec![-1.0, 2.0, -1.0, 0.0],
                vec![0.0, -1.0, 2.0, -1.0],
                vec![0.5, 0.0, -1.0, 2.0],
            ])
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn single_step_is_rayleigh_quotient() {
        let a = small();
        let u = [1.0, 2.0, 0.0, -1.0];
        let run = lanczos(&a, &u, &LanczosOptions::new(1)).unwrap();
        let au = a.matvec(&u).unwrap();
        let rq = dot(&u, &au) / dot(&u, &u);
        assert!((run.tridiagonal.alphas()[0] - rq).abs() < 1e-15);
        assert!(run.tridiagonal.betas().is_empty());
    }

    #[test]
    fn errors() {
        let a = small();
        assert!(matches!(
            lanczos(&a, &[0.0; 4], &LanczosOptions::new(2)),
            Err(Error::ZeroVector)
        ));
        assert!(lanczos(&a, &[1.0; 4], &LanczosOptions::new(5)).is_err());
        assert!(lanczos(&a, &[1.0; 3], &LanczosOptions::new(2)).is_err());
        assert!(matches!(
            lanczos(&a, &[1.0, f64::NAN, 0.0, 0.0], &LanczosOptions::new(2)),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn eigenvector_start_breaks_down_immediately() {
        let a = SymmetricOperator::dense(DenseMatrix::identity(3)).unwrap();
        let run = lanczos(&a, &[1.0, 1.0, 0.0], &LanczosOptions::new(3)).unwrap();
        assert_eq!(run.breakdown, Some(1));
        assert_eq!(run.steps_completed, 1);
        assert_eq!(run.tridiagonal.alphas().len(), 1);
        assert!((run.tridiagonal.alphas()[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn basis_is_orthonormal_with_full_reorth() {
        let a = small();
        let run = lanczos(&a, &[1.0, 0.3, -0.2, 0.7], &LanczosOptions::new(4).keep_basis(true)).unwrap();
        let v = run.basis.unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&v[i], &v[j]) - expect).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn registry_knows_both_modes() {
        let reg = reorthogonalizations();
        assert_eq!(reg.build("full").unwrap().name(), "full");
        assert_eq!(reg.build("none").unwrap().name(), "none");
        assert!(reg.build("selective").is_err());
    }

    #[test]
    fn mu_sequence_single_step_is_projection() {
        let a = small();
        let u = [3.0, 0.0, 4.0, 0.0];
        let mus = lanczos_mu_sequence(
            &a,
            &u,
            1,
            Box::new(FullReorthogonalization),
            &DenseEigenOptions::default(),
        )
        .unwrap();
        let eig = crate::eigen::full_eigen_with(&a, &DenseEigenOptions::default()).unwrap();
        let expect = eig.project(&[0.6, 0.0, 0.8, 0.0]).unwrap();
        assert_eq!(mus.len(), 1);
        for (x, y) in mus[0].iter().zip(expect) {
            assert!((x - y).abs() < 1e-15);
        }
    }
}
