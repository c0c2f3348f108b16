use serde::Serialize;

use super::{sorted_decomposition, EigenDecomposition, Eigenvectors};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// Symmetric tridiagonal (Jacobi) matrix: diagonal `alphas`, off-diagonal `betas`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TridiagonalMatrix {
    alphas: Vec<f64>,
    betas: Vec<f64>,
}

impl TridiagonalMatrix {
    pub fn new(alphas: Vec<f64>, betas: Vec<f64>) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::invalid("tridiagonal matrix needs at least one diagonal entry"));
        }
        if betas.len() + 1 != alphas.len() {
            return Err(Error::DimensionMismatch {
                expected: alphas.len() - 1,
                got: betas.len(),
            });
        }
        if alphas.iter().chain(&betas).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("tridiagonal matrix"));
        }
        Ok(Self { alphas, betas })
    }

    pub fn dim(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn betas(&self) -> &[f64] {
        &self.betas
    }

    /// Leading `m x m` principal submatrix.
    pub fn leading(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.dim() {
            return Err(Error::invalid(format!(
                "leading block of size {m} requested from a {}x{} matrix",
                self.dim(),
                self.dim()
            )));
        }
        Ok(Self {
            alphas: self.alphas[..m].to_vec(),
            betas: self.betas[..m - 1].to_vec(),
        })
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let m = self.dim();
        let mut t = DenseMatrix::zeros(m, m);
        for (i, &a) in self.alphas.iter().enumerate() {
            t[(i, i)] = a;
        }
        for (i, &b) in self.betas.iter().enumerate() {
            t[(i, i + 1)] = b;
            t[(i + 1, i)] = b;
        }
        t
    }
}

/// Which eigenvector information the tridiagonal solver accumulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorMode {
    /// Only the first component of each normalized eigenvector, O(m^2) work.
    FirstRow,
    Full,
}

const MAX_QL_ITERATIONS: usize = 60;

/// Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL with a
/// Wilkinson shift, ascending (ties keep their original order).
pub fn tridiag_eigen(t: &TridiagonalMatrix, mode: VectorMode) -> Result<EigenDecomposition> {
    let m = t.dim();
    let mut d = t.alphas.clone();
    let mut e = t.betas.clone();
    e.push(0.0);
    let mut z = match mode {
        VectorMode::Full => DenseMatrix::identity(m),
        VectorMode::FirstRow => {
            let mut z = DenseMatrix::zeros(1, m);
            z[(0, 0)] = 1.0;
            z
        }
    };
    implicit_ql(&mut d, &mut e, &mut z)?;
    let vectors = match mode {
        VectorMode::Full => Eigenvectors::Full(z),
        VectorMode::FirstRow => Eigenvectors::FirstRow(z.row(0).to_vec()),
    };
    Ok(sorted_decomposition(d, vectors))
}

/// Diagonalizes the tridiagonal matrix `(d, e)` in place, where `e[i]` couples
/// `i` and `i + 1` and `e[m - 1]` is scratch. Every plane rotation is applied to
/// the columns of `z`, so `z` may hold any number of rows (one row for
/// first-component-only accumulation, or an initial orthogonal basis).
pub(crate) fn implicit_ql(d: &mut [f64], e: &mut [f64], z: &mut DenseMatrix) -> Result<()> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    let rows = z.rows();
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(Error::NonConvergence {
                    solver: "tridiagonal QL",
                    index: l,
                    iterations: MAX_QL_ITERATIONS,
                });
            }
            // Wilkinson shift from the leading 2x2 block.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..rows {
                    let zk1 = z[(k, i + 1)];
                    let zk = z[(k, i)];
                    z[(k, i + 1)] = s * zk + c * zk1;
                    z[(k, i)] = c * zk - s * zk1;
                }
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
