//! The four reference experiments: three 50x50 matrices `H diag(lambda) H^T`
//! with the Householder reflector `H = I - (2/n) 1 1^T`, and the SuiteSparse
//! `nd3k` matrix read from a local Matrix Market file.

use std::path::PathBuf;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::io::matrix_market::read_matrix_market;
use crate::matrix::{normalized, DenseMatrix};
use crate::operator::SymmetricOperator;

pub const CASE_DIMENSION: usize = 50;
pub const ND3K_DIMENSION: usize = 9000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum CaseSpec {
    /// `lambda_i = i/50`, `v = 1/sqrt(50)`.
    Uniform,
    /// `lambda_i = 1/(51 - i)`, `v = 1/sqrt(50)`.
    Reciprocal,
    /// `lambda_i = i/50`, `v` proportional to `(1, 2, ..., 50)`.
    UniformRamp,
    /// `nd3k`, `v = (1, ..., 1, -1, ..., -1)/sqrt(n)` with the sign change at `n/2`.
    Nd3k { path: PathBuf },
}

impl CaseSpec {
    /// Case by number; case 4 needs the path of a local `nd3k.mtx`.
    pub fn from_id(id: u8, nd3k: Option<PathBuf>) -> Result<Self> {
        match id {
            1 => Ok(CaseSpec::Uniform),
            2 => Ok(CaseSpec::Reciprocal),
            3 => Ok(CaseSpec::UniformRamp),
            4 => nd3k.map(|path| CaseSpec::Nd3k { path }).ok_or_else(|| {
                Error::invalid(
                    "case 4 needs a local copy of the SuiteSparse nd3k matrix \
                     (Matrix Market format, https://sparse.tamu.edu/ND/nd3k)",
                )
            }),
            _ => Err(Error::invalid(format!("unknown case {id}, expected 1-4"))),
        }
    }

    pub fn id(&self) -> u8 {
        match self {
            CaseSpec::Uniform => 1,
            CaseSpec::Reciprocal => 2,
            CaseSpec::UniformRamp => 3,
            CaseSpec::Nd3k { .. } => 4,
        }
    }

    /// Prescribed eigenvalues for the synthetic cases, ascending.
    pub fn eigenvalues(&self) -> Option<Vec<f64>> {
        let n = CASE_DIMENSION;
        match self {
            CaseSpec::Uniform | CaseSpec::UniformRamp => Some((1..=n).map(|i| i as f64 / n as f64).collect()),
            CaseSpec::Reciprocal => Some((1..=n).map(|i| 1.0 / (n + 1 - i) as f64).collect()),
            CaseSpec::Nd3k { .. } => None,
        }
    }

    pub fn start_vector(&self, n: usize) -> Result<Vec<f64>> {
        let raw: Vec<f64> = match self {
            CaseSpec::Uniform | CaseSpec::Reciprocal => vec![1.0; n],
            CaseSpec::UniformRamp => (1..=n).map(|i| i as f64).collect(),
            CaseSpec::Nd3k { .. } => (0..n).map(|i| if i < n / 2 { 1.0 } else { -1.0 }).collect(),
        };
        Ok(normalized(&raw)?.0)
    }
}

/// `H = I - (2/n) 1 1^T`.
pub fn householder_reflector(n: usize) -> DenseMatrix {
    let c = 2.0 / n as f64;
    DenseMatrix::from_fn(n, n, |i, j| if i == j { 1.0 - c } else { -c })
}

/// `H diag(lambda) H^T`, computed entrywise as
/// `lambda_i delta_ij - (2/n)(lambda_i + lambda_j) + (4/n^2) sum(lambda)` and
/// stored exactly symmetric.
pub fn householder_similarity(lambda: &[f64]) -> Result<SymmetricOperator> {
    let n = lambda.len();
    let nf = n as f64;
    let total: f64 = lambda.iter().sum();
    SymmetricOperator::dense_from_upper(n, |i, j| {
        let diag = if i == j { lambda[i] } else { 0.0 };
        diag - 2.0 / nf * (lambda[i] + lambda[j]) + 4.0 / (nf * nf) * total
    })
}

#[derive(Debug, Clone)]
pub struct BuiltCase {
    pub spec: CaseSpec,
    pub operator: SymmetricOperator,
    pub start: Vec<f64>,
}

pub fn build_case(spec: &CaseSpec) -> Result<BuiltCase> {
    let operator = match spec {
        CaseSpec::Nd3k { path } => read_matrix_market(path)?,
        _ => householder_similarity(&spec.eigenvalues().unwrap_or_default())?,
    };
    let start = spec.start_vector(operator.dim())?;
    Ok(BuiltCase {
        spec: spec.clone(),
        operator,
        start,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::dot;

    #[test]
    fn reflector_is_involution() {
        let h = householder_reflector(CASE_DIMENSION);
        let hh = h.matmul(&h).unwrap();
        assert!(hh.max_abs_diff(&DenseMatrix::identity(CASE_DIMENSION)) <= 1e-14);
        assert_eq!(h, h.transpose());
    }

    #[test]
    fn reflector_flips_ones() {
        let n = CASE_DIMENSION;
        let v = vec![1.0 / (n as f64).sqrt(); n];
        let hv = householder_reflector(n).matvec(&v).unwrap();
        for (a, b) in hv.iter().zip(&v) {
            assert!((a + b).abs() < 1e-15);
        }
    }

    #[test]
    fn case_vectors() {
        let c1 = build_case(&CaseSpec::Uniform).unwrap();
        assert!((dot(&c1.start, &c1.start) - 1.0).abs() < 1e-15);
        let c3 = build_case(&CaseSpec::UniformRamp).unwrap();
        assert!((c3.start[49] / c3.start[0] - 50.0).abs() < 1e-12);
        let nd = CaseSpec::Nd3k { path: "x".into() }
            .start_vector(ND3K_DIMENSION)
            .unwrap();
        assert_eq!(nd.iter().filter(|&&x| x > 0.0).count(), 4500);
        assert!(nd[4499] > 0.0 && nd[4500] < 0.0);
    }

    #[test]
    fn case_ids() {
        assert_eq!(CaseSpec::from_id(2, None).unwrap(), CaseSpec::Reciprocal);
        assert!(CaseSpec::from_id(4, None).is_err());
        assert!(CaseSpec::from_id(5, None).is_err());
        let missing = CaseSpec::from_id(4, Some("/nonexistent/nd3k.mtx".into())).unwrap();
        assert!(matches!(build_case(&missing), Err(Error::Io { .. })));
    }

    #[test]
    fn reciprocal_spectrum() {
        let l = CaseSpec::Reciprocal.eigenvalues().unwrap();
        assert_eq!(l[0], 1.0 / 50.0);
        assert_eq!(l[49], 1.0);
    }
}
