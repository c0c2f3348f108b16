use serde::Serialize;

use crate::eigen::{full_eigen_with, DenseEigenOptions, EigenDecomposition};
use crate::error::{Error, Result};
use crate::matrix::{normalized, DenseMatrix};
use crate::operator::SymmetricOperator;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PalindromeCheck {
    pub is_palindrome: bool,
    /// `max_i | |w_i| - |w_{n+1-i}| |`.
    pub max_deviation: f64,
}

/// `| |w_i| - |w_{n+1-i}| | <= tol` for every `i <= n/2`.
pub fn is_absolute_palindrome(w: &[f64], tol: f64) -> PalindromeCheck {
    let n = w.len();
    let max_deviation = (0..n / 2)
        .map(|i| (w[i].abs() - w[n - 1 - i].abs()).abs())
        .fold(0.0, f64::max);
    PalindromeCheck {
        is_palindrome: max_deviation <= tol,
        max_deviation,
    }
}

/// Center `(lambda_1 + lambda_n) / 2` when every mirrored pair of the ascending
/// spectrum sums to `lambda_1 + lambda_n` within `tol`.
pub fn spectrum_symmetry_center(eigs: &[f64], tol: f64) -> Option<f64> {
    let n = eigs.len();
    if n == 0 {
        return None;
    }
    let total = eigs[0] + eigs[n - 1];
    (0..n.div_ceil(2))
        .all(|i| (eigs[i] + eigs[n - 1 - i] - total).abs() <= tol)
        .then_some(0.5 * total)
}

/// Largest eigenvalue magnitude, floored at one; absolute tolerances on
/// eigenvalue-like quantities are multiplied by this.
pub(crate) fn value_scale(values: &[f64]) -> f64 {
    values.iter().fold(1.0, |acc, v| acc.max(v.abs()))
}

/// The two hypotheses of the sufficient condition for symmetric Ritz values:
/// a spectrum symmetric about some center, and `mu = Q^T v` an absolute
/// palindrome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SufficientCondition {
    pub spectrum_center: Option<f64>,
    pub symmetric_spectrum: bool,
    pub palindrome: PalindromeCheck,
    pub holds: bool,
}

pub fn sufficient_condition_from(eig: &EigenDecomposition, v: &[f64], tol: f64) -> Result<SufficientCondition> {
    let (v, _) = normalized(v)?;
    let center = spectrum_symmetry_center(&eig.eigenvalues, tol * value_scale(&eig.eigenvalues));
    let mu = eig.project(&v)?;
    let palindrome = is_absolute_palindrome(&mu, tol);
    Ok(SufficientCondition {
        spectrum_center: center,
        symmetric_spectrum: center.is_some(),
        palindrome,
        holds: center.is_some() && palindrome.is_palindrome,
    })
}

pub fn check_sufficient_condition(
    a: &SymmetricOperator,
    v: &[f64],
    tol: f64,
    dense: &DenseEigenOptions,
) -> Result<SufficientCondition> {
    let eig = full_eigen_with(a, dense)?;
    sufficient_condition_from(&eig, v, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, x: f64) -> f64 {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

/// Starting vector `v = sum_i xi_i q_i` whose coefficient vector is a signed
/// mirror: `xi_{n+1-i} = sign_i * xi_i` for `i <= n/2`, and for odd `n` the
/// middle coefficient is `sign_mid * xi_mid`. `Q^T v` is then an absolute
/// palindrome for the columns `q_i` of `q`. The result is normalized.
///
/// `coeffs` and `signs` both hold `ceil(n / 2)` entries.
pub fn palindrome_vector_sample(q: &DenseMatrix, coeffs: &[f64], signs: &[Sign]) -> Result<Vec<f64>> {
    let n = q.cols();
    let half = n.div_ceil(2);
    if q.rows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: q.rows(),
        });
    }
    for len in [coeffs.len(), signs.len()] {
        if len != half {
            return Err(Error::DimensionMismatch {
                expected: half,
                got: len,
            });
        }
    }
    let mut xi = vec![0.0; n];
    for i in 0..n / 2 {
        xi[i] = coeffs[i];
        xi[n - 1 - i] = signs[i].apply(coeffs[i]);
    }
    if n % 2 == 1 {
        xi[half - 1] = signs[half - 1].apply(coeffs[half - 1]);
    }
    let v = q.matvec(&xi)?;
    Ok(normalized(&v)?.0)
}
