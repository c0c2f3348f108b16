use serde::Serialize;

use super::condition::{sufficient_condition_from, value_scale, SufficientCondition};
use crate::eigen::{full_eigen_with, DenseEigenOptions, TridiagonalMatrix};
use crate::error::{Error, Result};
use crate::lanczos::{lanczos, LanczosOptions, Reorthogonalization};
use crate::operator::SymmetricOperator;
use crate::quadrature::{golub_welsch, QuadratureRule};

/// Default absolute tolerance for all symmetry verdicts.
pub const DEFAULT_SYMMETRY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NodePair {
    pub low: f64,
    pub high: f64,
    /// `|low + high - 2 * center|`.
    pub deviation: f64,
}

/// Observed symmetry of a Gauss rule and its Jacobi matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RitzSymmetry {
    /// `(theta_1 + theta_m) / 2`.
    pub center: f64,
    /// Node `k` paired with node `m + 1 - k`; for odd `m` the middle node is
    /// paired with itself and so measured against the center directly.
    pub node_pairs: Vec<NodePair>,
    pub max_node_deviation: f64,
    pub weight_pair_deviation: f64,
    /// `max_k |alpha_k - center|`.
    pub constant_diagonal_deviation: f64,
    pub ritz_symmetric: bool,
    pub weights_paired: bool,
}

/// Pairs nodes from both ends and reports how far the rule is from being
/// symmetric. Node sums are compared at `tol` times the largest node magnitude
/// (at least one); weights at `tol`.
pub fn ritz_symmetry_check(rule: &QuadratureRule, t: &TridiagonalMatrix, tol: f64) -> RitzSymmetry {
    let m = rule.len();
    let nodes = &rule.nodes;
    let center = 0.5 * (nodes[0] + nodes[m - 1]);
    let node_pairs: Vec<NodePair> = (0..m.div_ceil(2))
        .map(|k| {
            let (low, high) = (nodes[k], nodes[m - 1 - k]);
            NodePair {
                low,
                high,
                deviation: (low + high - 2.0 * center).abs(),
            }
        })
        .collect();
    let max_node_deviation = node_pairs.iter().map(|p| p.deviation).fold(0.0, f64::max);
    let weight_pair_deviation = (0..m / 2)
        .map(|k| (rule.weights[k] - rule.weights[m - 1 - k]).abs())
        .fold(0.0, f64::max);
    let constant_diagonal_deviation = t.alphas().iter().map(|a| (a - center).abs()).fold(0.0, f64::max);
    RitzSymmetry {
        center,
        node_pairs,
        max_node_deviation,
        weight_pair_deviation,
        constant_diagonal_deviation,
        ritz_symmetric: max_node_deviation <= tol * value_scale(nodes),
        weights_paired: weight_pair_deviation <= tol,
    }
}

/// Hypotheses and conclusion side by side for one Lanczos run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetryReport {
    /// Absent when the dense eigendecomposition was skipped.
    pub condition: Option<SufficientCondition>,
    pub ritz: RitzSymmetry,
    /// `max_k |alpha_k - lambda_bar|` against the spectrum center, when known.
    pub diagonal_deviation_from_spectrum_center: Option<f64>,
    pub tolerance: f64,
}

/// Yes/no answers in the order: symmetric spectrum, palindromic `mu`,
/// symmetric Ritz values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SymmetryVerdict {
    pub symmetric_spectrum: Option<bool>,
    pub palindrome: Option<bool>,
    pub ritz_symmetric: bool,
}

impl SymmetryReport {
    pub fn verdict(&self) -> SymmetryVerdict {
        SymmetryVerdict {
            symmetric_spectrum: self.condition.as_ref().map(|c| c.symmetric_spectrum),
            palindrome: self.condition.as_ref().map(|c| c.palindrome.is_palindrome),
            ritz_symmetric: self.ritz.ritz_symmetric,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SymmetryAnalysis {
    pub report: SymmetryReport,
    pub rule: QuadratureRule,
    pub tridiagonal: TridiagonalMatrix,
    pub steps_completed: usize,
    pub breakdown: Option<usize>,
    pub eigenvalues: Option<Vec<f64>>,
    pub measure: Option<super::SpectralMeasure>,
}

/// Runs Lanczos from `v`, builds the Gauss rule and checks both the
/// hypotheses (when `with_condition`, which needs a dense eigendecomposition)
/// and the symmetry of the resulting nodes and weights.
pub fn analyze_symmetry(
    a: &SymmetricOperator,
    v: &[f64],
    steps: usize,
    reorth: Box<dyn Reorthogonalization>,
    tol: f64,
    with_condition: bool,
    dense: &DenseEigenOptions,
) -> Result<SymmetryAnalysis> {
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::invalid("tolerance must be nonnegative"));
    }
    let run = lanczos(a, v, &LanczosOptions::new(steps).reorth(reorth))?;
    let rule = golub_welsch(&run.tridiagonal)?;
    let ritz = ritz_symmetry_check(&rule, &run.tridiagonal, tol);

    let (condition, eigenvalues, measure) = if with_condition {
        let eig = full_eigen_with(a, dense)?;
        let cond = sufficient_condition_from(&eig, v, tol)?;
        let measure = super::SpectralMeasure::from_decomposition(&eig, v)?;
        (Some(cond), Some(eig.eigenvalues), Some(measure))
    } else {
        (None, None, None)
    };
    let diagonal_deviation_from_spectrum_center = condition.as_ref().and_then(|c| c.spectrum_center).map(|center| {
        run.tridiagonal
            .alphas()
            .iter()
            .map(|a| (a - center).abs())
            .fold(0.0, f64::max)
    });
    Ok(SymmetryAnalysis {
        report: SymmetryReport {
            condition,
            ritz,
            diagonal_deviation_from_spectrum_center,
            tolerance: tol,
        },
        rule,
        tridiagonal: run.tridiagonal,
        steps_completed: run.steps_completed,
        breakdown: run.breakdown,
        eigenvalues,
        measure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node_is_symmetric() {
        let t = TridiagonalMatrix::new(vec![0.3], vec![]).unwrap();
        let rule = golub_welsch(&t).unwrap();
        let r = ritz_symmetry_check(&rule, &t, 1e-12);
        assert!(r.ritz_symmetric && r.weights_paired);
        assert_eq!(r.center, 0.3);
        assert_eq!(r.node_pairs.len(), 1);
        assert_eq!(r.constant_diagonal_deviation, 0.0);
    }

    #[test]
    fn constant_diagonal_gives_symmetric_rule() {
        let t = TridiagonalMatrix::new(vec![1.0; 5], vec![0.4, 1.3, 0.2, 0.9]).unwrap();
        let rule = golub_welsch(&t).unwrap();
        let r = ritz_symmetry_check(&rule, &t, 1e-12);
        assert!(r.ritz_symmetric, "{r:?}");
        assert!(r.weights_paired, "{r:?}");
        assert!((r.center - 1.0).abs() < 1e-14);
        assert_eq!(r.node_pairs.len(), 3);
    }

    #[test]
    fn skewed_diagonal_breaks_symmetry() {
        let t = TridiagonalMatrix::new(vec![0.0, 0.5, 3.0], vec![1.0, 1.0]).unwrap();
        let rule = golub_welsch(&t).unwrap();
        let r = ritz_symmetry_check(&rule, &t, 1e-8);
        assert!(!r.ritz_symmetric);
    }
}
