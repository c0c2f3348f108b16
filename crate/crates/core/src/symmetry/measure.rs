use serde::Serialize;

use crate::eigen::{full_eigen_with, DenseEigenOptions, EigenDecomposition};
use crate::error::Result;
use crate::matrix::normalized;
use crate::operator::SymmetricOperator;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Jump {
    pub location: f64,
    pub mass: f64,
}

/// One constant piece `[start, end)` of the measure; `end` is `None` for the
/// final, unbounded piece.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Step {
    pub start: f64,
    pub end: Option<f64>,
    pub value: f64,
}

/// Step function with jumps `mu_j^2` at the eigenvalues `lambda_j`, where
/// `mu = Q^T v`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralMeasure {
    pub jumps: Vec<Jump>,
    /// Set when the input vector was not unit length and was rescaled.
    pub normalized_input: bool,
}

impl SpectralMeasure {
    pub fn from_decomposition(eig: &EigenDecomposition, v: &[f64]) -> Result<Self> {
        let (unit, nrm) = normalized(v)?;
        let mu = eig.project(&unit)?;
        let jumps = eig
            .eigenvalues
            .iter()
            .zip(&mu)
            .map(|(&location, &m)| Jump { location, mass: m * m })
            .collect();
        Ok(Self {
            jumps,
            normalized_input: (nrm - 1.0).abs() > 1e-12,
        })
    }

    pub fn total_mass(&self) -> f64 {
        self.jumps.iter().map(|j| j.mass).sum()
    }

    /// Value of the measure at `t`: zero left of the first jump, then the
    /// running sum of masses, constant on closed-open intervals.
    pub fn value_at(&self, t: f64) -> f64 {
        self.jumps.iter().take_while(|j| j.location <= t).map(|j| j.mass).sum()
    }

    /// The nonzero pieces of the step function, one per jump. Repeated
    /// eigenvalues give zero-length pieces.
    pub fn steps(&self) -> Vec<Step> {
        let mut acc = 0.0;
        self.jumps
            .iter()
            .enumerate()
            .map(|(k, j)| {
                acc += j.mass;
                Step {
                    start: j.location,
                    end: self.jumps.get(k + 1).map(|n| n.location),
                    value: acc,
                }
            })
            .collect()
    }
}

pub fn spectral_measure(a: &SymmetricOperator, v: &[f64], dense: &DenseEigenOptions) -> Result<SpectralMeasure> {
    let eig = full_eigen_with(a, dense)?;
    SpectralMeasure::from_decomposition(&eig, v)
}
