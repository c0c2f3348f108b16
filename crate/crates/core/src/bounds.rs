//! Iteration-count bounds for Lanczos quadrature from analyticity of `f` on a
//! Bernstein ellipse.
//!
//! With `rho = (sqrt k + 1) / (sqrt k - 1)`, `M_rho = max |f(h(z))|` over the
//! ellipse and tolerance `eps`, the minimum number of Lanczos steps is
//!
//! ```text
//! m_sym  >= [log(4 M_rho) - log(1 - rho^-2) - log eps] / (2 log rho)
//! m_asym >= [log(4 M_rho) - log(1 - rho^-1) - log eps] / (2 log rho)
//! ```
//!
//! and the gap `m* = log(1 + 1/rho) / (2 log rho)` between them is bracketed by
//! `(sqrt k - 1)^2 / (8 sqrt k) <= m* <= (sqrt k - 1) / 4`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::{semi_major, Analyticity, MatrixFunction};

/// Condition numbers within this distance of one are rejected.
pub const KAPPA_GUARD: f64 = 1e-12;

pub const DEFAULT_ELLIPSE_SAMPLES: usize = 4096;

/// `kappa = 10, 50, 100, 500, ..., 5e4, 1e5`.
pub const REFERENCE_KAPPA_GRID: [f64; 9] = [10.0, 50.0, 100.0, 500.0, 1e3, 5e3, 1e4, 5e4, 1e5];

fn check_kappa(kappa: f64) -> Result<()> {
    if kappa.is_finite() && kappa > 1.0 + KAPPA_GUARD {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "condition number must be finite and greater than 1, got {kappa}"
        )))
    }
}

/// `(sqrt k + 1) / (sqrt k - 1)`.
pub fn rho_from_kappa(kappa: f64) -> Result<f64> {
    check_kappa(kappa)?;
    let s = kappa.sqrt();
    Ok((s + 1.0) / (s - 1.0))
}

/// `log rho` for `rho` from `kappa`, without cancellation near `rho = 1`.
fn log_rho_from_kappa(kappa: f64) -> f64 {
    (2.0 / (kappa.sqrt() - 1.0)).ln_1p()
}

/// Bernstein ellipse with foci `+-1` and radius `rho`, carried to
/// `[lambda_min, lambda_max]` by the affine map `h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BernsteinEllipse {
    pub rho: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
}

impl BernsteinEllipse {
    pub fn new(rho: f64, lambda_min: f64, lambda_max: f64) -> Result<Self> {
        if !(rho > 1.0 && rho.is_finite()) {
            return Err(Error::invalid(format!("ellipse radius must exceed 1, got {rho}")));
        }
        if !(lambda_min.is_finite() && lambda_max.is_finite() && lambda_min < lambda_max) {
            return Err(Error::invalid(format!(
                "need finite lambda_min < lambda_max, got [{lambda_min}, {lambda_max}]"
            )));
        }
        Ok(Self {
            rho,
            lambda_min,
            lambda_max,
        })
    }

    /// Radius `rho` from `kappa = lambda_max / lambda_min`; the image of this
    /// ellipse passes through the origin.
    pub fn from_interval(lambda_min: f64, lambda_max: f64) -> Result<Self> {
        if !(lambda_min > 0.0 && lambda_max > lambda_min) {
            return Err(Error::invalid(format!(
                "need 0 < lambda_min < lambda_max, got [{lambda_min}, {lambda_max}]"
            )));
        }
        Self::new(rho_from_kappa(lambda_max / lambda_min)?, lambda_min, lambda_max)
    }

    /// Meaningful only for `lambda_min > 0`.
    pub fn kappa(&self) -> f64 {
        self.lambda_max / self.lambda_min
    }

    pub fn center(&self) -> f64 {
        0.5 * (self.lambda_max + self.lambda_min)
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.lambda_max - self.lambda_min)
    }

    /// `h(z)` for the boundary point `z = (w + 1/w) / 2`, `w = rho e^{i phi}`.
    pub fn boundary_point(&self, phi: f64) -> Complex64 {
        let w = Complex64::from_polar(self.rho, phi);
        let z = 0.5 * (w + w.inv());
        self.center() + self.half_width() * z
    }

    /// Whether the closed ellipse image meets the singular set of `f`.
    fn touches(&self, singularity: Analyticity) -> Option<f64> {
        // points within rounding of the boundary count as on it
        let a = semi_major(self.rho) * (1.0 + 1e-12);
        let pre = |s: f64| (s - self.center()) / self.half_width();
        match singularity {
            Analyticity::Entire => None,
            Analyticity::Pole(s) => (pre(s).abs() <= a).then_some(s),
            Analyticity::BranchCut { at } => (pre(at) >= -a).then_some(at),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EllipseMaximum {
    /// Maximum of `|f(h(z))|` over uniformly spaced boundary samples.
    pub sampled: f64,
    /// Closed-form maximum, for catalog entries that have one.
    pub analytic: Option<f64>,
    pub samples: usize,
}

impl EllipseMaximum {
    pub fn value(&self) -> f64 {
        self.analytic.unwrap_or(self.sampled)
    }
}

/// `M_rho`: the maximum modulus of `f o h` on the ellipse boundary. Fails when
/// a pole or branch cut of `f` lies inside or on the ellipse.
pub fn m_rho(f: &dyn MatrixFunction, ellipse: &BernsteinEllipse, samples: usize) -> Result<EllipseMaximum> {
    if samples == 0 {
        return Err(Error::invalid("need at least one ellipse sample"));
    }
    if let Some(at) = ellipse.touches(f.analyticity()) {
        return Err(Error::FunctionDomain {
            function: f.spec(),
            at: format!(
                "the Bernstein ellipse (rho = {}, interval [{}, {}]), which reaches its singularity at {at}",
                ellipse.rho, ellipse.lambda_min, ellipse.lambda_max
            ),
        });
    }
    let mut sampled = 0.0f64;
    for k in 0..samples {
        let phi = 2.0 * PI * k as f64 / samples as f64;
        let g = f.eval_complex(ellipse.boundary_point(phi)).norm();
        if !g.is_finite() {
            return Err(Error::NonFinite("ellipse sampling"));
        }
        sampled = sampled.max(g);
    }
    Ok(EllipseMaximum {
        sampled,
        analytic: f.ellipse_max_modulus(ellipse.center(), ellipse.half_width(), ellipse.rho),
        samples,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinIterations {
    pub raw: f64,
    /// `ceil(raw)`, at least one.
    pub floor: u64,
}

fn check_floor_inputs(m_rho: f64, rho: f64, epsilon: f64) -> Result<()> {
    if !(m_rho > 0.0 && m_rho.is_finite()) {
        return Err(Error::invalid(format!("M_rho must be positive, got {m_rho}")));
    }
    if !(rho > 1.0 && rho.is_finite()) {
        return Err(Error::invalid(format!("rho must exceed 1, got {rho}")));
    }
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::invalid(format!("epsilon must be positive, got {epsilon}")));
    }
    Ok(())
}

fn min_iterations(m_rho: f64, rho: f64, epsilon: f64, log_gap: f64) -> MinIterations {
    let raw = ((4.0 * m_rho).ln() - log_gap - epsilon.ln()) / (2.0 * rho.ln());
    MinIterations {
        raw,
        floor: raw.ceil().max(1.0) as u64,
    }
}

/// Steps needed when the quadrature nodes are symmetric.
pub fn m_floor_sym(m_rho: f64, rho: f64, epsilon: f64) -> Result<MinIterations> {
    check_floor_inputs(m_rho, rho, epsilon)?;
    Ok(min_iterations(m_rho, rho, epsilon, (-rho.powi(-2)).ln_1p()))
}

/// Steps needed without assuming symmetric nodes.
pub fn m_floor_asym(m_rho: f64, rho: f64, epsilon: f64) -> Result<MinIterations> {
    check_floor_inputs(m_rho, rho, epsilon)?;
    Ok(min_iterations(m_rho, rho, epsilon, (-rho.recip()).ln_1p()))
}

/// The iteration gap `m*` and its closed-form bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MStar {
    pub exact: f64,
    pub lower: f64,
    pub upper: f64,
}

impl MStar {
    pub fn average(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }
}

pub fn m_star(kappa: f64) -> Result<MStar> {
    let rho = rho_from_kappa(kappa)?;
    let s = kappa.sqrt();
    Ok(MStar {
        exact: rho.recip().ln_1p() / (2.0 * log_rho_from_kappa(kappa)),
        lower: (s - 1.0) * (s - 1.0) / (8.0 * s),
        upper: (s - 1.0) / 4.0,
    })
}

/// `M_rho` and the two step floors for a concrete function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FunctionBounds {
    pub ellipse: BernsteinEllipse,
    pub m_rho: EllipseMaximum,
    pub epsilon: f64,
    pub m_sym: MinIterations,
    pub m_asym: MinIterations,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundsReport {
    pub kappa: f64,
    pub rho: f64,
    pub m_star: MStar,
    pub function: Option<FunctionBounds>,
}

/// Bounds for condition number `kappa`. When a function is given, the ellipse
/// is placed over `[lambda_min, kappa * lambda_min]` with `rho` from `kappa`.
pub fn bounds_report(
    kappa: f64,
    function: Option<(&dyn MatrixFunction, f64)>,
    epsilon: f64,
    samples: usize,
) -> Result<BoundsReport> {
    let rho = rho_from_kappa(kappa)?;
    let m_star = m_star(kappa)?;
    let function = match function {
        None => None,
        Some((f, lambda_min)) => {
            let ellipse = BernsteinEllipse::new(rho, lambda_min, kappa * lambda_min)?;
            let m = m_rho(f, &ellipse, samples)?;
            Some(FunctionBounds {
                ellipse,
                m_rho: m,
                epsilon,
                m_sym: m_floor_sym(m.value(), rho, epsilon)?,
                m_asym: m_floor_asym(m.value(), rho, epsilon)?,
            })
        }
    };
    Ok(BoundsReport {
        kappa,
        rho,
        m_star,
        function,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub kappa: f64,
    pub lower: f64,
    pub upper: f64,
    pub average: f64,
    pub exact: f64,
}

/// One row per condition number, in input order; invalid entries yield
/// row-level errors without affecting the others.
pub fn kappa_sweep(kappas: &[f64]) -> Vec<Result<SweepRow>> {
    kappas
        .iter()
        .map(|&kappa| {
            let m = m_star(kappa)?;
            Ok(SweepRow {
                kappa,
                lower: m.lower,
                upper: m.upper,
                average: m.average(),
                exact: m.exact,
            })
        })
        .collect()
}
