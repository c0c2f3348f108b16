//! Scalar functions `f` applied spectrally in `u^T f(A) u`.
//!
//! Every catalog entry implements [`MatrixFunction`] and is registered by name
//! in [`functions`], so front ends select them with specs such as `exp`,
//! `power:0.5` or `poly:1,0,3`.

use std::fmt::Debug;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::registry::{no_params, parse_f64, Registry};

/// Where the complex continuation of a function fails to be analytic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Analyticity {
    Entire,
    /// Isolated pole at the given real point.
    Pole(f64),
    /// Branch cut along the real half-line `(-inf, at]`.
    BranchCut {
        at: f64,
    },
}

pub trait MatrixFunction: Send + Sync + Debug {
    /// Canonical spec string, parseable by [`functions`].
    fn spec(&self) -> String;

    /// Real evaluation with domain guard.
    fn eval(&self, x: f64) -> Result<f64>;

    /// Analytic continuation; only meaningful away from the singular set
    /// reported by [`MatrixFunction::analyticity`].
    fn eval_complex(&self, z: Complex64) -> Complex64;

    fn analyticity(&self) -> Analyticity;

    /// Closed-form maximum of `|f(c + h z)|` over the Bernstein ellipse with
    /// radius `rho` (foci `+-1`), when the catalog entry has one.
    fn ellipse_max_modulus(&self, _center: f64, _half_width: f64, _rho: f64) -> Option<f64> {
        None
    }
}

fn domain_error(f: &dyn MatrixFunction, x: f64) -> Error {
    Error::FunctionDomain {
        function: f.spec(),
        at: format!("{x:e}"),
    }
}

/// Real semi-axis `(rho + 1/rho) / 2` of the Bernstein ellipse.
pub(crate) fn semi_major(rho: f64) -> f64 {
    0.5 * (rho + rho.recip())
}

#[derive(Debug, Clone, Copy)]
pub struct Exp;

impl MatrixFunction for Exp {
    fn spec(&self) -> String {
        "exp".into()
    }

    fn eval(&self, x: f64) -> Result<f64> {
        Ok(x.exp())
    }

    fn eval_complex(&self, z: Complex64) -> Complex64 {
        z.exp()
    }

    fn analyticity(&self) -> Analyticity {
        Analyticity::Entire
    }

    fn ellipse_max_modulus(&self, center: f64, half_width: f64, rho: f64) -> Option<f64> {
        Some((center + half_width.abs() * semi_major(rho)).exp())
    }
}

/// `exp(beta * x)`.
#[derive(Debug, Clone, Copy)]
pub struct ScaledExp(pub f64);

impl MatrixFunction for ScaledExp {
    fn spec(&self) -> String {
        format!("scaled-exp:{}", self.0)
    }

    fn eval(&self, x: f64) -> Result<f64> {
        Ok((self.0 * x).exp())
    }

    fn eval_complex(&self, z: Complex64) -> Complex64 {
        (z * self.0).exp()
    }

    fn analyticity(&self) -> Analyticity {
        Analyticity::Entire
    }

    fn ellipse_max_modulus(&self, center: f64, half_width: f64, rho: f64) -> Option<f64> {
        let beta = self.0;
        Some((beta * center + (beta * half_width).abs() * semi_major(rho)).exp())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Log;

impl MatrixFunction for Log {
    fn spec(&self) -> String {
        "log".into()
    }

    fn eval(&self, x: f64) -> Result<f64> {
        if x > 0.0 {
            Ok(x.ln())
        } else {
            Err(domain_error(self, x))
        }
    }

    fn eval_complex(&self, z: Complex64) -> Complex64 {
        z.ln()
    }

    fn analyticity(&self) -> Analyticity {
        Analyticity::BranchCut { at: 0.0 }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Inverse;

impl MatrixFunction for Inverse {
    fn spec(&self) -> String {
        "inv".into()
    }

    fn eval(&self, x: f64) -> Result<f64> {
        if x > 0.0 {
            Ok(x.recip())
        } else {
            Err(domain_error(self, x))
        }
    }

    fn eval_complex(&self, z: Complex64) -> Complex64 {
        z.inv()
    }

    fn analyticity(&self) -> Analyticity {
        Analyticity::Pole(0.0)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Sqrt;

impl MatrixFunction for Sqrt {
    fn spec(&self) -> String {
        "sqrt".into()
    }

    fn eval(&self, x: f64) -> Result<f64> {
        if x >= 0.0 {
            Ok(x.sqrt())
        } else {
            Err(domain_error(self, x))
        }
    }

    fn eval_complex(&self, z: Complex64) -> Complex64 {
        z.sqrt()
    }

    fn analyticity(&self) -> Analyticity {
        Analyticity::BranchCut { at: 0.0 }
    }
}

/// `x^p` for real `p`. Integer exponents are evaluated with `powi` and are
/// defined on the whole real line (minus zero when negative); other exponents
/// need `x >= 0` (`x > 0` when negative).
#[derive(Debug, Clone, Copy)]
pub struct Power(pub f64);

impl Power {
    fn integer_exponent(&self) -> Option<i32> {
        let p = self.0;
        (p.fract() == 0.0 && p.abs() <= i32::MAX as f64).then_some(p as i32)
    }
}

impl MatrixFunction for Power {
    fn spec(&self) -> String {
        format!("power:{}", self.0)
    }

    fn eval(&self, x: f64) -> Result<f64> {
        let p = self.0;
        match self.integer_exponent() {
            Some(k) if k >= 0 || x != 0.0 => Ok(x.powi(k)),
            Some(_) => Err(domain_error(self, x)),
            None if x > 0.0 || (x == 0.0 && p > 0.0) => Ok(x.powf(p)),
            None => Err(domain_error(self, x)),
        }
    }

    fn eval_complex(&self, z: Complex64) -> Complex64 {
        match self.integer_exponent() {
            Some(k) => z.powi(k),
            None => z.powf(self.0),
        }
    }

    fn analyticity(&self) -> Analyticity {
        match self.integer_exponent() {
            Some(k) if k >= 0 => Analyticity::Entire,
            Some(_) => Analyticity::Pole(0.0),
            None => Analyticity::BranchCut { at: 0.0 },
        }
    }

    fn ellipse_max_modulus(&self, center: f64, half_width: f64, rho: f64) -> Option<f64> {
        match self.integer_exponent() {
            Some(k) if k >= 0 => Some((center.abs() + half_width.abs() * semi_major(rho)).powi(k)),
            _ => None,
        }
    }
}

/// Polynomial with ascending coefficients `c0 + c1 x + c2 x^2 + ...`.
#[derive(Debug, Clone)]
pub struct Polynomial(pub Vec<f64>);

impl MatrixFunction for Polynomial {
    fn spec(&self) -> String {
        let coeffs: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        format!("poly:{}", coeffs.join(","))
    }

    fn eval(&self, x: f64) -> Result<f64> {
        Ok(self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c))
    }

    fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.0
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    fn analyticity(&self) -> Analyticity {
        Analyticity::Entire
    }

    /// Attained at the rightmost ellipse point when the center is
    /// nonnegative and the coefficients share one sign.
    fn ellipse_max_modulus(&self, center: f64, half_width: f64, rho: f64) -> Option<f64> {
        let same_sign = self.0.iter().all(|&c| c >= 0.0) || self.0.iter().all(|&c| c <= 0.0);
        if center < 0.0 || !same_sign {
            return None;
        }
        let r = center + half_width.abs() * semi_major(rho);
        Some(self.0.iter().rev().fold(0.0, |acc, &c| acc * r + c.abs()))
    }
}

pub fn functions() -> Registry<dyn MatrixFunction> {
    let mut reg: Registry<dyn MatrixFunction> = Registry::new("matrix function");
    reg.register("exp", |p| {
        no_params("exp", p)?;
        Ok(Box::new(Exp))
    });
    reg.register("log", |p| {
        no_params("log", p)?;
        Ok(Box::new(Log))
    });
    reg.register("inv", |p| {
        no_params("inv", p)?;
        Ok(Box::new(Inverse))
    });
    reg.register("sqrt", |p| {
        no_params("sqrt", p)?;
        Ok(Box::new(Sqrt))
    });
    reg.register("power", |p| {
        let p = p.ok_or_else(|| Error::invalid("`power` needs an exponent, e.g. power:2"))?;
        Ok(Box::new(Power(parse_f64("power", p)?)))
    });
    reg.register("scaled-exp", |p| {
        let p = p.ok_or_else(|| Error::invalid("`scaled-exp` needs a scale, e.g. scaled-exp:-0.5"))?;
        Ok(Box::new(ScaledExp(parse_f64("scaled-exp", p)?)))
    });
    reg.register("poly", |p| {
        let p = p.ok_or_else(|| Error::invalid("`poly` needs coefficients, e.g. poly:0,1"))?;
        let coeffs = p.split(',').map(|c| parse_f64("poly", c)).collect::<Result<Vec<_>>>()?;
        Ok(Box::new(Polynomial(coeffs)))
    });
    reg
}

/// Shorthand for `functions().build(spec)`.
pub fn parse_function(spec: &str) -> Result<Box<dyn MatrixFunction>> {
    functions().build(spec)
}
