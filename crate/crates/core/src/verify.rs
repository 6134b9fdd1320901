//! Fourier coefficients by periodic trapezoidal quadrature, and structured
//! comparison of exact or closed-form coefficients against them.
//!
//! On `M` uniform nodes `t_m = 2 pi m / M` the rule
//! `a_n ~ (2/M) sum f(t_m) cos(n t_m)` is exact for trigonometric
//! polynomials of degree below `M - n` and converges geometrically for
//! analytic periodic `f`.

use std::f64::consts::TAU;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reciprocal::RealTrigSeries;
use crate::trigpoly::TrigPolynomial;

/// Default number of quadrature nodes.
pub const DEFAULT_SAMPLES: usize = 4096;
/// Default absolute tolerance for coefficient comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Quadrature output: the extracted series plus the node count used.
#[derive(Debug, Clone, PartialEq)]
pub struct Quadrature {
    pub series: RealTrigSeries,
    pub samples: usize,
}

impl Deref for Quadrature {
    type Target = RealTrigSeries;

    fn deref(&self) -> &RealTrigSeries {
        &self.series
    }
}

/// Extracts the constant (stored as `a_0 / 2`), `a_1..a_N` and `b_1..b_N`
/// of `f` using `samples` uniform nodes. Sums run in ascending node order.
pub fn numeric_fourier<F>(f: F, harmonics: usize, samples: usize) -> Result<Quadrature>
where
    F: Fn(f64) -> f64,
{
    if samples < 2 * harmonics + 1 {
        return Err(Error::domain(format!(
            "{samples} samples cannot resolve {harmonics} harmonics (need at least {})",
            2 * harmonics + 1
        )));
    }
    let step = TAU / samples as f64;
    let values = (0..samples)
        .map(|m| {
            let t = step * m as f64;
            let v = f(t);
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::Evaluation(format!("f({t}) = {v}")))
            }
        })
        .collect::<Result<Vec<f64>>>()?;

    // cos/sin of every grid angle; harmonic n at node m uses index n*m mod M.
    let (cos_table, sin_table): (Vec<f64>, Vec<f64>) = (0..samples)
        .map(|j| {
            let t = step * j as f64;
            (t.cos(), t.sin())
        })
        .unzip();

    let scale = 2.0 / samples as f64;
    let mut cos = Vec::with_capacity(harmonics);
    let mut sin = Vec::with_capacity(harmonics);
    for n in 1..=harmonics {
        let (mut a, mut b) = (0.0, 0.0);
        for (m, v) in values.iter().enumerate() {
            let idx = (n * m) % samples;
            a += v * cos_table[idx];
            b += v * sin_table[idx];
        }
        cos.push(a * scale);
        sin.push(b * scale);
    }
    let constant = values.iter().sum::<f64>() / samples as f64;
    Ok(Quadrature {
        series: RealTrigSeries {
            constant,
            cos,
            sin,
            tail_bound: 0.0,
        },
        samples,
    })
}

/// Anything that can report floating-point Fourier coefficients.
pub trait FourierCoefficients {
    /// The mean term (`a_0 / 2`).
    fn constant_value(&self) -> f64;
    fn cos_value(&self, n: usize) -> f64;
    fn sin_value(&self, n: usize) -> f64;
    /// True when harmonics `1..=n` are all defined.
    fn covers(&self, n: usize) -> bool;
}

impl FourierCoefficients for TrigPolynomial {
    fn constant_value(&self) -> f64 {
        self.constant_term().to_f64()
    }

    fn cos_value(&self, n: usize) -> f64 {
        self.cos_terms()
            .get(&(n as u64))
            .map_or(0.0, |c| c.to_f64())
    }

    fn sin_value(&self, n: usize) -> f64 {
        self.sin_terms()
            .get(&(n as u64))
            .map_or(0.0, |c| c.to_f64())
    }

    fn covers(&self, _n: usize) -> bool {
        true
    }
}

impl FourierCoefficients for RealTrigSeries {
    fn constant_value(&self) -> f64 {
        self.constant
    }

    fn cos_value(&self, n: usize) -> f64 {
        self.cos_coeff(n)
    }

    fn sin_value(&self, n: usize) -> f64 {
        self.sin_coeff(n)
    }

    fn covers(&self, n: usize) -> bool {
        RealTrigSeries::covers(self, n)
    }
}

/// Per-coefficient absolute differences between two coefficient sources.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_abs_error: f64,
    pub errors_constant: f64,
    pub errors_cos: Vec<f64>,
    pub errors_sin: Vec<f64>,
    pub samples_used: usize,
    pub harmonics_checked: usize,
}

impl VerificationReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.max_abs_error <= tol
    }
}

/// Compares the constant and harmonics `1..=harmonics` of `exact` against
/// a quadrature result.
pub fn compare<E>(exact: &E, numeric: &Quadrature, harmonics: usize) -> Result<VerificationReport>
where
    E: FourierCoefficients + ?Sized,
{
    if !exact.covers(harmonics) || !numeric.series.covers(harmonics) {
        return Err(Error::domain(format!(
            "harmonic coverage mismatch: both series must define harmonics 1..={harmonics}"
        )));
    }
    let errors_constant = (exact.constant_value() - numeric.constant).abs();
    let errors_cos: Vec<f64> = (1..=harmonics)
        .map(|n| (exact.cos_value(n) - numeric.cos_coeff(n)).abs())
        .collect();
    let errors_sin: Vec<f64> = (1..=harmonics)
        .map(|n| (exact.sin_value(n) - numeric.sin_coeff(n)).abs())
        .collect();
    let max_abs_error = errors_cos
        .iter()
        .chain(&errors_sin)
        .copied()
        .fold(errors_constant, f64::max);
    Ok(VerificationReport {
        max_abs_error,
        errors_constant,
        errors_cos,
        errors_sin,
        samples_used: numeric.samples,
        harmonics_checked: harmonics,
    })
}
