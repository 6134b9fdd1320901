//! Fourier series of `f(t) = 1/(a - cos t)` and `g(t) = 1/(a - sin t)` for
//! real `|a| > 1`.
//!
//! With `s = sqrt(1 - a^-2)` and decay ratio `r = a (1 - s)`, the cosine
//! coefficients of `f` are `a_n = 2 a^(n-1) (1 - s)^n / s`, which we evaluate
//! as `(2 / (a s)) r^n`. The sine variant is the phase shift
//! `g(t) = f(t - pi/2)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest admissible distance of `|a|` from 1.
pub const MIN_MARGIN: f64 = 1e-9;

/// Validated parameter `a` of the reciprocal series together with its
/// derived quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReciprocalParams {
    a: f64,
    s_val: f64,
    one_minus_s: f64,
    ratio: f64,
}

impl ReciprocalParams {
    pub fn new(a: f64) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::domain(format!("a must be finite, got {a}")));
        }
        if a.abs() <= 1.0 + MIN_MARGIN {
            return Err(Error::domain(format!(
                "|a| must exceed 1 (by more than {MIN_MARGIN:e}), got {a}"
            )));
        }
        let inv2 = 1.0 / (a * a);
        let s_val = (1.0 - inv2).sqrt();
        // 1 - s without cancellation.
        let one_minus_s = inv2 / (1.0 + s_val);
        Ok(ReciprocalParams {
            a,
            s_val,
            one_minus_s,
            ratio: a * one_minus_s,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// `sqrt(1 - a^-2)`.
    pub fn s_val(&self) -> f64 {
        self.s_val
    }

    /// `1 - sqrt(1 - a^-2)`.
    pub fn one_minus_s(&self) -> f64 {
        self.one_minus_s
    }

    /// Decay ratio `a (1 - s)`, equal to `a - sign(a) sqrt(a^2 - 1)`.
    pub fn ratio(&self) -> f64 {
        self.ratio
    }

    /// `a_n` of `1/(a - cos t) = a_0/2 + sum a_n cos(n t)`.
    pub fn cos_coeff(&self, n: u64) -> f64 {
        let lead = 2.0 / (self.a * self.s_val);
        lead * pow_u64(self.ratio, n)
    }

    /// `sum_{n > big_n} |a_n| = |a_(N+1)| / (1 - |r|)`, a bound on the
    /// sup-norm truncation error.
    ///
    /// The geometric sum is attained exactly at `t = 0` (or `t = pi` for
    /// negative `a`), so a value rounded to nearest could land below the
    /// true tail. The result is widened by a worst-case estimate of its own
    /// rounding error so it stays an upper bound.
    pub fn tail_bound(&self, big_n: u64) -> f64 {
        let m = big_n.saturating_add(1);
        let gap = 1.0 - self.ratio.abs();
        let tail = self.cos_coeff(m).abs() / gap;
        let steps = 16.0 + 1.0 / (self.s_val * self.s_val) + 8.0 * (m as f64 + 1.0) + 8.0 / gap;
        tail * (1.0 + steps * f64::EPSILON)
    }

    /// Truncation of `1/(a - cos t)` at harmonic `big_n`.
    pub fn cos_series(&self, big_n: u64) -> RealTrigSeries {
        RealTrigSeries {
            constant: self.cos_coeff(0) / 2.0,
            cos: (1..=big_n).map(|n| self.cos_coeff(n)).collect(),
            sin: Vec::new(),
            tail_bound: self.tail_bound(big_n),
        }
    }

    /// Truncation of `1/(a - sin t)` at harmonic `big_n`: harmonic `2k`
    /// carries `(-1)^k a_2k` on cosine, harmonic `2k+1` carries
    /// `(-1)^k a_(2k+1)` on sine.
    pub fn sin_series(&self, big_n: u64) -> RealTrigSeries {
        let len = big_n as usize;
        let (mut cos, mut sin) = (vec![0.0; len], vec![0.0; len]);
        for h in 1..=big_n {
            let k = h / 2;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let v = sign * self.cos_coeff(h);
            if h % 2 == 0 {
                cos[h as usize - 1] = v;
            } else {
                sin[h as usize - 1] = v;
            }
        }
        RealTrigSeries {
            constant: self.cos_coeff(0) / 2.0,
            cos,
            sin,
            tail_bound: self.tail_bound(big_n),
        }
    }

    /// `(2/a) sum_{k=0}^{K} (2a)^(-n-2k) C(n+2k, k)`, the central-binomial
    /// route to `a_n`. Terms are generated by their ratio so neither the
    /// binomials nor the powers overflow.
    pub fn partial_sum_oracle(&self, n: u64, big_k: u64) -> f64 {
        let two_a = 2.0 * self.a;
        let nf = n as f64;
        let mut term = pow_u64(1.0 / two_a, n);
        let mut acc = term;
        for k in 0..big_k {
            let kf = k as f64;
            let growth =
                (nf + 2.0 * kf + 2.0) * (nf + 2.0 * kf + 1.0) / ((kf + 1.0) * (nf + kf + 1.0));
            term *= growth / (two_a * two_a);
            acc += term;
        }
        2.0 / self.a * acc
    }

    /// Residual of `(a_(n-1) - a a_n) a_0 = 2 a_n` for `n >= 1`.
    pub fn recurrence_residual(&self, n: u64) -> f64 {
        let (prev, cur, a0) = (self.cos_coeff(n - 1), self.cos_coeff(n), self.cos_coeff(0));
        (prev - self.a * cur) * a0 - 2.0 * cur
    }
}

fn pow_u64(x: f64, n: u64) -> f64 {
    match i32::try_from(n) {
        Ok(n) => x.powi(n),
        Err(_) => x.powf(n as f64),
    }
}

/// Truncated real Fourier series `constant + sum cos[n-1] cos(n t) +
/// sum sin[n-1] sin(n t)`.
///
/// Coefficient vectors start at harmonic 1. An empty vector means that
/// family is identically zero; otherwise both vectors cover the same
/// harmonics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealTrigSeries {
    pub constant: f64,
    pub cos: Vec<f64>,
    pub sin: Vec<f64>,
    pub tail_bound: f64,
}

impl RealTrigSeries {
    /// Highest harmonic represented.
    pub fn harmonics(&self) -> usize {
        self.cos.len().max(self.sin.len())
    }

    /// True when every harmonic in `1..=n` has a defined coefficient.
    pub fn covers(&self, n: usize) -> bool {
        let ok = |v: &Vec<f64>| v.is_empty() || v.len() >= n;
        ok(&self.cos) && ok(&self.sin) && (n == 0 || self.harmonics() >= n)
    }

    pub fn cos_coeff(&self, n: usize) -> f64 {
        if n == 0 {
            return self.constant;
        }
        self.cos.get(n - 1).copied().unwrap_or(0.0)
    }

    pub fn sin_coeff(&self, n: usize) -> f64 {
        if n == 0 {
            return 0.0;
        }
        self.sin.get(n - 1).copied().unwrap_or(0.0)
    }

    pub fn eval(&self, t: f64) -> f64 {
        let mut v = self.constant;
        for (i, c) in self.cos.iter().enumerate() {
            v += c * ((i + 1) as f64 * t).cos();
        }
        for (i, b) in self.sin.iter().enumerate() {
            v += b * ((i + 1) as f64 * t).sin();
        }
        v
    }
}

/// JSON document for a truncated reciprocal series:
/// `{"a":..,"N":..,"constant":..,"cos":[..],"sin":[..],"tail_bound":..}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReciprocalSeriesDoc {
    pub a: f64,
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(flatten)]
    pub series: RealTrigSeries,
}

/// Which reciprocal function a series belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Cos,
    Sin,
}

impl ReciprocalSeriesDoc {
    pub fn build(target: Target, p: &ReciprocalParams, n: u64) -> Self {
        let series = match target {
            Target::Cos => p.cos_series(n),
            Target::Sin => p.sin_series(n),
        };
        ReciprocalSeriesDoc {
            a: p.a(),
            n,
            series,
        }
    }
}
