//! Exact finite trigonometric polynomials and power-basis expansions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use crate::rational::Rational;

/// The function a power basis is built on: `cos t` or `sin t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    Cos,
    Sin,
}

impl Base {
    pub fn name(self) -> &'static str {
        match self {
            Base::Cos => "cos",
            Base::Sin => "sin",
        }
    }

    pub fn eval(self, t: f64) -> f64 {
        match self {
            Base::Cos => t.cos(),
            Base::Sin => t.sin(),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cos" => Ok(Base::Cos),
            "sin" => Ok(Base::Sin),
            other => Err(Error::Parse(format!("unknown base '{other}'"))),
        }
    }
}

#[derive(Deserialize)]
struct RawTrigPolynomial {
    constant: Rational,
    #[serde(default)]
    cos: BTreeMap<u64, Rational>,
    #[serde(default)]
    sin: BTreeMap<u64, Rational>,
}

/// `constant + sum_n a_n cos(n t) + sum_n b_n sin(n t)` with exact
/// coefficients.
///
/// `constant` holds the value of the mean term itself (what a Fourier table
/// would write as `a_0 / 2`). Harmonic maps never store zeros and never use
/// index 0, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "RawTrigPolynomial")]
pub struct TrigPolynomial {
    constant: Rational,
    cos: BTreeMap<u64, Rational>,
    sin: BTreeMap<u64, Rational>,
}

impl TryFrom<RawTrigPolynomial> for TrigPolynomial {
    type Error = Error;

    fn try_from(raw: RawTrigPolynomial) -> Result<Self> {
        if raw.cos.contains_key(&0) || raw.sin.contains_key(&0) {
            return Err(Error::Parse("harmonic index 0 is not allowed".into()));
        }
        let mut p = TrigPolynomial::constant(raw.constant);
        for (n, c) in raw.cos {
            p.add_cos(n as i64, &c);
        }
        for (n, c) in raw.sin {
            p.add_sin(n as i64, &c);
        }
        Ok(p)
    }
}

fn accumulate(map: &mut BTreeMap<u64, Rational>, n: u64, c: &Rational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(n).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&n);
    }
}

impl TrigPolynomial {
    pub fn zero() -> Self {
        TrigPolynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        TrigPolynomial {
            constant: c,
            ..Default::default()
        }
    }

    /// `c * cos(n t)`; `n = 0` yields the constant `c`.
    pub fn cos_harmonic(n: u64, c: Rational) -> Self {
        let mut p = TrigPolynomial::zero();
        p.add_cos(n as i64, &c);
        p
    }

    /// `c * sin(n t)`; `n = 0` yields zero.
    pub fn sin_harmonic(n: u64, c: Rational) -> Self {
        let mut p = TrigPolynomial::zero();
        p.add_sin(n as i64, &c);
        p
    }

    /// Adds `c * cos(n t)`, folding `cos(-n t) = cos(n t)` and `cos(0) = 1`.
    pub fn add_cos(&mut self, n: i64, c: &Rational) {
        if n == 0 {
            self.constant += c;
        } else {
            accumulate(&mut self.cos, n.unsigned_abs(), c);
        }
    }

    /// Adds `c * sin(n t)`, folding `sin(-n t) = -sin(n t)` and `sin(0) = 0`.
    pub fn add_sin(&mut self, n: i64, c: &Rational) {
        match n.signum() {
            0 => {}
            1 => accumulate(&mut self.sin, n as u64, c),
            _ => accumulate(&mut self.sin, n.unsigned_abs(), &-c),
        }
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn cos_terms(&self) -> &BTreeMap<u64, Rational> {
        &self.cos
    }

    pub fn sin_terms(&self) -> &BTreeMap<u64, Rational> {
        &self.sin
    }

    /// Coefficient of `cos(n t)`; `n = 0` returns the constant term.
    pub fn cos_coeff(&self, n: u64) -> Rational {
        if n == 0 {
            return self.constant.clone();
        }
        self.cos.get(&n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn sin_coeff(&self, n: u64) -> Rational {
        self.sin.get(&n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.cos.is_empty() && self.sin.is_empty()
    }

    /// Highest harmonic with a nonzero coefficient (0 for constants).
    pub fn max_harmonic(&self) -> u64 {
        let c = self.cos.keys().next_back().copied().unwrap_or(0);
        let s = self.sin.keys().next_back().copied().unwrap_or(0);
        c.max(s)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TrigPolynomial::combine(self, &TrigPolynomial::zero(), c, &Rational::zero())
    }

    /// `c * p + d * q`.
    pub fn combine(p: &Self, q: &Self, c: &Rational, d: &Rational) -> Self {
        let mut out = TrigPolynomial::constant(c * &p.constant + d * &q.constant);
        for (src, k) in [(p, c), (q, d)] {
            if k.is_zero() {
                continue;
            }
            for (&n, a) in &src.cos {
                accumulate(&mut out.cos, n, &(k * a));
            }
            for (&n, b) in &src.sin {
                accumulate(&mut out.sin, n, &(k * b));
            }
        }
        out
    }

    /// Exact product via the product-to-sum identities.
    pub fn mul(&self, other: &Self) -> Self {
        let half = Rational::half();
        // Treat the constant as the cos(0 t) term.
        let cos_of = |p: &Self| -> Vec<(i64, Rational)> {
            let mut v = Vec::with_capacity(p.cos.len() + 1);
            if !p.constant.is_zero() {
                v.push((0, p.constant.clone()));
            }
            v.extend(p.cos.iter().map(|(&n, c)| (n as i64, c.clone())));
            v
        };
        let sin_of = |p: &Self| -> Vec<(i64, Rational)> {
            p.sin.iter().map(|(&n, c)| (n as i64, c.clone())).collect()
        };
        let (pc, ps) = (cos_of(self), sin_of(self));
        let (qc, qs) = (cos_of(other), sin_of(other));

        let mut out = TrigPolynomial::zero();
        for (a, x) in &pc {
            for (b, y) in &qc {
                let w = &(x * y) * &half;
                out.add_cos(a - b, &w);
                out.add_cos(a + b, &w);
            }
            for (b, y) in &qs {
                // cos A sin B = 1/2 [sin(B - A) + sin(A + B)]
                let w = &(x * y) * &half;
                out.add_sin(b - a, &w);
                out.add_sin(a + b, &w);
            }
        }
        for (a, x) in &ps {
            for (b, y) in &qc {
                let w = &(x * y) * &half;
                out.add_sin(a - b, &w);
                out.add_sin(a + b, &w);
            }
            for (b, y) in &qs {
                let w = &(x * y) * &half;
                out.add_cos(a - b, &w);
                out.add_cos(a + b, &-w);
            }
        }
        out
    }

    /// `self^n` by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = TrigPolynomial::constant(Rational::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Floating-point value at `t`.
    pub fn eval(&self, t: f64) -> f64 {
        let mut v = self.constant.to_f64();
        for (&n, a) in &self.cos {
            v += a.to_f64() * (n as f64 * t).cos();
        }
        for (&n, b) in &self.sin {
            v += b.to_f64() * (n as f64 * t).sin();
        }
        v
    }

    /// Re-establishes normal form. Values built through the public API are
    /// already normalized, so this is the identity on them.
    pub fn normalized(&self) -> Self {
        let mut out = TrigPolynomial::constant(self.constant.clone());
        for (&n, a) in &self.cos {
            out.add_cos(n as i64, a);
        }
        for (&n, b) in &self.sin {
            out.add_sin(n as i64, b);
        }
        out
    }

    /// Sum of coefficient values at `t = 0`, i.e. the exact value there.
    pub fn value_at_zero(&self) -> Rational {
        self.cos
            .values()
            .fold(self.constant.clone(), |acc, a| acc + a.clone())
    }

    /// `constant^2 + 1/2 sum (a_n^2 + b_n^2)`: the mean of the square.
    pub fn mean_square(&self) -> Rational {
        let half = Rational::half();
        let mut acc = &self.constant * &self.constant;
        for c in self.cos.values().chain(self.sin.values()) {
            acc += &(&(c * c) * &half);
        }
        acc
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trig polynomial serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Debug for TrigPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TrigPolynomial({})", self.to_json())
    }
}

#[derive(Deserialize)]
struct RawPowerExpansion {
    base: Base,
    #[serde(default)]
    cos_cofactor: bool,
    coeffs: BTreeMap<u32, Rational>,
}

/// `[cos t *] sum_e c_e base(t)^e`.
///
/// The optional `cos t` cofactor only appears with a sine base and odd
/// exponents, the shape of `sin(2k t)` written in powers of `sin t`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPowerExpansion")]
pub struct PowerExpansion {
    base: Base,
    cos_cofactor: bool,
    coeffs: BTreeMap<u32, Rational>,
}

impl TryFrom<RawPowerExpansion> for PowerExpansion {
    type Error = Error;

    fn try_from(raw: RawPowerExpansion) -> Result<Self> {
        PowerExpansion::new(raw.base, raw.cos_cofactor, raw.coeffs)
    }
}

impl PowerExpansion {
    /// Builds a normalized expansion, dropping zero coefficients.
    pub fn new(
        base: Base,
        cos_cofactor: bool,
        coeffs: impl IntoIterator<Item = (u32, Rational)>,
    ) -> Result<Self> {
        let coeffs: BTreeMap<u32, Rational> =
            coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if cos_cofactor {
            if base != Base::Sin {
                return Err(Error::domain("cos cofactor requires the sine base"));
            }
            if coeffs.keys().any(|e| e % 2 == 0) {
                return Err(Error::domain(
                    "cos cofactor expansions carry odd exponents only",
                ));
            }
        }
        Ok(PowerExpansion {
            base,
            cos_cofactor,
            coeffs,
        })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn cos_cofactor(&self) -> bool {
        self.cos_cofactor
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, e: u32) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    /// Floating-point value at `t`. The polynomial is evaluated exactly at
    /// the rounded value of `cos t` or `sin t` and rounded once, since the
    /// coefficients of high-order multiple-angle formulas grow like `2^n`
    /// and cancel catastrophically in double arithmetic.
    pub fn eval(&self, t: f64) -> f64 {
        let Some(x) = Rational::from_f64(self.base.eval(t)) else {
            return f64::NAN;
        };
        // x = xm / 2^k. Run Horner on integers scaled by D 2^(k d), where D
        // is the common coefficient denominator, and reduce once at the end.
        let (xm, k) = (x.numer(), x.denom().bits() as usize - 1);
        let d = self.degree();
        let denom = self
            .coeffs
            .values()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let scaled = |e: u32| {
            self.coeffs
                .get(&e)
                .map(|c| c.numer() * (&denom / c.denom()))
                .unwrap_or_default()
        };
        let mut acc = scaled(d);
        for e in (0..d).rev() {
            acc = acc * xm + (scaled(e) << (k * (d - e) as usize));
        }
        let v = Rational::new(acc, denom << (k * d as usize)).to_f64();
        if self.cos_cofactor {
            v * t.cos()
        } else {
            v
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("power expansion serializes")
    }
}

impl fmt::Debug for PowerExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerExpansion({})", self.to_json())
    }
}
