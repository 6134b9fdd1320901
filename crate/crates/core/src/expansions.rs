//! Multiple-angle and power-reduction formulas for `cos` and `sin`, with
//! two independent oracles: the Chebyshev recurrence and repeated
//! product-to-sum multiplication.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::kernels::{choose, kernel_alpha, lemma2_sum, SumMode};
use crate::trigpoly::{Base, PowerExpansion, Rational, TrigPolynomial};

/// Parity split `n = 2k` or `n = 2k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even(u32),
    Odd(u32),
}

impl Parity {
    pub fn of(n: u32) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even(n / 2)
        } else {
            Parity::Odd(n / 2)
        }
    }

    pub fn n(self) -> u32 {
        match self {
            Parity::Even(k) => 2 * k,
            Parity::Odd(k) => 2 * k + 1,
        }
    }
}

fn require_positive(n: i64, what: &str) -> Result<u32> {
    if n < 1 {
        return Err(Error::domain(format!("{what}: n must be >= 1, got {n}")));
    }
    u32::try_from(n).map_err(|_| Error::domain(format!("{what}: n too large")))
}

fn require_non_negative(n: i64, what: &str) -> Result<u32> {
    if n < 0 {
        return Err(Error::domain(format!("{what}: n must be >= 0, got {n}")));
    }
    u32::try_from(n).map_err(|_| Error::domain(format!("{what}: n too large")))
}

fn signed(v: BigInt, negative: bool) -> Rational {
    let r = Rational::from(v);
    if negative {
        -r
    } else {
        r
    }
}

/// `cos(n t)` as a polynomial in `cos t`: the coefficient of
/// `cos^(n-2s) t` is `(-1)^s alpha(n, s)`.
pub fn cos_multiple_angle(n: i64) -> Result<PowerExpansion> {
    let n = require_positive(n, "cos_multiple_angle")?;
    let mut coeffs = Vec::with_capacity(n as usize / 2 + 1);
    for s in 0..=n / 2 {
        let alpha = kernel_alpha(n as i64, s as i64)?;
        coeffs.push((n - 2 * s, signed(alpha, s % 2 == 1)));
    }
    PowerExpansion::new(Base::Cos, false, coeffs)
}

/// `sin(n t)` in powers of `sin t`.
///
/// Odd `n = 2k+1` gives a plain odd polynomial. Even `n = 2k` needs a
/// `cos t` cofactor: `sin(2k t) = cos t * sum_{s=1}^{k} (-1)^(s-1)
/// 2^(2s-1) C(k+s-1, 2s-1) sin^(2s-1) t`.
pub fn sin_multiple_angle(n: i64) -> Result<PowerExpansion> {
    let n = require_positive(n, "sin_multiple_angle")?;
    match Parity::of(n) {
        Parity::Odd(k) => {
            let (k, mut coeffs) = (k as i64, Vec::new());
            for s in 0..=k {
                let bracket = choose(2 * k + 1 - s, s) + choose(2 * k - s, s - 1);
                let mag = bracket << (2 * (k - s)) as usize;
                coeffs.push(((2 * k + 1 - 2 * s) as u32, signed(mag, (k - s) % 2 == 1)));
            }
            PowerExpansion::new(Base::Sin, false, coeffs)
        }
        Parity::Even(k) => {
            let mut coeffs = Vec::new();
            for s in 1..=k as i64 {
                let mag = lemma2_sum(k as i64, s, SumMode::ClosedForm)?;
                coeffs.push(((2 * s - 1) as u32, signed(mag, s % 2 == 0)));
            }
            PowerExpansion::new(Base::Sin, true, coeffs)
        }
    }
}

/// Chebyshev polynomial of the first kind `T_n` in the cosine base, from
/// `T_0 = 1`, `T_1 = x`, `T_(n+1) = 2x T_n - T_(n-1)`.
pub fn chebyshev_oracle(n: i64) -> Result<PowerExpansion> {
    let n = require_non_negative(n, "chebyshev_oracle")? as usize;
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)];
    let mut cur: Vec<BigInt> = vec![BigInt::from(0), BigInt::from(1)];
    if n == 0 {
        cur = prev.clone();
    }
    for _ in 1..n {
        let mut next = vec![BigInt::from(0); cur.len() + 1];
        for (e, c) in cur.iter().enumerate() {
            next[e + 1] += c * 2;
        }
        for (e, c) in prev.iter().enumerate() {
            next[e] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    PowerExpansion::new(
        Base::Cos,
        false,
        cur.into_iter()
            .enumerate()
            .map(|(e, c)| (e as u32, Rational::from(c))),
    )
}

/// Shared power-reduction body. `negate(k, j)` flips the sign of the
/// harmonic `n - 2j`; odd powers land on sines when `odd_on_sin` is set.
fn power_reduction(n: u32, negate: impl Fn(u32, u32) -> bool, odd_on_sin: bool) -> TrigPolynomial {
    let n64 = n as i64;
    match Parity::of(n) {
        Parity::Even(k) => {
            let mut p = TrigPolynomial::constant(Rational::dyadic(choose(n64, k as i64), 2 * k));
            for j in 0..k {
                let c = Rational::dyadic(choose(n64, j as i64), 2 * k - 1);
                let c = if negate(k, j) { -c } else { c };
                p.add_cos((n - 2 * j) as i64, &c);
            }
            p
        }
        Parity::Odd(k) => {
            let mut p = TrigPolynomial::zero();
            for j in 0..=k {
                let c = Rational::dyadic(choose(n64, j as i64), 2 * k);
                let c = if negate(k, j) { -c } else { c };
                if odd_on_sin {
                    p.add_sin((n - 2 * j) as i64, &c);
                } else {
                    p.add_cos((n - 2 * j) as i64, &c);
                }
            }
            p
        }
    }
}

/// Fourier form of `cos^n t`.
///
/// `cos^(2k) t = C(2k,k)/2^(2k) + 2^(1-2k) sum_{j<k} C(2k,j) cos((2k-2j)t)`
/// and `cos^(2k+1) t = 2^(-2k) sum_{j<=k} C(2k+1,j) cos((2k+1-2j)t)`.
pub fn cos_power_fourier(n: i64) -> Result<TrigPolynomial> {
    let n = require_non_negative(n, "cos_power_fourier")?;
    Ok(power_reduction(n, |_, _| false, false))
}

/// Fourier form of `sin^n t`: the cosine formula with signs `(-1)^(k-j)`,
/// odd powers on sine harmonics.
pub fn sin_power_fourier(n: i64) -> Result<TrigPolynomial> {
    let n = require_non_negative(n, "sin_power_fourier")?;
    Ok(power_reduction(n, |k, j| (k - j) % 2 == 1, true))
}

pub fn power_fourier(base: Base, n: i64) -> Result<TrigPolynomial> {
    match base {
        Base::Cos => cos_power_fourier(n),
        Base::Sin => sin_power_fourier(n),
    }
}

/// `base(t)^n` computed by `n`-fold product-to-sum multiplication.
pub fn power_product_oracle(base: Base, n: i64) -> Result<TrigPolynomial> {
    let n = require_non_negative(n, "power_product_oracle")?;
    let single = match base {
        Base::Cos => TrigPolynomial::cos_harmonic(1, Rational::one()),
        Base::Sin => TrigPolynomial::sin_harmonic(1, Rational::one()),
    };
    Ok(single.pow(n))
}

/// Rewrites a power-basis expansion in Fourier form by substituting the
/// power-reduction formula for every `base^e` (and multiplying by `cos t`
/// when the expansion carries the cofactor).
pub fn to_fourier(p: &PowerExpansion) -> Result<TrigPolynomial> {
    let mut acc = TrigPolynomial::zero();
    for (&e, c) in p.coeffs() {
        let term = power_fourier(p.base(), e as i64)?;
        acc = TrigPolynomial::combine(&acc, &term, &Rational::one(), c);
    }
    if p.cos_cofactor() {
        acc = acc.mul(&TrigPolynomial::cos_harmonic(1, Rational::one()));
    }
    Ok(acc)
}
