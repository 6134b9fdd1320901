//! Exact binomial coefficients and the binomial-sum kernels behind the
//! multiple-angle and power-reduction formulas.
//!
//! Every identity comes in two flavours: a closed form and a literal
//! summation used as its oracle. Both return exact [`BigInt`]s.

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rows of Pascal's triangle kept in the shared cache. Larger upper indices
/// fall back to the multiplicative formula.
const CACHED_ROWS: usize = 1024;

/// Half rows (`k <= n/2`) of Pascal's triangle, grown on demand.
static PASCAL: OnceLock<RwLock<Vec<Vec<BigInt>>>> = OnceLock::new();

fn pascal() -> &'static RwLock<Vec<Vec<BigInt>>> {
    PASCAL.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

fn half_row_get(row: &[BigInt], n: usize, k: usize) -> BigInt {
    let k = k.min(n - k);
    row[k].clone()
}

fn multiplicative(n: usize, k: usize) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` for `n >= 0`, zero outside `0 <= k <= n`.
///
/// Callers guarantee `n >= 0`; the public entry point is [`binomial`].
pub(crate) fn choose(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    debug_assert!(n >= 0);
    let (n, k) = (n as usize, k as usize);
    if n >= CACHED_ROWS {
        return multiplicative(n, k);
    }
    {
        let rows = pascal().read().expect("pascal cache poisoned");
        if n < rows.len() {
            return half_row_get(&rows[n], n, k);
        }
    }
    let mut rows = pascal().write().expect("pascal cache poisoned");
    while rows.len() <= n {
        let m = rows.len();
        let prev = &rows[m - 1];
        let row: Vec<BigInt> = (0..=m / 2)
            .map(|j| {
                if j == 0 {
                    BigInt::one()
                } else {
                    half_row_get(prev, m - 1, j - 1) + half_row_get(prev, m - 1, j.min(m - 1))
                }
            })
            .collect();
        rows.push(row);
    }
    half_row_get(&rows[n], n, k)
}

/// Binomial coefficient `C(n, k)`.
///
/// Returns zero when `k < 0` or `k > n`. A negative upper index is rejected.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::domain(format!(
            "binomial upper index must be non-negative, got {n}"
        )));
    }
    Ok(choose(n, k))
}

/// Multiplies `x` by `2^e`. Negative exponents must divide exactly.
fn scale_pow2(x: BigInt, e: i64) -> BigInt {
    if e >= 0 {
        x << (e as usize)
    } else {
        let shift = (-e) as usize;
        debug_assert!(
            (&x % (BigInt::one() << shift)).is_zero(),
            "inexact power-of-two division"
        );
        x >> shift
    }
}

fn require_positive(n: i64, what: &str) -> Result<()> {
    if n < 1 {
        return Err(Error::domain(format!("{what}: n must be >= 1, got {n}")));
    }
    Ok(())
}

fn require_non_negative(v: i64, name: &str) -> Result<()> {
    if v < 0 {
        return Err(Error::domain(format!("{name} must be >= 0, got {v}")));
    }
    Ok(())
}

/// Selects one of the three parity-filtered binomial sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelKind {
    /// `sum_j C(n, 2j) C(j, s)`
    Alpha,
    /// `sum_j C(n, 2j-1) C(j, s)`
    AlphaPrime,
    /// `sum_j C(n, 2j+1) C(j, s)`
    AlphaDoublePrime,
}

impl KernelKind {
    pub const ALL: [KernelKind; 3] = [
        KernelKind::Alpha,
        KernelKind::AlphaPrime,
        KernelKind::AlphaDoublePrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KernelKind::Alpha => "alpha",
            KernelKind::AlphaPrime => "alpha_prime",
            KernelKind::AlphaDoublePrime => "alpha_dprime",
        }
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(KernelKind::Alpha),
            "alpha_prime" | "alpha-prime" | "alpha'" => Ok(KernelKind::AlphaPrime),
            "alpha_dprime" | "alpha-dprime" | "alpha''" => Ok(KernelKind::AlphaDoublePrime),
            other => Err(Error::Parse(format!("unknown kernel kind '{other}'"))),
        }
    }
}

/// Closed form of `sum_j C(n, 2j) C(j, s)`:
/// `2^(n-2s-1) (C(n-s, s) + C(n-s-1, s-1))`, zero for `s > n/2`.
pub fn kernel_alpha(n: i64, s: i64) -> Result<BigInt> {
    require_positive(n, "kernel_alpha")?;
    require_non_negative(s, "s")?;
    if s > n / 2 {
        return Ok(BigInt::zero());
    }
    let bracket = choose(n - s, s) + choose(n - s - 1, s - 1);
    Ok(scale_pow2(bracket, n - 2 * s - 1))
}

/// Closed form of `sum_j C(n, 2j-1) C(j, s)`:
/// `2^(n-2s-1) (C(n+1-s, s) + 2 C(n-s, s-1) + C(n-s-1, s-2))`,
/// zero for `s > (n+1)/2`.
pub fn kernel_alpha_prime(n: i64, s: i64) -> Result<BigInt> {
    require_positive(n, "kernel_alpha_prime")?;
    require_non_negative(s, "s")?;
    if s > (n + 1) / 2 {
        return Ok(BigInt::zero());
    }
    // At (n, s) = (1, 1) the last term is C(-1, -1), which must count as 1
    // for the closed form to agree with the defining sum (value 1).
    let last = if n - s - 1 == -1 && s - 2 == -1 {
        BigInt::one()
    } else {
        choose(n - s - 1, s - 2)
    };
    let bracket = choose(n + 1 - s, s) + choose(n - s, s - 1) * 2 + last;
    Ok(scale_pow2(bracket, n - 2 * s - 1))
}

/// Closed form of `sum_j C(n, 2j+1) C(j, s)`: `2^(n-2s-1) C(n-s-1, s)`,
/// zero for `s > (n-1)/2`.
pub fn kernel_alpha_dprime(n: i64, s: i64) -> Result<BigInt> {
    require_positive(n, "kernel_alpha_dprime")?;
    require_non_negative(s, "s")?;
    if s > (n - 1) / 2 {
        return Ok(BigInt::zero());
    }
    Ok(scale_pow2(choose(n - s - 1, s), n - 2 * s - 1))
}

/// Closed form dispatch on [`KernelKind`].
pub fn kernel_closed_form(kind: KernelKind, n: i64, s: i64) -> Result<BigInt> {
    match kind {
        KernelKind::Alpha => kernel_alpha(n, s),
        KernelKind::AlphaPrime => kernel_alpha_prime(n, s),
        KernelKind::AlphaDoublePrime => kernel_alpha_dprime(n, s),
    }
}

/// Literal defining sum over `j >= 0`, stopping once the row binomial
/// `C(n, 2j + offset)` leaves its support. Also defined at `n = 0`.
pub fn kernel_bruteforce(kind: KernelKind, n: i64, s: i64) -> Result<BigInt> {
    require_non_negative(n, "n")?;
    require_non_negative(s, "s")?;
    let offset: i64 = match kind {
        KernelKind::Alpha => 0,
        KernelKind::AlphaPrime => -1,
        KernelKind::AlphaDoublePrime => 1,
    };
    let mut acc = BigInt::zero();
    let mut j = 0i64;
    while 2 * j + offset <= n {
        // C(j, s) vanishes for j < s.
        if j >= s {
            acc += choose(n, 2 * j + offset) * choose(j, s);
        }
        j += 1;
    }
    Ok(acc)
}

/// Evaluation strategy for the identities that have both a closed form and
/// a literal sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumMode {
    ClosedForm,
    BruteForce,
}

/// `sum_{j=1}^{s} C(2k, 2j-1) C(k-j, s-j) = 2^(2s-1) C(k+s-1, 2s-1)`
/// for `0 <= s <= k`. Both sides are zero at `s = 0`.
pub fn lemma2_sum(k: i64, s: i64, mode: SumMode) -> Result<BigInt> {
    if s < 0 || s > k {
        return Err(Error::domain(format!(
            "lemma2_sum requires 0 <= s <= k, got k={k}, s={s}"
        )));
    }
    if s == 0 {
        return Ok(BigInt::zero());
    }
    Ok(match mode {
        SumMode::ClosedForm => scale_pow2(choose(k + s - 1, 2 * s - 1), 2 * s - 1),
        SumMode::BruteForce => (1..=s)
            .map(|j| choose(2 * k, 2 * j - 1) * choose(k - j, s - j))
            .sum(),
    })
}

/// `sum_{s=0}^{t} (-1)^s (C(2l+s, s) + C(2l+s-1, s-1)) C(2t+2l, t-s)`.
///
/// Vanishes for every `t >= 1`; equals 1 at `t = 0`.
pub fn cooc_sum(ell: i64, t: i64) -> Result<BigInt> {
    require_non_negative(ell, "ell")?;
    require_non_negative(t, "t")?;
    let mut acc = BigInt::zero();
    for s in 0..=t {
        let lower = if s == 0 {
            BigInt::zero()
        } else {
            choose(2 * ell + s - 1, s - 1)
        };
        let term = (choose(2 * ell + s, s) + lower) * choose(2 * t + 2 * ell, t - s);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// `sum_{k=0}^{l} (C(n+2k-1, k) - C(n+2k-1, k-1)) C(2(l-k), l-k) = C(n+2l, l)`.
///
/// The brute-force `k = 0, n = 0` summand uses `C(-1, 0) = 1` and
/// `C(-1, -1) = 0`.
pub fn cheie_sum(n: i64, ell: i64, mode: SumMode) -> Result<BigInt> {
    require_non_negative(n, "n")?;
    require_non_negative(ell, "ell")?;
    Ok(match mode {
        SumMode::ClosedForm => choose(n + 2 * ell, ell),
        SumMode::BruteForce => (0..=ell)
            .map(|k| {
                let top = n + 2 * k - 1;
                let weight = if top < 0 {
                    BigInt::one()
                } else {
                    choose(top, k) - choose(top, k - 1)
                };
                weight * choose(2 * (ell - k), ell - k)
            })
            .sum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(4, 2).unwrap(), big(6));
        assert_eq!(binomial(5, -1).unwrap(), big(0));
        assert_eq!(binomial(7, 7).unwrap(), big(1));
        assert_eq!(binomial(3, 4).unwrap(), big(0));
        assert!(matches!(binomial(-1, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn binomial_cache_agrees_with_multiplicative() {
        for n in [0usize, 1, 17, 300, 1023] {
            for k in [0usize, 1, n / 3, n / 2, n].into_iter().filter(|&k| k <= n) {
                assert_eq!(choose(n as i64, k as i64), multiplicative(n, k));
            }
        }
        assert_eq!(choose(2000, 3), big(2000 * 1999 * 1998 / 6));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(kernel_alpha(1, 0).unwrap(), big(1));
        for n in 1..20 {
            assert_eq!(
                kernel_alpha(n, 0).unwrap(),
                BigInt::one() << (n - 1) as usize
            );
        }
        assert_eq!(kernel_alpha(4, 1).unwrap(), big(8));
        assert_eq!(kernel_alpha(4, 3).unwrap(), big(0));
        assert!(kernel_alpha(0, 0).is_err());
    }

    #[test]
    fn alpha_prime_examples() {
        assert_eq!(kernel_alpha_prime(1, 0).unwrap(), big(1));
        assert_eq!(kernel_alpha_prime(1, 1).unwrap(), big(1));
        assert_eq!(kernel_alpha_prime(3, 0).unwrap(), big(4));
        assert_eq!(kernel_alpha_prime(3, 1).unwrap(), big(5));
        assert!(kernel_alpha_prime(-2, 0).is_err());
    }

    #[test]
    fn alpha_dprime_examples() {
        for n in 1..20 {
            assert_eq!(
                kernel_alpha_dprime(n, 0).unwrap(),
                BigInt::one() << (n - 1) as usize
            );
        }
        assert_eq!(kernel_alpha_dprime(5, 1).unwrap(), big(12));
        assert_eq!(kernel_alpha_dprime(2, 1).unwrap(), big(0));
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(kernel_bruteforce(KernelKind::Alpha, 4, 1).unwrap(), big(8));
        for s in 0..5 {
            assert_eq!(
                kernel_bruteforce(KernelKind::AlphaDoublePrime, 0, s).unwrap(),
                big(0)
            );
        }
        assert_eq!(
            kernel_bruteforce(KernelKind::AlphaPrime, 1, 1).unwrap(),
            big(1)
        );
        assert!(kernel_bruteforce(KernelKind::Alpha, -1, 0).is_err());
    }

    #[test]
    fn closed_forms_match_bruteforce_small_box() {
        for n in 1..=40 {
            for s in 0..=n {
                for kind in KernelKind::ALL {
                    assert_eq!(
                        kernel_closed_form(kind, n, s).unwrap(),
                        kernel_bruteforce(kind, n, s).unwrap(),
                        "{kind}({n},{s})"
                    );
                }
            }
        }
    }

    #[test]
    fn lemma2_examples() {
        assert_eq!(lemma2_sum(2, 1, SumMode::BruteForce).unwrap(), big(4));
        assert_eq!(lemma2_sum(2, 1, SumMode::ClosedForm).unwrap(), big(4));
        for k in 0..5 {
            assert_eq!(lemma2_sum(k, 0, SumMode::ClosedForm).unwrap(), big(0));
            assert_eq!(lemma2_sum(k, 0, SumMode::BruteForce).unwrap(), big(0));
        }
        assert_eq!(lemma2_sum(3, 2, SumMode::ClosedForm).unwrap(), big(32));
        assert_eq!(lemma2_sum(3, 2, SumMode::BruteForce).unwrap(), big(32));
        assert!(lemma2_sum(2, 3, SumMode::ClosedForm).is_err());
        assert!(lemma2_sum(2, -1, SumMode::BruteForce).is_err());
    }

    #[test]
    fn cooc_examples() {
        assert_eq!(cooc_sum(0, 1).unwrap(), big(0));
        assert_eq!(cooc_sum(2, 3).unwrap(), big(0));
        for ell in 0..6 {
            assert_eq!(cooc_sum(ell, 0).unwrap(), big(1));
        }
        assert!(cooc_sum(-1, 2).is_err());
    }

    #[test]
    fn cheie_examples() {
        for ell in 0..10 {
            assert_eq!(
                cheie_sum(0, ell, SumMode::BruteForce).unwrap(),
                choose(2 * ell, ell)
            );
        }
        assert_eq!(cheie_sum(1, 1, SumMode::BruteForce).unwrap(), big(3));
        assert_eq!(cheie_sum(1, 1, SumMode::ClosedForm).unwrap(), big(3));
        for n in 0..6 {
            assert_eq!(cheie_sum(n, 0, SumMode::BruteForce).unwrap(), big(1));
        }
        assert!(cheie_sum(0, -1, SumMode::ClosedForm).is_err());
    }

    #[test]
    fn kind_parses() {
        for kind in KernelKind::ALL {
            assert_eq!(kind.name().parse::<KernelKind>().unwrap(), kind);
        }
        assert!("beta".parse::<KernelKind>().is_err());
    }
}
