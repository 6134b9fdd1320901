//! Oracle suites behind `trigpow verify`.
//!
//! Exact checks compare closed forms against their brute-force or
//! recurrence oracles over moderate boxes; numeric checks compare against
//! trapezoidal quadrature with the caller's tolerance.

use std::f64::consts::TAU;

use clap::ValueEnum;
use serde::Serialize;

use crate::error::Result;
use crate::expansions::{
    chebyshev_oracle, cos_multiple_angle, power_fourier, power_product_oracle, sin_multiple_angle,
    to_fourier,
};
use crate::kernels::{
    cheie_sum, cooc_sum, kernel_bruteforce, kernel_closed_form, lemma2_sum, KernelKind, SumMode,
};
use crate::reciprocal::ReciprocalParams;
use crate::trigpoly::{Base, Rational, TrigPolynomial};
use crate::verify::{compare, numeric_fourier, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Kernels,
    Lemmas,
    Expansions,
    Reciprocal,
    Quadrature,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<VerificationReport>,
}

impl CheckOutcome {
    fn exact(name: &str, failure: Option<String>, detail: &str) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: failure.is_none(),
            detail: failure.unwrap_or_else(|| detail.to_string()),
            report: None,
        }
    }

    fn numeric(name: &str, report: VerificationReport, tol: f64) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: report.passed(tol),
            detail: format!("max_abs_error={:e} tol={tol:e}", report.max_abs_error),
            report: Some(report),
        }
    }

    fn scalar(name: &str, worst: f64, tol: f64) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: worst <= tol,
            detail: format!("max_abs_error={worst:e} tol={tol:e}"),
            report: None,
        }
    }
}

const KERNEL_MAX_N: i64 = 60;
const LEMMA_MAX: i64 = 40;
const CHEBYSHEV_MAX_N: i64 = 80;
const POWER_MAX_N: i64 = 24;
const POINTWISE_MAX_N: i64 = 16;
const POINTWISE_SAMPLES: usize = 1000;
const RECIPROCAL_HARMONICS: usize = 25;

pub fn run_suite(suite: Suite, tol: f64, samples: usize) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Kernels {
        out.extend(kernel_checks()?);
    }
    if all || suite == Suite::Lemmas {
        out.extend(lemma_checks()?);
    }
    if all || suite == Suite::Expansions {
        out.extend(expansion_checks(tol)?);
    }
    if all || suite == Suite::Reciprocal {
        out.extend(reciprocal_checks(tol, samples)?);
    }
    if all || suite == Suite::Quadrature {
        out.extend(quadrature_checks(tol, samples)?);
    }
    Ok(out)
}

fn first_failure<I>(cases: I) -> Result<Option<String>>
where
    I: IntoIterator<Item = Result<Option<String>>>,
{
    for case in cases {
        if let Some(msg) = case? {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

fn kernel_checks() -> Result<Vec<CheckOutcome>> {
    let box_cases = (1..=KERNEL_MAX_N).flat_map(|n| (0..=n).map(move |s| (n, s)));
    let closed = first_failure(box_cases.clone().flat_map(|(n, s)| {
        KernelKind::ALL.into_iter().map(move |kind| {
            let (c, b) = (
                kernel_closed_form(kind, n, s)?,
                kernel_bruteforce(kind, n, s)?,
            );
            Ok((c != b).then(|| format!("{kind}({n},{s}): closed {c} != brute {b}")))
        })
    }))?;
    let recurrences = first_failure(box_cases.map(|(n, s)| {
        let alpha = |n, s| kernel_bruteforce(KernelKind::Alpha, n, s);
        let lhs = kernel_closed_form(KernelKind::Alpha, n, s)?
            + kernel_closed_form(KernelKind::AlphaPrime, n, s)?;
        if lhs != kernel_closed_form(KernelKind::Alpha, n + 1, s)? {
            return Ok(Some(format!("alpha recurrence fails at ({n},{s})")));
        }
        if s >= 1 {
            let rhs =
                kernel_closed_form(KernelKind::AlphaPrime, n, s)? + alpha(n, s)? + alpha(n, s - 1)?;
            if kernel_closed_form(KernelKind::AlphaPrime, n + 1, s)? != rhs {
                return Ok(Some(format!("alpha' recurrence fails at ({n},{s})")));
            }
            let prev = kernel_bruteforce(KernelKind::AlphaDoublePrime, n - 1, s)?;
            if kernel_closed_form(KernelKind::AlphaDoublePrime, n, s)? != prev + alpha(n - 1, s)? {
                return Ok(Some(format!("alpha'' recurrence fails at ({n},{s})")));
            }
        }
        Ok(None)
    }))?;
    Ok(vec![
        CheckOutcome::exact(
            "kernels/closed-vs-brute",
            closed,
            &format!("3 kernels, 1<=n<={KERNEL_MAX_N}, 0<=s<=n"),
        ),
        CheckOutcome::exact(
            "kernels/recurrences",
            recurrences,
            &format!("1<=n<={KERNEL_MAX_N}, 0<=s<=n"),
        ),
    ])
}

fn lemma_checks() -> Result<Vec<CheckOutcome>> {
    let lemma2 = first_failure((0..=LEMMA_MAX).flat_map(|k| {
        (0..=k).map(move |s| {
            let c = lemma2_sum(k, s, SumMode::ClosedForm)?;
            let b = lemma2_sum(k, s, SumMode::BruteForce)?;
            Ok((c != b).then(|| format!("lemma2({k},{s}): {c} != {b}")))
        })
    }))?;
    let cooc = first_failure((0..=LEMMA_MAX).flat_map(|ell| {
        (1..=LEMMA_MAX).map(move |t| {
            let v = cooc_sum(ell, t)?;
            Ok((v != 0.into()).then(|| format!("cooc({ell},{t}) = {v}")))
        })
    }))?;
    let cheie = first_failure((0..=LEMMA_MAX).flat_map(|n| {
        (0..=LEMMA_MAX).map(move |ell| {
            let c = cheie_sum(n, ell, SumMode::ClosedForm)?;
            let b = cheie_sum(n, ell, SumMode::BruteForce)?;
            Ok((c != b).then(|| format!("cheie({n},{ell}): {c} != {b}")))
        })
    }))?;
    Ok(vec![
        CheckOutcome::exact("lemmas/lemma2", lemma2, &format!("0<=s<=k<={LEMMA_MAX}")),
        CheckOutcome::exact(
            "lemmas/cooc",
            cooc,
            &format!("0<=ell<={LEMMA_MAX}, 1<=t<={LEMMA_MAX}"),
        ),
        CheckOutcome::exact("lemmas/cheie", cheie, &format!("0<=n,ell<={LEMMA_MAX}")),
    ])
}

fn expansion_checks(tol: f64) -> Result<Vec<CheckOutcome>> {
    let chebyshev =
        first_failure((1..=CHEBYSHEV_MAX_N).map(|n| {
            Ok((cos_multiple_angle(n)? != chebyshev_oracle(n)?).then(|| format!("n={n}")))
        }))?;
    let product = first_failure((0..=POWER_MAX_N).flat_map(|n| {
        [Base::Cos, Base::Sin].into_iter().map(move |base| {
            Ok((power_fourier(base, n)? != power_product_oracle(base, n)?)
                .then(|| format!("{base}^{n}")))
        })
    }))?;
    let round_trip = first_failure((1..=POWER_MAX_N).map(|n| {
        let single = TrigPolynomial::cos_harmonic(n as u64, Rational::one());
        Ok((to_fourier(&cos_multiple_angle(n)?)? != single).then(|| format!("cos({n}t)")))
    }))?;

    let mut worst: f64 = 0.0;
    for n in 0..=POINTWISE_MAX_N {
        let (cp, sp) = (power_fourier(Base::Cos, n)?, power_fourier(Base::Sin, n)?);
        let multi = if n >= 1 {
            Some((cos_multiple_angle(n)?, sin_multiple_angle(n)?))
        } else {
            None
        };
        for i in 0..POINTWISE_SAMPLES {
            let t = TAU * i as f64 / POINTWISE_SAMPLES as f64;
            let e = n as i32;
            worst = worst
                .max((cp.eval(t) - t.cos().powi(e)).abs())
                .max((sp.eval(t) - t.sin().powi(e)).abs());
            if let Some((cm, sm)) = &multi {
                let nt = n as f64 * t;
                worst = worst
                    .max((cm.eval(t) - nt.cos()).abs())
                    .max((sm.eval(t) - nt.sin()).abs());
            }
        }
    }

    Ok(vec![
        CheckOutcome::exact(
            "expansions/cos-multiple-angle-vs-chebyshev",
            chebyshev,
            &format!("1<=n<={CHEBYSHEV_MAX_N}"),
        ),
        CheckOutcome::exact(
            "expansions/power-fourier-vs-product",
            product,
            &format!("0<=n<={POWER_MAX_N}, both bases"),
        ),
        CheckOutcome::exact(
            "expansions/round-trip",
            round_trip,
            &format!("1<=n<={POWER_MAX_N}"),
        ),
        CheckOutcome::scalar("expansions/pointwise", worst, tol),
    ])
}

fn reciprocal_checks(tol: f64, samples: usize) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for a in [1.5, -1.5, 2.0, -2.0, 3f64.sqrt(), 10.0] {
        let p = ReciprocalParams::new(a)?;
        let q = numeric_fourier(|t| 1.0 / (a - t.cos()), RECIPROCAL_HARMONICS, samples)?;
        let report = compare(
            &p.cos_series(RECIPROCAL_HARMONICS as u64),
            &q,
            RECIPROCAL_HARMONICS,
        )?;
        out.push(CheckOutcome::numeric(
            &format!("reciprocal/cos a={a}"),
            report,
            tol,
        ));
    }
    let p = ReciprocalParams::new(2.0)?;
    let q = numeric_fourier(|t| 1.0 / (2.0 - t.sin()), RECIPROCAL_HARMONICS, samples)?;
    let report = compare(
        &p.sin_series(RECIPROCAL_HARMONICS as u64),
        &q,
        RECIPROCAL_HARMONICS,
    )?;
    out.push(CheckOutcome::numeric("reciprocal/sin a=2", report, tol));

    let mut worst_oracle: f64 = 0.0;
    for a in [1.5, -1.5, 2.0, -2.0, 3f64.sqrt(), 10.0] {
        let p = ReciprocalParams::new(a)?;
        for n in 0..=RECIPROCAL_HARMONICS as u64 {
            worst_oracle = worst_oracle.max((p.partial_sum_oracle(n, 200) - p.cos_coeff(n)).abs());
        }
    }
    out.push(CheckOutcome::scalar(
        "reciprocal/partial-sum-oracle K=200",
        worst_oracle,
        tol,
    ));
    Ok(out)
}

fn quadrature_checks(tol: f64, samples: usize) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for (base, n) in [
        (Base::Cos, 4),
        (Base::Cos, 7),
        (Base::Sin, 5),
        (Base::Sin, 8),
    ] {
        let exact = power_fourier(base, n)?;
        let h = exact.max_harmonic() as usize;
        let q = numeric_fourier(|t| base.eval(t).powi(n as i32), h, samples.max(2 * h + 2))?;
        out.push(CheckOutcome::numeric(
            &format!("quadrature/{base}^{n}"),
            compare(&exact, &q, h)?,
            tol,
        ));
    }
    Ok(out)
}
