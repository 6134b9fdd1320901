//! The `trigpow` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
//! Results go to `out`, diagnostics to `err`.

mod render;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::error::{Error, Result};
use crate::expansions::{cos_multiple_angle, power_fourier, sin_multiple_angle};
use crate::kernels::{
    cheie_sum, cooc_sum, kernel_bruteforce, kernel_closed_form, lemma2_sum, KernelKind, SumMode,
};
use crate::reciprocal::{ReciprocalParams, ReciprocalSeriesDoc, Target};
use crate::trigpoly::Base;
use crate::verify::{DEFAULT_SAMPLES, DEFAULT_TOLERANCE};
use suite::{run_suite, Suite};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "trigpow",
    version,
    about = "Exact power-reduction and multiple-angle expansions, reciprocal Fourier series, and their oracles"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BaseArg {
    Cos,
    Sin,
}

impl From<BaseArg> for Base {
    fn from(b: BaseArg) -> Base {
        match b {
            BaseArg::Cos => Base::Cos,
            BaseArg::Sin => Base::Sin,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Alpha,
    #[value(name = "alpha_prime", alias = "alpha-prime")]
    AlphaPrime,
    #[value(name = "alpha_dprime", alias = "alpha-dprime")]
    AlphaDprime,
}

impl From<KindArg> for KernelKind {
    fn from(k: KindArg) -> KernelKind {
        match k {
            KindArg::Alpha => KernelKind::Alpha,
            KindArg::AlphaPrime => KernelKind::AlphaPrime,
            KindArg::AlphaDprime => KernelKind::AlphaDoublePrime,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LemmaId {
    #[value(name = "2")]
    Two,
    Cooc,
    Cheie,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TargetArg {
    Cos,
    Sin,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one of the alpha kernels (closed form, or the defining sum with --brute).
    Kernel {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[arg(long)]
        brute: bool,
    },
    /// Evaluate a binomial-sum identity.
    Lemma(LemmaArgs),
    /// cos(nt) or sin(nt) as a polynomial in cos t / sin t.
    MultipleAngle {
        #[arg(long, value_enum)]
        base: BaseArg,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Fourier form of cos^n t or sin^n t.
    PowerFourier {
        #[arg(long, value_enum)]
        base: BaseArg,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Truncated Fourier series of 1/(a - cos t) or 1/(a - sin t).
    Reciprocal {
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long)]
        terms: u64,
        /// Also report the truncation tail bound.
        #[arg(long)]
        tail_bound: bool,
    },
    /// Run the oracle suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

#[derive(Debug, Args)]
struct LemmaArgs {
    #[arg(long, value_enum)]
    id: LemmaId,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    ell: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
    #[arg(long)]
    brute: bool,
}

fn required(v: Option<i64>, name: &str, lemma: &str) -> Result<i64> {
    v.ok_or_else(|| Error::domain(format!("lemma {lemma} requires --{name}")))
}

fn mode_of(brute: bool) -> SumMode {
    if brute {
        SumMode::BruteForce
    } else {
        SumMode::ClosedForm
    }
}

fn mode_name(mode: SumMode) -> &'static str {
    match mode {
        SumMode::ClosedForm => "closed_form",
        SumMode::BruteForce => "brute_force",
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = stream.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "trigpow: {e}");
            EXIT_USAGE
        }
    }
}

fn line(s: String) -> String {
    if s.ends_with('\n') {
        s
    } else {
        s + "\n"
    }
}

fn execute(cli: &Cli) -> Result<(String, u8)> {
    let fmt = cli.format;
    let text = match &cli.command {
        Command::Kernel { kind, n, s, brute } => {
            let kind = KernelKind::from(*kind);
            let mode = mode_of(*brute);
            let value = match mode {
                SumMode::ClosedForm => kernel_closed_form(kind, *n, *s)?,
                SumMode::BruteForce => kernel_bruteforce(kind, *n, *s)?,
            };
            match fmt {
                OutputFormat::Json => json!({
                    "kind": kind.name(), "n": n, "s": s,
                    "mode": mode_name(mode), "value": value.to_string(),
                })
                .to_string(),
                OutputFormat::Csv => {
                    format!(
                        "kind,n,s,mode,value\n{kind},{n},{s},{},{value}",
                        mode_name(mode)
                    )
                }
                OutputFormat::Latex => {
                    let sym = match kind {
                        KernelKind::Alpha => "\\alpha",
                        KernelKind::AlphaPrime => "\\alpha'",
                        KernelKind::AlphaDoublePrime => "\\alpha''",
                    };
                    format!("{sym}_{{{n},{s}}} = {value}")
                }
                OutputFormat::Text => format!("{kind}({n},{s}) = {value}"),
            }
        }
        Command::Lemma(args) => lemma(args, fmt)?,
        Command::MultipleAngle { base, n } => {
            let base = Base::from(*base);
            let p = match base {
                Base::Cos => cos_multiple_angle(*n)?,
                Base::Sin => sin_multiple_angle(*n)?,
            };
            let n = *n as u32;
            match fmt {
                OutputFormat::Json => p.to_json(),
                OutputFormat::Csv => render::power_csv(&p),
                OutputFormat::Latex => render::multiple_angle_latex(base, n, &p),
                OutputFormat::Text => render::multiple_angle_text(base, n, &p),
            }
        }
        Command::PowerFourier { base, n } => {
            let base = Base::from(*base);
            let p = power_fourier(base, *n)?;
            let n = *n as u32;
            match fmt {
                OutputFormat::Json => p.to_json(),
                OutputFormat::Csv => render::trig_csv(&p),
                OutputFormat::Latex => render::power_fourier_latex(base, n, &p),
                OutputFormat::Text => render::power_fourier_text(base, n, &p),
            }
        }
        Command::Reciprocal {
            target,
            a,
            terms,
            tail_bound,
        } => {
            let params = ReciprocalParams::new(*a)?;
            let target = match target {
                TargetArg::Cos => Target::Cos,
                TargetArg::Sin => Target::Sin,
            };
            reciprocal(
                &ReciprocalSeriesDoc::build(target, &params, *terms),
                target,
                *tail_bound,
                fmt,
            )
        }
        Command::Verify {
            suite,
            tol,
            samples,
        } => {
            if !(tol.is_finite() && *tol >= 0.0) {
                return Err(Error::domain(format!(
                    "--tol must be a non-negative number, got {tol}"
                )));
            }
            let checks = run_suite(*suite, *tol, *samples)?;
            let passed = checks.iter().all(|c| c.passed);
            let body = match fmt {
                OutputFormat::Json => json!({
                    "suite": suite, "tol": tol, "samples": samples,
                    "passed": passed, "checks": checks,
                })
                .to_string(),
                OutputFormat::Csv => {
                    let mut s = String::from("check,passed,detail\n");
                    for c in &checks {
                        s.push_str(&format!("{},{},\"{}\"\n", c.name, c.passed, c.detail));
                    }
                    s
                }
                OutputFormat::Text | OutputFormat::Latex => {
                    let mut s = String::new();
                    for c in &checks {
                        let tag = if c.passed { "PASS" } else { "FAIL" };
                        s.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
                    }
                    let failed = checks.iter().filter(|c| !c.passed).count();
                    s.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
                    s
                }
            };
            let code = if passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
            return Ok((line(body), code));
        }
    };
    Ok((line(text), EXIT_OK))
}

fn lemma(args: &LemmaArgs, fmt: OutputFormat) -> Result<String> {
    let mode = mode_of(args.brute);
    let (name, params, value): (&str, Vec<(&str, i64)>, BigInt) = match args.id {
        LemmaId::Two => {
            let (k, s) = (required(args.k, "k", "2")?, required(args.s, "s", "2")?);
            ("2", vec![("k", k), ("s", s)], lemma2_sum(k, s, mode)?)
        }
        LemmaId::Cooc => {
            let (ell, t) = (
                required(args.ell, "ell", "cooc")?,
                required(args.t, "t", "cooc")?,
            );
            // The alternating sum has no separate closed form.
            ("cooc", vec![("ell", ell), ("t", t)], cooc_sum(ell, t)?)
        }
        LemmaId::Cheie => {
            let (n, ell) = (
                required(args.n, "n", "cheie")?,
                required(args.ell, "ell", "cheie")?,
            );
            (
                "cheie",
                vec![("n", n), ("ell", ell)],
                cheie_sum(n, ell, mode)?,
            )
        }
    };
    let mode = if matches!(args.id, LemmaId::Cooc) {
        SumMode::BruteForce
    } else {
        mode
    };
    let joined = params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";");
    Ok(match fmt {
        OutputFormat::Json => {
            let map: serde_json::Map<String, serde_json::Value> = params
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect();
            json!({
                "lemma": name, "mode": mode_name(mode),
                "params": map, "value": value.to_string(),
            })
            .to_string()
        }
        OutputFormat::Csv => format!(
            "lemma,mode,params,value\n{name},{},{joined},{value}",
            mode_name(mode)
        ),
        OutputFormat::Text | OutputFormat::Latex => {
            let args = params
                .iter()
                .map(|(_, v)| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("lemma_{name}({args}) = {value}")
        }
    })
}

fn reciprocal(
    doc: &ReciprocalSeriesDoc,
    target: Target,
    show_tail: bool,
    fmt: OutputFormat,
) -> String {
    let func = match target {
        Target::Cos => "cos",
        Target::Sin => "sin",
    };
    let s = &doc.series;
    match fmt {
        OutputFormat::Json => serde_json::to_string(doc).expect("series serializes"),
        OutputFormat::Csv => {
            let mut o = String::from("family,harmonic,value\n");
            o.push_str(&format!("constant,0,{}\n", s.constant));
            for (i, c) in s.cos.iter().enumerate() {
                o.push_str(&format!("cos,{},{c}\n", i + 1));
            }
            for (i, b) in s.sin.iter().enumerate() {
                o.push_str(&format!("sin,{},{b}\n", i + 1));
            }
            if show_tail {
                o.push_str(&format!("tail_bound,{},{}\n", doc.n, s.tail_bound));
            }
            o
        }
        OutputFormat::Latex => {
            let mut o = format!(
                "\\frac{{1}}{{{} - \\{func} t}} \\approx {}",
                doc.a, s.constant
            );
            let fams = [("cos", &s.cos), ("sin", &s.sin)];
            for h in 1..=doc.n as usize {
                for (fam, v) in fams {
                    if let Some(&c) = v.get(h - 1).filter(|c| **c != 0.0) {
                        let sign = if c < 0.0 { "-" } else { "+" };
                        let arg = if h == 1 {
                            "t".to_string()
                        } else {
                            format!("{h}t")
                        };
                        o.push_str(&format!(" {sign} {}\\{fam}({arg})", c.abs()));
                    }
                }
            }
            if show_tail {
                o.push_str(&format!(" \\quad (\\text{{tail}} \\le {})", s.tail_bound));
            }
            o
        }
        OutputFormat::Text => {
            let mut o = format!("1/(a - {func} t), a = {}, N = {}\n", doc.a, doc.n);
            o.push_str(&format!("constant = {}\n", s.constant));
            for h in 1..=doc.n as usize {
                if let Some(c) = s.cos.get(h - 1) {
                    o.push_str(&format!("cos[{h}] = {c}\n"));
                }
                if let Some(b) = s.sin.get(h - 1) {
                    o.push_str(&format!("sin[{h}] = {b}\n"));
                }
            }
            if show_tail {
                o.push_str(&format!("tail_bound = {}\n", s.tail_bound));
            }
            o
        }
    }
}
