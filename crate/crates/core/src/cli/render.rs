//! Text, LaTeX and CSV renderings of exact expansions.

use crate::trigpoly::{Base, PowerExpansion, Rational, TrigPolynomial};

#[derive(Clone, Copy)]
enum Style {
    Text,
    Latex,
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Joins signed terms as `a + b - c`. A term without a basis is a bare
/// number.
fn join_terms(terms: &[(Rational, Option<String>)], style: Style) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, basis)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let num = match style {
            Style::Text => mag.to_string(),
            Style::Latex => latex_rational(&mag),
        };
        match basis {
            None => out.push_str(&num),
            Some(b) if mag == Rational::one() => out.push_str(b),
            Some(b) => match style {
                Style::Text => {
                    out.push_str(&num);
                    out.push('*');
                    out.push_str(b);
                }
                Style::Latex => {
                    out.push_str(&num);
                    out.push_str(b);
                }
            },
        }
    }
    out
}

fn harmonic(family: &str, n: u64, style: Style) -> String {
    let slash = if matches!(style, Style::Latex) {
        "\\"
    } else {
        ""
    };
    if n == 1 {
        format!("{slash}{family}(t)")
    } else {
        format!("{slash}{family}({n}t)")
    }
}

fn trig_terms(p: &TrigPolynomial, style: Style) -> Vec<(Rational, Option<String>)> {
    let mut terms = Vec::new();
    for n in (1..=p.max_harmonic()).rev() {
        if let Some(c) = p.cos_terms().get(&n) {
            terms.push((c.clone(), Some(harmonic("cos", n, style))));
        }
        if let Some(b) = p.sin_terms().get(&n) {
            terms.push((b.clone(), Some(harmonic("sin", n, style))));
        }
    }
    if !p.constant_term().is_zero() {
        terms.push((p.constant_term().clone(), None));
    }
    terms
}

fn power(base: Base, e: u32, style: Style) -> Option<String> {
    match (e, style) {
        (0, _) => None,
        (1, Style::Text) => Some(format!("{base}(t)")),
        (_, Style::Text) => Some(format!("{base}(t)^{e}")),
        (1, Style::Latex) => Some(format!("\\{base}(t)")),
        (_, Style::Latex) => Some(format!("\\{base}^{{{e}}}(t)")),
    }
}

fn power_rhs(p: &PowerExpansion, style: Style) -> String {
    let terms: Vec<_> = p
        .coeffs()
        .iter()
        .map(|(&e, c)| (c.clone(), power(p.base(), e, style)))
        .collect();
    let body = join_terms(&terms, style);
    match (p.cos_cofactor(), style) {
        (false, _) => body,
        (true, Style::Text) => format!("cos(t)*({body})"),
        (true, Style::Latex) => format!("\\cos(t)\\left({body}\\right)"),
    }
}

/// `cos^4(t) = 1/8*cos(4t) + 1/2*cos(2t) + 3/8`
pub fn power_fourier_text(base: Base, n: u32, p: &TrigPolynomial) -> String {
    format!(
        "{base}^{n}(t) = {}",
        join_terms(&trig_terms(p, Style::Text), Style::Text)
    )
}

pub fn power_fourier_latex(base: Base, n: u32, p: &TrigPolynomial) -> String {
    format!(
        "\\{base}^{{{n}}}(t) = {}",
        join_terms(&trig_terms(p, Style::Latex), Style::Latex)
    )
}

/// `family,harmonic,coefficient` rows, constant first, then ascending.
pub fn trig_csv(p: &TrigPolynomial) -> String {
    let mut out = String::from("family,harmonic,coefficient\n");
    out.push_str(&format!("constant,0,{}\n", p.constant_term()));
    for (n, c) in p.cos_terms() {
        out.push_str(&format!("cos,{n},{c}\n"));
    }
    for (n, b) in p.sin_terms() {
        out.push_str(&format!("sin,{n},{b}\n"));
    }
    out
}

/// `sin(3t) = 3*sin(t) - 4*sin(t)^3`
pub fn multiple_angle_text(base: Base, n: u32, p: &PowerExpansion) -> String {
    format!(
        "{} = {}",
        harmonic(base.name(), n as u64, Style::Text),
        power_rhs(p, Style::Text)
    )
}

pub fn multiple_angle_latex(base: Base, n: u32, p: &PowerExpansion) -> String {
    format!(
        "{} = {}",
        harmonic(base.name(), n as u64, Style::Latex),
        power_rhs(p, Style::Latex)
    )
}

/// `exponent,coefficient,cos_cofactor` rows in ascending exponent order.
pub fn power_csv(p: &PowerExpansion) -> String {
    let mut out = String::from("exponent,coefficient,cos_cofactor\n");
    for (e, c) in p.coeffs() {
        out.push_str(&format!("{e},{c},{}\n", p.cos_cofactor()));
    }
    out
}
