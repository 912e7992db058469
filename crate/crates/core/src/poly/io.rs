//! Text and JSON encodings of forms with rational coefficients.
//!
//! Text: one term per line, `coefficient * x0^a x1^b x2^c x3^d`. The parser
//! is more lenient than the writer: terms may also be joined with `+`/`-`
//! on one line, factors may be separated by `*`, a missing exponent means 1
//! and a missing coefficient means 1.
//!
//! JSON: `{"terms": [{"exp": [a, b, c, d], "num": n, "den": d}]}` where
//! `num`/`den` are JSON integers, or decimal strings when they exceed i64.

use std::convert::Infallible;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{CycNum, Cyclotomic3, Rational, Rationals};

use super::{Form, PolyError};

pub fn to_text(form: &Form<Rationals>) -> String {
    let mut out = String::new();
    for (m, c) in form.terms() {
        let _ = writeln!(out, "{c} * {m}");
    }
    out
}

/// One-line rendering, e.g. `2*x0^2 + 3*x0*x1 - x1^2`.
pub fn to_inline(form: &Form<Rationals>) -> String {
    if form.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in form.terms().enumerate() {
        let neg = c.is_negative();
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let vars: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        if vars.is_empty() {
            let _ = write!(out, "{abs}");
        } else if abs.is_one() {
            out.push_str(&vars.join("*"));
        } else {
            let _ = write!(out, "{abs}*{}", vars.join("*"));
        }
    }
    out
}

fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let bad = || PolyError::Parse(format!("bad coefficient `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn parse_term(term: &str, negative: bool, num_vars: usize) -> Result<(Vec<u32>, Rational), PolyError> {
    let mut coeff = Rational::one();
    let mut exps = vec![0u32; num_vars];
    for tok in term.split(|c: char| c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        if let Some(rest) = tok.strip_prefix('x') {
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let idx: usize = idx.parse().map_err(|_| PolyError::Parse(format!("bad variable `{tok}`")))?;
            let exp: u32 = exp.parse().map_err(|_| PolyError::Parse(format!("bad exponent `{tok}`")))?;
            if idx >= num_vars {
                return Err(PolyError::VariableOutOfRange { index: idx, num_vars });
            }
            exps[idx] += exp;
        } else {
            coeff *= parse_rational(tok)?;
        }
    }
    if negative {
        coeff = -coeff;
    }
    Ok((exps, coeff))
}

/// Parses a rational form in `num_vars` variables.
pub fn parse_text(text: &str, num_vars: usize) -> Result<Form<Rationals>, PolyError> {
    let mut terms = Vec::new();
    for line in text.lines() {
        let mut current = String::new();
        let mut negative = false;
        let mut prev_significant: Option<char> = None;
        let mut dangling = false;
        for ch in line.chars() {
            // A sign is a term separator unless it follows `^` or `/`.
            let is_sep = (ch == '+' || ch == '-') && !matches!(prev_significant, Some('^') | Some('/'));
            if is_sep {
                if !current.trim().is_empty() {
                    terms.push(parse_term(&current, negative, num_vars)?);
                    negative = false;
                }
                current.clear();
                dangling = true;
                if ch == '-' {
                    negative = !negative;
                }
            } else {
                current.push(ch);
            }
            if !ch.is_whitespace() {
                prev_significant = Some(ch);
            }
        }
        if !current.trim().is_empty() {
            terms.push(parse_term(&current, negative, num_vars)?);
        } else if dangling {
            return Err(PolyError::Parse(format!("dangling sign in `{}`", line.trim())));
        }
    }
    Form::from_terms(Rationals, num_vars, terms)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_i64().map_or_else(|| JsonInt::Big(n.to_string()), JsonInt::Small)
    }

    fn to_bigint(&self) -> Result<BigInt, PolyError> {
        match self {
            JsonInt::Small(n) => Ok(BigInt::from(*n)),
            JsonInt::Big(s) => s.parse().map_err(|_| PolyError::Parse(format!("bad integer `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub exp: Vec<u32>,
    pub num: JsonInt,
    pub den: JsonInt,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormJson {
    pub terms: Vec<JsonTerm>,
}

impl FormJson {
    pub fn from_form(form: &Form<Rationals>) -> Self {
        let terms = form
            .terms()
            .map(|(m, c)| JsonTerm {
                exp: m.exponents().to_vec(),
                num: JsonInt::from_bigint(c.numer()),
                den: JsonInt::from_bigint(c.denom()),
            })
            .collect();
        Self { terms }
    }

    pub fn to_form(&self, num_vars: usize) -> Result<Form<Rationals>, PolyError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let den = t.den.to_bigint()?;
            if den.is_zero() {
                return Err(PolyError::Parse("zero denominator".into()));
            }
            terms.push((t.exp.clone(), Rational::new(t.num.to_bigint()?, den)));
        }
        Form::from_terms(Rationals, num_vars, terms)
    }
}

pub fn to_json(form: &Form<Rationals>) -> String {
    serde_json::to_string(&FormJson::from_form(form)).expect("serializable")
}

pub fn parse_json(text: &str, num_vars: usize) -> Result<Form<Rationals>, PolyError> {
    let parsed: FormJson = serde_json::from_str(text).map_err(|e| PolyError::Parse(e.to_string()))?;
    parsed.to_form(num_vars)
}

/// Accepts either encoding: JSON when the input starts with `{`.
pub fn parse_any(text: &str, num_vars: usize) -> Result<Form<Rationals>, PolyError> {
    if text.trim_start().starts_with('{') {
        parse_json(text, num_vars)
    } else {
        parse_text(text, num_vars)
    }
}

/// Embeds a rational form into ℚ(ζ₃).
pub fn to_cyclotomic(form: &Form<Rationals>) -> Form<Cyclotomic3> {
    form.map_coeffs(Cyclotomic3, |c| Ok::<_, Infallible>(CycNum::from_rational(c.clone())))
        .unwrap_or_else(|e| match e {})
}
