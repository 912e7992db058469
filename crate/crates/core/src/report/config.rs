use serde::Serialize;

use crate::arith::{is_prime, Rational, Rationals};
use crate::poly::{io, monomials_of_degree, Form};

use super::ConfigError;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_PRIMES: [u64; 2] = [7, 13];
pub const DEFAULT_MAX_RESAMPLES: u32 = 100;

/// Where the binary forms r (degree 2) and s (degree 3) come from.
#[derive(Debug, Clone, PartialEq)]
pub enum FormSource {
    Seed(u64),
    /// Coefficients on x₀ᵈ, x₀ᵈ⁻¹x₁, …, x₁ᵈ.
    Explicit { r_coeffs: Vec<Rational>, s_coeffs: Vec<Rational> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    pub source: FormSource,
    pub primes: Vec<u64>,
    pub max_resamples: u32,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            source: FormSource::Seed(DEFAULT_SEED),
            primes: DEFAULT_PRIMES.to_vec(),
            max_resamples: DEFAULT_MAX_RESAMPLES,
        }
    }
}

impl PipelineConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self { source: FormSource::Seed(seed), ..Self::default() }
    }

    pub fn explicit(r: &Form<Rationals>, s: &Form<Rationals>) -> Result<Self, ConfigError> {
        Ok(Self {
            source: FormSource::Explicit { r_coeffs: binary_coeffs(r, 2)?, s_coeffs: binary_coeffs(s, 3)? },
            ..Self::default()
        })
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.primes.is_empty() {
            return Err(ConfigError::NoPrimes);
        }
        for &p in &self.primes {
            if !is_prime(p) || p % 3 != 1 {
                return Err(ConfigError::BadPrime(p));
            }
        }
        if self.max_resamples == 0 {
            return Err(ConfigError::ZeroResamples);
        }
        if let FormSource::Explicit { r_coeffs, s_coeffs } = &self.source {
            if r_coeffs.len() != 3 || s_coeffs.len() != 4 {
                return Err(ConfigError::BadForm("r needs 3 coefficients and s needs 4".into()));
            }
        }
        Ok(())
    }

    pub fn echo(&self) -> ConfigEcho {
        let (seed, r, s) = match &self.source {
            FormSource::Seed(seed) => (Some(*seed), None, None),
            FormSource::Explicit { r_coeffs, s_coeffs } => (
                None,
                binary_form(r_coeffs).ok().map(|f| io::to_inline(&f)),
                binary_form(s_coeffs).ok().map(|f| io::to_inline(&f)),
            ),
        };
        ConfigEcho { seed, r, s, attempts: None, primes: self.primes.clone(), max_resamples: self.max_resamples }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub seed: Option<u64>,
    pub r: Option<String>,
    pub s: Option<String>,
    /// Draws used before the genericity predicate held.
    pub attempts: Option<u32>,
    pub primes: Vec<u64>,
    pub max_resamples: u32,
}

/// Parses a comma-separated prime list such as `7,13`.
pub fn parse_primes(text: &str) -> Result<Vec<u64>, ConfigError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|_| ConfigError::Parse(format!("not a prime: {t:?}"))))
        .collect()
}

/// Coefficient list of a binary form of the given degree, leading term first.
pub fn binary_coeffs(form: &Form<Rationals>, degree: u32) -> Result<Vec<Rational>, ConfigError> {
    if form.num_vars() != 2 {
        return Err(ConfigError::BadForm(format!("expected a form in x0, x1, got {} variables", form.num_vars())));
    }
    if !form.is_zero() && form.degree() != Some(degree) {
        return Err(ConfigError::BadForm(format!("expected degree {degree}, got {:?}", form.degree())));
    }
    Ok(monomials_of_degree(2, degree).iter().map(|m| form.coeff(m)).collect())
}

/// Inverse of [`binary_coeffs`]; the degree is one less than the length.
pub fn binary_form(coeffs: &[Rational]) -> Result<Form<Rationals>, ConfigError> {
    let degree = coeffs.len().checked_sub(1).ok_or_else(|| ConfigError::BadForm("no coefficients".into()))? as u32;
    let terms: Vec<(Vec<u32>, Rational)> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| (vec![degree - k as u32, k as u32], c.clone()))
        .collect();
    Form::from_terms(Rationals, 2, terms).map_err(|e| ConfigError::BadForm(e.to_string()))
}
