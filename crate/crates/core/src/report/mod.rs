//! The end-to-end verification pipeline and its report.

mod config;
mod pipeline;
mod render;

pub use config::{
    binary_coeffs, binary_form, parse_primes, ConfigEcho, FormSource, PipelineConfig, DEFAULT_MAX_RESAMPLES,
    DEFAULT_PRIMES, DEFAULT_SEED,
};
pub use pipeline::{
    certify_all, default_zeta_image, draw_forms, expected, genericity, run_pipeline, select_forms, Genericity,
    SelectedForms, COEFF_RANGE,
};
pub use render::{render_report, Check, Format, Status, Summary, Value, VerificationReport};

use thiserror::Error;

use crate::curve::CurveError;
use crate::group::GroupError;
use crate::invariants::InvariantError;
use crate::ledger::LedgerError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("no primes configured")]
    NoPrimes,
    #[error("{0} is not a prime congruent to 1 mod 3")]
    BadPrime(u64),
    #[error("max resamples must be positive")]
    ZeroResamples,
    #[error("bad form: {0}")]
    BadForm(String),
    #[error("{0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("configuration error: {0}")]
    Config(#[from] ConfigError),
    #[error("no generic (r, s) found in {attempts} attempts")]
    ExhaustedResamples { attempts: u32 },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Ledger(#[from] LedgerError),
}
