//! Sparse homogeneous polynomials over an exact field.

mod action;
mod form;
pub mod io;
mod monomial;
mod resultant;

pub use action::{apply_action, CoordinateAction};
pub use form::{build_curve_forms, jacobian_at, Form};
pub use monomial::{monomials_of_degree, Monomial};
pub use resultant::{is_squarefree_binary, resultant_binary, sylvester_matrix};

use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("form is not homogeneous: degrees {first} and {other}")]
    NotHomogeneous { first: u32, other: u32 },
    #[error("expected a form of degree {expected}, got degree {got}")]
    DegreeMismatch { expected: u32, got: u32 },
    #[error("variable x{index} out of range for {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },
    #[error("zero form where a nonzero form is required")]
    ZeroForm,
    #[error("no forms given")]
    EmptyInput,
    #[error("coordinate map is not a permutation")]
    NotAPermutation,
    #[error("coordinate scaling must be nonzero")]
    SingularScaling,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
