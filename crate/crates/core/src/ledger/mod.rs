//! Intersection numbers on A, B = Sym²(C₂), T and S, and the integer
//! derivation chain connecting them.

mod chain;
mod lattice;
mod numerics;

pub use chain::{
    derive_lattice_ledger, derive_surface_ledger, section2_degree_ledger, triple_cover_map, LatticeLedger,
    LedgerCheck, PairingTable, SurfaceClass, SurfaceLedger, DEFORMATION_RANK_LOWER_BOUND, IMPORTED_IRREGULARITY,
};
pub use lattice::{blowdown_pushforward, BlowUp, DivClass, Lattice, SymmetricSquareClasses};
pub use numerics::{
    adjunction_kd, chi_top, double_cover_k2, free_quotient_invariants, noether_chi, pushpull_selfint, solve_z2,
    stratified_euler, CoverKind, CoverMap, PushPullMode, SurfaceInvariants,
};

use thiserror::Error;

use crate::curve::CurveError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LedgerError {
    #[error("classes live on different lattices: {left} and {right}")]
    LatticeMismatch { left: String, right: String },
    #[error("invalid gram matrix: {0}")]
    BadGram(String),
    #[error("expected {expected} coordinates, got {got}")]
    BadCoordinates { expected: usize, got: usize },
    #[error("unknown basis label {0}")]
    UnknownLabel(String),
    #[error("{what}: {num}/{den} is not an integer")]
    NonInteger { what: &'static str, num: i64, den: i64 },
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: i64 },
    #[error("Noether's formula fails: K² + c₂ = {k2} + {c2} is not divisible by 12")]
    NoetherFailure { k2: i64, c2: i64 },
    #[error("pairing {pair} recorded as {old} and {new}")]
    PairingConflict { pair: String, old: i64, new: i64 },
    #[error("pairing {0} has not been derived")]
    MissingPairing(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
}
