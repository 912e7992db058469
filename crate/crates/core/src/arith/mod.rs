//! Exact arithmetic over ℚ, ℚ(ζ₃) and prime fields, plus fraction-free
//! linear algebra.
//!
//! Fields are modelled as context objects implementing [`Field`]: the field
//! value carries whatever runtime data it needs (the modulus of 𝔽ₚ, say) and
//! all arithmetic goes through it. Elements are plain immutable values.

mod cyclotomic;
mod matrix;
mod prime_field;
mod rational;

pub use cyclotomic::{reduce_mod_p, CycNum, Cyclotomic3};
pub use matrix::{matrix_rank, subspace_intersection_dim, ExactMatrix};
pub use prime_field::{is_prime, PrimeField, PrimeFieldElem};
pub use rational::{rational_from_i64, rational_from_ratio, Rational, Rationals};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid prime {0}: cyclotomic reduction needs p ≡ 1 (mod 3)")]
    InvalidPrime(u64),
    #[error("{image} is not a primitive cube root of unity modulo {p}")]
    BadRoot { p: u64, image: u64 },
    #[error("denominator divisible by {0}")]
    DenominatorDivisible(u64),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix data has {got} entries, expected {expected}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("determinant of a non-square {rows}x{cols} matrix")]
    NotSquare { rows: usize, cols: usize },
}

/// A field given by a context value.
///
/// `Elem` equality must be structural equality of canonical forms.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ArithError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ArithError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut exp: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}
