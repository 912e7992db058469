use std::fmt;

use super::{ArithError, Field};

/// Deterministic trial division; moduli here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of 𝔽ₚ. Always satisfies `value < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldElem {
    value: u64,
    p: u64,
}

impl PrimeFieldElem {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }
}

impl fmt::Display for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The prime field 𝔽ₚ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Moduli are capped at 2³² so products fit comfortably in `u128`
    /// intermediates and point enumeration stays meaningful.
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(Self { p })
    }

    /// A prime field that contains the cube roots of unity.
    pub fn cyclotomic(p: u64) -> Result<Self, ArithError> {
        let field = Self::new(p)?;
        if p % 3 != 1 {
            return Err(ArithError::InvalidPrime(p));
        }
        Ok(field)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, value: u64) -> PrimeFieldElem {
        PrimeFieldElem { value: value % self.p, p: self.p }
    }

    pub fn from_i128(&self, n: i128) -> PrimeFieldElem {
        self.elem(n.rem_euclid(self.p as i128) as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = PrimeFieldElem> + '_ {
        (0..self.p).map(move |v| self.elem(v))
    }

    /// True iff `z³ = 1` and `z ≠ 1`.
    pub fn is_primitive_cube_root(&self, z: PrimeFieldElem) -> bool {
        z.p == self.p && z.value != 1 && self.pow(&z, 3).value == 1
    }

    /// The smallest primitive cube root of unity, if one exists.
    pub fn smallest_cube_root(&self) -> Option<PrimeFieldElem> {
        (2..self.p)
            .map(|v| self.elem(v))
            .find(|&z| self.is_primitive_cube_root(z))
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElem;

    fn zero(&self) -> PrimeFieldElem {
        self.elem(0)
    }

    fn one(&self) -> PrimeFieldElem {
        self.elem(1)
    }

    fn from_i64(&self, n: i64) -> PrimeFieldElem {
        self.from_i128(n as i128)
    }

    fn add(&self, a: &PrimeFieldElem, b: &PrimeFieldElem) -> PrimeFieldElem {
        debug_assert!(a.p == self.p && b.p == self.p);
        let s = a.value + b.value;
        self.elem(if s >= self.p { s - self.p } else { s })
    }

    fn neg(&self, a: &PrimeFieldElem) -> PrimeFieldElem {
        self.elem(if a.value == 0 { 0 } else { self.p - a.value })
    }

    fn mul(&self, a: &PrimeFieldElem, b: &PrimeFieldElem) -> PrimeFieldElem {
        debug_assert!(a.p == self.p && b.p == self.p);
        self.elem(((a.value as u128 * b.value as u128) % self.p as u128) as u64)
    }

    fn inv(&self, a: &PrimeFieldElem) -> Result<PrimeFieldElem, ArithError> {
        if a.value == 0 {
            return Err(ArithError::DivisionByZero);
        }
        // Fermat: a^(p-2)
        let mut base = a.value as u128;
        let mut exp = self.p - 2;
        let mut acc = 1u128;
        let m = self.p as u128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        Ok(self.elem(acc as u64))
    }

    fn is_zero(&self, a: &PrimeFieldElem) -> bool {
        a.value == 0
    }
}
