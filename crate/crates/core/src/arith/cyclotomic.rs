use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{rational_from_i64, Rational};
use super::{ArithError, Field, PrimeField, PrimeFieldElem};

/// `a + bζ` in ℚ(ζ₃), with ζ² = −1 − ζ.
///
/// The pair `(a, b)` is the canonical form, so derived equality is equality
/// in the field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    pub a: Rational,
    pub b: Rational,
}

impl CycNum {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self { a, b: Rational::zero() }
    }

    pub fn from_i64(a: i64) -> Self {
        Self::from_rational(rational_from_i64(a))
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(rational_from_i64(a), rational_from_i64(b))
    }

    pub fn zero() -> Self {
        Self::from_i64(0)
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn zeta() -> Self {
        Self::from_ints(0, 1)
    }

    /// ζ² = −1 − ζ.
    pub fn zeta_sq() -> Self {
        Self::from_ints(-1, -1)
    }

    /// ζᵏ for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::zeta(),
            _ => Self::zeta_sq(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate ζ ↦ ζ²: `a + bζ² = (a − b) − bζ`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }

    /// N(a + bζ) = a² − ab + b².
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(Self::new(c.a / &n, c.b / n))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.a * k, &self.b * k)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*z", self.b),
            (false, false) if self.b.is_negative() => write!(f, "({} - {}*z)", self.a, -&self.b),
            (false, false) => write!(f, "({} + {}*z)", self.a, self.b),
        }
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    // (a + bζ)(c + dζ) = (ac − bd) + (ad + bc − bd)ζ
    fn mul(self, rhs: &CycNum) -> CycNum {
        let bd = &self.b * &rhs.b;
        CycNum::new(
            &self.a * &rhs.a - &bd,
            &self.a * &rhs.b + &self.b * &rhs.a - bd,
        )
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::new(-&self.a, -&self.b)
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        &self + &rhs
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        &self - &rhs
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        &self * &rhs
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

/// The field ℚ(ζ₃).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Cyclotomic3;

impl Field for Cyclotomic3 {
    type Elem = CycNum;

    fn zero(&self) -> CycNum {
        CycNum::zero()
    }

    fn one(&self) -> CycNum {
        CycNum::one()
    }

    fn from_i64(&self, n: i64) -> CycNum {
        CycNum::from_i64(n)
    }

    fn add(&self, a: &CycNum, b: &CycNum) -> CycNum {
        a + b
    }

    fn neg(&self, a: &CycNum) -> CycNum {
        -a
    }

    fn mul(&self, a: &CycNum, b: &CycNum) -> CycNum {
        a * b
    }

    fn inv(&self, a: &CycNum) -> Result<CycNum, ArithError> {
        a.inv()
    }

    fn is_zero(&self, a: &CycNum) -> bool {
        a.is_zero()
    }

    fn sub(&self, a: &CycNum, b: &CycNum) -> CycNum {
        a - b
    }
}

fn reduce_int(field: &PrimeField, n: &BigInt) -> PrimeFieldElem {
    let p = BigInt::from(field.modulus());
    let r = n.mod_floor(&p);
    field.elem(r.to_u64().expect("residue below a u32 modulus"))
}

fn reduce_rational(field: &PrimeField, x: &Rational) -> Result<PrimeFieldElem, ArithError> {
    let den = reduce_int(field, x.denom());
    if field.is_zero(&den) {
        return Err(ArithError::DenominatorDivisible(field.modulus()));
    }
    field.div(&reduce_int(field, x.numer()), &den)
}

/// The ring map ℤ[ζ]₍ₚ₎ → 𝔽ₚ sending ζ to `zeta_image`.
pub fn reduce_mod_p(x: &CycNum, p: u64, zeta_image: u64) -> Result<PrimeFieldElem, ArithError> {
    let field = PrimeField::cyclotomic(p)?;
    let z = field.elem(zeta_image);
    if zeta_image >= p || !field.is_primitive_cube_root(z) {
        return Err(ArithError::BadRoot { p, image: zeta_image });
    }
    let a = reduce_rational(&field, &x.a)?;
    let b = reduce_rational(&field, &x.b)?;
    Ok(field.add(&a, &field.mul(&b, &z)))
}

impl CycNum {
    /// `true` iff this is exactly one of 1, ζ, ζ².
    pub fn is_cube_root_of_unity(&self) -> bool {
        *self == Self::one() || *self == Self::zeta() || *self == Self::zeta_sq()
    }

    /// Integer value if the number is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.a.denom().is_one()).then(|| self.a.numer().clone())
    }
}
