//! The coefficient-field abstraction shared by the series layer and the
//! stratification algorithms.
//!
//! Everything downstream is generic over [`Field`]. The exact instances are
//! [`BigRational`] and [`CycloElem`](crate::CycloElem); `f64` and
//! `Complex64` are provided for approximate experiments, where zero tests are
//! only as good as floating point allows.

use std::fmt::Debug;
use std::ops::{AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field endomorphism used as the sign of a self-dual representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum FieldEndo {
    #[default]
    #[serde(rename = "id")]
    Identity,
    #[serde(rename = "cc")]
    ComplexConjugation,
}

impl FieldEndo {
    pub fn name(self) -> &'static str {
        match self {
            FieldEndo::Identity => "id",
            FieldEndo::ComplexConjugation => "cc",
        }
    }
}

impl std::str::FromStr for FieldEndo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "id" => Ok(FieldEndo::Identity),
            "cc" => Ok(FieldEndo::ComplexConjugation),
            other => Err(Error::parse(other, "expected `id` or `cc`")),
        }
    }
}

/// Field operations needed by truncated series and the L-function algorithms.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Sub<Output = Self>
    + Neg<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
    /// Multiplicative inverse; fails on zero.
    fn inv(&self) -> Result<Self>;

    /// Complex conjugation under the fixed embedding into `C`.
    fn conj(&self) -> Self;

    fn from_rational(r: &BigRational) -> Self;

    /// Embedding into the complex numbers.
    fn to_complex(&self) -> Complex64;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * &rhs.inv()?)
    }

    fn apply(&self, endo: FieldEndo) -> Self {
        match endo {
            FieldEndo::Identity => self.clone(),
            FieldEndo::ComplexConjugation => self.conj(),
        }
    }
}

impl Field for BigRational {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl Field for f64 {
    fn inv(&self) -> Result<Self> {
        if *self == 0.0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(1.0 / self)
        }
    }

    fn conj(&self) -> Self {
        *self
    }

    fn from_rational(r: &BigRational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
}

impl Field for f32 {
    fn inv(&self) -> Result<Self> {
        if *self == 0.0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(1.0 / self)
        }
    }

    fn conj(&self) -> Self {
        *self
    }

    fn from_rational(r: &BigRational) -> Self {
        r.to_f32().unwrap_or(f32::NAN)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(*self as f64, 0.0)
    }
}

impl Field for Complex64 {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Complex64::new(1.0, 0.0) / self)
        }
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn from_rational(r: &BigRational) -> Self {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }
}

/// Parses `a`, `-a` or `a/b` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(s, "bad rational numerator"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(s, "bad rational denominator"))?;
    if den.is_zero() {
        return Err(Error::parse(s, "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// `num/den` with an explicit denominator, as used on the wire.
pub fn rational_to_wire(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
