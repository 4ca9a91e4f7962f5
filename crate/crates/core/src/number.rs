//! Scalar arithmetic shared by the LP solver and the rounding step.
//!
//! Two modes are supported: exact rationals ([`Rational`]) and `f64` with an
//! absolute tolerance. Every algorithm that touches weights or LP values is
//! generic over [`Number`].

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};

pub type Rational = num::BigRational;

/// Arithmetic mode requested for a solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Arith {
    /// Exact for small instances, float otherwise.
    #[default]
    Auto,
    Exact,
    Float,
}

impl Arith {
    /// Largest path count solved in exact mode under [`Arith::Auto`].
    pub const AUTO_EXACT_MAX_N: usize = 64;

    pub fn resolve(self, n: usize) -> Arith {
        match self {
            Arith::Auto if n <= Self::AUTO_EXACT_MAX_N => Arith::Exact,
            Arith::Auto => Arith::Float,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Arith::Auto => "auto",
            Arith::Exact => "exact",
            Arith::Float => "float",
        }
    }
}

impl FromStr for Arith {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Arith::Auto),
            "exact" => Ok(Arith::Exact),
            "float" => Ok(Arith::Float),
            other => Err(format!("unknown arithmetic mode `{other}`")),
        }
    }
}

/// A field element usable by the simplex tableau and the local-ratio loop.
///
/// Sign tests take a tolerance; exact implementations ignore it.
pub trait Number: Clone + PartialOrd + fmt::Debug + fmt::Display + Send + Sync {
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn from_u64(v: u64) -> Self;
    fn to_f64(&self) -> f64;
    fn to_value(&self) -> Value;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub(&a.mul(b));
    }

    /// Flushes float round-off residue to zero; no-op for exact values.
    fn snap(&mut self) {}

    fn is_zero_tol(&self, eps: f64) -> bool;
    fn is_pos_tol(&self, eps: f64) -> bool;
    fn is_neg_tol(&self, eps: f64) -> bool {
        Self::zero().sub(self).is_pos_tol(eps)
    }
}

impl Number for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn from_u64(v: u64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn to_value(&self) -> Value {
        Value::Exact(self.clone())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }
    fn is_zero_tol(&self, _eps: f64) -> bool {
        Zero::is_zero(self)
    }
    fn is_pos_tol(&self, _eps: f64) -> bool {
        Signed::is_positive(self)
    }
    fn is_neg_tol(&self, _eps: f64) -> bool {
        Signed::is_negative(self)
    }
}

impl Number for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }
    fn from_u64(v: u64) -> Self {
        v as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn to_value(&self) -> Value {
        Value::Float(*self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }
    fn snap(&mut self) {
        if self.abs() < 1e-13 {
            *self = 0.0;
        }
    }
    fn is_zero_tol(&self, eps: f64) -> bool {
        self.abs() <= eps
    }
    fn is_pos_tol(&self, eps: f64) -> bool {
        *self > eps
    }
    fn is_neg_tol(&self, eps: f64) -> bool {
        *self < -eps
    }
}

/// A mode-erased scalar for reports and serialization.
///
/// Exact values print as `p/q` (or `p` for integers); floats print in the
/// shortest form that round-trips.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(Rational),
    Float(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => Number::to_f64(r),
            Value::Float(f) => *f,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Float(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid number `{0}`")]
pub struct ParseNumberError(pub String);

/// Parses `p/q` or an integer string into an exact rational.
pub fn parse_ratio(s: &str) -> Result<Rational, ParseNumberError> {
    let err = || ParseNumberError(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(p, q))
        }
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| err()),
    }
}

/// Converts a decimal literal such as `-12.5e-3` into the rational it denotes,
/// without passing through binary floating point.
pub fn parse_decimal(s: &str) -> Result<Rational, ParseNumberError> {
    let err = || ParseNumberError(s.to_string());
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let exp: i64 = s[i + 1..].parse().map_err(|_| err())?;
            (&s[..i], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|ch| ch.is_ascii_digit()) {
        return Err(err());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer = BigInt::from_str(&all_digits).map_err(|_| err())?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i64;
    if scale.unsigned_abs() > 4096 {
        return Err(err());
    }
    let pow = num::pow(BigInt::from(10u32), scale.unsigned_abs() as usize);
    Ok(if scale >= 0 {
        Rational::from_integer(numer * pow)
    } else {
        Rational::new(numer, pow)
    })
}
