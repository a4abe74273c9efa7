//! Numeric towers shared by the algebra, adjoint and jet modules.
//!
//! Two towers are used: exact rationals for algebraic identities and `f64`
//! for orbit searches. Values of different towers never mix; the element
//! types are generic over the scalar so the compiler enforces it.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact scalar.
pub type Rational = BigRational;

/// Relative tolerance of the float tower.
pub const FLOAT_TOL: f64 = 1e-9;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Commutative ring with unit.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;
}

/// Field with a notion of "numerically zero" used by elimination.
pub trait Field: Ring + Div<Output = Self> {
    /// Size used to pick pivots.
    fn magnitude(&self) -> f64;

    /// Zero test relative to `scale`; exact for rationals.
    fn is_negligible(&self, scale: f64) -> bool;

    fn to_f64(&self) -> f64;
}

impl Ring for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }
}

impl Field for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }

    fn is_negligible(&self, scale: f64) -> bool {
        self.abs() <= FLOAT_TOL * scale
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Ring for Rational {
    fn from_int(n: i64) -> Self {
        int(n)
    }
}

impl Field for Rational {
    fn magnitude(&self) -> f64 {
        ToPrimitive::to_f64(&self.abs()).unwrap_or(f64::INFINITY)
    }

    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Parses `p`, `p/q` or a decimal literal such as `-1.25` into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    if let Ok(n) = text.parse::<BigInt>() {
        return Some(Rational::from_integer(n));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}0").parse().ok()?;
    let scale = exponent - frac_part.len() as i32 - 1;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(digits);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if neg { -value } else { value })
}

/// Serializes a rational as its `p/q` string.
pub fn serialize_rational<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

/// Serializes a sequence of rationals as `p/q` strings.
pub fn serialize_rationals<S: serde::Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(qs.len()))?;
    for q in qs {
        seq.serialize_element(&format_rational(q))?;
    }
    seq.end()
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literals() {
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational("-5/2"), Some(rational(-5, 2)));
        assert_eq!(parse_rational("1.25"), Some(rational(5, 4)));
        assert_eq!(parse_rational("-0.5"), Some(rational(-1, 2)));
        assert_eq!(parse_rational("2e-1"), Some(rational(1, 5)));
        assert_eq!(parse_rational(".5"), Some(rational(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational(""), None);
    }

    #[test]
    fn float_tolerance_is_relative() {
        assert!(1e-10_f64.is_negligible(1.0));
        assert!(!1e-10_f64.is_negligible(1e-3));
        assert!(!rational(1, 1_000_000_000_000).is_negligible(1.0));
    }
}
