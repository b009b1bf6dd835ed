//! Coefficient arithmetic for the polynomial layer.
//!
//! Every polynomial identity in this crate is checked with exact rationals;
//! f64 enters only at evaluation boundaries (spectra, grids, quadrature).
//! The [`Scalar`] trait lets the classical/exceptional constructors run over
//! either coefficient kind.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient type.
pub type Rational = BigRational;

/// Coefficient ring used by [`crate::orthopoly::Polynomial`].
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }
    fn to_f64(&self) -> f64 {
        // BigRational -> f64 without intermediate overflow for the sizes we
        // produce: scale numerator/denominator down together.
        let num = self.numer();
        let den = self.denom();
        let nb = num.bits() as i64;
        let db = den.bits() as i64;
        let shift = (nb.max(db) - 900).max(0) as u64;
        let n = bigint_to_f64(&(num >> shift));
        let d = bigint_to_f64(&(den >> shift));
        n / d
    }
}

fn bigint_to_f64(v: &BigInt) -> f64 {
    let (sign, digits) = v.to_radix_be(256);
    let mut acc = 0.0f64;
    for d in digits {
        acc = acc * 256.0 + d as f64;
    }
    if sign == num_bigint::Sign::Minus {
        -acc
    } else {
        acc
    }
}

/// Convenience constructor used throughout the tests.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as an exact rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses "p/q", "p", or a plain decimal like "-1.25" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p
            .trim()
            .parse()
            .map_err(|_| format!("invalid numerator in '{s}'"))?;
        let den: BigInt = q
            .trim()
            .parse()
            .map_err(|_| format!("invalid denominator in '{s}'"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in '{s}'"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let sign = if whole.trim_start().starts_with('-') { -1 } else { 1 };
        let w: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| format!("invalid number '{s}'"))?
        };
        let digits = frac.trim();
        if !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(format!("invalid number '{s}'"));
        }
        let f: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| format!("invalid number '{s}'"))?
        };
        let den = BigInt::from(10u8).pow(digits.len() as u32);
        let abs = w.abs() * &den + f;
        let num = if sign < 0 { -abs } else { abs };
        return Ok(Rational::new(num, den));
    }
    let num: BigInt = s.parse().map_err(|_| format!("invalid number '{s}'"))?;
    Ok(Rational::from_integer(num))
}

/// Formats a rational as "p/q" (or "p" when integral), the CLI wire format.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn round_trips_to_f64() {
        assert_eq!(rat(-3, 2).to_f64(), -1.5);
        assert_eq!(int(42).to_f64(), 42.0);
    }

    #[test]
    fn formats_wire_style() {
        assert_eq!(format_rational(&rat(3, 2)), "3/2");
        assert_eq!(format_rational(&int(-4)), "-4");
    }
}
