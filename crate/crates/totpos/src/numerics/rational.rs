//! Arbitrary-precision rationals and their canonical `num/den` text form.
//!
//! The scalar itself is `num_rational::BigRational`, which already keeps the
//! canonical form this crate relies on: positive denominator and reduced
//! fraction. This module adds the serialization conventions: `num/den` on
//! output (an explicit `/1` is permitted), and `num/den`, plain integers, or
//! finite decimal strings on input.

use crate::error::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::str::FromStr;

pub type Rational = num_rational::BigRational;

/// Canonical wire form, always with an explicit denominator: `"3/2"`, `"-1/3"`, `"2/1"`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human form: bare integer when the denominator is 1, `num/den` otherwise.
pub fn format_rational_plain(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact rational from a finite decimal string such as `"0.25"` or `"-1.5e2"`.
pub fn rational_from_decimal(s: &str) -> Result<Rational, Error> {
    let (mantissa, exp10) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..]
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent in '{s}'")))?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(pos) => (&mantissa[..pos], &mantissa[pos + 1..]),
        None => (mantissa, ""),
    };
    if frac_part.contains(['+', '-']) || int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::parse(format!("malformed decimal '{s}'")));
    }
    let digits = format!("{int_part}{frac_part}");
    let numer = BigInt::from_str(&digits)
        .map_err(|_| Error::parse(format!("malformed decimal '{s}'")))?;
    let shift = frac_part.len() as i64 - exp10;
    let ten = BigInt::from(10);
    Ok(if shift >= 0 {
        Rational::new(numer, ten.pow(shift as u32))
    } else {
        Rational::from(numer * ten.pow((-shift) as u32))
    })
}

/// Parse `num/den`, a bare integer, or a finite decimal. Denominator 0 and
/// malformed input (e.g. `2//3`) are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::parse("empty rational"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim())
            .map_err(|_| Error::parse(format!("malformed rational '{s}'")))?;
        let d = BigInt::from_str(den.trim())
            .map_err(|_| Error::parse(format!("malformed rational '{s}'")))?;
        if d.is_zero() {
            return Err(Error::parse(format!("zero denominator in '{s}'")));
        }
        Ok(Rational::new(n, d))
    } else if s.contains(['.', 'e', 'E']) {
        rational_from_decimal(s)
    } else {
        let n = BigInt::from_str(s)
            .map_err(|_| Error::parse(format!("malformed rational '{s}'")))?;
        Ok(Rational::from(n))
    }
}
