//! Decimal text forms of scalars.
//!
//! `to_decimal` emits scientific notation (`5.0e-1`); with at least
//! [`PrecisionContext::roundtrip_digits`] digits, `from_decimal` recovers the
//! exact binary value.

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::{MPReal, PrecisionContext, PrecisionError};

/// Scientific-notation decimal with `digits` significant digits, rounded to
/// nearest.
pub fn to_decimal(x: &MPReal, digits: usize) -> String {
    let f = x.as_float();
    if f.is_zero() {
        return if f.is_sign_negative() { "-0.0e0".into() } else { "0.0e0".into() };
    }
    f.to_string_radix(10, Some(digits.max(2)))
}

/// Parses a decimal literal and rounds it once to `ctx`.
pub fn from_decimal(s: &str, ctx: PrecisionContext) -> Result<MPReal, PrecisionError> {
    let trimmed = s.trim();
    let parsed = Float::parse(trimmed).map_err(|_| PrecisionError::Parse(s.to_string()))?;
    let f = Float::with_val(ctx.bits(), parsed);
    if !f.is_finite() {
        return Err(PrecisionError::Parse(s.to_string()));
    }
    Ok(MPReal::from_float(f))
}

/// Exact rational value of a decimal literal such as `1e4`, `2.5E+5` or
/// `-0.125`.
pub fn parse_decimal_rational(s: &str) -> Result<Rational, PrecisionError> {
    let err = || PrecisionError::Parse(s.to_string());
    let t = s.trim();
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], Some(&t[pos + 1..])),
        None => (t, None),
    };
    let (negative, mantissa) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let mut exp: i64 = match exponent {
        Some(e) => e.parse().map_err(|_| err())?,
        None => 0,
    };
    exp -= frac_part.len() as i64;
    let digits = format!("{int_part}{frac_part}");
    let mut value = Integer::from_str_radix(&digits, 10).map_err(|_| err())?;
    if negative {
        value = -value;
    }
    let scale = Integer::from(10u32).pow(u32::try_from(exp.unsigned_abs()).map_err(|_| err())?);
    Ok(if exp >= 0 {
        Rational::from(value * scale)
    } else {
        Rational::from((value, scale))
    })
}

/// Exact positional decimal for rationals whose denominator has only the
/// prime factors 2 and 5; `None` otherwise.
pub fn format_rational_decimal(q: &Rational) -> Option<String> {
    let mut den = q.denom().clone();
    let (mut twos, mut fives) = (0u32, 0u32);
    while den.is_divisible_u(2) {
        den /= 2u32;
        twos += 1;
    }
    while den.is_divisible_u(5) {
        den /= 5u32;
        fives += 1;
    }
    if den != 1 {
        return None;
    }
    let places = twos.max(fives);
    let scaled = (q.numer() * Integer::from(10u32).pow(places)) / q.denom();
    let negative = scaled < 0;
    let mut digits = scaled.abs().to_string();
    if places > 0 {
        let places = places as usize;
        if digits.len() <= places {
            digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
        }
        digits.insert(digits.len() - places, '.');
    }
    Some(if negative { format!("-{digits}") } else { digits })
}
