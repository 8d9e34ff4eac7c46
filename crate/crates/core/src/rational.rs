//! Exact rational parsing and formatting.
//!
//! Worth tables, dividends and payoffs are all `BigRational`. Input files may
//! write numbers as integers (`-2`), fractions (`1/3`) or decimals (`0.25`);
//! decimals are converted by integer scaling, never through floating point.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumberError {
    #[error("empty number literal")]
    Empty,
    #[error("malformed number literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `-3`, `5/2` or `0.125` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, NumberError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(NumberError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| NumberError::Malformed(text.to_owned()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| NumberError::Malformed(text.to_owned()))?;
        if d.is_zero() {
            return Err(NumberError::ZeroDenominator(text.to_owned()));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part),
        };
        if int_digits.is_empty()
            || frac_part.is_empty()
            || !int_digits.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(NumberError::Malformed(text.to_owned()));
        }
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let unsigned = BigInt::parse_bytes(int_digits.as_bytes(), 10).unwrap() * &scale
            + BigInt::parse_bytes(frac_part.as_bytes(), 10).unwrap();
        return Ok(BigRational::new(BigInt::from(sign) * unsigned, scale));
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| NumberError::Malformed(text.to_owned()))?;
    Ok(BigRational::from_integer(n))
}

/// Renders a rational as `p/q`, or just `p` when the denominator is one.
/// Decimals are never produced.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// True when `value` is strictly positive.
pub fn is_positive(value: &BigRational) -> bool {
    value.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_and_decimals() {
        assert_eq!(parse_rational("-2").unwrap(), rat(-2));
        assert_eq!(parse_rational("5/2").unwrap(), ratio(5, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("0.5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-0.125").unwrap(), ratio(-1, 8));
        assert_eq!(parse_rational("2.50").unwrap(), ratio(5, 2));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational(".5").is_err());
        assert!(parse_rational("1.").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0x10").is_err());
        assert!(parse_rational("1.5e3").is_err());
    }

    #[test]
    fn formats_without_decimals() {
        assert_eq!(format_rational(&ratio(1, 2)), "1/2");
        assert_eq!(format_rational(&ratio(-4, 2)), "-2");
        assert_eq!(format_rational(&rat(0)), "0");
        assert_eq!(format_rational(&ratio(2, -4)), "-1/2");
    }

    #[test]
    fn roundtrips_formatting() {
        for r in [ratio(3, 7), rat(-9), ratio(-22, 6)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
