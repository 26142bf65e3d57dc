//! Rational helpers: exact parsing, formatting and factorial symbols.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{QpaError, Result};

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3/4"`, `"-2"`, or an exact decimal such as `"0.125"`.
///
/// Decimals are converted digit by digit, so `"0.1"` is exactly `1/10`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    parse_rational_at(text, 1)
}

pub(crate) fn parse_rational_at(text: &str, column: usize) -> Result<BigRational> {
    let err = |message: String| QpaError::Parse { column, message };
    let s = text.trim();
    if s.is_empty() {
        return Err(err("empty number".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_decimal(num.trim()).ok_or_else(|| err(format!("bad numerator {num:?}")))?;
        let den = parse_decimal(den.trim()).ok_or_else(|| err(format!("bad denominator {den:?}")))?;
        if den.is_zero() {
            return Err(err("zero denominator".into()));
        }
        return Ok(num / den);
    }
    parse_decimal(s).ok_or_else(|| err(format!("not a number: {s:?}")))
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (neg, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let value = BigRational::new(num, den);
    Some(if neg { -value } else { value })
}

/// Comma-separated list of rationals, with the column of each failing item.
pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>> {
    let mut out = Vec::new();
    let mut column = 1;
    for item in text.split(',') {
        out.push(parse_rational_at(item, column)?);
        column += item.len() + 1;
    }
    Ok(out)
}

/// `"num/den"`, or just `"num"` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Huge numerators and denominators: scale both down before dividing.
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(900);
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Rising factorial `a (a+1) ... (a+m-1)`.
pub fn rising(a: i64, m: i64) -> BigInt {
    (0..m).map(|t| BigInt::from(a + t)).product()
}

/// Falling factorial `a (a-1) ... (a-m+1)`.
pub fn falling(a: i64, m: i64) -> BigInt {
    (0..m).map(|t| BigInt::from(a - t)).product()
}

pub fn rising_q(a: &BigRational, m: i64) -> BigRational {
    (0..m).map(|t| a + int(t)).product()
}

pub fn falling_q(a: &BigRational, m: i64) -> BigRational {
    (0..m).map(|t| a - int(t)).product()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Multinomial coefficient `m! / (m_1! ... m_d!)` with `m = sum(parts)`.
pub fn multinomial(parts: &[i64]) -> BigInt {
    let total: i64 = parts.iter().sum();
    let mut out = factorial(total as u64);
    for &p in parts {
        out /= factorial(p as u64);
    }
    out
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    falling(n, k) / factorial(k as u64)
}

/// Number of multisets of size `n` over `d` symbols, `C(n+d-1, n)`.
pub fn multiset(d: i64, n: i64) -> BigInt {
    binomial(n + d - 1, n)
}

pub fn abs(r: &BigRational) -> BigRational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_rational("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse_rational("-1.25").unwrap(), ratio(-5, 4));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("0.5/2").unwrap(), ratio(1, 4));
    }

    #[test]
    fn parse_errors_report_columns() {
        let e = parse_rational_list("1/2,x,1/2").unwrap_err();
        assert_eq!(e, QpaError::Parse { column: 5, message: "not a number: \"x\"".into() });
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn factorial_symbols() {
        assert_eq!(rising(3, 3), BigInt::from(60));
        assert_eq!(falling(3, 3), BigInt::from(6));
        assert_eq!(falling(1, 2), BigInt::zero());
        assert_eq!(rising(-2, 3), BigInt::zero());
        assert_eq!(rising(5, 0), BigInt::one());
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
        assert_eq!(multiset(2, 3), BigInt::from(4));
    }

    #[test]
    fn huge_ratios_convert() {
        let big = BigRational::new(num_traits::pow(BigInt::from(3), 2000), num_traits::pow(BigInt::from(3), 2001));
        assert!((to_f64(&big) - 1.0 / 3.0).abs() < 1e-15);
    }
}
