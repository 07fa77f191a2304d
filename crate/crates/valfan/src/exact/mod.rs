//! Exact number types: arbitrary-precision rationals and real quadratic
//! extensions `a + b*sqrt(D)`.
//!
//! Every comparison in this crate reduces to exact sign analysis over the
//! integers; there is no floating-point fallback. Values carry a canonical
//! text form (`"3 - 2*sqrt(2)"`, `"1/6"`, `"inf"`) that round-trips through
//! [`std::fmt::Display`] and the parsers here.

mod extpos;
mod quad;

pub use extpos::{interval_contains, ExtPos};
pub use quad::QuadVal;

use num_bigint::BigInt;
use thiserror::Error;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("cannot combine values over sqrt({0}) and sqrt({1})")]
    RadicandMismatch(u64, u64),
    #[error("value must be finite and positive, got {0}")]
    NotPositive(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed exact number `{0}`")]
    Parse(String),
}

/// Shorthand for `n/d` as a [`Rat`].
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer as a [`Rat`].
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"a"` or `"a/b"` with an optional leading sign.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let t = s.trim();
    let bad = || ExactError::Parse(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// Canonical text form of a rational: `"3"`, `"-5/2"`.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_parse_and_format() {
        assert_eq!(parse_rat("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("-4/2").unwrap(), rint(-2));
        assert_eq!(format_rat(&rat(-3, 9)), "-1/3");
        assert_eq!(format_rat(&rint(7)), "7");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
