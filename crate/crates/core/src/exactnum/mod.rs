//! Exact scalar arithmetic: big rationals extended by a single squarefree
//! quadratic surd, plus a truncating fixed-point decimal for the cases where
//! surd closure fails.

mod approx;
mod isqrt;
mod surd;

pub use approx::{ApproxScalar, DEFAULT_DIGITS};
pub use isqrt::{is_perfect_square, isqrt, square_free_split};
pub use surd::{approx, normalize_surd, surd_add, surd_cmp, surd_mul, ExactScalar, Rational, Surd};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Parse an integer, finite decimal (`12.5`, `-0.25`) or ratio (`3/2`) into an
/// exact rational. Exponents are not accepted.
pub fn parse_decimal(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("not a finite decimal: {text:?}"));
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rational::new(n, d));
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|ch| ch.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mantissa: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
    let value = Rational::new(mantissa, BigInt::from(10u32).pow(frac_part.len() as u32));
    Ok(if negative { -value } else { value })
}
