use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use super::isqrt::isqrt;
use super::surd::{Rational, Surd};
use crate::error::{Error, Result};

pub const DEFAULT_DIGITS: u32 = 50;

/// Extra fractional digits carried beyond the requested significant digits.
const GUARD_DIGITS: u32 = 10;

/// Fixed-point decimal `units · 10^-scale`.
///
/// `digits` is the number of significant digits the value is rendered with;
/// internally the value carries `GUARD_DIGITS` more fractional digits than
/// that so chains of oracle arithmetic stay inside the advertised error.
/// Every operation truncates toward zero.
#[derive(Clone, Debug)]
pub struct ApproxScalar {
    units: BigInt,
    scale: u32,
    digits: u32,
}

fn pow10(n: u32) -> BigInt {
    BigInt::from(10u32).pow(n)
}

fn working_scale(digits: u32) -> u32 {
    digits + GUARD_DIGITS
}

impl ApproxScalar {
    pub fn zero(digits: u32) -> Self {
        ApproxScalar {
            units: BigInt::zero(),
            scale: working_scale(digits),
            digits,
        }
    }

    pub fn from_integer(value: i64, digits: u32) -> Self {
        Self::from_rational(&Rational::from_integer(value.into()), digits)
    }

    pub fn from_rational(value: &Rational, digits: u32) -> Self {
        let scale = working_scale(digits) + small_magnitude_shift(value.numer().magnitude(), value.denom().magnitude());
        ApproxScalar {
            units: value.numer() * pow10(scale) / value.denom(),
            scale,
            digits,
        }
    }

    /// Truncated decimal expansion of `c·√r`, computed as
    /// `⌊√(c²·r·10^(2·scale))⌋` on integers.
    pub fn from_surd(value: &Surd, digits: u32) -> Self {
        let c = value.coefficient();
        let r = BigInt::from(value.radicand().clone());
        let square_numer = c.numer() * c.numer() * &r;
        let square_denom = c.denom() * c.denom();
        let shift = small_magnitude_shift(square_numer.magnitude(), square_denom.magnitude()).div_ceil(2);
        let scale = working_scale(digits) + shift;
        let radicand = c.numer() * c.numer() * r * pow10(2 * scale);
        let root = BigInt::from(isqrt(radicand.magnitude())) / c.denom();
        let units = if c.is_negative() { -root } else { root };
        ApproxScalar { units, scale, digits }
    }

    /// `⌊√value · 10^scale⌋ / 10^scale` for a non-negative rational, without
    /// factoring it into a surd first.
    pub fn sqrt_rational(value: &Rational, digits: u32) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        let shift = small_magnitude_shift(value.numer().magnitude(), value.denom().magnitude()).div_ceil(2);
        let scale = working_scale(digits) + shift;
        let widened = value.numer() * pow10(2 * scale) / value.denom();
        Ok(ApproxScalar {
            units: BigInt::from(isqrt(widened.magnitude())),
            scale,
            digits,
        })
    }

    /// `10^exponent`, exact at a scale that can hold it.
    pub fn pow10(exponent: i32, digits: u32) -> Self {
        let scale = working_scale(digits).max(exponent.unsigned_abs() + 1);
        let units = if exponent >= 0 {
            pow10(scale + exponent as u32)
        } else {
            pow10(scale - exponent.unsigned_abs())
        };
        ApproxScalar { units, scale, digits }
    }

    /// Parse a plain decimal literal such as `-140.7124`.
    pub fn parse(text: &str, digits: u32) -> Result<Self> {
        let value = super::parse_decimal(text)?;
        Ok(Self::from_rational(&value, digits))
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn with_digits(mut self, digits: u32) -> Self {
        self.digits = digits;
        self
    }

    pub fn is_negative(&self) -> bool {
        self.units.is_negative()
    }

    pub fn abs(&self) -> Self {
        ApproxScalar {
            units: self.units.abs(),
            scale: self.scale,
            digits: self.digits,
        }
    }

    fn rescaled(&self, scale: u32) -> BigInt {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.units.clone(),
            Ordering::Greater => &self.units * pow10(scale - self.scale),
            Ordering::Less => &self.units / pow10(self.scale - scale),
        }
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.units.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        let widened = &self.units * pow10(self.scale);
        Ok(ApproxScalar {
            units: BigInt::from(isqrt(widened.magnitude())),
            scale: self.scale,
            digits: self.digits,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.units.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let scale = self.scale.max(rhs.scale);
        let numer = &self.units * pow10(scale + rhs.scale - self.scale);
        Ok(ApproxScalar {
            units: numer / &rhs.units,
            scale,
            digits: self.digits.max(rhs.digits),
        })
    }

    pub fn half(&self) -> Self {
        ApproxScalar {
            units: &self.units / 2,
            scale: self.scale,
            digits: self.digits,
        }
    }

    pub fn to_f64(&self) -> f64 {
        // exact enough for plotting; never used on a verification path
        self.units.to_f64().unwrap_or(f64::NAN) / 10f64.powi(self.scale as i32)
    }

    /// Sign, integer part, '.', fraction part; `digits` significant digits,
    /// truncated toward zero, never with an exponent.
    pub fn to_decimal_string(&self) -> String {
        let digits = self.digits.max(1) as usize;
        let scale = self.scale as usize;
        let text = self.units.magnitude().to_str_radix(10);
        // left-pad so there is at least one integer digit
        let padded = if text.len() <= scale {
            format!("{}{}", "0".repeat(scale + 1 - text.len()), text)
        } else {
            text
        };
        let (int_part, frac_part) = padded.split_at(padded.len() - scale);
        let int_part = int_part.to_string();
        let frac_digits = if int_part != "0" {
            digits.saturating_sub(int_part.len()).max(1)
        } else {
            match frac_part.find(|ch| ch != '0') {
                Some(first) => first + digits,
                None => digits.saturating_sub(1).max(1),
            }
        };
        let mut frac: String = frac_part.chars().take(frac_digits).collect();
        while frac.len() < frac_digits {
            frac.push('0');
        }
        let all_zero = int_part == "0" && frac.chars().all(|ch| ch == '0');
        let sign = if self.units.sign() == Sign::Minus && !all_zero { "-" } else { "" };
        format!("{sign}{int_part}.{frac}")
    }
}

/// Number of leading fractional zeros of `numer/denom` when it is below one,
/// so small values still get their full count of significant digits.
fn small_magnitude_shift(numer: &BigUint, denom: &BigUint) -> u32 {
    if numer.is_zero() || numer >= denom {
        return 0;
    }
    let gap = denom.to_str_radix(10).len() as i64 - numer.to_str_radix(10).len() as i64;
    gap.max(0) as u32 + 1
}

impl PartialEq for ApproxScalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ApproxScalar {}

impl Ord for ApproxScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let scale = self.scale.max(other.scale);
        self.rescaled(scale).cmp(&other.rescaled(scale))
    }
}

impl PartialOrd for ApproxScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &ApproxScalar {
    type Output = ApproxScalar;

    fn add(self, rhs: &ApproxScalar) -> ApproxScalar {
        let scale = self.scale.max(rhs.scale);
        ApproxScalar {
            units: self.rescaled(scale) + rhs.rescaled(scale),
            scale,
            digits: self.digits.max(rhs.digits),
        }
    }
}

impl Sub for &ApproxScalar {
    type Output = ApproxScalar;

    fn sub(self, rhs: &ApproxScalar) -> ApproxScalar {
        let scale = self.scale.max(rhs.scale);
        ApproxScalar {
            units: self.rescaled(scale) - rhs.rescaled(scale),
            scale,
            digits: self.digits.max(rhs.digits),
        }
    }
}

impl Mul for &ApproxScalar {
    type Output = ApproxScalar;

    fn mul(self, rhs: &ApproxScalar) -> ApproxScalar {
        let scale = self.scale.max(rhs.scale);
        let product = &self.units * &rhs.units;
        ApproxScalar {
            units: product / pow10(self.scale + rhs.scale - scale),
            scale,
            digits: self.digits.max(rhs.digits),
        }
    }
}

impl Neg for &ApproxScalar {
    type Output = ApproxScalar;

    fn neg(self) -> ApproxScalar {
        ApproxScalar {
            units: -&self.units,
            scale: self.scale,
            digits: self.digits,
        }
    }
}

impl fmt::Display for ApproxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn approx_examples() {
        let root = Surd::sqrt_of(&q(19800, 1)).unwrap();
        assert_eq!(root.approx(7).to_decimal_string(), "140.7124");
        assert_eq!(Surd::integer(5).approx(3).to_decimal_string(), "5.00");
        assert_eq!(Surd::sqrt_int(2).approx(5).to_decimal_string(), "1.4142");
        assert_eq!(
            Surd::sqrt_int(2).approx(50).to_decimal_string(),
            "1.4142135623730950488016887242096980785696718753769"
        );
    }

    #[test]
    fn rendering_edge_cases() {
        assert_eq!(ApproxScalar::zero(4).to_decimal_string(), "0.000");
        assert_eq!(ApproxScalar::from_rational(&q(-575, 4), 6).to_decimal_string(), "-143.750");
        assert_eq!(ApproxScalar::from_rational(&q(1, 800), 3).to_decimal_string(), "0.00125");
        // more integer digits than requested: the integer part is kept whole
        assert_eq!(ApproxScalar::from_integer(3234, 2).to_decimal_string(), "3234.0");
        assert_eq!(ApproxScalar::from_rational(&q(-1, 10_i64.pow(15)), 5).to_decimal_string(), "-0.0000000000000010000");
    }

    #[test]
    fn small_surds_keep_significant_digits() {
        let tiny = Surd::new(q(1, 1_000_000), BigUint::from(2u32));
        assert_eq!(tiny.approx(5).to_decimal_string(), "0.0000014142");
    }

    #[test]
    fn arithmetic_roundtrip() {
        let d = 50;
        let a = ApproxScalar::from_rational(&q(1, 3), d);
        let three = ApproxScalar::from_integer(3, d);
        let one = &a * &three;
        let err = (&one - &ApproxScalar::from_integer(1, d)).abs();
        assert!(err < ApproxScalar::pow10(-55, d));
        let back = one.checked_div(&three).unwrap();
        assert!((&back - &a).abs() < ApproxScalar::pow10(-55, d));
        let two = ApproxScalar::from_integer(2, d);
        let root = two.sqrt().unwrap();
        assert_eq!(root, Surd::sqrt_int(2).approx(d));
        assert!(ApproxScalar::from_integer(-1, d).sqrt().is_err());
        assert!(a.checked_div(&ApproxScalar::zero(d)).is_err());
    }

    #[test]
    fn pow10_values() {
        assert_eq!(ApproxScalar::pow10(-30, 50).to_decimal_string().len(), "0.".len() + 29 + 50);
        assert_eq!(ApproxScalar::pow10(2, 5), ApproxScalar::from_integer(100, 5));
        assert_eq!(ApproxScalar::pow10(-70, 10), ApproxScalar::parse(&format!("0.{}1", "0".repeat(69)), 10).unwrap());
    }

    #[test]
    fn relative_error_bound_on_surds() {
        // |approx − exact| < 10^(1−digits)·|exact|, checked against a 2x wider expansion
        for r in [2u64, 3, 22, 19800, 1_000_003] {
            for digits in [5u32, 12, 30] {
                let s = Surd::sqrt_int(r);
                let coarse = s.approx(digits);
                let fine = s.approx(2 * digits + 10);
                let bound = &fine * &ApproxScalar::pow10(1 - digits as i32, 2 * digits + 10);
                assert!((&coarse - &fine).abs() < bound);
            }
        }
    }
}
