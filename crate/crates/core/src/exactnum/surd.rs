use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::approx::ApproxScalar;
use super::isqrt::square_free_split;
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// An exact value `coefficient · √radicand`.
///
/// The radicand is always squarefree and the zero value is stored as `0·√1`,
/// so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    coefficient: Rational,
    radicand: BigUint,
}

/// Every length, area and diagonal in the crate is a `Surd`; rationals are the
/// `radicand = 1` case.
pub type ExactScalar = Surd;

/// Build `coefficient · √radicand`, moving all square factors of the radicand
/// into the coefficient.
pub fn normalize_surd(coefficient: Rational, radicand: &BigInt) -> Result<Surd> {
    if radicand.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    Ok(Surd::new(coefficient, radicand.magnitude().clone()))
}

impl Surd {
    pub fn new(coefficient: Rational, radicand: BigUint) -> Self {
        if coefficient.is_zero() || radicand.is_zero() {
            return Self::zero();
        }
        let (root, free) = square_free_split(&radicand);
        Surd {
            coefficient: coefficient * Rational::from_integer(BigInt::from(root)),
            radicand: free,
        }
    }

    pub fn zero() -> Self {
        Surd {
            coefficient: Rational::zero(),
            radicand: BigUint::one(),
        }
    }

    pub fn rational(value: Rational) -> Self {
        Surd {
            coefficient: value,
            radicand: BigUint::one(),
        }
    }

    pub fn integer(value: i64) -> Self {
        Self::rational(Rational::from_integer(value.into()))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::rational(Rational::new(numer.into(), denom.into()))
    }

    /// `√radicand` for a plain integer radicand.
    pub fn sqrt_int(radicand: u64) -> Self {
        Self::new(Rational::one(), BigUint::from(radicand))
    }

    /// Exact non-negative square root of a rational.
    pub fn sqrt_of(value: &Rational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        if value.is_zero() {
            return Ok(Self::zero());
        }
        // √(n/d) = √n · √d / d, with both roots normalized separately so the
        // factorizations stay small
        let n = Self::new(Rational::one(), value.numer().magnitude().clone());
        let d = Self::new(Rational::one(), value.denom().magnitude().clone());
        let inv_d = Rational::new(BigInt::one(), value.denom().clone());
        Ok((&n * &d).scale(&inv_d))
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.coefficient.is_positive()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.coefficient)
    }

    pub fn signum(&self) -> Ordering {
        self.coefficient.cmp(&Rational::zero())
    }

    /// `value²`, which is always rational.
    pub fn square(&self) -> Rational {
        &self.coefficient * &self.coefficient * Rational::from_integer(BigInt::from(self.radicand.clone()))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Surd {
            coefficient: &self.coefficient * factor,
            radicand: self.radicand.clone(),
        }
    }

    pub fn checked_add(&self, other: &Surd) -> Result<Surd> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.radicand != other.radicand {
            return Err(Error::IncompatibleRadicands {
                left: self.radicand.clone(),
                right: other.radicand.clone(),
            });
        }
        let coefficient = &self.coefficient + &other.coefficient;
        if coefficient.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Surd {
            coefficient,
            radicand: self.radicand.clone(),
        })
    }

    pub fn checked_sub(&self, other: &Surd) -> Result<Surd> {
        self.checked_add(&-other)
    }

    pub fn recip(&self) -> Result<Surd> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/(c√r) = √r / (c·r)
        let r = Rational::from_integer(BigInt::from(self.radicand.clone()));
        Ok(Surd {
            coefficient: (&self.coefficient * r).recip(),
            radicand: self.radicand.clone(),
        })
    }

    pub fn checked_div(&self, other: &Surd) -> Result<Surd> {
        Ok(self * &other.recip()?)
    }

    pub fn abs(&self) -> Surd {
        Surd {
            coefficient: self.coefficient.abs(),
            radicand: self.radicand.clone(),
        }
    }

    pub fn approx(&self, digits: u32) -> ApproxScalar {
        ApproxScalar::from_surd(self, digits)
    }
}

/// Exact product; the radicand of `√r₁·√r₂` is re-normalized through their gcd,
/// which needs no factorization since both inputs are squarefree.
pub fn surd_mul(a: &Surd, b: &Surd) -> Surd {
    a * b
}

pub fn surd_add(a: &Surd, b: &Surd) -> Result<Surd> {
    a.checked_add(b)
}

pub fn surd_cmp(a: &Surd, b: &Surd) -> Ordering {
    a.cmp(b)
}

pub fn approx(a: &Surd, digits: u32) -> ApproxScalar {
    a.approx(digits)
}

impl Mul for &Surd {
    type Output = Surd;

    fn mul(self, rhs: &Surd) -> Surd {
        if self.is_zero() || rhs.is_zero() {
            return Surd::zero();
        }
        let g = self.radicand.gcd(&rhs.radicand);
        let radicand = (&self.radicand / &g) * (&rhs.radicand / &g);
        Surd {
            coefficient: &self.coefficient * &rhs.coefficient * Rational::from_integer(BigInt::from(g)),
            radicand,
        }
    }
}

impl Mul for Surd {
    type Output = Surd;

    fn mul(self, rhs: Surd) -> Surd {
        &self * &rhs
    }
}

impl Neg for &Surd {
    type Output = Surd;

    fn neg(self) -> Surd {
        Surd {
            coefficient: -&self.coefficient,
            radicand: self.radicand.clone(),
        }
    }
}

impl Neg for Surd {
    type Output = Surd;

    fn neg(self) -> Surd {
        -&self
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        let by_square = self.square().cmp(&other.square());
        if sa == Ordering::Less {
            by_square.reverse()
        } else {
            by_square
        }
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Rational> for Surd {
    fn from(value: Rational) -> Self {
        Surd::rational(value)
    }
}

impl From<&Rational> for Surd {
    fn from(value: &Rational) -> Self {
        Surd::rational(value.clone())
    }
}

impl From<i64> for Surd {
    fn from(value: i64) -> Self {
        Surd::integer(value)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coefficient);
        }
        let c = &self.coefficient;
        if c.is_one() {
            write!(f, "√{}", self.radicand)
        } else if (-c).is_one() {
            write!(f, "-√{}", self.radicand)
        } else if c.is_integer() {
            write!(f, "{}√{}", c, self.radicand)
        } else {
            write!(f, "({})√{}", c, self.radicand)
        }
    }
}
