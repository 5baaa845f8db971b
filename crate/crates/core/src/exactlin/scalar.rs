//! Exact rational scalars.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// An exact rational number, always held in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(BigRational);

/// Reasons a textual scalar is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("`{0}` is not an integer or a fraction p/q")]
    Malformed(String),
    #[error("`{0}` has a zero denominator")]
    ZeroDenominator(String),
    #[error("`{0}` has a non-positive denominator")]
    NegativeDenominator(String),
    #[error("`{0}` is not in lowest terms")]
    NotLowestTerms(String),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`, reduced. Returns `None` for a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Option<Self> {
        if denom == 0 {
            return None;
        }
        Some(Scalar(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        Some(Scalar(BigRational::new(numer, denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Scalar {
        Scalar(self.0.abs())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Scalar> {
        if self.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// Strict parser: accepts `p` or `p/q` with `q > 0` and `gcd(p, q) = 1`.
    pub fn parse_strict(text: &str) -> Result<Scalar, ScalarParseError> {
        let malformed = || ScalarParseError::Malformed(text.to_string());
        let int = |s: &str| -> Result<BigInt, ScalarParseError> {
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            BigInt::from_str(s).map_err(|_| malformed())
        };
        match text.split_once('/') {
            None => Ok(Scalar(BigRational::from_integer(int(text)?))),
            Some((p, q)) => {
                let numer = int(p)?;
                let denom = int(q)?;
                if denom.is_zero() {
                    return Err(ScalarParseError::ZeroDenominator(text.to_string()));
                }
                if denom.is_negative() {
                    return Err(ScalarParseError::NegativeDenominator(text.to_string()));
                }
                if !numer.gcd(&denom).is_one() {
                    return Err(ScalarParseError::NotLowestTerms(text.to_string()));
                }
                Ok(Scalar(BigRational::new_raw(numer, denom)))
            }
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar(q)
    }
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scalar::parse_strict(s)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
// Division by zero panics, as for `BigRational`.
binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.0 -= rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

/// Shorthand for integer scalars.
pub fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// Shorthand for `p/q`; panics on a zero denominator.
pub fn q(p: i64, d: i64) -> Scalar {
    Scalar::new(p, d).expect("zero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let x = q(2, 4);
        assert_eq!(x, q(1, 2));
        assert_eq!(x.to_string(), "1/2");
        assert_eq!(q(3, -6).to_string(), "-1/2");
        assert_eq!(q(4, 2).to_string(), "2");
    }

    #[test]
    fn strict_parse_rejects_unreduced() {
        assert_eq!(
            Scalar::parse_strict("2/4"),
            Err(ScalarParseError::NotLowestTerms("2/4".into()))
        );
        assert_eq!(
            Scalar::parse_strict("0/5"),
            Err(ScalarParseError::NotLowestTerms("0/5".into()))
        );
        assert!(matches!(
            Scalar::parse_strict("1/0"),
            Err(ScalarParseError::ZeroDenominator(_))
        ));
        assert!(matches!(
            Scalar::parse_strict("1/-2"),
            Err(ScalarParseError::NegativeDenominator(_))
        ));
        assert!(matches!(
            Scalar::parse_strict("1.5"),
            Err(ScalarParseError::Malformed(_))
        ));
        assert!(matches!(
            Scalar::parse_strict("+3"),
            Err(ScalarParseError::Malformed(_))
        ));
        assert!(matches!(
            Scalar::parse_strict(""),
            Err(ScalarParseError::Malformed(_))
        ));
        assert_eq!(Scalar::parse_strict("-3/7").unwrap(), q(-3, 7));
        assert_eq!(Scalar::parse_strict("12").unwrap(), s(12));
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = q(1, 3);
        let sum: Scalar = [third.clone(), third.clone(), third].iter().sum();
        assert!(sum.is_one());
        assert_eq!(&q(1, 2) * &q(2, 3), q(1, 3));
        assert_eq!(q(1, 2) - q(1, 3), q(1, 6));
        assert_eq!(q(2, 3).recip(), Some(q(3, 2)));
        assert_eq!(s(0).recip(), None);
    }
}
