//! Reduced fractions, slopes in `Q ∪ {∞}`, and the floor/fractional-part
//! split that the slope-dependent constructions start from.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A rational number in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(BigRational);

impl Fraction {
    /// Reduces `num/den`. Fails only on a zero denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::invalid("zero denominator"));
        }
        Ok(Fraction(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Fraction(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Fraction(BigRational::zero())
    }

    pub fn one() -> Self {
        Fraction(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Greatest integer not greater than `self`.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// Least integer not less than `self`.
    pub fn ceil(&self) -> BigInt {
        -((-self.numer()).div_floor(self.denom()))
    }

    pub fn abs(&self) -> Self {
        Fraction(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::invalid("reciprocal of zero"));
        }
        Ok(Fraction(self.0.recip()))
    }

    /// True for `0 < self < 1`.
    pub fn in_unit_interval(&self) -> bool {
        self.is_positive() && self.numer() < self.denom()
    }
}

impl From<BigInt> for Fraction {
    fn from(n: BigInt) -> Self {
        Fraction::from_integer(n)
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Fraction> for &Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &Fraction) -> Fraction {
                Fraction($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Fraction> for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                Fraction($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Fraction> for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &Fraction) -> Fraction {
                Fraction($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Fraction> for &Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                Fraction($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

// Division panics on a zero divisor, like the underlying rational type.
forward_binop!(Div, div);

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-self.0)
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-&self.0)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `[-]p/q` or `[-]p`; the result is reduced.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::invalid(format!("malformed fraction '{s}'")))
        };
        match s.split_once('/') {
            Some((num, den)) => Fraction::new(parse_int(num)?, parse_int(den)?),
            None => Ok(Fraction::from_integer(parse_int(s)?)),
        }
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// `s = floor + b/a` with `a > b ≥ 0` and `gcd(a, b) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloorDecomposition {
    pub floor: BigInt,
    pub b: BigInt,
    pub a: BigInt,
}

impl FloorDecomposition {
    pub fn fractional_part(&self) -> Fraction {
        Fraction::new(self.b.clone(), self.a.clone()).expect("a > 0")
    }

    pub fn reassemble(&self) -> Fraction {
        Fraction::from_integer(self.floor.clone()) + self.fractional_part()
    }
}

pub fn floor_decompose(s: &Fraction) -> FloorDecomposition {
    let floor = s.floor();
    let a = s.denom().clone();
    let b = s.numer() - &floor * &a;
    FloorDecomposition { floor, b, a }
}

/// A slope in `Q ∪ {∞}`. The vector `(x, y)` has slope `y/x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(Fraction),
    Infinity,
}

impl Slope {
    pub fn finite(f: Fraction) -> Self {
        Slope::Finite(f)
    }

    pub fn from_vector(x: &BigInt, y: &BigInt) -> Result<Self> {
        if x.is_zero() {
            if y.is_zero() {
                return Err(Error::invalid("zero vector has no slope"));
            }
            return Ok(Slope::Infinity);
        }
        Ok(Slope::Finite(Fraction::new(y.clone(), x.clone())?))
    }

    /// Primitive representative `(x, y)`: `(q, p)` for `p/q`, `(0, 1)` for `∞`.
    pub fn to_vector(&self) -> (BigInt, BigInt) {
        match self {
            Slope::Finite(f) => (f.denom().clone(), f.numer().clone()),
            Slope::Infinity => (BigInt::zero(), BigInt::one()),
        }
    }

    pub fn as_finite(&self) -> Option<&Fraction> {
        match self {
            Slope::Finite(f) => Some(f),
            Slope::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Slope::Infinity)
    }
}

impl From<Fraction> for Slope {
    fn from(f: Fraction) -> Self {
        Slope::Finite(f)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(fr) => fr.fmt(f),
            Slope::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            Ok(Slope::Infinity)
        } else {
            t.parse().map(Slope::Finite)
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
