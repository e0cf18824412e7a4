//! The two continued-fraction conventions.
//!
//! Negative convention: `x = a₀ − 1/(a₁ − 1/(… − 1/a_l))` with every
//! `aⱼ ≤ −2`, used to expand `−1/rᵢ` for the singular fibers.
//!
//! Positive convention: `y = a₁ − 1/(a₂ − … − 1/a_m)` with every `aⱼ ≥ 2`,
//! used for `1/(1 − b/a)` where `b/a` is the fractional part of the boundary
//! slope. When `1/(1 − b/a)` is an integer the coefficients are fixed to
//! `[1/(1 − b/a) + 1, 1]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numbers::{floor_decompose, Fraction};

/// Negative continued fraction; every coefficient is `≤ −2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegCF(Vec<BigInt>);

impl NegCF {
    pub fn new(coefficients: Vec<BigInt>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::invalid("empty continued fraction"));
        }
        let bound = BigInt::from(-2);
        if let Some(c) = coefficients.iter().find(|c| **c > bound) {
            return Err(Error::invalid(format!("negative CF coefficient {c} > -2")));
        }
        Ok(NegCF(coefficients))
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    /// `l` in `a₀, …, a_l`.
    pub fn last_index(&self) -> usize {
        self.0.len() - 1
    }

    pub fn value(&self) -> Fraction {
        eval_tail(&self.0)
    }
}

/// Positive continued fraction `a₁, …, a_m`.
///
/// Either all coefficients are `≥ 2`, or it is the integer special case
/// `[a₁, 1]` with `a₁ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosCF(Vec<BigInt>);

impl PosCF {
    pub fn new(coefficients: Vec<BigInt>) -> Result<Self> {
        let two = BigInt::from(2);
        let valid = match coefficients.as_slice() {
            [] => false,
            [a1, a2] if a2.is_one() => *a1 >= two,
            cs => cs.iter().all(|c| *c >= two),
        };
        if !valid {
            return Err(Error::invalid(format!(
                "not a positive continued fraction: {coefficients:?}"
            )));
        }
        Ok(PosCF(coefficients))
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    /// `m`, the number of coefficients.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> &BigInt {
        &self.0[0]
    }

    pub fn last(&self) -> &BigInt {
        &self.0[self.0.len() - 1]
    }

    /// The coefficients strictly between the first and the last.
    pub fn middle(&self) -> &[BigInt] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn is_integer_case(&self) -> bool {
        self.0.len() == 2 && self.0[1].is_one()
    }

    /// `a₁ − 1/(a₂ − … − 1/a_m)`.
    pub fn value(&self) -> Fraction {
        eval_tail(&self.0)
    }

    /// The same expansion with the last coefficient replaced by `a_m + 1`.
    pub fn value_with_incremented_tail(&self) -> Fraction {
        let mut cs = self.0.clone();
        *cs.last_mut().expect("nonempty") += 1;
        eval_tail(&cs)
    }
}

/// `c₀ − 1/(c₁ − 1/(… − 1/c_k))`, evaluated from the tail.
fn eval_tail(cs: &[BigInt]) -> Fraction {
    let (last, rest) = cs.split_last().expect("nonempty");
    let mut num = last.clone();
    let mut den = BigInt::one();
    for c in rest.iter().rev() {
        // c − den/num = (c·num − den)/num
        let next = c * &num - &den;
        den = num;
        num = next;
    }
    Fraction::new(num, den).expect("nonzero denominator")
}

/// Negative continued fraction of `−1/r` for `0 < r < 1`.
pub fn neg_cf(r: &Fraction) -> Result<NegCF> {
    if !r.in_unit_interval() {
        return Err(Error::invalid(format!("neg_cf needs 0 < r < 1, got {r}")));
    }
    let mut num = -r.denom().clone();
    let mut den = r.numer().clone();
    let mut out = Vec::new();
    loop {
        // num/den < -1 at every step
        let a = num.div_floor(&den);
        let rem = &num - &a * &den;
        out.push(a);
        if rem.is_zero() {
            break;
        }
        // x − a = rem/den = −1/next, so next = −den/rem
        num = -den;
        den = rem;
    }
    NegCF::new(out)
}

pub fn eval_neg_cf(cf: &NegCF) -> Fraction {
    cf.value()
}

/// Positive expansion of `1/(1 − b/a)` for `a > b ≥ 0`, `gcd(a, b) = 1`.
pub fn pos_cf_complement(b: &BigInt, a: &BigInt) -> Result<PosCF> {
    if b.is_negative() || a <= b || !a.gcd(b).is_one() {
        return Err(Error::invalid(format!(
            "pos_cf_complement needs a > b >= 0 coprime, got b={b}, a={a}"
        )));
    }
    let mut num = a.clone();
    let mut den = a - b;
    if (&num % &den).is_zero() {
        let y = &num / &den;
        return PosCF::new(vec![y + 1, BigInt::one()]);
    }
    let mut out = Vec::new();
    loop {
        let c = ceil_div(&num, &den);
        let rem = &c * &den - &num;
        out.push(c);
        if rem.is_zero() {
            break;
        }
        // c − y = rem/den = 1/next
        num = den;
        den = rem;
    }
    PosCF::new(out)
}

fn ceil_div(num: &BigInt, den: &BigInt) -> BigInt {
    -((-num).div_floor(den))
}

/// The positive expansion attached to the fractional part of `s`.
pub fn slope_coefficients(s: &Fraction) -> PosCF {
    let dec = floor_decompose(s);
    pos_cf_complement(&dec.b, &dec.a).expect("floor decomposition satisfies the preconditions")
}

/// `r₃ = 1/(a₁ − 1/(a₂ − … − 1/(a_m + 1)))` for the coefficients of `s`.
pub fn r3_from_slope(s: &Fraction) -> Fraction {
    slope_coefficients(s)
        .value_with_incremented_tail()
        .recip()
        .expect("value is > 1")
}
