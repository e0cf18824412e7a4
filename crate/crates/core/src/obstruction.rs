//! Bounded search for the integer data whose existence would give the
//! manifold `M(−1; q₁/p₁, q₂/p₂, 1 − r₃)` a positive transverse contact
//! structure: `k > 0` and `h₁, h₂, h₃` with `hᵢ/k < cᵢ` and
//! `h₁ + h₂ + h₃ = −k − 1`.
//!
//! Summing the strict bounds gives `−1 − 1/k < c₁ + c₂ + c₃`. When
//! `c₁ + c₂ + c₃ < −1 − 1/n` for `n = ⌈−1/c₃⌉` this forces `k ≤ n − 1`, which
//! makes the search finite and its negative answer conclusive.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::contfrac::r3_from_slope;
use crate::error::{Error, Result};
use crate::numbers::Fraction;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionQuery {
    pub c1: Fraction,
    pub c2: Fraction,
    pub c3: Fraction,
}

impl ObstructionQuery {
    pub fn bounds(&self) -> [&Fraction; 3] {
        [&self.c1, &self.c2, &self.c3]
    }

    /// The query attached to a Case 3 manifold: `cᵢ = −(1 − rᵢ)` and
    /// `c₃ = r₃ − 1`.
    pub fn for_case3(r1: &Fraction, r2: &Fraction, s: &Fraction) -> Self {
        let one = Fraction::one();
        ObstructionQuery {
            c1: r1 - &one,
            c2: r2 - &one,
            c3: r3_from_slope(s) - one,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionWitness {
    #[serde(serialize_with = "ser_bigint")]
    pub k: BigInt,
    #[serde(serialize_with = "ser_bigints")]
    pub h: [BigInt; 3],
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::Error as _;
    i64::try_from(v)
        .map_err(|_| S::Error::custom(format!("{v} exceeds i64")))?
        .serialize(s)
}

fn ser_bigints<S: serde::Serializer>(
    v: &[BigInt; 3],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::{Error as _, SerializeSeq};
    let mut seq = s.serialize_seq(Some(3))?;
    for x in v {
        let x = i64::try_from(x).map_err(|_| S::Error::custom(format!("{x} exceeds i64")))?;
        seq.serialize_element(&x)?;
    }
    seq.end()
}

impl ObstructionWitness {
    /// Re-checks both defining conditions exactly.
    pub fn satisfies(&self, q: &ObstructionQuery) -> bool {
        if !self.k.is_positive() {
            return false;
        }
        let k = Fraction::from_integer(self.k.clone());
        let strict = self
            .h
            .iter()
            .zip(q.bounds())
            .all(|(h, c)| Fraction::new(h.clone(), self.k.clone()).expect("k > 0") < *c);
        let sum: BigInt = self.h.iter().sum();
        let rhs = -(k + Fraction::one());
        strict && Fraction::from_integer(sum) == rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Witness(ObstructionWitness),
    /// No witness exists at all.
    NoWitness,
    /// No witness with `k ≤ n − 1`, but the bound on `k` is not justified.
    Undetermined,
}

/// Largest integer strictly below `x`.
fn strict_floor(x: &Fraction) -> BigInt {
    if x.is_integer() {
        x.numer() - 1
    } else {
        x.floor()
    }
}

/// A witness with this particular `k`, if one exists.
pub fn witness_for_k(q: &ObstructionQuery, k: &BigInt) -> Option<ObstructionWitness> {
    if !k.is_positive() {
        return None;
    }
    let kf = Fraction::from_integer(k.clone());
    let mut h = q.bounds().map(|c| strict_floor(&(&kf * c)));
    let target: BigInt = -(k + 1i32);
    let sum: BigInt = h.iter().sum();
    if sum < target {
        return None;
    }
    // lowering any hᵢ keeps hᵢ/k < cᵢ
    h[0] -= sum - &target;
    Some(ObstructionWitness { k: k.clone(), h })
}

pub fn search_witness(q: &ObstructionQuery) -> Result<SearchOutcome> {
    if !q.c3.is_negative() {
        return Err(Error::invalid(format!("c3 must be negative, got {}", q.c3)));
    }
    let n = (-&q.c3).recip()?.ceil();
    let mut k = BigInt::one();
    while k < n {
        if let Some(w) = witness_for_k(q, &k) {
            if !w.satisfies(q) {
                return Err(Error::internal(format!(
                    "witness {w:?} fails its conditions"
                )));
            }
            return Ok(SearchOutcome::Witness(w));
        }
        k += 1;
    }
    let total = &q.c1 + &q.c2 + &q.c3;
    let bound = -(Fraction::one() + Fraction::new(1, n)?);
    if total < bound {
        Ok(SearchOutcome::NoWitness)
    } else {
        Ok(SearchOutcome::Undetermined)
    }
}

/// True when the search shows `M(−1; 1 − r₁, 1 − r₂, 1 − r₃)` has no witness
/// for a Case 3 input `r₁, r₂ ∈ (0, 1/2)`, `s ∈ [1, 2)`.
pub fn case3_no_transverse(r1: &Fraction, r2: &Fraction, s: &Fraction) -> Result<bool> {
    let half = Fraction::new(1, 2)?;
    for (name, r) in [("r1", r1), ("r2", r2)] {
        if !r.is_positive() || *r >= half {
            return Err(Error::invalid(format!(
                "{name} must lie in (0,1/2), got {r}"
            )));
        }
    }
    if *s < Fraction::one() || *s >= Fraction::from(2) {
        return Err(Error::invalid(format!("slope must lie in [1,2), got {s}")));
    }
    match search_witness(&ObstructionQuery::for_case3(r1, r2, s))? {
        SearchOutcome::NoWitness => Ok(true),
        SearchOutcome::Witness(_) => Ok(false),
        SearchOutcome::Undetermined => Err(Error::internal(format!(
            "bounding inequality failed for Case 3 input ({r1}, {r2}, {s})"
        ))),
    }
}
