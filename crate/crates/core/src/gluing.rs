//! Integer 2×2 gluing matrices of determinant one and their action on
//! slopes.
//!
//! Two conventions appear. For `rᵢ = q/p` the boundary convention is
//! `[[p, u], [−q, −v]]` with `u·q − p·v = 1` and `0 < u < p`; after the
//! shift `rᵢ ↦ rᵢ − 1 = −q/p` the negative convention is `[[p, u], [q, v]]`
//! with `p·v − q·u = 1` and `0 < u < p`. They have separate constructors so
//! the two cannot be mixed up.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::contfrac::{pos_cf_complement, PosCF};
use crate::error::{Error, Result};
use crate::numbers::{floor_decompose, Fraction, Slope};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GluingMatrix {
    m11: BigInt,
    m12: BigInt,
    m21: BigInt,
    m22: BigInt,
}

impl GluingMatrix {
    /// Fails unless the determinant is one.
    pub fn new(
        m11: impl Into<BigInt>,
        m12: impl Into<BigInt>,
        m21: impl Into<BigInt>,
        m22: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = GluingMatrix {
            m11: m11.into(),
            m12: m12.into(),
            m21: m21.into(),
            m22: m22.into(),
        };
        if !m.determinant().is_one() {
            return Err(Error::invalid(format!("determinant of {m} is not 1")));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        GluingMatrix {
            m11: BigInt::one(),
            m12: BigInt::zero(),
            m21: BigInt::zero(),
            m22: BigInt::one(),
        }
    }

    /// `[[1, 0], [−n, 1]]`.
    pub fn shear(n: &BigInt) -> Self {
        GluingMatrix {
            m11: BigInt::one(),
            m12: BigInt::zero(),
            m21: -n,
            m22: BigInt::one(),
        }
    }

    pub fn entries(&self) -> [[&BigInt; 2]; 2] {
        [[&self.m11, &self.m12], [&self.m21, &self.m22]]
    }

    pub fn determinant(&self) -> BigInt {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    /// Adjugate; exact because the determinant is one.
    pub fn inverse(&self) -> Self {
        GluingMatrix {
            m11: self.m22.clone(),
            m12: -&self.m12,
            m21: -&self.m21,
            m22: self.m11.clone(),
        }
    }

    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.m11 * x + &self.m12 * y, &self.m21 * x + &self.m22 * y)
    }

    pub fn act_on_slope(&self, s: &Slope) -> Slope {
        let (x, y) = s.to_vector();
        let (x, y) = self.apply(&x, &y);
        Slope::from_vector(&x, &y).expect("unimodular image of a nonzero vector is nonzero")
    }
}

impl Mul<&GluingMatrix> for &GluingMatrix {
    type Output = GluingMatrix;

    fn mul(self, rhs: &GluingMatrix) -> GluingMatrix {
        GluingMatrix {
            m11: &self.m11 * &rhs.m11 + &self.m12 * &rhs.m21,
            m12: &self.m11 * &rhs.m12 + &self.m12 * &rhs.m22,
            m21: &self.m21 * &rhs.m11 + &self.m22 * &rhs.m21,
            m22: &self.m21 * &rhs.m12 + &self.m22 * &rhs.m22,
        }
    }
}

impl fmt::Display for GluingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m11, self.m12, self.m21, self.m22
        )
    }
}

impl Serialize for GluingMatrix {
    /// Row-major nested arrays of JSON integers.
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        let to_i64 = |v: &BigInt| {
            i64::try_from(v).map_err(|_| S::Error::custom(format!("entry {v} exceeds i64")))
        };
        let rows = [
            [to_i64(&self.m11)?, to_i64(&self.m12)?],
            [to_i64(&self.m21)?, to_i64(&self.m22)?],
        ];
        rows.serialize(serializer)
    }
}

/// `x⁻¹ mod m` for `m ≥ 2`, normalized into `[1, m)`.
fn inverse_mod(x: &BigInt, m: &BigInt) -> Option<BigInt> {
    let eg = x.extended_gcd(m);
    if !eg.gcd.abs().is_one() {
        return None;
    }
    let inv = eg.x * eg.gcd.signum();
    Some(inv.mod_floor(m))
}

/// `φ = [[p, u], [−q, −v]]` for `ratio = q/p`, with `u·q − p·v = 1` and
/// `0 < u < p`.
pub fn build_phi(ratio: &Fraction) -> Result<GluingMatrix> {
    let q = ratio.numer();
    let p = ratio.denom();
    if p.is_one() {
        return Err(Error::invalid(format!(
            "no gluing matrix for integer ratio {ratio}: 0 < u < 1 is empty"
        )));
    }
    let u = inverse_mod(q, p).expect("reduced fraction");
    let v = (&u * q - BigInt::one()) / p;
    GluingMatrix::new(p.clone(), u, -q, -v)
}

/// `φ = [[p, u], [q, v]]` for `ratio = q/p ∈ (0, 1)`, with `p·v − q·u = 1`
/// and `0 < u < p`.
pub fn build_phi_neg(ratio: &Fraction) -> Result<GluingMatrix> {
    if !ratio.in_unit_interval() {
        return Err(Error::invalid(format!(
            "negative-convention gluing needs 0 < q/p < 1, got {ratio}"
        )));
    }
    let q = ratio.numer();
    let p = ratio.denom();
    let u = inverse_mod(&-q, p).expect("reduced fraction");
    let v = (BigInt::one() + q * &u) / p;
    GluingMatrix::new(p.clone(), u, q.clone(), v)
}

/// Slope on `Tᵢ` of the dividing curves of a standard neighborhood of a
/// Legendrian singular fiber with twisting number `t < 0`:
/// `−q/p + 1/(p(t·p + u))`.
pub fn twist_slope_attach(r: &Fraction, t: &BigInt) -> Result<Fraction> {
    if !r.in_unit_interval() {
        return Err(Error::invalid(format!("need 0 < r < 1, got {r}")));
    }
    if !t.is_negative() {
        return Err(Error::invalid(format!(
            "twisting number must be < 0, got {t}"
        )));
    }
    let phi = build_phi(r)?;
    let [[p, u], _] = phi.entries();
    let correction = Fraction::new(1, p * (t * p + u))?;
    Ok(-r + correction)
}

/// The negative-convention analogue: `q/p + 1/(p(p·t + u))` for `t < −2`.
pub fn twist_slope_neg(ratio: &Fraction, t: &BigInt) -> Result<Fraction> {
    if *t >= BigInt::from(-2) {
        return Err(Error::invalid(format!(
            "twisting number must be < -2, got {t}"
        )));
    }
    let phi = build_phi_neg(ratio)?;
    let [[p, u], _] = phi.entries();
    let correction = Fraction::new(1, p * (p * t + u))?;
    Ok(ratio + correction)
}

/// Image of a slope on `T₃` under the fiber-preserving diffeomorphism
/// `M(D²; r₁, r₂) → M(D²; r₁ + n₁, r₂ + n₂)`.
pub fn reparam_slope(s: &Slope, n1: &BigInt, n2: &BigInt) -> Slope {
    match s {
        Slope::Infinity => Slope::Infinity,
        Slope::Finite(f) => Slope::Finite(f + Fraction::from_integer(n1 + n2)),
    }
}

/// `[[1, 0], [−n, 1]]·[[a₁, 1], [−1, 0]]·…·[[a_{m−1}, 1], [−1, 0]]·[[a_m + 1, 1], [−1, 0]]`.
pub fn phi_from_cf(n: &BigInt, cf: &PosCF) -> GluingMatrix {
    let cs = cf.coefficients();
    let last = cs.len() - 1;
    cs.iter()
        .enumerate()
        .fold(GluingMatrix::shear(n), |acc, (j, a)| {
            let a = if j == last { a + 1 } else { a.clone() };
            let factor = GluingMatrix {
                m11: a,
                m12: BigInt::one(),
                m21: -BigInt::one(),
                m22: BigInt::zero(),
            };
            &acc * &factor
        })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryImageReport {
    pub phi: GluingMatrix,
    /// `φ·(−1, 1)ᵀ`.
    pub image: (BigInt, BigInt),
    /// `(−a, n·a + a − b)`.
    pub expected: (BigInt, BigInt),
    /// Whether `φ` satisfies `0 < u < p`, in which case it was compared
    /// against `build_phi(n + r₃)`.
    pub normalized: bool,
}

/// Checks `φ₃·(−1, 1)ᵀ = (−a, n·a + a − b)ᵀ` for the coefficients attached
/// to `s`, and that `φ₃` agrees with the directly normalized gluing matrix
/// of `n + r₃` whenever it satisfies `0 < u < p` itself.
pub fn verify_boundary_image(s: &Fraction, n: &BigInt) -> Result<BoundaryImageReport> {
    let dec = floor_decompose(s);
    let cf = pos_cf_complement(&dec.b, &dec.a)?;
    let phi = phi_from_cf(n, &cf);
    let image = phi.apply(&BigInt::from(-1), &BigInt::one());
    let expected = (-dec.a.clone(), n * &dec.a + &dec.a - &dec.b);
    if image != expected {
        return Err(Error::internal(format!(
            "phi(-1, 1) = {image:?}, expected {expected:?} for s = {s}, n = {n}"
        )));
    }
    if !phi.determinant().is_one() {
        return Err(Error::internal(format!("det {phi} != 1")));
    }
    let [[p, u], _] = phi.entries();
    let normalized = u.is_positive() && u < p;
    if normalized {
        let r3 = cf.value_with_incremented_tail().recip()?;
        let direct = build_phi(&(Fraction::from_integer(n.clone()) + r3))?;
        if direct != phi {
            return Err(Error::internal(format!(
                "phi_from_cf = {phi} but build_phi(n + r3) = {direct}"
            )));
        }
    }
    Ok(BoundaryImageReport {
        phi,
        image,
        expected,
        normalized,
    })
}
