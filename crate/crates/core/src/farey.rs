//! Farey-graph paths and the basic-slice bookkeeping of thickened tori.
//!
//! Slopes of a minimally twisting layer move monotonically: going
//! counterclockwise from the first boundary slope, that is increasing and
//! wrapping from `+∞` to `−∞`. [`farey_shortest_path`] therefore returns a
//! shortest path *inside that arc*. A shortest path in the whole graph can
//! be shorter: `∞ → 1 → 4/5` has two edges, but within `[−∞, 4/5]` five
//! edges are needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::contfrac::{NegCF, PosCF};
use crate::error::{Error, Result};
use crate::gluing::GluingMatrix;
use crate::numbers::{Fraction, Slope};

/// `|p·q′ − p′·q| = 1`, with `∞ = 1/0`.
pub fn is_farey_edge(s1: &Slope, s2: &Slope) -> Result<bool> {
    if s1 == s2 {
        return Err(Error::invalid(format!(
            "Farey adjacency of {s1} with itself"
        )));
    }
    Ok(cross(s1, s2).abs().is_one())
}

fn cross(s1: &Slope, s2: &Slope) -> BigInt {
    let (x1, y1) = s1.to_vector();
    let (x2, y2) = s2.to_vector();
    y1 * x2 - y2 * x1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FareyPath {
    vertices: Vec<Slope>,
}

impl FareyPath {
    pub fn vertices(&self) -> &[Slope] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Consecutive vertices are distinct and Farey-adjacent.
    pub fn is_connected(&self) -> bool {
        self.vertices
            .windows(2)
            .all(|w| matches!(is_farey_edge(&w[0], &w[1]), Ok(true)))
    }
}

/// An `SL(2, Z)` matrix taking the slope `s` to `∞`.
fn frame_sending_to_infinity(s: &Slope) -> GluingMatrix {
    let (x, y) = s.to_vector();
    let eg = x.extended_gcd(&y);
    // x·ex + y·ey = ±1
    let sign = eg.gcd.signum();
    let alpha = eg.x * &sign;
    let beta = eg.y * &sign;
    GluingMatrix::new(y, -x, alpha, beta).expect("determinant x·alpha + y·beta = 1")
}

/// Whether `x` lies on the closed counterclockwise arc from `from` to `to`.
pub fn in_ccw_arc(from: &Slope, to: &Slope, x: &Slope) -> bool {
    let frame = frame_sending_to_infinity(from);
    let end = frame.act_on_slope(to);
    match frame.act_on_slope(x) {
        Slope::Infinity => true,
        Slope::Finite(v) => match end {
            Slope::Finite(e) => v <= e,
            Slope::Infinity => true,
        },
    }
}

/// Shortest Farey path from `s0` to `s1` through the counterclockwise arc
/// between them.
///
/// After moving `s0` to `∞`, the target `x` is reached greedily: the arc
/// `[−∞, x]` must pass through `⌊x⌋` (the edge `⌊x⌋, ⌊x⌋ + 1` separates `x`
/// from `∞`), and the remaining arc `[⌊x⌋, x]` is handled recursively after
/// sending `⌊x⌋` to `∞` with `z ↦ −1/(z − ⌊x⌋)`.
pub fn farey_shortest_path(s0: &Slope, s1: &Slope) -> Result<FareyPath> {
    if s0 == s1 {
        return Err(Error::invalid(format!("path endpoints coincide: {s0}")));
    }
    let to_infinity = frame_sending_to_infinity(s0);
    let mut back = to_infinity.inverse();
    let mut target = match to_infinity.act_on_slope(s1) {
        Slope::Finite(f) => f,
        Slope::Infinity => unreachable!("distinct slopes have distinct images"),
    };
    let rotate = GluingMatrix::new(0, 1, -1, 0).expect("det 1");
    let mut vertices = vec![s0.clone()];
    loop {
        let step = target.floor();
        vertices.push(back.act_on_slope(&Slope::Finite(Fraction::from_integer(step.clone()))));
        if target.is_integer() {
            break;
        }
        let shift = &rotate * &GluingMatrix::shear(&step);
        back = &back * &shift.inverse();
        target = -(target - Fraction::from_integer(step)).recip()?;
    }
    Ok(FareyPath { vertices })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockCase {
    /// Blocks of a layer running from `∞` to `s` (slopes below zero).
    OuterInfinity,
    /// Blocks of a layer running from `[s] − 2` to `s − 2` (slopes from two).
    IntegerFloor,
}

/// Basic-slice counts of the continued-fraction blocks of a layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProfile {
    pub sizes: Vec<BigInt>,
}

impl BlockProfile {
    pub fn total(&self) -> BigInt {
        self.sizes.iter().sum()
    }
}

pub fn block_profile_case(case: BlockCase, cf: &PosCF) -> BlockProfile {
    let first_offset = match case {
        BlockCase::OuterInfinity => 1,
        BlockCase::IntegerFloor => 2,
    };
    let mut sizes = Vec::with_capacity(cf.len());
    sizes.push(cf.first() - first_offset);
    sizes.extend(cf.middle().iter().map(|a| a - 2));
    sizes.push(cf.last() - 1);
    BlockProfile { sizes }
}

/// A block of `n` basic slices contributes `n + 1` sign classes.
pub fn shuffle_count(profile: &BlockProfile) -> BigInt {
    profile.sizes.iter().map(|n| n + 1).product()
}

/// `∏_{j ≥ from_index} |aⱼ + 1|`.
pub fn solid_torus_count(cf: &NegCF, from_index: usize) -> Result<BigInt> {
    let cs = cf.coefficients();
    if from_index > cs.len() {
        return Err(Error::invalid(format!(
            "start index {from_index} beyond {} coefficients",
            cs.len()
        )));
    }
    Ok(cs[from_index..].iter().map(|a| (a + 1i32).abs()).product())
}

/// `|a₀|`, the number of minimally twisting layers between slopes `∞` and
/// `1/(a₀ + 1)`.
pub fn outer_layer_count(cf: &NegCF) -> BigInt {
    cf.coefficients()[0].abs()
}

impl BlockProfile {
    pub fn is_trivial(&self) -> bool {
        self.sizes.iter().all(Zero::is_zero)
    }
}
