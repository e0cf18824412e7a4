//! Case analysis and counts of tight contact structures on
//! `N = M(D²; r₁, r₂)` with minimal convex boundary of slope `s` and
//! prescribed Giroux torsion along `∂N`.
//!
//! The torsion-zero cases reduce to the small Seifert manifold
//! `M(−1 − [s]; r₁, r₂, r₃)`:
//!
//! | case | slope range            | extra hypothesis     | answer                 |
//! |------|------------------------|----------------------|------------------------|
//! | 1a   | `s < −1`               |                      | closed form            |
//! | 1b   | `−1 ≤ s < 0`           |                      | closed form            |
//! | 2    | `0 ≤ s < 1`            | `r₁, r₂ ≥ 1/2`       | reduction to `M(−1; …)` |
//! | 3    | `1 ≤ s < 2`            | `r₁, r₂ < 1/2`       | closed form            |
//! | 4    | `s ≥ 2`                |                      | closed form            |
//!
//! For `r₁ = r₂ = 1/2` there are also answers at slope `∞` (torsion zero)
//! and for every slope at positive torsion.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::contfrac::{neg_cf, r3_from_slope, slope_coefficients, NegCF, PosCF};
use crate::error::{Error, Result};
use crate::numbers::{Fraction, Slope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedSeifert {
    r1: Fraction,
    r2: Fraction,
    slope: Slope,
    torsion: u64,
}

impl BoundedSeifert {
    pub fn new(r1: Fraction, r2: Fraction, slope: Slope, torsion: u64) -> Result<Self> {
        for (name, r) in [("r1", &r1), ("r2", &r2)] {
            if !r.in_unit_interval() {
                return Err(Error::invalid(format!("{name} must lie in (0,1), got {r}")));
            }
        }
        Ok(BoundedSeifert {
            r1,
            r2,
            slope,
            torsion,
        })
    }

    pub fn r1(&self) -> &Fraction {
        &self.r1
    }

    pub fn r2(&self) -> &Fraction {
        &self.r2
    }

    pub fn slope(&self) -> &Slope {
        &self.slope
    }

    pub fn torsion(&self) -> u64 {
        self.torsion
    }

    fn is_half_half(&self) -> bool {
        let half = Fraction::new(1, 2).expect("nonzero");
        self.r1 == half && self.r2 == half
    }
}

/// `M(e₀; r₁, r₂, r₃)` with all `rᵢ ∈ (0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedSeifert {
    pub e0: BigInt,
    pub r1: Fraction,
    pub r2: Fraction,
    pub r3: Fraction,
}

impl fmt::Display for ClosedSeifert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({}; {}, {}, {})", self.e0, self.r1, self.r2, self.r3)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseTag {
    C1a,
    C1b,
    C2,
    C3,
    C4,
    HalfHalfInfSlopeTorsion0,
    HalfHalfTorsionPositive,
    Uncovered(String),
}

impl CaseTag {
    /// Stable short code used in CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            CaseTag::C1a => "1a",
            CaseTag::C1b => "1b",
            CaseTag::C2 => "2",
            CaseTag::C3 => "3",
            CaseTag::C4 => "4",
            CaseTag::HalfHalfInfSlopeTorsion0 => "half_half_inf_torsion0",
            CaseTag::HalfHalfTorsionPositive => "half_half_torsion_positive",
            CaseTag::Uncovered(_) => "uncovered",
        }
    }

    /// Cases covered by the reduction to a closed small Seifert manifold.
    pub fn is_reduction_case(&self) -> bool {
        matches!(
            self,
            CaseTag::C1a | CaseTag::C1b | CaseTag::C2 | CaseTag::C3 | CaseTag::C4
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountResult {
    Exact(BigInt),
    /// A family indexed by `index_set` together with `extra` further
    /// structures.
    InfiniteFamilyPlusFinite {
        index_set: &'static str,
        extra: u64,
    },
    ReducesTo(ClosedSeifert),
    Uncovered(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorsionSign {
    Positive,
    Negative,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HalfHalfClass {
    /// Member of the `Z`-indexed family, labeled by holonomy.
    Holonomy(BigInt),
    /// `ζₜ` (positive) or `ζₜ′` (negative).
    Torsional(u64, TorsionSign),
}

impl fmt::Display for HalfHalfClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfHalfClass::Holonomy(k) => write!(f, "holonomy({k})"),
            HalfHalfClass::Torsional(t, TorsionSign::Positive) => write!(f, "torsional({t},+)"),
            HalfHalfClass::Torsional(t, TorsionSign::Negative) => write!(f, "torsional({t},-)"),
        }
    }
}

/// Labels of the structures on `M(D²; 1/2, 1/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfHalfLabels {
    /// True when the answer includes `{Holonomy(k) : k ∈ Z}`.
    pub holonomy_family: bool,
    pub explicit: Vec<HalfHalfClass>,
}

impl HalfHalfLabels {
    pub fn contains(&self, class: &HalfHalfClass) -> bool {
        match class {
            HalfHalfClass::Holonomy(_) => self.holonomy_family,
            other => self.explicit.contains(other),
        }
    }

    pub fn describe(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.holonomy_family {
            out.push("holonomy(k), k in Z".to_string());
        }
        out.extend(self.explicit.iter().map(ToString::to_string));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistingInfo {
    /// Every tight structure has a vertical Legendrian circle with twisting
    /// number zero.
    AdmitsZeroTwisting,
    /// After shifting to `M(D²; r₁ − 1, r₂ − 1)`, the maximal twisting
    /// number of vertical Legendrian circles is `−1`.
    MaxTwistingMinusOne,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Warning {
    /// Case 4 at an integer slope: the shuffle bound in the source argument
    /// excludes `s = [s]`, so the general formula is applied unconfirmed.
    Case4IntegerSlope,
}

impl Warning {
    pub fn code(&self) -> &'static str {
        match self {
            Warning::Case4IntegerSlope => "case4_integer_slope",
        }
    }
}

pub fn classify_case(q: &BoundedSeifert) -> CaseTag {
    let half = Fraction::new(1, 2).expect("nonzero");
    if q.is_half_half() {
        if q.torsion >= 1 {
            return CaseTag::HalfHalfTorsionPositive;
        }
        if q.slope.is_infinite() {
            return CaseTag::HalfHalfInfSlopeTorsion0;
        }
    }
    if q.torsion >= 1 {
        return CaseTag::Uncovered(format!(
            "positive Giroux torsion ({}) is only classified for r1 = r2 = 1/2",
            q.torsion
        ));
    }
    let s = match &q.slope {
        Slope::Finite(s) => s,
        Slope::Infinity => {
            return CaseTag::Uncovered("slope inf is only classified for r1 = r2 = 1/2".to_string())
        }
    };
    let one = Fraction::one();
    let two = Fraction::from(2);
    if s.is_negative() {
        if *s < -one.clone() {
            CaseTag::C1a
        } else {
            CaseTag::C1b
        }
    } else if *s < one {
        if q.r1 >= half && q.r2 >= half {
            CaseTag::C2
        } else {
            CaseTag::Uncovered("slope in [0,1) requires r1, r2 in [1/2,1)".to_string())
        }
    } else if *s < two {
        if q.r1 < half && q.r2 < half {
            CaseTag::C3
        } else {
            CaseTag::Uncovered("slope in [1,2) requires r1, r2 in (0,1/2)".to_string())
        }
    } else {
        CaseTag::C4
    }
}

/// `M(−1 − [s]; r₁, r₂, r₃)`.
pub fn reduction_target(q: &BoundedSeifert) -> Result<ClosedSeifert> {
    let s = q
        .slope
        .as_finite()
        .ok_or_else(|| Error::invalid("reduction target needs a finite slope"))?;
    Ok(ClosedSeifert {
        e0: -BigInt::one() - s.floor(),
        r1: q.r1.clone(),
        r2: q.r2.clone(),
        r3: r3_from_slope(s),
    })
}

/// `∏_{j=2}^{m−1}(aⱼ − 1) · a_m`.
fn tail_factor(cf: &PosCF) -> BigInt {
    cf.middle().iter().map(|a| a - 1).product::<BigInt>() * cf.last()
}

fn abs_product_from(cf: &NegCF, from: usize) -> BigInt {
    cf.coefficients()[from..]
        .iter()
        .map(|a| (a + 1i32).abs())
        .product()
}

fn count_case_1a(r1: &NegCF, r2: &NegCF, cf: &PosCF) -> BigInt {
    let outer = (&r1.coefficients()[0] * &r2.coefficients()[0]).abs();
    outer * abs_product_from(r1, 1) * abs_product_from(r2, 1) * cf.first() * tail_factor(cf)
}

fn count_case_1b(r1: &NegCF, r2: &NegCF, cf: &PosCF) -> Result<BigInt> {
    let a01 = &r1.coefficients()[0];
    let a02 = &r2.coefficients()[0];
    let a1 = cf.first();
    let bracket: BigInt = a01 * a02 * a1 - (a01 + 1i32) * (a02 + 1i32) * (a1 - 1i32);
    if !bracket.is_positive() {
        return Err(Error::internal(format!(
            "Case 1b bracket {bracket} is not positive"
        )));
    }
    Ok(bracket * tail_factor(cf) * abs_product_from(r1, 1) * abs_product_from(r2, 1))
}

/// Case 3 count; Case 4 multiplies by `[s]`.
fn count_case_3(r1: &NegCF, r2: &NegCF, cf: &PosCF) -> BigInt {
    abs_product_from(r1, 0) * abs_product_from(r2, 0) * (cf.first() - 1) * tail_factor(cf)
}

pub fn count_tcs(q: &BoundedSeifert) -> Result<CountResult> {
    Ok(census(q)?.count)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub case: CaseTag,
    pub count: CountResult,
    /// Present for the reduction cases 1a–4.
    pub reduction_target: Option<ClosedSeifert>,
    pub warnings: Vec<Warning>,
}

/// Classification, count, reduction target and warnings for one query.
pub fn census(q: &BoundedSeifert) -> Result<CensusReport> {
    let case = classify_case(q);
    let mut warnings = Vec::new();
    let reduction = if case.is_reduction_case() {
        Some(reduction_target(q)?)
    } else {
        None
    };
    let count = match &case {
        CaseTag::HalfHalfInfSlopeTorsion0 => CountResult::InfiniteFamilyPlusFinite {
            index_set: "Z",
            extra: 2,
        },
        CaseTag::HalfHalfTorsionPositive => CountResult::Exact(BigInt::from(2)),
        CaseTag::Uncovered(reason) => CountResult::Uncovered(reason.clone()),
        CaseTag::C2 => {
            let mut target = reduction.clone().expect("reduction case");
            target.e0 = -BigInt::one();
            CountResult::ReducesTo(target)
        }
        tag => {
            let s = q
                .slope
                .as_finite()
                .expect("reduction cases have finite slope");
            let cf = slope_coefficients(s);
            let n1 = neg_cf(&q.r1)?;
            let n2 = neg_cf(&q.r2)?;
            let value = match tag {
                CaseTag::C1a => count_case_1a(&n1, &n2, &cf),
                CaseTag::C1b => count_case_1b(&n1, &n2, &cf)?,
                CaseTag::C3 => count_case_3(&n1, &n2, &cf),
                CaseTag::C4 => {
                    if s.is_integer() {
                        warnings.push(Warning::Case4IntegerSlope);
                    }
                    s.floor() * count_case_3(&n1, &n2, &cf)
                }
                _ => unreachable!("remaining tags handled above"),
            };
            if !value.is_positive() {
                return Err(Error::internal(format!(
                    "nonpositive count {value} for {tag:?}"
                )));
            }
            CountResult::Exact(value)
        }
    };
    Ok(CensusReport {
        case,
        count,
        reduction_target: reduction,
        warnings,
    })
}

/// Labels for `M(D²; 1/2, 1/2)`: at torsion zero and slope `∞` the
/// holonomy family plus `ζ₀, ζ₀′`; at torsion `t ≥ 1` exactly `ζₜ, ζₜ′`.
pub fn half_half_labels(torsion: u64, slope: &Slope) -> Result<HalfHalfLabels> {
    let pair = |t| {
        vec![
            HalfHalfClass::Torsional(t, TorsionSign::Positive),
            HalfHalfClass::Torsional(t, TorsionSign::Negative),
        ]
    };
    match (torsion, slope) {
        (0, Slope::Infinity) => Ok(HalfHalfLabels {
            holonomy_family: true,
            explicit: pair(0),
        }),
        (0, Slope::Finite(s)) => Err(Error::invalid(format!(
            "torsion 0 at finite slope {s} is not a half-half regime"
        ))),
        (t, _) => Ok(HalfHalfLabels {
            holonomy_family: false,
            explicit: pair(t),
        }),
    }
}

/// Sufficient conditions for the twisting behaviour of vertical Legendrian
/// circles.
pub fn vertical_twisting_info(q: &BoundedSeifert) -> Result<TwistingInfo> {
    if q.torsion != 0 {
        return Err(Error::invalid("twisting info needs torsion 0"));
    }
    let s = q
        .slope
        .as_finite()
        .ok_or_else(|| Error::invalid("twisting info needs a finite slope"))?;
    let half = Fraction::new(1, 2)?;
    let one = Fraction::one();

    let max_r = std::cmp::max(&q.r1, &q.r2);
    let admits_zero = s <= max_r || (s.is_positive() && *s < one && q.r1 >= half && q.r2 >= half);

    // Shifted coordinates: slope s − 2 on M(D²; −q₁/p₁, −q₂/p₂), qᵢ/pᵢ = 1 − rᵢ.
    let shifted = s - Fraction::from(2);
    let ratio1 = &one - &q.r1;
    let ratio2 = &one - &q.r2;
    let minus_one = -one;
    let max_minus_one =
        !shifted.is_negative() || (shifted >= minus_one && ratio1 > half && ratio2 > half);

    match (admits_zero, max_minus_one) {
        (true, true) => Err(Error::internal(format!(
            "both twisting conditions hold at slope {s}"
        ))),
        (true, false) => Ok(TwistingInfo::AdmitsZeroTwisting),
        (false, true) => Ok(TwistingInfo::MaxTwistingMinusOne),
        (false, false) => Ok(TwistingInfo::Undetermined),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn frac(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    fn query(r1: (i64, i64), r2: (i64, i64), slope: Slope, torsion: u64) -> BoundedSeifert {
        BoundedSeifert::new(frac(r1.0, r1.1), frac(r2.0, r2.1), slope, torsion).unwrap()
    }

    fn fin(n: i64, d: i64) -> Slope {
        Slope::Finite(frac(n, d))
    }

    fn exact(v: i64) -> CountResult {
        CountResult::Exact(BigInt::from(v))
    }

    #[test]
    fn rejects_bad_invariants() {
        assert!(BoundedSeifert::new(frac(1, 1), frac(1, 2), Slope::Infinity, 0).is_err());
        assert!(BoundedSeifert::new(frac(1, 2), frac(-1, 2), Slope::Infinity, 0).is_err());
        assert!(BoundedSeifert::new(frac(1, 2), frac(0, 1), Slope::Infinity, 0).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_case(&query((1, 2), (1, 2), fin(-3, 2), 0)),
            CaseTag::C1a
        );
        assert_eq!(
            classify_case(&query((1, 3), (1, 3), fin(3, 2), 0)),
            CaseTag::C3
        );
        assert_eq!(
            classify_case(&query((1, 2), (1, 2), Slope::Infinity, 0)),
            CaseTag::HalfHalfInfSlopeTorsion0
        );
        assert!(matches!(
            classify_case(&query((1, 3), (1, 2), fin(3, 2), 0)),
            CaseTag::Uncovered(_)
        ));
    }

    #[test]
    fn classify_boundaries() {
        let c = |s: Slope, t| classify_case(&query((1, 2), (2, 3), s, t));
        assert_eq!(c(fin(-1, 1), 0), CaseTag::C1b);
        assert_eq!(c(fin(-101, 100), 0), CaseTag::C1a);
        assert_eq!(c(fin(0, 1), 0), CaseTag::C2);
        assert_eq!(c(fin(2, 1), 0), CaseTag::C4);
        assert!(matches!(c(fin(1, 1), 0), CaseTag::Uncovered(_)));
        assert!(matches!(c(Slope::Infinity, 0), CaseTag::Uncovered(_)));
        assert!(matches!(c(fin(-3, 1), 1), CaseTag::Uncovered(_)));
        // r = 1/2 in [1, 2) is not covered
        assert!(matches!(
            classify_case(&query((1, 2), (1, 2), fin(3, 2), 0)),
            CaseTag::Uncovered(_)
        ));
        assert!(matches!(
            classify_case(&query((1, 3), (1, 2), fin(1, 2), 0)),
            CaseTag::Uncovered(_)
        ));
    }

    #[test]
    fn reduction_target_examples() {
        let t = reduction_target(&query((1, 2), (1, 2), fin(-3, 2), 0)).unwrap();
        assert_eq!(t.to_string(), "M(1; 1/2, 1/2, 2/5)");
        let t = reduction_target(&query((1, 2), (1, 2), fin(1, 3), 0)).unwrap();
        assert_eq!(t.to_string(), "M(-1; 1/2, 1/2, 3/5)");
        let t = reduction_target(&query((1, 3), (1, 3), fin(5, 2), 0)).unwrap();
        assert_eq!(t.to_string(), "M(-3; 1/3, 1/3, 2/5)");
        assert!(reduction_target(&query((1, 3), (1, 3), Slope::Infinity, 0)).is_err());
    }

    #[test]
    fn count_examples() {
        let c = |r1, r2, s, t| count_tcs(&query(r1, r2, s, t)).unwrap();
        assert_eq!(c((1, 2), (1, 2), fin(-3, 2), 0), exact(12));
        assert_eq!(c((1, 2), (1, 2), fin(-1, 2), 0), exact(10));
        assert_eq!(c((1, 3), (1, 3), fin(3, 2), 0), exact(8));
        assert_eq!(c((1, 3), (1, 3), fin(5, 2), 0), exact(16));
        assert_eq!(
            c((1, 2), (1, 2), fin(1, 3), 0),
            CountResult::ReducesTo(ClosedSeifert {
                e0: BigInt::from(-1),
                r1: frac(1, 2),
                r2: frac(1, 2),
                r3: frac(3, 5),
            })
        );
        assert_eq!(c((1, 2), (1, 2), fin(7, 3), 5), exact(2));
        assert_eq!(
            c((1, 2), (1, 2), Slope::Infinity, 0),
            CountResult::InfiniteFamilyPlusFinite {
                index_set: "Z",
                extra: 2
            }
        );
        assert!(matches!(
            c((1, 3), (1, 2), fin(3, 2), 0),
            CountResult::Uncovered(_)
        ));
    }

    #[test]
    fn longer_expansions() {
        // r1 = 3/5: -5/3 = [-2, -3]; r2 = 2/7: -7/2 = [-4, -2];
        // s = -13/5: [s] = -3, b/a = 2/5, 5/3 = [2, 3].
        // 1a: |(-2)(-4)| · |-3+1| · |-2+1| · 2 · 3 = 8 · 2 · 1 · 6 = 96
        let q = query((3, 5), (2, 7), fin(-13, 5), 0);
        assert_eq!(count_tcs(&q).unwrap(), exact(96));
        // s = -3/5: [s] = -1, b/a = 2/5; 1b bracket = 8·2 − (−1)(−3)(1) = 13,
        // tail a_m = 3, solid tori 2 · 1
        let q = query((3, 5), (2, 7), fin(-3, 5), 0);
        assert_eq!(count_tcs(&q).unwrap(), exact(13 * 3 * 2));
        // s = 17/5 with r = 1/3, 2/7: [s] = 3, b/a = 2/5, [2, 3]
        // 4: 3 · |−2| · |−3|·|−1| · (2−1) · 3 = 3 · 2 · 3 · 3 = 54
        let q = query((1, 3), (2, 7), fin(17, 5), 0);
        assert_eq!(count_tcs(&q).unwrap(), exact(54));
    }

    #[test]
    fn case4_integer_slope_is_flagged() {
        let r = census(&query((1, 3), (1, 3), fin(3, 1), 0)).unwrap();
        assert_eq!(r.case, CaseTag::C4);
        // [2, 1]: 3 · 2 · 2 · (2 − 1) · 1
        assert_eq!(r.count, exact(12));
        assert_eq!(r.warnings, vec![Warning::Case4IntegerSlope]);
        let r = census(&query((1, 3), (1, 3), fin(7, 2), 0)).unwrap();
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn half_half_label_examples() {
        let l = half_half_labels(0, &Slope::Infinity).unwrap();
        assert!(l.holonomy_family);
        assert!(l.contains(&HalfHalfClass::Holonomy(BigInt::from(-17))));
        assert!(l.contains(&HalfHalfClass::Torsional(0, TorsionSign::Positive)));
        assert!(l.contains(&HalfHalfClass::Torsional(0, TorsionSign::Negative)));
        let l = half_half_labels(3, &fin(1, 2)).unwrap();
        assert_eq!(
            l.explicit,
            vec![
                HalfHalfClass::Torsional(3, TorsionSign::Positive),
                HalfHalfClass::Torsional(3, TorsionSign::Negative)
            ]
        );
        assert!(!l.holonomy_family);
        let l = half_half_labels(1, &Slope::Infinity).unwrap();
        assert_eq!(l.explicit.len(), 2);
        assert!(half_half_labels(0, &fin(1, 2)).is_err());
    }

    #[test]
    fn twisting_examples() {
        let t = |r1, r2, s| vertical_twisting_info(&query(r1, r2, s, 0)).unwrap();
        assert_eq!(
            t((1, 2), (1, 2), fin(-3, 1)),
            TwistingInfo::AdmitsZeroTwisting
        );
        assert_eq!(
            t((1, 3), (1, 3), fin(3, 2)),
            TwistingInfo::MaxTwistingMinusOne
        );
        assert_eq!(t((1, 3), (1, 2), fin(3, 2)), TwistingInfo::Undetermined);
        assert_eq!(
            t((2, 3), (3, 4), fin(1, 2)),
            TwistingInfo::AdmitsZeroTwisting
        );
        assert_eq!(
            t((1, 3), (1, 2), fin(9, 4)),
            TwistingInfo::MaxTwistingMinusOne
        );
        assert!(vertical_twisting_info(&query((1, 2), (1, 2), Slope::Infinity, 0)).is_err());
        assert!(vertical_twisting_info(&query((1, 2), (1, 2), fin(1, 1), 2)).is_err());
    }

    fn arb_unit() -> impl Strategy<Value = Fraction> {
        (2i64..60)
            .prop_flat_map(|d| (1..d, Just(d)))
            .prop_map(|(n, d)| frac(n, d))
    }

    /// Proper fractions in `[1/2, 1)`.
    fn arb_upper_half() -> impl Strategy<Value = Fraction> {
        (2i64..60)
            .prop_flat_map(|d| ((d + 1) / 2..d, Just(d)))
            .prop_map(|(n, d)| frac(n, d))
    }

    fn arb_slope() -> impl Strategy<Value = Fraction> {
        (-400i64..400, 1i64..60).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #[test]
        fn counts_symmetric_in_r1_r2(r1 in arb_unit(), r2 in arb_unit(), s in arb_slope()) {
            let a = BoundedSeifert::new(r1.clone(), r2.clone(), Slope::Finite(s.clone()), 0).unwrap();
            let b = BoundedSeifert::new(r2, r1, Slope::Finite(s), 0).unwrap();
            let ca = count_tcs(&a).unwrap();
            let cb = count_tcs(&b).unwrap();
            match (&ca, &cb) {
                (CountResult::ReducesTo(x), CountResult::ReducesTo(y)) => {
                    prop_assert_eq!((&x.e0, &x.r3), (&y.e0, &y.r3));
                }
                _ => prop_assert_eq!(ca, cb),
            }
        }

        #[test]
        fn exact_counts_are_positive_and_twisting_is_consistent(
            r1 in arb_unit(), r2 in arb_unit(), s in arb_slope()
        ) {
            let q = BoundedSeifert::new(r1, r2, Slope::Finite(s), 0).unwrap();
            if let CountResult::Exact(v) = count_tcs(&q).unwrap() {
                prop_assert!(v.is_positive());
            }
            // never both sufficient conditions at once
            prop_assert!(vertical_twisting_info(&q).is_ok());
        }

        #[test]
        fn exactly_one_tag_fires(
            r1 in arb_unit(), r2 in arb_unit(), s in arb_slope(), inf: bool, torsion in 0u64..3
        ) {
            let slope = if inf { Slope::Infinity } else { Slope::Finite(s.clone()) };
            let q = BoundedSeifert::new(r1.clone(), r2.clone(), slope, torsion).unwrap();
            let half = frac(1, 2);
            let one = Fraction::one();
            let hh = r1 == half && r2 == half;
            let t0 = torsion == 0 && !inf;
            let predicates = [
                (CaseTag::C1a, t0 && s < -one.clone()),
                (CaseTag::C1b, t0 && s >= -one.clone() && s.is_negative()),
                (CaseTag::C2, t0 && !s.is_negative() && s < one && r1 >= half && r2 >= half),
                (CaseTag::C3, t0 && s >= one && s < Fraction::from(2) && r1 < half && r2 < half),
                (CaseTag::C4, t0 && s >= Fraction::from(2)),
                (CaseTag::HalfHalfInfSlopeTorsion0, hh && torsion == 0 && inf),
                (CaseTag::HalfHalfTorsionPositive, hh && torsion >= 1),
            ];
            let firing: Vec<_> = predicates.iter().filter(|(_, p)| *p).map(|(t, _)| t.clone()).collect();
            prop_assert!(firing.len() <= 1);
            let tag = classify_case(&q);
            match firing.first() {
                Some(expected) => prop_assert_eq!(&tag, expected),
                None => prop_assert!(matches!(tag, CaseTag::Uncovered(_))),
            }
        }

        #[test]
        fn case2_payload_is_reduction_target(
            r1 in arb_upper_half(), r2 in arb_upper_half(), (n, d) in (1i64..60).prop_flat_map(|d| (0..d, Just(d)))
        ) {
            let q = BoundedSeifert::new(r1, r2, fin(n, d), 0).unwrap();
            let target = reduction_target(&q).unwrap();
            prop_assert_eq!(&target.e0, &BigInt::from(-1));
            prop_assert_eq!(count_tcs(&q).unwrap(), CountResult::ReducesTo(target));
        }

        #[test]
        fn case1b_bracket_positive(a01 in -200i64..=-2, a02 in -200i64..=-2, a1 in 2i64..200) {
            let (a01, a02, a1) = (BigInt::from(a01), BigInt::from(a02), BigInt::from(a1));
            let bracket: BigInt = &a01 * &a02 * &a1 - (&a01 + 1i32) * (&a02 + 1i32) * (&a1 - 1i32);
            prop_assert!(bracket.is_positive());
        }
    }
}
