//! Command-line front end.
//!
//! Exit codes: `0` on success (an uncovered case or an empty search is still
//! a success), `2` when input fails validation, `1` when an internal
//! identity is violated.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::census::{
    census, half_half_labels, BoundedSeifert, CaseTag, CensusReport, ClosedSeifert, CountResult,
};
use crate::contfrac::{neg_cf, pos_cf_complement, r3_from_slope, slope_coefficients};
use crate::error::Error;
use crate::farey::{
    block_profile_case, farey_shortest_path, in_ccw_arc, outer_layer_count, shuffle_count,
    solid_torus_count, BlockCase,
};
use crate::gluing::{build_phi, build_phi_neg, verify_boundary_image};
use crate::numbers::{floor_decompose, Fraction, Slope};
use crate::obstruction::{search_witness, ObstructionQuery, SearchOutcome};

#[derive(Debug, Parser)]
#[command(
    name = "tight-census",
    version,
    about = "Tight contact structures on bounded Seifert manifolds M(D^2; r1, r2)"
)]
struct Cli {
    /// Emit one JSON object per query.
    #[arg(long, global = true)]
    json: bool,

    /// Run `count` over a JSONL file of {r1, r2, slope, torsion} objects.
    #[arg(long, global = true, value_name = "FILE")]
    batch: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a query and count its tight contact structures.
    Count(CountArgs),
    /// Continued-fraction coefficients.
    Cf {
        #[arg(long, allow_hyphen_values = true)]
        value: Fraction,
        #[arg(long, value_enum, default_value_t = Convention::Neg)]
        convention: Convention,
    },
    /// r3 attached to a boundary slope.
    R3 {
        #[arg(long, allow_hyphen_values = true)]
        slope: Fraction,
    },
    /// Gluing matrix of a Seifert invariant.
    Phi {
        #[arg(long, allow_hyphen_values = true)]
        r: Fraction,
        #[arg(long, value_enum, default_value_t = PhiConvention::Boundary)]
        convention: PhiConvention,
    },
    /// Shortest Farey path through the counterclockwise arc.
    FareyPath {
        #[arg(long, allow_hyphen_values = true)]
        from: Slope,
        #[arg(long, allow_hyphen_values = true)]
        to: Slope,
    },
    /// Search for transverse-contact-structure data.
    Obstruction(ObstructionArgs),
    /// Closed small Seifert manifold M(-1-[s]; r1, r2, r3).
    ReduceTarget {
        #[arg(long, allow_hyphen_values = true)]
        r1: Fraction,
        #[arg(long, allow_hyphen_values = true)]
        r2: Fraction,
        #[arg(long, allow_hyphen_values = true)]
        slope: Fraction,
    },
    /// Run the bounded self-check suites.
    Verify,
}

#[derive(Debug, Args)]
struct CountArgs {
    /// First Seifert invariant, in (0,1)
    #[arg(long, allow_hyphen_values = true)]
    r1: Fraction,
    /// Second Seifert invariant, in (0,1)
    #[arg(long, allow_hyphen_values = true)]
    r2: Fraction,
    /// Boundary slope: P/Q, an integer, or inf
    #[arg(long, allow_hyphen_values = true)]
    slope: Slope,
    /// Giroux torsion along the boundary
    #[arg(long, default_value_t = 0)]
    torsion: u64,
}

#[derive(Debug, Args)]
struct ObstructionArgs {
    #[arg(long, allow_hyphen_values = true, requires_all = ["c2", "c3"], conflicts_with_all = ["r1", "r2", "slope"])]
    c1: Option<Fraction>,
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<Fraction>,
    #[arg(long, allow_hyphen_values = true)]
    c3: Option<Fraction>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["r2", "slope"])]
    r1: Option<Fraction>,
    #[arg(long, allow_hyphen_values = true)]
    r2: Option<Fraction>,
    #[arg(long, allow_hyphen_values = true)]
    slope: Option<Fraction>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Convention {
    Neg,
    Pos,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PhiConvention {
    Boundary,
    Negative,
}

/// JSON form of a count query result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub case: String,
    pub count: CountJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduction_target: Option<TargetJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CountJson {
    Exact { value: String },
    InfiniteFamily { index_set: String, extra: u64 },
    ReducesTo { target: TargetJson },
    Uncovered { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetJson {
    pub e0: i64,
    pub r: [String; 3],
}

impl TargetJson {
    fn from_closed(m: &ClosedSeifert) -> Result<Self, Error> {
        let e0 = i64::try_from(&m.e0)
            .map_err(|_| Error::invalid(format!("--slope: e0 = {} does not fit in i64", m.e0)))?;
        Ok(TargetJson {
            e0,
            r: [m.r1.to_string(), m.r2.to_string(), m.r3.to_string()],
        })
    }
}

impl CountReport {
    pub fn from_census(q: &BoundedSeifert, report: &CensusReport) -> Result<Self, Error> {
        let count = match &report.count {
            CountResult::Exact(v) => CountJson::Exact {
                value: v.to_string(),
            },
            CountResult::InfiniteFamilyPlusFinite { index_set, extra } => {
                CountJson::InfiniteFamily {
                    index_set: index_set.to_string(),
                    extra: *extra,
                }
            }
            CountResult::ReducesTo(m) => CountJson::ReducesTo {
                target: TargetJson::from_closed(m)?,
            },
            CountResult::Uncovered(reason) => CountJson::Uncovered {
                reason: reason.clone(),
            },
        };
        let labels = match report.case {
            CaseTag::HalfHalfInfSlopeTorsion0 | CaseTag::HalfHalfTorsionPositive => {
                Some(half_half_labels(q.torsion(), q.slope())?.describe())
            }
            _ => None,
        };
        Ok(CountReport {
            case: report.case.code().to_string(),
            count,
            reduction_target: report
                .reduction_target
                .as_ref()
                .map(TargetJson::from_closed)
                .transpose()?,
            labels,
            warnings: report
                .warnings
                .iter()
                .map(|w| w.code().to_string())
                .collect(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("case: {}\n", self.case);
        let fmt_target =
            |t: &TargetJson| format!("M({}; {}, {}, {})", t.e0, t.r[0], t.r[1], t.r[2]);
        match &self.count {
            CountJson::Exact { value } => out += &format!("count: {value}\n"),
            CountJson::InfiniteFamily { index_set, extra } => {
                out += &format!("count: family indexed by {index_set} plus {extra}\n")
            }
            CountJson::ReducesTo { target } => {
                out += &format!("count: equal to the count on {}\n", fmt_target(target))
            }
            CountJson::Uncovered { reason } => {
                out += &format!("count: uncovered\nreason: {reason}\n")
            }
        }
        if let Some(t) = &self.reduction_target {
            out += &format!("reduction target: {}\n", fmt_target(t));
        }
        if let Some(labels) = &self.labels {
            out += &format!("labels: {}\n", labels.join("; "));
        }
        for w in &self.warnings {
            out += &format!("warning: {w}\n");
        }
        out
    }
}

/// Runs `count` on one query.
pub fn count_report(
    r1: Fraction,
    r2: Fraction,
    slope: Slope,
    torsion: u64,
) -> Result<CountReport, Error> {
    let q = BoundedSeifert::new(r1, r2, slope, torsion).map_err(|e| match e {
        Error::InvalidInput(m) => Error::InvalidInput(format!("--r1/--r2: {m}")),
        other => other,
    })?;
    let report = census(&q)?;
    CountReport::from_census(&q, &report)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) => 2,
        Error::Internal(_) => 1,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = dispatch(&cli, out);
    match result {
        Ok(()) => 0,
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(Failure::ChecksFailed) => 1,
    }
}

enum Failure {
    Core(Error),
    Io(std::io::Error),
    ChecksFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn dispatch<W: Write>(cli: &Cli, out: &mut W) -> Result<(), Failure> {
    if let Some(path) = &cli.batch {
        return match &cli.command {
            None | Some(Command::Count(_)) => run_batch(path, out),
            Some(_) => Err(Error::invalid("--batch only runs the count subcommand").into()),
        };
    }
    let json = cli.json;
    let Some(command) = &cli.command else {
        return Err(Error::invalid("no subcommand given (see --help)").into());
    };
    match command {
        Command::Count(a) => {
            let report = count_report(a.r1.clone(), a.r2.clone(), a.slope.clone(), a.torsion)?;
            if json {
                writeln!(out, "{}", to_json(&report))?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
        }
        Command::Cf { value, convention } => {
            let coefficients: Vec<BigInt> = match convention {
                Convention::Neg => neg_cf(value)
                    .map_err(|e| flag_error("--value", e))?
                    .coefficients()
                    .to_vec(),
                Convention::Pos => {
                    let dec = floor_decompose(value);
                    pos_cf_complement(&dec.b, &dec.a)?.coefficients().to_vec()
                }
            };
            let strings: Vec<String> = coefficients.iter().map(ToString::to_string).collect();
            writeln!(out, "[{}]", strings.join(","))?;
        }
        Command::R3 { slope } => {
            let r3 = r3_from_slope(slope);
            if json {
                writeln!(out, "{}", serde_json::json!({ "r3": r3.to_string() }))?;
            } else {
                writeln!(out, "{r3}")?;
            }
        }
        Command::Phi { r, convention } => {
            let phi = match convention {
                PhiConvention::Boundary => build_phi(r),
                PhiConvention::Negative => build_phi_neg(r),
            }
            .map_err(|e| flag_error("--r", e))?;
            writeln!(
                out,
                "{}",
                serde_json::to_string(&phi).map_err(|e| Error::invalid(format!("--r: {e}")))?
            )?;
        }
        Command::FareyPath { from, to } => {
            let path = farey_shortest_path(from, to).map_err(|e| flag_error("--from/--to", e))?;
            if json {
                writeln!(out, "{}", to_json(&path))?;
            } else {
                let parts: Vec<String> = path.vertices().iter().map(ToString::to_string).collect();
                writeln!(out, "{}", parts.join(" -> "))?;
            }
        }
        Command::Obstruction(a) => {
            let query = match (&a.c1, &a.c2, &a.c3, &a.r1, &a.r2, &a.slope) {
                (Some(c1), Some(c2), Some(c3), _, _, _) => ObstructionQuery {
                    c1: c1.clone(),
                    c2: c2.clone(),
                    c3: c3.clone(),
                },
                (_, _, _, Some(r1), Some(r2), Some(s)) => {
                    for (name, r) in [("--r1", r1), ("--r2", r2)] {
                        if !r.in_unit_interval() {
                            return Err(Error::invalid(format!(
                                "{name}: must lie in (0,1), got {r}"
                            ))
                            .into());
                        }
                    }
                    ObstructionQuery::for_case3(r1, r2, s)
                }
                _ => {
                    return Err(Error::invalid(
                        "obstruction needs either --c1 --c2 --c3 or --r1 --r2 --slope",
                    )
                    .into())
                }
            };
            let outcome = search_witness(&query).map_err(|e| flag_error("--c3", e))?;
            match (outcome, json) {
                (SearchOutcome::Witness(w), true) => writeln!(out, "{}", to_json(&w))?,
                (SearchOutcome::Witness(w), false) => writeln!(
                    out,
                    "witness k={} h=({}, {}, {})",
                    w.k, w.h[0], w.h[1], w.h[2]
                )?,
                (SearchOutcome::NoWitness, true) => writeln!(out, "\"none\"")?,
                (SearchOutcome::NoWitness, false) => writeln!(out, "none")?,
                (SearchOutcome::Undetermined, true) => writeln!(out, "\"undetermined\"")?,
                (SearchOutcome::Undetermined, false) => writeln!(out, "undetermined")?,
            }
        }
        Command::ReduceTarget { r1, r2, slope } => {
            let q = BoundedSeifert::new(r1.clone(), r2.clone(), Slope::Finite(slope.clone()), 0)
                .map_err(|e| flag_error("--r1/--r2", e))?;
            let target = crate::census::reduction_target(&q)?;
            if json {
                writeln!(out, "{}", to_json(&TargetJson::from_closed(&target)?))?;
            } else {
                writeln!(out, "{target}")?;
            }
        }
        Command::Verify => {
            let checks = run_self_checks();
            let all_passed = checks.iter().all(|c| c.passed);
            if json {
                writeln!(out, "{}", serde_json::json!({ "checks": checks }))?;
            } else {
                for c in &checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(
                        out,
                        "{status} {} ({} cases){}",
                        c.name,
                        c.cases,
                        c.detail
                            .as_deref()
                            .map(|d| format!(": {d}"))
                            .unwrap_or_default()
                    )?;
                }
            }
            if !all_passed {
                return Err(Failure::ChecksFailed);
            }
        }
    }
    Ok(())
}

fn flag_error(flag: &str, e: Error) -> Error {
    match e {
        Error::InvalidInput(m) => Error::InvalidInput(format!("{flag}: {m}")),
        other => other,
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize")
}

/// Reads one field as text; JSON integers are accepted for fractions.
fn text_field(obj: &serde_json::Map<String, Value>, name: &str) -> Result<String, String> {
    match obj.get(name) {
        Some(Value::String(s)) => Ok(s.clone()),
        Some(Value::Number(n)) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        Some(other) => Err(format!(
            "field '{name}' must be a string or integer, got {other}"
        )),
        None => Err(format!("missing field '{name}'")),
    }
}

fn batch_line(line: &str) -> Result<CountReport, String> {
    let value: Value = serde_json::from_str(line).map_err(|e| format!("malformed JSON: {e}"))?;
    let obj = value.as_object().ok_or("line is not a JSON object")?;
    let r1: Fraction = text_field(obj, "r1")?
        .parse()
        .map_err(|e| format!("r1: {e}"))?;
    let r2: Fraction = text_field(obj, "r2")?
        .parse()
        .map_err(|e| format!("r2: {e}"))?;
    let slope: Slope = text_field(obj, "slope")?
        .parse()
        .map_err(|e| format!("slope: {e}"))?;
    let torsion = match obj.get("torsion") {
        None => 0,
        Some(Value::Number(n)) => n.as_u64().ok_or("torsion must be a nonnegative integer")?,
        Some(Value::String(s)) => s
            .trim()
            .parse()
            .map_err(|_| "torsion must be a nonnegative integer")?,
        Some(_) => return Err("torsion must be a nonnegative integer".into()),
    };
    count_report(r1, r2, slope, torsion).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct LineError {
    line: usize,
    error: String,
}

/// Evaluates a JSONL file of count queries; output order follows input
/// order. Blank lines are skipped.
pub fn batch_lines(contents: &str) -> Vec<String> {
    let lines: Vec<(usize, &str)> = contents
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    lines
        .par_iter()
        .map(|(idx, line)| match batch_line(line) {
            Ok(report) => to_json(&report),
            Err(error) => to_json(&LineError {
                line: idx + 1,
                error,
            }),
        })
        .collect()
}

fn run_batch<W: Write>(path: &Path, out: &mut W) -> Result<(), Failure> {
    let contents = fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("--batch: cannot read {}: {e}", path.display())))?;
    for line in batch_lines(&contents) {
        writeln!(out, "{line}")?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct CheckResult {
    name: &'static str,
    passed: bool,
    cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

fn fractions_with_denominator_at_most(
    max_den: i64,
    lo: i64,
    hi: i64,
) -> impl Iterator<Item = Fraction> {
    (1..=max_den).flat_map(move |d| {
        (lo * d..hi * d)
            .filter(move |n| num_integer::gcd(*n, d) == 1)
            .map(move |n| Fraction::new(n, d).expect("d > 0"))
    })
}

fn check(name: &'static str, mut f: impl FnMut() -> Result<usize, String>) -> CheckResult {
    match f() {
        Ok(cases) => CheckResult {
            name,
            passed: true,
            cases,
            detail: None,
        },
        Err(detail) => CheckResult {
            name,
            passed: false,
            cases: 0,
            detail: Some(detail),
        },
    }
}

fn run_self_checks() -> Vec<CheckResult> {
    let one = Fraction::one();
    vec![
        check("negative CF roundtrip", || {
            let mut n = 0;
            for r in fractions_with_denominator_at_most(100, 0, 1).filter(|r| r.in_unit_interval())
            {
                let cf = neg_cf(&r).map_err(|e| e.to_string())?;
                if cf.value() != -r.recip().map_err(|e| e.to_string())? {
                    return Err(format!("r = {r}"));
                }
                n += 1;
            }
            Ok(n)
        }),
        check("r3 range", || {
            let mut n = 0;
            for s in fractions_with_denominator_at_most(100, -3, 3) {
                let r3 = r3_from_slope(&s);
                let frac_part = floor_decompose(&s).fractional_part();
                if !r3.in_unit_interval() || r3 >= &one - &frac_part {
                    return Err(format!("s = {s}, r3 = {r3}"));
                }
                n += 1;
            }
            Ok(n)
        }),
        check("phi_3 (-1,1) identity", || {
            let mut n = 0;
            for s in fractions_with_denominator_at_most(40, -3, 3) {
                for k in -5i64..=5 {
                    verify_boundary_image(&s, &BigInt::from(k)).map_err(|e| e.to_string())?;
                    n += 1;
                }
            }
            Ok(n)
        }),
        check("Farey arc length vs block profile", || {
            let mut n = 0;
            for s in fractions_with_denominator_at_most(30, -3, 3) {
                let slope = Slope::Finite(s.clone());
                let path =
                    farey_shortest_path(&Slope::Infinity, &slope).map_err(|e| e.to_string())?;
                let prof = block_profile_case(BlockCase::OuterInfinity, &slope_coefficients(&s));
                let inside = path
                    .vertices()
                    .iter()
                    .all(|v| in_ccw_arc(&Slope::Infinity, &slope, v));
                if !path.is_connected()
                    || !inside
                    || BigInt::from(path.edge_count()) != prof.total()
                {
                    return Err(format!("s = {s}"));
                }
                n += 1;
            }
            Ok(n)
        }),
        check("component factorization (1a, 4)", || {
            let mut n = 0;
            let units: Vec<Fraction> = fractions_with_denominator_at_most(8, 0, 1)
                .filter(|r| r.in_unit_interval())
                .collect();
            let slopes: Vec<Fraction> = fractions_with_denominator_at_most(8, -4, -1)
                .filter(|s| *s < -one.clone())
                .chain(fractions_with_denominator_at_most(8, 2, 5))
                .collect();
            for r1 in &units {
                for r2 in &units {
                    for s in &slopes {
                        let q = BoundedSeifert::new(
                            r1.clone(),
                            r2.clone(),
                            Slope::Finite(s.clone()),
                            0,
                        )
                        .map_err(|e| e.to_string())?;
                        let report = census(&q).map_err(|e| e.to_string())?;
                        let (n1, n2) = (neg_cf(r1).unwrap(), neg_cf(r2).unwrap());
                        let cf = slope_coefficients(s);
                        let expected = if s.is_negative() {
                            outer_layer_count(&n1)
                                * outer_layer_count(&n2)
                                * solid_torus_count(&n1, 1).unwrap()
                                * solid_torus_count(&n2, 1).unwrap()
                                * shuffle_count(&block_profile_case(BlockCase::OuterInfinity, &cf))
                        } else {
                            s.floor()
                                * solid_torus_count(&n1, 0).unwrap()
                                * solid_torus_count(&n2, 0).unwrap()
                                * shuffle_count(&block_profile_case(BlockCase::IntegerFloor, &cf))
                        };
                        if report.count != CountResult::Exact(expected) {
                            return Err(format!("({r1}, {r2}, {s})"));
                        }
                        n += 1;
                    }
                }
            }
            Ok(n)
        }),
        check("Case 3 parity obstruction", || {
            let mut n = 0;
            let half = Fraction::new(1, 2).unwrap();
            let small: Vec<Fraction> = fractions_with_denominator_at_most(12, 0, 1)
                .filter(|r| r.is_positive() && *r < half)
                .collect();
            let slopes: Vec<Fraction> = fractions_with_denominator_at_most(12, 1, 2).collect();
            for r1 in &small {
                for r2 in &small {
                    for s in &slopes {
                        match crate::obstruction::case3_no_transverse(r1, r2, s) {
                            Ok(true) => n += 1,
                            other => return Err(format!("({r1}, {r2}, {s}): {other:?}")),
                        }
                    }
                }
            }
            Ok(n)
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("tight-census").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_json_example() {
        let (code, out, _) = run_args(&[
            "count",
            "--r1",
            "1/2",
            "--r2",
            "1/2",
            "--slope",
            "-3/2",
            "--torsion",
            "0",
            "--json",
        ]);
        assert_eq!(code, 0);
        assert_eq!(
            out.trim(),
            r#"{"case":"1a","count":{"kind":"exact","value":"12"},"reduction_target":{"e0":1,"r":["1/2","1/2","2/5"]}}"#
        );
    }

    #[test]
    fn r3_example() {
        let (code, out, _) = run_args(&["r3", "--slope", "1/3"]);
        assert_eq!((code, out.trim()), (0, "3/5"));
    }

    #[test]
    fn uncovered_exits_zero() {
        let (code, out, _) = run_args(&[
            "count",
            "--r1",
            "1/3",
            "--r2",
            "1/2",
            "--slope",
            "3/2",
            "--torsion",
            "0",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("case: uncovered"));
        assert!(out.contains("reason: "));
    }

    #[test]
    fn validation_errors_exit_two_and_name_the_flag() {
        let (code, _, err) = run_args(&["count", "--r1", "3/2", "--r2", "1/2", "--slope", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("r1"), "{err}");
        let (code, _, err) = run_args(&["count", "--r1", "x", "--r2", "1/2", "--slope", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("--r1"), "{err}");
        let (code, _, err) = run_args(&["phi", "--r", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("--r"), "{err}");
        let (code, _, _) = run_args(&[]);
        assert_eq!(code, 2);
    }

    #[test]
    fn other_subcommands() {
        assert_eq!(
            run_args(&["cf", "--value", "3/5", "--convention", "neg"])
                .1
                .trim(),
            "[-2,-3]"
        );
        assert_eq!(
            run_args(&["cf", "--value", "-3/2", "--convention", "pos"])
                .1
                .trim(),
            "[3,1]"
        );
        assert_eq!(run_args(&["phi", "--r", "2/5"]).1.trim(), "[[5,3],[-2,-1]]");
        assert_eq!(
            run_args(&["phi", "--r", "3/5", "--convention", "negative"])
                .1
                .trim(),
            "[[5,3],[3,2]]"
        );
        assert_eq!(
            run_args(&["farey-path", "--from", "inf", "--to", "-3/2"])
                .1
                .trim(),
            "inf -> -2 -> -3/2"
        );
        assert_eq!(
            run_args(&["farey-path", "--from", "inf", "--to", "-3/2", "--json"])
                .1
                .trim(),
            r#"["inf","-2","-3/2"]"#
        );
        assert_eq!(
            run_args(&[
                "obstruction",
                "--c1",
                "-1/3",
                "--c2",
                "-1/3",
                "--c3",
                "-1/3",
                "--json"
            ])
            .1
            .trim(),
            r#"{"k":2,"h":[-1,-1,-1]}"#
        );
        assert_eq!(
            run_args(&[
                "obstruction",
                "--r1",
                "1/3",
                "--r2",
                "1/3",
                "--slope",
                "3/2"
            ])
            .1
            .trim(),
            "none"
        );
        assert_eq!(
            run_args(&[
                "obstruction",
                "--c1",
                "-1/10",
                "--c2",
                "-1/10",
                "--c3",
                "-1/2"
            ])
            .1
            .trim(),
            "undetermined"
        );
        assert_eq!(
            run_args(&[
                "reduce-target",
                "--r1",
                "1/3",
                "--r2",
                "1/3",
                "--slope",
                "5/2"
            ])
            .1
            .trim(),
            "M(-3; 1/3, 1/3, 2/5)"
        );
    }

    #[test]
    fn half_half_reports_labels() {
        let (_, out, _) = run_args(&[
            "count", "--r1", "1/2", "--r2", "1/2", "--slope", "inf", "--json",
        ]);
        let report: CountReport = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(report.case, "half_half_inf_torsion0");
        assert_eq!(
            report.count,
            CountJson::InfiniteFamily {
                index_set: "Z".into(),
                extra: 2
            }
        );
        assert!(out.contains(r#""kind":"infinite_family","index_set":"Z","extra":2"#));
        assert_eq!(report.labels.unwrap().len(), 3);
    }

    #[test]
    fn warning_codes_surface() {
        let (_, out, _) = run_args(&[
            "count", "--r1", "1/3", "--r2", "1/3", "--slope", "3", "--json",
        ]);
        assert!(
            out.contains(r#""warnings":["case4_integer_slope"]"#),
            "{out}"
        );
    }

    #[test]
    fn batch_isolates_bad_lines() {
        let input = concat!(
            r#"{"r1":"1/2","r2":"1/2","slope":"-3/2","torsion":0}"#,
            "\n",
            "not json\n",
            r#"{"r1":"1/2","r2":"1/2","slope":-1,"torsion":0}"#,
            "\n",
            r#"{"r1":"2","r2":"1/2","slope":"1","torsion":0}"#,
            "\n",
        );
        let lines = batch_lines(input);
        assert_eq!(lines.len(), 4);
        assert!(lines[0].contains(r#""value":"12""#));
        assert!(lines[1].starts_with(r#"{"line":2,"error":"#));
        assert!(lines[2].contains(r#""case":"1b""#));
        assert!(lines[3].starts_with(r#"{"line":4,"error":"#));
        assert!(batch_lines("").is_empty());
    }

    #[test]
    fn verify_passes() {
        let (code, out, _) = run_args(&["verify"]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(out.lines().count(), 6);
        assert!(out.lines().all(|l| l.starts_with("PASS")));
    }
}
