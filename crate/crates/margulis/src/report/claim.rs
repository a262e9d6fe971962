//! Claims, their expected values, and evaluation results.

use std::fmt;
use std::time::Duration;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::rigor::{interval_json, matches_decimal, DecimalLiteral, Interval, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    MustMatch,
    CheckAndReport,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::MustMatch => "must-match",
            Mode::CheckAndReport => "check-and-report",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    /// The computed value lies in the set the literal denotes.
    Decimal(DecimalLiteral),
    Integer(BigInt),
    /// Strictly above every point of the literal's set.
    Above(DecimalLiteral),
    /// Strictly below every point of the literal's set.
    Below(DecimalLiteral),
    /// Exact textual result, e.g. a polynomial in bracket form.
    Text(String),
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Decimal(l) => write!(f, "{l}"),
            Expected::Integer(n) => write!(f, "{n}"),
            Expected::Above(l) => write!(f, "> {l}"),
            Expected::Below(l) => write!(f, "< {l}"),
            Expected::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Computed {
    Interval(Interval),
    Int(BigInt),
    Text(String),
    Error(String),
}

impl Computed {
    pub fn to_json(&self) -> Value {
        match self {
            Computed::Interval(x) => interval_json(x),
            Computed::Int(n) => json!({ "int": n.to_string() }),
            Computed::Text(s) => json!({ "text": s }),
            Computed::Error(e) => json!({ "error": e }),
        }
    }
}

impl fmt::Display for Computed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Computed::Interval(x) => {
                let v = interval_json(x);
                write!(f, "[{}, {}]", v["lo"].as_str().unwrap_or("?"), v["hi"].as_str().unwrap_or("?"))
            }
            Computed::Int(n) => write!(f, "{n}"),
            Computed::Text(s) => f.write_str(s),
            Computed::Error(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<Interval> for Computed {
    fn from(x: Interval) -> Self {
        Computed::Interval(x)
    }
}

impl From<BigInt> for Computed {
    fn from(n: BigInt) -> Self {
        Computed::Int(n)
    }
}

impl From<i64> for Computed {
    fn from(n: i64) -> Self {
        Computed::Int(n.into())
    }
}

impl From<String> for Computed {
    fn from(s: String) -> Self {
        Computed::Text(s)
    }
}

pub type ComputeFn = Box<dyn Fn(u32) -> Result<Computed, String> + Send + Sync>;

pub struct Claim {
    pub id: String,
    pub description: String,
    pub paper_location: String,
    pub mode: Mode,
    pub expected: Expected,
    compute: ComputeFn,
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("mode", &self.mode)
            .field("expected", &self.expected)
            .finish_non_exhaustive()
    }
}

impl Claim {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        paper_location: impl Into<String>,
        mode: Mode,
        expected: Expected,
        compute: ComputeFn,
    ) -> Claim {
        Claim {
            id: id.into(),
            description: description.into(),
            paper_location: paper_location.into(),
            mode,
            expected,
            compute,
        }
    }

    /// Namespace: the id up to and including its first dot.
    pub fn namespace(&self) -> &str {
        namespace_of(&self.id)
    }

    pub fn evaluate(&self, prec: u32) -> (Computed, Verdict) {
        let computed = match (self.compute)(prec) {
            Ok(c) => c,
            Err(e) => Computed::Error(e),
        };
        let verdict = compare(&computed, &self.expected);
        (computed, verdict)
    }
}

pub fn namespace_of(id: &str) -> &str {
    match id.find('.') {
        Some(i) => &id[..=i],
        None => id,
    }
}

fn rational_bounds(c: &Computed) -> Option<(BigRational, BigRational)> {
    match c {
        Computed::Interval(x) => Some((x.lo().to_rational(), x.hi().to_rational())),
        Computed::Int(n) => Some((BigRational::from_integer(n.clone()), BigRational::from_integer(n.clone()))),
        _ => None,
    }
}

/// Errors compare as inconclusive so that precision escalation can retry.
pub fn compare(c: &Computed, e: &Expected) -> Verdict {
    if let Computed::Error(_) = c {
        return Verdict::Inconclusive;
    }
    match e {
        Expected::Text(t) => match c {
            Computed::Text(s) if s == t => Verdict::Pass,
            _ => Verdict::Fail,
        },
        Expected::Integer(n) => match c {
            Computed::Int(m) if m == n => Verdict::Pass,
            Computed::Int(_) | Computed::Text(_) => Verdict::Fail,
            Computed::Interval(x) => matches_decimal(x, &DecimalLiteral::exact(n)),
            Computed::Error(_) => unreachable!(),
        },
        Expected::Decimal(lit) => match c {
            Computed::Interval(x) => matches_decimal(x, lit),
            Computed::Int(n) => matches_decimal(&Interval::from_bigint(n, 64), lit),
            _ => Verdict::Fail,
        },
        Expected::Above(lit) => {
            let Some((lo, hi)) = rational_bounds(c) else { return Verdict::Fail };
            let (a, b) = lit.bounds();
            if lo > b {
                Verdict::Pass
            } else if hi <= a {
                Verdict::Fail
            } else {
                Verdict::Inconclusive
            }
        }
        Expected::Below(lit) => {
            let Some((lo, hi)) = rational_bounds(c) else { return Verdict::Fail };
            let (a, b) = lit.bounds();
            if hi < a {
                Verdict::Pass
            } else if lo >= b {
                Verdict::Fail
            } else {
                Verdict::Inconclusive
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    DiscrepancyNoted,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
            Status::DiscrepancyNoted => "discrepancy-noted",
        })
    }
}

pub fn status_of(mode: Mode, computed: &Computed, verdict: Verdict) -> Status {
    match (mode, verdict) {
        (_, Verdict::Pass) => Status::Pass,
        (Mode::MustMatch, Verdict::Fail) => Status::Fail,
        (Mode::CheckAndReport, Verdict::Fail) => Status::DiscrepancyNoted,
        (Mode::MustMatch, Verdict::Inconclusive) if matches!(computed, Computed::Error(_)) => Status::Fail,
        (Mode::CheckAndReport, Verdict::Inconclusive) if matches!(computed, Computed::Error(_)) => {
            Status::DiscrepancyNoted
        }
        (_, Verdict::Inconclusive) => Status::Inconclusive,
    }
}

#[derive(Clone, Debug)]
pub struct ClaimResult {
    pub id: String,
    pub description: String,
    pub paper_location: String,
    pub mode: Mode,
    pub computed: Computed,
    pub expected: Expected,
    pub status: Status,
    pub precision_used: u32,
    /// Wall time; not part of any serialized report.
    pub elapsed: Duration,
}

impl ClaimResult {
    /// A MustMatch claim that did not pass.
    pub fn is_failure(&self) -> bool {
        self.mode == Mode::MustMatch && self.status != Status::Pass
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "description": self.description,
            "paper_location": self.paper_location,
            "mode": self.mode.to_string(),
            "computed": self.computed.to_json(),
            "expected": self.expected.to_string(),
            "status": self.status.to_string(),
            "precision_used": self.precision_used,
        })
    }
}
