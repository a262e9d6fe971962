//! Decimal literals as written in prose: "0.39…" denotes [0.39, 0.40],
//! "0.3925" denotes the exact rational.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::interval::Interval;
use super::RigorError;

/// Inputs longer than this are rejected before any digit processing.
pub const MAX_LITERAL_LEN: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecimalLiteral {
    negative: bool,
    int_digits: String,
    frac_digits: String,
    truncated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

pub fn parse_decimal(s: &str) -> Result<DecimalLiteral, RigorError> {
    s.parse()
}

impl FromStr for DecimalLiteral {
    type Err = RigorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |m: &str| RigorError::Parse(format!("{m}: {s:?}"));
        if s.len() > MAX_LITERAL_LEN {
            return Err(RigorError::Parse(format!("literal longer than {MAX_LITERAL_LEN} bytes")));
        }
        let mut rest = s.trim();
        let mut truncated = false;
        for marker in ["…", "..."] {
            if let Some(r) = rest.strip_suffix(marker) {
                rest = r;
                truncated = true;
                break;
            }
        }
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-').or_else(|| rest.strip_prefix('\u{2212}')) {
            negative = true;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        let (int, frac) = match rest.split_once('.') {
            Some((i, f)) => {
                if f.is_empty() {
                    return Err(err("missing fraction digits"));
                }
                (i, f)
            }
            None => (rest, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return Err(err("no digits"));
        }
        if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(err("not a decimal number"));
        }
        let int = int.trim_start_matches('0');
        let lit = DecimalLiteral {
            negative,
            int_digits: if int.is_empty() { "0".into() } else { int.into() },
            frac_digits: frac.into(),
            truncated,
        };
        Ok(lit.normalize_sign())
    }
}

impl DecimalLiteral {
    pub fn exact(v: &BigInt) -> DecimalLiteral {
        DecimalLiteral {
            negative: v < &BigInt::zero(),
            int_digits: v.magnitude().to_string(),
            frac_digits: String::new(),
            truncated: false,
        }
    }

    fn normalize_sign(mut self) -> Self {
        // an exact zero carries no sign
        if !self.truncated && self.magnitude().is_zero() {
            self.negative = false;
        }
        self
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// Number of digits after the decimal point.
    pub fn scale(&self) -> usize {
        self.frac_digits.len()
    }

    /// Digits as written, without the ellipsis.
    pub fn digits(&self) -> String {
        let sign = if self.negative { "-" } else { "" };
        if self.frac_digits.is_empty() {
            format!("{sign}{}", self.int_digits)
        } else {
            format!("{sign}{}.{}", self.int_digits, self.frac_digits)
        }
    }

    fn unit(&self) -> BigRational {
        BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), self.scale()))
    }

    fn magnitude(&self) -> BigRational {
        let all = format!("{}{}", self.int_digits, self.frac_digits);
        let n: BigInt = all.parse().expect("digits validated at parse time");
        BigRational::from_integer(n) * self.unit()
    }

    /// Written value v (signed).
    pub fn value(&self) -> BigRational {
        let m = self.magnitude();
        if self.negative {
            -m
        } else {
            m
        }
    }

    /// The exact set denoted: [v, v + 10^-k] for a truncated literal (mirrored
    /// for negatives), {v} otherwise.
    pub fn bounds(&self) -> (BigRational, BigRational) {
        let m = self.magnitude();
        let (a, b) = if self.truncated {
            (m.clone(), m + self.unit())
        } else {
            (m.clone(), m)
        };
        if self.negative {
            (-b, -a)
        } else {
            (a, b)
        }
    }

    pub fn to_interval(&self, prec: u32) -> Interval {
        let (a, b) = self.bounds();
        Interval::from_rational_bounds(&a, &b, prec)
    }
}

impl fmt::Display for DecimalLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digits())?;
        if self.truncated {
            write!(f, "...")?;
        }
        Ok(())
    }
}

impl Serialize for DecimalLiteral {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DecimalLiteral {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Pass if `x` lies inside the literal's set, Fail if disjoint from it.
pub fn matches_decimal(x: &Interval, lit: &DecimalLiteral) -> Verdict {
    let (a, b) = lit.bounds();
    let lo = x.lo().to_rational();
    let hi = x.hi().to_rational();
    if lo >= a && hi <= b {
        Verdict::Pass
    } else if hi < a || lo > b {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    }
}
