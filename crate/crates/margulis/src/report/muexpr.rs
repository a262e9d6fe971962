//! Margulis-number expressions such as "0.3925", "log3/3" or "ln(2)/4".
//!
//! Grammar: `term ['/' int]`, term = decimal | ("log" | "ln") (int | "(" int ")").

use std::fmt;
use std::str::FromStr;

use super::ReportError;
use crate::rigor::{parse_decimal, DecimalLiteral, Interval};

pub const MAX_MU_EXPR_LEN: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuTerm {
    Decimal(DecimalLiteral),
    /// Natural log of a positive integer.
    Log(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuExpr {
    pub term: MuTerm,
    pub divisor: u64,
}

fn err(s: &str, why: &str) -> ReportError {
    ReportError::MuExpr(format!("{why}: {s:?}"))
}

fn parse_int(s: &str, whole: &str) -> Result<u64, ReportError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(whole, "expected a positive integer"));
    }
    s.parse().map_err(|_| err(whole, "integer out of range"))
}

impl FromStr for MuExpr {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.len() > MAX_MU_EXPR_LEN {
            return Err(ReportError::MuExpr(format!("expression longer than {MAX_MU_EXPR_LEN} bytes")));
        }
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, divisor) = match compact.split_once('/') {
            Some((h, d)) => (h, parse_int(d, s)?),
            None => (compact.as_str(), 1),
        };
        if divisor == 0 {
            return Err(err(s, "division by zero"));
        }
        let log_arg = head.strip_prefix("log").or_else(|| head.strip_prefix("ln"));
        let term = match log_arg {
            Some(arg) => {
                let inner = match arg.strip_prefix('(') {
                    Some(r) => r.strip_suffix(')').ok_or_else(|| err(s, "unbalanced parenthesis"))?,
                    None => arg,
                };
                let n = parse_int(inner, s)?;
                if n == 0 {
                    return Err(err(s, "log of zero"));
                }
                MuTerm::Log(n)
            }
            None => {
                let d = parse_decimal(head).map_err(|e| ReportError::MuExpr(e.to_string()))?;
                if d.is_negative() {
                    return Err(err(s, "negative value"));
                }
                MuTerm::Decimal(d)
            }
        };
        Ok(MuExpr { term, divisor })
    }
}

pub fn parse_mu_expr(s: &str) -> Result<MuExpr, ReportError> {
    s.parse()
}

impl MuExpr {
    pub fn eval(&self, prec: u32) -> Result<Interval, ReportError> {
        let t = match &self.term {
            MuTerm::Decimal(d) => d.to_interval(prec),
            MuTerm::Log(n) => {
                let n = i64::try_from(*n).map_err(|_| ReportError::MuExpr("log argument too large".into()))?;
                Interval::from_i64(n, prec).ln().map_err(|e| ReportError::MuExpr(e.to_string()))?
            }
        };
        let d = i64::try_from(self.divisor).map_err(|_| ReportError::MuExpr("divisor too large".into()))?;
        t.div_i64(d).map_err(|e| ReportError::MuExpr(e.to_string()))
    }
}

impl fmt::Display for MuExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.term {
            MuTerm::Decimal(d) => write!(f, "{d}")?,
            MuTerm::Log(n) => write!(f, "log{n}")?,
        }
        if self.divisor != 1 {
            write!(f, "/{}", self.divisor)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_mu_expr("log3/3").unwrap(), MuExpr { term: MuTerm::Log(3), divisor: 3 });
        assert_eq!(parse_mu_expr(" ln(3) / 3 ").unwrap(), parse_mu_expr("log3/3").unwrap());
        let m = parse_mu_expr("0.3925").unwrap();
        assert_eq!(m.divisor, 1);
        assert_eq!(m.to_string(), "0.3925");
        assert_eq!(parse_mu_expr("log(3)/3").unwrap().to_string(), "log3/3");
    }

    #[test]
    fn value_of_log3_over_3() {
        let v = parse_mu_expr("log3/3").unwrap().eval(128).unwrap();
        assert!((v.mid_f64() - 3f64.ln() / 3.0).abs() < 1e-15);
        assert!(v.width().to_f64() < 1e-30);
    }

    #[test]
    fn rejects() {
        for s in ["", "log", "log0", "log(3", "log3/0", "log3/", "-0.3", "x", "log-2", "0.3/2/2", "log(3)x"] {
            assert!(parse_mu_expr(s).is_err(), "{s}");
        }
    }
}
