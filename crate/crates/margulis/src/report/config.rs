//! `key = value` settings file. Blank lines and `#` comments are ignored.

use std::collections::HashSet;
use std::str::FromStr;

use serde::Serialize;

use super::ReportError;
use crate::rigor::DEFAULT_PREC;

/// Inputs longer than this are rejected outright.
pub const MAX_CONFIG_LEN: usize = 1 << 16;
pub const MIN_PRECISION: u32 = 32;
pub const MAX_PRECISION_CAP: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Settings {
    /// Initial working precision in bits.
    pub precision: u32,
    /// Doubling stops here.
    pub precision_cap: u32,
    /// Largest |SL2(F_q)| enumerated by group claims.
    pub exhaustion_budget: u64,
    /// Coefficient bound for the cubic enumeration claim.
    pub enumerate_height: i64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { precision: DEFAULT_PREC, precision_cap: 1024, exhaustion_budget: 20_000, enumerate_height: 8 }
    }
}

impl Settings {
    pub fn validate(&self) -> Result<(), ReportError> {
        if self.precision < MIN_PRECISION {
            return Err(ReportError::Settings(format!("precision must be at least {MIN_PRECISION} bits")));
        }
        if self.precision_cap > MAX_PRECISION_CAP {
            return Err(ReportError::Settings(format!("precision_cap must be at most {MAX_PRECISION_CAP}")));
        }
        if self.precision > self.precision_cap {
            return Err(ReportError::Settings("precision exceeds precision_cap".into()));
        }
        if !(0..=40).contains(&self.enumerate_height) {
            return Err(ReportError::Settings("enumerate_height must lie in 0..=40".into()));
        }
        Ok(())
    }
}

fn value<T: FromStr>(line: usize, key: &str, v: &str) -> Result<T, ReportError> {
    v.parse().map_err(|_| ReportError::Config { line, msg: format!("bad value for {key}: {v:?}") })
}

pub fn parse_config(text: &str) -> Result<Settings, ReportError> {
    if text.len() > MAX_CONFIG_LEN {
        return Err(ReportError::Config { line: 0, msg: format!("file longer than {MAX_CONFIG_LEN} bytes") });
    }
    let mut s = Settings::default();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let Some((k, v)) = body.split_once('=') else {
            return Err(ReportError::Config { line, msg: "expected key = value".into() });
        };
        let (k, v) = (k.trim(), v.trim());
        if !seen.insert(k.to_string()) {
            return Err(ReportError::Config { line, msg: format!("duplicate key {k}") });
        }
        match k {
            "precision" => s.precision = value(line, k, v)?,
            "precision_cap" => s.precision_cap = value(line, k, v)?,
            "exhaustion_budget" => s.exhaustion_budget = value(line, k, v)?,
            "enumerate_height" => s.enumerate_height = value(line, k, v)?,
            _ => return Err(ReportError::Config { line, msg: format!("unknown key {k:?}") }),
        }
    }
    s.validate()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_overrides() {
        assert_eq!(parse_config("").unwrap(), Settings::default());
        let s = parse_config("# tuned\nprecision = 256\nprecision_cap=2048  # wide\n\nenumerate_height = 3\n").unwrap();
        assert_eq!((s.precision, s.precision_cap, s.enumerate_height), (256, 2048, 3));
        assert_eq!(s.exhaustion_budget, Settings::default().exhaustion_budget);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_config("precision = 64\nbogus = 1"), Err(ReportError::Config { line: 2, .. })));
        assert!(matches!(parse_config("precision 64"), Err(ReportError::Config { line: 1, .. })));
        assert!(matches!(parse_config("precision = x"), Err(ReportError::Config { line: 1, .. })));
        assert!(matches!(parse_config("precision = 64\nprecision = 65"), Err(ReportError::Config { line: 2, .. })));
        assert!(matches!(parse_config("precision = 8"), Err(ReportError::Settings(_))));
        assert!(matches!(parse_config("precision = 512\nprecision_cap = 256"), Err(ReportError::Settings(_))));
    }
}
