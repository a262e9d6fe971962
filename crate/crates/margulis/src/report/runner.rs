//! Parallel evaluation with precision doubling.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use super::claim::{namespace_of, status_of, Claim, ClaimResult};
use super::config::Settings;
use super::ReportError;
use crate::rigor::Verdict;

pub fn run_one(claim: &Claim, settings: &Settings) -> ClaimResult {
    let start = Instant::now();
    let mut prec = settings.precision;
    let (computed, verdict) = loop {
        let (c, v) = claim.evaluate(prec);
        if v != Verdict::Inconclusive || prec >= settings.precision_cap {
            break (c, v);
        }
        prec = (prec * 2).min(settings.precision_cap);
    };
    ClaimResult {
        id: claim.id.clone(),
        description: claim.description.clone(),
        paper_location: claim.paper_location.clone(),
        mode: claim.mode,
        status: status_of(claim.mode, &computed, verdict),
        computed,
        expected: claim.expected.clone(),
        precision_used: prec,
        elapsed: start.elapsed(),
    }
}

/// Distinct namespaces, e.g. "appendix.", in sorted order.
pub fn namespaces(claims: &[Claim]) -> Vec<String> {
    claims.iter().map(|c| namespace_of(&c.id).to_string()).collect::<BTreeSet<_>>().into_iter().collect()
}

/// Evaluates every claim whose id starts with `filter`, sorted by id.
pub fn run_claims(claims: &[Claim], filter: Option<&str>, settings: &Settings) -> Result<Vec<ClaimResult>, ReportError> {
    settings.validate()?;
    let selected: Vec<&Claim> = claims.iter().filter(|c| filter.is_none_or(|f| c.id.starts_with(f))).collect();
    if selected.is_empty() && !claims.is_empty() {
        return Err(ReportError::UnknownPrefix {
            prefix: filter.unwrap_or("").to_string(),
            valid: namespaces(claims),
        });
    }
    let mut out: Vec<ClaimResult> = selected.par_iter().map(|c| run_one(c, settings)).collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}
