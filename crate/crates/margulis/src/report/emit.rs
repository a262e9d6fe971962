//! JSON and markdown renderings of a result list.

use std::fmt::Write;
use std::str::FromStr;

use serde_json::{json, Value};

use super::claim::{namespace_of, ClaimResult, Status};
use super::config::Settings;
use super::ReportError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(ReportError::Settings(format!("unknown format {s:?} (json or md)"))),
        }
    }
}

pub fn report_json(results: &[ClaimResult], settings: &Settings) -> Value {
    json!({
        "version": VERSION,
        "precision_bits": settings.precision,
        "precision_cap": settings.precision_cap,
        "results": results.iter().map(ClaimResult::to_json).collect::<Vec<_>>(),
    })
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

pub fn report_markdown(results: &[ClaimResult], settings: &Settings) -> String {
    let mut out = String::new();
    let pass = results.iter().filter(|r| r.status == Status::Pass).count();
    let _ = writeln!(out, "# Claim report\n");
    let _ = writeln!(
        out,
        "margulis {VERSION}, precision {} bits (cap {}). {pass}/{} claims pass.\n",
        settings.precision,
        settings.precision_cap,
        results.len()
    );
    let mut i = 0;
    while i < results.len() {
        let ns = namespace_of(&results[i].id);
        let j = i + results[i..].iter().take_while(|r| namespace_of(&r.id) == ns).count();
        let group = &results[i..j];
        let ok = group.iter().filter(|r| r.status == Status::Pass).count();
        let _ = writeln!(out, "## {} ({ok}/{} pass)\n", ns.trim_end_matches('.'), group.len());
        let _ = writeln!(out, "| id | status | mode | computed | expected | location |");
        let _ = writeln!(out, "|---|---|---|---|---|---|");
        for r in group {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                cell(&r.id),
                r.status,
                r.mode,
                cell(&r.computed.to_string()),
                cell(&r.expected.to_string()),
                cell(&r.paper_location)
            );
        }
        out.push('\n');
        i = j;
    }
    out
}

pub fn emit_report(results: &[ClaimResult], format: Format, settings: &Settings) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report_json(results, settings)).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Markdown => report_markdown(results, settings),
    }
}
