//! Command-line front end. `run` returns the process exit status.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use super::config::{parse_config, Settings};
use super::emit::{emit_report, Format};
use super::muexpr::parse_mu_expr;
use super::registry::registry;
use super::runner::run_claims;
use super::ReportError;
use crate::hypgeom::{tube_radius, zagier_n};
use crate::numfield::{classify_nifty, discriminant_cubic, enumerate_nonnifty, parse_poly, pell_solutions};
use crate::rigor::{interval_json, parse_decimal};
use crate::sl2fq::{find_sum_squares_pair, group_summary, verify_trace_order_lemma};

/// Largest coefficient bound accepted by `enumerate`.
pub const MAX_ENUM_HEIGHT: i64 = 40;
/// Largest |s| accepted by `pell`.
pub const MAX_PELL: u64 = 1_000_000_000;

#[derive(Parser, Debug)]
#[command(name = "margulis", version, about = "Certified checks of numeric claims about Margulis numbers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate registered claims and print a report.
    Verify {
        /// Only claims whose id starts with this prefix.
        #[arg(long)]
        claims: Option<String>,
        /// Initial precision in bits.
        #[arg(long)]
        precision: Option<u32>,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// List registered claim ids.
    List,
    /// Nifty/swell classification of a monic integer polynomial.
    Classify {
        #[arg(long)]
        poly: String,
    },
    /// Non-nifty monic irreducible polynomials of bounded height.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long)]
        height: i64,
    },
    /// Exhaustive checks in SL2(F_q).
    Sl2 {
        #[arg(long)]
        q: u32,
        #[arg(long, value_enum)]
        check: Sl2Check,
    },
    /// Tube radius lower bound around a geodesic of length l.
    Tube {
        #[arg(long)]
        length: String,
        /// Margulis number, e.g. 0.3 or log3/3.
        #[arg(long)]
        mu: String,
        /// Rotation angle; adds the least Zagier multiple.
        #[arg(long)]
        theta: Option<String>,
    },
    /// Solutions of r^2 - 2 s^2 = ±1 with |s| <= max.
    Pell {
        #[arg(long)]
        max: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Sl2Check {
    TraceOrders,
    Summary,
    SumSquares,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

fn usage<E: ToString>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn runtime<E: ToString>(e: E) -> Failure {
    Failure::Runtime(e.to_string())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// A JSON number when it fits in i64, a decimal string otherwise.
fn int_json(n: &BigInt) -> Value {
    i64::try_from(n).map_or_else(|_| json!(n.to_string()), |v| json!(v))
}

fn load_settings(config: Option<&PathBuf>, precision: Option<u32>) -> Result<Settings, Failure> {
    let mut s = match config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(ReportError::Io(format!("{}: {e}", path.display()))))?;
            parse_config(&text).map_err(usage)?
        }
        None => Settings::default(),
    };
    if let Some(p) = precision {
        s.precision = p;
        s.precision_cap = s.precision_cap.max(p);
    }
    s.validate().map_err(usage)?;
    Ok(s)
}

/// Output text and exit status.
fn dispatch(cmd: Cmd) -> Result<(String, i32), Failure> {
    match cmd {
        Cmd::Verify { claims, precision, format, config } => {
            let format: Format = format.parse().map_err(usage)?;
            let settings = load_settings(config.as_ref(), precision)?;
            let reg = registry(&settings);
            let results = run_claims(&reg, claims.as_deref(), &settings).map_err(usage)?;
            let code = i32::from(results.iter().any(|r| r.is_failure()));
            Ok((emit_report(&results, format, &settings), code))
        }
        Cmd::List => {
            let reg = registry(&Settings::default());
            let mut out = String::new();
            for c in &reg {
                out.push_str(&format!("{}\t{}\t{}\n", c.id, c.mode, c.expected));
            }
            Ok((out, 0))
        }
        Cmd::Classify { poly } => {
            let f = parse_poly(&poly).map_err(usage)?;
            let v = classify_nifty(&f).map_err(usage)?;
            let disc = if f.degree() == 3 { discriminant_cubic(&f).ok().map(|d| d.to_string()) } else { None };
            Ok((
                pretty(&json!({
                    "poly": f.to_string(),
                    "coefficients": f.to_bracket(),
                    "verdict": v.verdict,
                    "witnesses": {
                        "n_tau": int_json(&v.witnesses.n_tau),
                        "n_tau_minus_1": int_json(&v.witnesses.n_tau_minus_1),
                        "n_tau_plus_1": int_json(&v.witnesses.n_tau_plus_1),
                        "n_tau_sq_minus_2": int_json(&v.witnesses.n_tau_sq_minus_2),
                    },
                    "discriminant": disc,
                })),
                0,
            ))
        }
        Cmd::Enumerate { degree, height } => {
            if !(0..=MAX_ENUM_HEIGHT).contains(&height) {
                return Err(usage(format!("height must lie in 0..={MAX_ENUM_HEIGHT}")));
            }
            let found = enumerate_nonnifty(degree, height).map_err(usage)?;
            let rows: Vec<Value> =
                found.iter().map(|(f, v)| json!({"poly": f.to_string(), "verdict": v.verdict})).collect();
            Ok((pretty(&json!({"degree": degree, "height": height, "count": rows.len(), "polynomials": rows})), 0))
        }
        Cmd::Sl2 { q, check } => {
            let v = match check {
                Sl2Check::TraceOrders => {
                    let r = verify_trace_order_lemma(q).map_err(usage)?;
                    let passed = r.passed();
                    let mut v = serde_json::to_value(r).map_err(runtime)?;
                    v["passed"] = json!(passed);
                    v
                }
                Sl2Check::Summary => serde_json::to_value(group_summary(q).map_err(usage)?).map_err(runtime)?,
                Sl2Check::SumSquares => serde_json::to_value(find_sum_squares_pair(q).map_err(usage)?).map_err(runtime)?,
            };
            Ok((pretty(&v), 0))
        }
        Cmd::Tube { length, mu, theta } => {
            let prec = crate::rigor::DEFAULT_PREC;
            let l = parse_decimal(&length).map_err(usage)?.to_interval(prec);
            let m = parse_mu_expr(&mu).map_err(usage)?;
            let mu_iv = m.eval(prec).map_err(usage)?;
            let r = tube_radius(&l, &mu_iv).map_err(runtime)?;
            let mut v = json!({"l": length, "mu": m.to_string(), "mu_value": interval_json(&mu_iv), "R": r.to_json()});
            if let Some(t) = theta {
                let th = parse_decimal(&t).map_err(usage)?.to_interval(prec);
                v["zagier_n"] = json!(zagier_n(&l, &th).map_err(runtime)?);
            }
            Ok((pretty(&v), 0))
        }
        Cmd::Pell { max } => {
            if max > MAX_PELL {
                return Err(usage(format!("max must be at most {MAX_PELL}")));
            }
            let sols = pell_solutions(max);
            Ok((pretty(&json!({"max": max, "count": sols.len(), "solutions": sols})), 0))
        }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Runtime(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}
