//! Claim registry, runner and report emitters.

pub mod claim;
pub mod cli;
pub mod config;
pub mod emit;
pub mod muexpr;
pub mod registry;
pub mod runner;

pub use claim::{Claim, ClaimResult, Computed, Expected, Mode, Status};
pub use config::{parse_config, Settings};
pub use emit::{emit_report, Format};
pub use muexpr::{parse_mu_expr, MuExpr};
pub use registry::{default_registry, registry};
pub use runner::{run_claims, run_one};

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("no claim id starts with {prefix:?}; namespaces: {}", valid.join(", "))]
    UnknownPrefix { prefix: String, valid: Vec<String> },
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("settings: {0}")]
    Settings(String),
    #[error("mu expression: {0}")]
    MuExpr(String),
    #[error("{0}")]
    Io(String),
}
