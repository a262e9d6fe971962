//! Hyperbolic displacement geometry over intervals.

pub mod bounds;
pub mod length;

pub use bounds::{acorn_bound, margulis_pair_value, oak_bound, phi, phi_branches, trace_ellipse_margin};
pub use length::{
    asymptotic_constant, complex_length_from_trace, omega, tube_radius, zagier_bound, zagier_n, ComplexLength,
    TubeRadius,
};

use crate::rigor::RigorError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HypError {
    #[error("{func}: {detail}")]
    Domain { func: &'static str, detail: String },
    #[error("trace is not certainly outside [-2, 2]")]
    NotLoxodromic,
    #[error("{0}: not decidable at this precision")]
    Ambiguous(&'static str),
    #[error("Zagier search inconclusive at n = {n}")]
    Inconclusive { n: u64 },
    #[error(transparent)]
    Rigor(#[from] RigorError),
}

pub(crate) fn domain(func: &'static str, detail: &str) -> HypError {
    HypError::Domain { func, detail: detail.to_string() }
}
