//! Exact arithmetic for algebraic integers of degree at most three.

pub mod appendix;
pub mod cubic;
pub mod enumerate;
pub mod nifty;
pub mod pell;
pub mod poly;
pub mod quadratic;

use num_bigint::BigInt;

pub use appendix::{
    appendix_survivor_scan, candidate_family, g_eval, h_eval, listed_pell_pairs, survivor_scan, ScanRecord,
    ScanReport,
};
pub use cubic::{element_power, roots_cubic, witnesses_from_roots, AlgebraicNumber, CubicRoots};
pub use enumerate::enumerate_nonnifty;
pub use nifty::{
    classify_nifty, discriminant_cubic, min_poly_square_minus_two, norm_witnesses, trace_power_sequence,
    NiftyVerdict, NormWitnesses, Verdict,
};
pub use pell::{pell_solutions, PellSolution};
pub use poly::{parse_poly, IntPolynomial};
pub use quadratic::{imag_quadratic_unit_facts, QuadUnit};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumfieldError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("expected degree {expected}, got {got}")]
    Degree { expected: usize, got: usize },
    #[error("reducible: rational root {root}")]
    Reducible { root: BigInt },
    #[error("iterate {index} is reducible (rational root {root})")]
    ReducibleIterate { index: usize, root: BigInt },
    #[error("repeated root (zero discriminant)")]
    RepeatedRoot,
    #[error("generator has no non-real root")]
    NoImaginaryRoot,
    #[error("negative power of a non-unit")]
    NotUnit,
    #[error("({r}, {s}) does not satisfy r^2 - 2s^2 = ±1")]
    NotPell { r: i64, s: i64 },
    #[error("family variant must be 0 or 2, got {0}")]
    InvalidVariant(u8),
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("precision exhausted: {0}")]
    Precision(String),
    #[error(transparent)]
    Rigor(#[from] crate::rigor::RigorError),
}
