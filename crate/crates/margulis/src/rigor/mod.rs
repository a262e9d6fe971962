//! Certified real arithmetic: dyadic numbers, outward-rounded intervals,
//! elementary functions and decimal literals.

mod complex;
pub mod consts;
mod decimal;
mod dyadic;
mod elem;
mod format;
mod interval;

pub use complex::CBox;
pub use decimal::{matches_decimal, parse_decimal, DecimalLiteral, Verdict, MAX_LITERAL_LEN};
pub use dyadic::{Dyadic, Round};
pub use elem::{interval_fn, ElemFn};
pub use format::{decimal_string, interval_json};
pub use interval::{Interval, DEFAULT_PREC, MAX_PREC};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RigorError {
    #[error("{func}: domain error: {detail}")]
    Domain { func: &'static str, detail: String },
    #[error("division by an interval containing zero")]
    DivisionByZero,
    #[error("{func}: argument too large")]
    Overflow { func: &'static str },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("interval endpoints out of order")]
    InvalidInterval,
}
