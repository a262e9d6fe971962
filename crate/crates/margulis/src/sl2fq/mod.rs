//! SL2 and PSL2 over small finite fields.

pub mod field;
pub mod group;
pub mod lemmas;
pub mod matrix;
pub mod summary;

pub use field::{Field, FqElement};
pub use group::FiniteGroup;
pub use lemmas::{
    find_sum_squares_pair, order_prediction_from_trace, psl2_group, verify_trace_order_lemma, OrderConstraint,
    SumSquaresPair, TraceOrderReport,
};
pub use matrix::{cayley_hamilton_holds, element_order, sl2_elements, sl2_order, SL2Matrix};
pub use summary::{gl_order, group_orders, group_summary, GroupOrders, GroupSummary};

pub fn make_field(p: u32, n: u32) -> Result<Field, Sl2Error> {
    Field::new(p, n)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Sl2Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field of size {p}^{n} is out of range (need n ≤ 4 and p^n ≤ 81)")]
    FieldSize { p: u32, n: u32 },
    #[error("matrix {0} does not have determinant 1")]
    NotSpecial(String),
    #[error("construction needs odd characteristic, got q = {0}")]
    EvenCharacteristic(u32),
    #[error("group of order {order} exceeds the exhaustion budget {budget}")]
    Budget { order: u64, budget: u64 },
}
