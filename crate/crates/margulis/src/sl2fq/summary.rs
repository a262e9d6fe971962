//! Order, center, simplicity and Sylow-2 data for SL2 and PSL2 over F_q.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::field::{Field, FqElement};
use super::lemmas::psl2_group;
use super::matrix::{sl2_elements, sl2_order, SL2Matrix};
use super::Sl2Error;

/// Largest |SL2(F_q)| for which group structure is computed exhaustively.
pub const SUMMARY_BUDGET: u64 = 2184;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupOrders {
    pub q: u32,
    pub sl2_order: u64,
    pub psl2_order: u64,
    pub center_order: u64,
}

pub fn group_orders(q: u32) -> Result<GroupOrders, Sl2Error> {
    Field::from_order(q)?;
    let sl2 = sl2_order(q);
    let center = (q as u64 - 1).gcd(&2);
    Ok(GroupOrders { q, sl2_order: sl2, psl2_order: sl2 / center, center_order: center })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub q: u32,
    pub sl2_order: u64,
    pub psl2_order: u64,
    pub center_order: u64,
    pub simple: bool,
    pub sylow2_rank: u32,
    pub div6: bool,
    pub sylow2_order: u64,
    pub sylow2_abelian: bool,
    pub h1_mod2_rank: u32,
}

/// Elements commuting with every elementary unipotent matrix.
fn sl2_center(k: &Field, elems: &[SL2Matrix]) -> Vec<SL2Matrix> {
    let mut gens = Vec::new();
    for x in k.elements().filter(|x| *x != FqElement::ZERO) {
        gens.push(SL2Matrix { a: FqElement::ONE, b: x, c: FqElement::ZERO, d: FqElement::ONE });
        gens.push(SL2Matrix { a: FqElement::ONE, b: FqElement::ZERO, c: x, d: FqElement::ONE });
    }
    elems
        .iter()
        .filter(|m| gens.iter().all(|g| m.mul(k, g) == g.mul(k, m)))
        .copied()
        .collect()
}

pub fn group_summary(q: u32) -> Result<GroupSummary, Sl2Error> {
    let orders = group_orders(q)?;
    if orders.sl2_order > SUMMARY_BUDGET {
        return Err(Sl2Error::Budget { order: orders.sl2_order, budget: SUMMARY_BUDGET });
    }
    let k = Field::from_order(q)?;
    let elems = sl2_elements(&k);
    let center = sl2_center(&k, &elems);
    let (_, g) = psl2_group(&k);
    let all: Vec<u16> = (0..g.order() as u16).collect();
    let sylow = g.sylow2();
    Ok(GroupSummary {
        q,
        sl2_order: elems.len() as u64,
        psl2_order: g.order() as u64,
        center_order: center.len() as u64,
        simple: g.is_simple(),
        sylow2_rank: g.mod2_abelianization_rank(&sylow),
        div6: g.order() % 6 == 0,
        sylow2_order: sylow.len() as u64,
        sylow2_abelian: g.is_abelian(&sylow),
        h1_mod2_rank: g.mod2_abelianization_rank(&all),
    })
}

/// |GL_d(F_p)| = ∏_{i<d} (p^d − p^i).
pub fn gl_order(d: u32, p: u64) -> BigInt {
    let pd = BigInt::from(p).pow(d);
    (0..d).map(|i| &pd - BigInt::from(p).pow(i)).product()
}

/// All elements of order exactly 2 in SL2(F_q).
pub fn involutions(k: &Field) -> Vec<SL2Matrix> {
    sl2_elements(k)
        .into_iter()
        .filter(|m| !m.is_identity() && m.mul(k, m).is_identity())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q5_is_a5() {
        let s = group_summary(5).unwrap();
        assert_eq!((s.sl2_order, s.psl2_order, s.center_order), (120, 60, 2));
        assert!(s.simple && s.div6);
        assert_eq!((s.sylow2_rank, s.sylow2_order), (2, 4));
    }

    #[test]
    fn q4_has_a5_profile() {
        let s = group_summary(4).unwrap();
        assert_eq!((s.sl2_order, s.psl2_order, s.center_order), (60, 60, 1));
        assert!(s.simple && s.sylow2_abelian);
        assert_eq!((s.sylow2_order, s.sylow2_rank, s.h1_mod2_rank), (4, 2, 0));
    }

    #[test]
    fn q2_is_s3() {
        let s = group_summary(2).unwrap();
        assert_eq!(s.psl2_order, 6);
        assert!(!s.simple);
        assert_eq!(s.h1_mod2_rank, 1);
    }

    #[test]
    fn budget() {
        assert!(matches!(group_summary(16), Err(Sl2Error::Budget { .. })));
        assert_eq!(group_orders(81).unwrap().psl2_order, (81u64.pow(3) - 81) / 2);
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(2, 2), BigInt::from(6));
        assert_eq!(gl_order(3, 2), BigInt::from(168));
        assert_eq!(gl_order(1, 5), BigInt::from(4));
    }

    #[test]
    fn minus_identity_is_the_only_involution() {
        for q in [3, 5, 7, 9] {
            let k = Field::from_order(q).unwrap();
            assert_eq!(involutions(&k), vec![SL2Matrix::identity().neg(&k)]);
        }
    }
}
