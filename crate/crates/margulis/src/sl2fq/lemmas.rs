//! The order-from-trace lemma and the sum-of-two-squares construction.

use rayon::prelude::*;
use serde::Serialize;

use super::field::{Field, FqElement};
use super::group::FiniteGroup;
use super::matrix::{element_order, sl2_elements, SL2Matrix};
use super::Sl2Error;

/// Which clause of the lemma applies to a trace, and the orders it allows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceClause {
    /// 1: t = 0; 2: t² = 2; 3: t = −1; 4: t = 1.
    pub clause: u8,
    pub allowed: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderConstraint {
    pub clauses: Vec<TraceClause>,
}

impl OrderConstraint {
    pub fn is_unconstrained(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn admits(&self, m: u64) -> bool {
        self.clauses.iter().all(|c| c.allowed.contains(&m))
    }

    /// The single order forced by the lemma, if any.
    pub fn exact(&self) -> Option<u64> {
        let mut allowed: Option<Vec<u64>> = None;
        for c in &self.clauses {
            allowed = Some(match allowed {
                None => c.allowed.clone(),
                Some(a) => a.into_iter().filter(|m| c.allowed.contains(m)).collect(),
            });
        }
        match allowed.as_deref() {
            Some([m]) => Some(*m),
            _ => None,
        }
    }
}

pub fn order_prediction_from_trace(k: &Field, t: FqElement) -> OrderConstraint {
    let p = k.p();
    let mut clauses = Vec::new();
    if t == FqElement::ZERO {
        let allowed = if p == 2 { vec![1, 2] } else { vec![4] };
        clauses.push(TraceClause { clause: 1, allowed });
    }
    if k.sqr(t) == k.from_int(2) {
        let allowed = if p == 2 { vec![1, 2, 4, 8] } else { vec![8] };
        clauses.push(TraceClause { clause: 2, allowed });
    }
    if t == k.from_int(-1) {
        let allowed = if p == 3 { vec![1, 3] } else { vec![3] };
        clauses.push(TraceClause { clause: 3, allowed });
    }
    if t == FqElement::ONE {
        let allowed = match p {
            2 => vec![3],
            3 => vec![2, 6],
            _ => vec![6],
        };
        clauses.push(TraceClause { clause: 4, allowed });
    }
    OrderConstraint { clauses }
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceOrderReport {
    pub q: u32,
    pub elements: u64,
    /// Elements whose trace falls under at least one clause.
    pub checked: u64,
    pub per_clause: [u64; 4],
    pub counterexamples: Vec<(SL2Matrix, u64)>,
}

impl TraceOrderReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub fn verify_trace_order_lemma(q: u32) -> Result<TraceOrderReport, Sl2Error> {
    let k = Field::from_order(q)?;
    let elems = sl2_elements(&k);
    let constraints: Vec<OrderConstraint> = k.elements().map(|t| order_prediction_from_trace(&k, t)).collect();
    let results: Vec<(SL2Matrix, u64, &OrderConstraint)> = elems
        .par_iter()
        .filter_map(|m| {
            let c = &constraints[m.trace(&k).index()];
            (!c.is_unconstrained()).then(|| (*m, element_order(&k, m), c))
        })
        .collect();
    let mut per_clause = [0u64; 4];
    let mut counterexamples = Vec::new();
    for (m, ord, c) in &results {
        for cl in &c.clauses {
            per_clause[cl.clause as usize - 1] += 1;
        }
        if !c.admits(*ord) {
            counterexamples.push((*m, *ord));
        }
    }
    Ok(TraceOrderReport {
        q,
        elements: elems.len() as u64,
        checked: results.len() as u64,
        per_clause,
        counterexamples,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SumSquaresPair {
    pub q: u32,
    pub a: FqElement,
    pub b: FqElement,
    pub m: SL2Matrix,
    pub a_matrix: SL2Matrix,
    pub det_is_one: bool,
    pub anticommute: bool,
    /// Images of A and M in PSL2 generate a group of order 4 and exponent 2.
    pub klein_four: bool,
}

/// a² + b² = −1 via the least c in S ∩ (−1 − S), S the squares, followed by
/// the least square roots of c and −1 − c.
pub fn find_sum_squares_pair(q: u32) -> Result<SumSquaresPair, Sl2Error> {
    let k = Field::from_order(q)?;
    if k.p() == 2 {
        return Err(Sl2Error::EvenCharacteristic(q));
    }
    let minus_one = k.from_int(-1);
    let sqrt = |c: FqElement| k.elements().find(|x| k.sqr(*x) == c);
    let c = k
        .elements()
        .find(|&c| sqrt(c).is_some() && sqrt(k.sub(minus_one, c)).is_some())
        .expect("every finite field has a² + b² = −1");
    let a = sqrt(c).unwrap();
    let b = sqrt(k.sub(minus_one, c)).unwrap();
    let m = SL2Matrix { a, b, c: b, d: k.neg(a) };
    let am = SL2Matrix::from_ints(&k, [0, 1, -1, 0])?;
    let det_is_one = m.det(&k) == FqElement::ONE;
    let anticommute = am.mul(&k, &m) == m.mul(&k, &am).neg(&k);
    let reps = [SL2Matrix::identity(), am, m, am.mul(&k, &m)].map(|x| x.psl2_canonical(&k));
    let mut closure: Vec<SL2Matrix> = reps.to_vec();
    closure.sort();
    closure.dedup();
    let klein_four = closure.len() == 4
        && closure.iter().all(|x| {
            let sq = x.mul(&k, x).psl2_canonical(&k);
            sq == SL2Matrix::identity().psl2_canonical(&k)
                && closure.iter().all(|y| closure.contains(&x.mul(&k, y).psl2_canonical(&k)))
        });
    Ok(SumSquaresPair { q, a, b, m, a_matrix: am, det_is_one, anticommute, klein_four })
}

/// PSL2(F_q) as a table group, with the canonical representative of each coset.
pub fn psl2_group(k: &Field) -> (Vec<SL2Matrix>, FiniteGroup) {
    let mut reps: Vec<SL2Matrix> = sl2_elements(k).iter().map(|m| m.psl2_canonical(k)).collect();
    reps.sort();
    reps.dedup();
    let g = FiniteGroup::from_elements(&reps, |x, y| x.mul(k, y).psl2_canonical(k));
    (reps, g)
}
