//! Cosine sums for points on the unit 2-sphere.

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};
use std::cmp::Ordering;

use crate::rigor::{interval_json, Interval, RigorError};

/// Tolerance on |v|² − 1 accepted for a unit vector.
pub const UNIT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SphereError {
    #[error("vector is not of unit length")]
    NotUnit,
    #[error("expected {expected} points, got {got}")]
    Count { expected: &'static str, got: usize },
    #[error("best triple ({p}, {q}, {q2}) is not certainly ≥ −2/3")]
    Inconclusive { p: usize, q: usize, q2: usize, value: Interval },
    #[error(transparent)]
    Rigor(#[from] RigorError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitVector3 {
    pub x: Interval,
    pub y: Interval,
    pub z: Interval,
}

impl UnitVector3 {
    pub fn new(x: Interval, y: Interval, z: Interval) -> Result<UnitVector3, SphereError> {
        let v = UnitVector3 { x, y, z };
        let n = v.dot(&v);
        let p = n.prec();
        let tol = Interval::from_f64(UNIT_TOL, p).expect("finite");
        let band = Interval::new(Interval::one(p).sub_iv(&tol).lo().clone(), Interval::one(p).add_iv(&tol).hi().clone(), p)?;
        if !n.subset_of(&band) {
            return Err(SphereError::NotUnit);
        }
        Ok(v)
    }

    /// v/|v| for a nonzero vector of floats.
    pub fn normalized(v: [f64; 3], prec: u32) -> Result<UnitVector3, SphereError> {
        let c: Vec<Interval> = v
            .iter()
            .map(|&a| Interval::from_f64(a, prec).ok_or(SphereError::NotUnit))
            .collect::<Result<_, _>>()?;
        let norm = c[0].sqr().add_iv(&c[1].sqr()).add_iv(&c[2].sqr()).sqrt()?;
        UnitVector3::new(c[0].checked_div(&norm)?, c[1].checked_div(&norm)?, c[2].checked_div(&norm)?)
    }

    pub fn axis(i: usize, sign: i64, prec: u32) -> UnitVector3 {
        let mut c = [Interval::zero(prec), Interval::zero(prec), Interval::zero(prec)];
        c[i] = Interval::from_i64(sign, prec);
        let [x, y, z] = c;
        UnitVector3 { x, y, z }
    }

    pub fn dot(&self, o: &UnitVector3) -> Interval {
        self.x.mul_iv(&o.x).add_iv(&self.y.mul_iv(&o.y)).add_iv(&self.z.mul_iv(&o.z))
    }
}

/// Σ_{i<j} ⟨v_i, v_j⟩.
pub fn pairwise_cos_sum(points: &[UnitVector3]) -> Result<Interval, SphereError> {
    if points.len() < 2 {
        return Err(SphereError::Count { expected: "at least 2", got: points.len() });
    }
    let mut acc = Interval::zero(points[0].x.prec());
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            acc = acc.add_iv(&a.dot(b));
        }
    }
    Ok(acc)
}

/// (|Σ v_i|² − n)/2, the closed form of the pairwise sum.
pub fn gram_form(points: &[UnitVector3]) -> Interval {
    let p = points[0].x.prec();
    let mut s = [Interval::zero(p), Interval::zero(p), Interval::zero(p)];
    for v in points {
        s[0] = s[0].add_iv(&v.x);
        s[1] = s[1].add_iv(&v.y);
        s[2] = s[2].add_iv(&v.z);
    }
    s[0].sqr().add_iv(&s[1].sqr()).add_iv(&s[2].sqr()).add_i64(-(points.len() as i64)).mul_pow2(-1)
}

/// The twelve pairs (p, {q, q′}) with p ∉ {q, q′}, in lexicographic order.
pub fn triple_candidates() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for p in 0..4 {
        for q in 0..4 {
            for q2 in q + 1..4 {
                if p != q && p != q2 {
                    out.push((p, q, q2));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct GoodTriple {
    pub p: usize,
    pub q: usize,
    pub q2: usize,
    pub value: Interval,
}

impl GoodTriple {
    pub fn to_json(&self) -> Value {
        json!({"p": self.p, "q": self.q, "q2": self.q2, "value": interval_json(&self.value)})
    }
}

pub fn candidate_values(points: &[UnitVector3]) -> Result<Vec<GoodTriple>, SphereError> {
    if points.len() != 4 {
        return Err(SphereError::Count { expected: "exactly 4", got: points.len() });
    }
    Ok(triple_candidates()
        .into_iter()
        .map(|(p, q, q2)| GoodTriple { p, q, q2, value: points[p].dot(&points[q]).add_iv(&points[p].dot(&points[q2])) })
        .collect())
}

/// The lexicographically first candidate not certainly beaten by another,
/// required to be certainly ≥ −2/3.
pub fn find_good_triple(points: &[UnitVector3]) -> Result<GoodTriple, SphereError> {
    let cands = candidate_values(points)?;
    let best = cands
        .iter()
        .find(|c| !cands.iter().any(|d| d.value.certainly_gt(&c.value)))
        .expect("a maximal candidate exists")
        .clone();
    let bound = BigRational::new((-2).into(), 3.into());
    if best.value.lo().cmp_rational(&bound) == Ordering::Less {
        return Err(SphereError::Inconclusive { p: best.p, q: best.q, q2: best.q2, value: best.value });
    }
    Ok(best)
}

/// Σ over the twelve candidates = 4 Σ_{i<j} ⟨P_i, P_j⟩, for exact rational
/// vectors (unit length is not needed for the identity).
pub fn averaging_identity_exact(points: &[[BigRational; 3]; 4]) -> bool {
    let dot = |a: &[BigRational; 3], b: &[BigRational; 3]| -> BigRational {
        a.iter().zip(b).map(|(x, y)| x * y).fold(BigRational::zero(), |s, t| s + t)
    };
    let lhs = triple_candidates()
        .into_iter()
        .fold(BigRational::zero(), |s, (p, q, q2)| s + dot(&points[p], &points[q]) + dot(&points[p], &points[q2]));
    let mut pair = BigRational::zero();
    for i in 0..4 {
        for j in i + 1..4 {
            pair += dot(&points[i], &points[j]);
        }
    }
    lhs == pair * BigRational::from_integer(4.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigor::Dyadic;

    fn tetra() -> Vec<UnitVector3> {
        [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]
            .iter()
            .map(|v| UnitVector3::normalized(*v, 128).unwrap())
            .collect()
    }

    #[test]
    fn boundary_configurations() {
        let pair = [UnitVector3::axis(2, 1, 128), UnitVector3::axis(2, -1, 128)];
        let s = pairwise_cos_sum(&pair).unwrap();
        assert!(s.is_point() && s.lo() == &Dyadic::from_i64(-1));
        let t = pairwise_cos_sum(&tetra()).unwrap();
        assert!(t.contains(&Dyadic::from_i64(-2)) && t.width().to_f64() < 1e-30);
        let north = vec![UnitVector3::axis(2, 1, 128); 4];
        assert_eq!(pairwise_cos_sum(&north).unwrap(), Interval::from_i64(6, 128));
    }

    #[test]
    fn triples() {
        let north = vec![UnitVector3::axis(2, 1, 128); 4];
        let g = find_good_triple(&north).unwrap();
        assert_eq!((g.p, g.q, g.q2), (0, 1, 2));
        assert_eq!(g.value, Interval::from_i64(2, 128));
        let cross = [UnitVector3::axis(0, 1, 128), UnitVector3::axis(0, -1, 128), UnitVector3::axis(1, 1, 128), UnitVector3::axis(1, -1, 128)];
        let g = find_good_triple(&cross).unwrap();
        assert_eq!(g.value, Interval::zero(128));
        assert_eq!((g.p, g.q, g.q2), (0, 2, 3));
        match find_good_triple(&tetra()) {
            Err(SphereError::Inconclusive { p, q, q2, value }) => {
                assert_eq!((p, q, q2), (0, 1, 2));
                assert!(value.contains_rational(&BigRational::new((-2).into(), 3.into())));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        let two = Interval::from_i64(2, 64);
        assert_eq!(UnitVector3::new(two.clone(), two.clone(), two).unwrap_err(), SphereError::NotUnit);
        assert!(pairwise_cos_sum(&[UnitVector3::axis(0, 1, 64)]).is_err());
        assert!(find_good_triple(&tetra()[..3]).is_err());
    }

    #[test]
    fn averaging_identity() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let pts = [
            [r(1, 2), r(-3, 7), r(2, 9)],
            [r(0, 1), r(1, 1), r(-5, 3)],
            [r(4, 5), r(1, 11), r(1, 13)],
            [r(-1, 1), r(2, 3), r(3, 4)],
        ];
        assert!(averaging_identity_exact(&pts));
    }
}
