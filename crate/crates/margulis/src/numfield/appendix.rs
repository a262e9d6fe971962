//! The two Pell families of cubics, the discriminant scan over them, and the
//! auxiliary functions G and H with the rational bounds used alongside.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::cubic::{roots_cubic, CubicRoots};
use super::nifty::{discriminant_cubic, discriminant_without_bcd_term};
use super::pell::PellSolution;
use super::poly::IntPolynomial;
use super::NumfieldError;
use crate::rigor::{interval_json, CBox, Interval};

/// The eighteen pairs (±1,0), (±3,±2), (±7,±5), (±17,±12), (±41,±29).
pub fn listed_pell_pairs() -> Vec<(i64, i64)> {
    let mut out = vec![(1, 0), (-1, 0)];
    for (r, s) in [(3, 2), (7, 5), (17, 12), (41, 29)] {
        out.extend([(r, s), (-r, s), (r, -s), (-r, -s)]);
    }
    out
}

/// Variant 0: X³ + (s−2)X² − (r+s+2)X + (r+4).
/// Variant 2: X³ + sX² − (r+s+2)X + r.
pub fn candidate_family(r: i64, s: i64, variant: u8) -> Result<IntPolynomial, NumfieldError> {
    if PellSolution::new(r, s).is_none() {
        return Err(NumfieldError::NotPell { r, s });
    }
    let c = -(r + s + 2);
    match variant {
        0 => Ok(IntPolynomial::cubic(s - 2, c, r + 4)),
        2 => Ok(IntPolynomial::cubic(s, c, r)),
        v => Err(NumfieldError::InvalidVariant(v)),
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ri(q: &BigRational, p: u32) -> Interval {
    Interval::from_rational(q, p)
}

/// (1+y)² + (4/x)(1+y)³ − 4y − (27/x²)y² − (18/x)y(1+y).
pub fn g_expanded(x: &Interval, y: &Interval) -> Result<Interval, NumfieldError> {
    let inv = x.recip()?;
    let y1 = y.add_i64(1);
    Ok(y1
        .sqr()
        .add_iv(&inv.mul_i64(4).mul_iv(&y1.powi(3)))
        .sub_iv(&y.mul_i64(4))
        .sub_iv(&inv.sqr().mul_i64(27).mul_iv(&y.sqr()))
        .sub_iv(&inv.mul_i64(18).mul_iv(y).mul_iv(&y1)))
}

/// (y−1)² − (4/x)(1+y)(y−½)(2−y) − (27/x²)y².
pub fn g_factored(x: &Interval, y: &Interval) -> Result<Interval, NumfieldError> {
    let inv = x.recip()?;
    let half = ri(&rat(1, 2), y.prec());
    let prod = y.add_i64(1).mul_iv(&y.sub_iv(&half)).mul_iv(&y.neg_iv().add_i64(2));
    Ok(y.add_i64(-1)
        .sqr()
        .sub_iv(&inv.mul_i64(4).mul_iv(&prod))
        .sub_iv(&inv.sqr().mul_i64(27).mul_iv(&y.sqr())))
}

/// G(x, y) using both closed forms; the result is their intersection.
pub fn g_eval(x: &Interval, y: &Interval) -> Result<Interval, NumfieldError> {
    if x.contains_zero() {
        return Err(NumfieldError::Rigor(crate::rigor::RigorError::Domain {
            func: "G",
            detail: "x interval contains 0".into(),
        }));
    }
    let a = g_expanded(x, y)?;
    let b = g_factored(x, y)?;
    Ok(match a.intersect(&b) {
        Some(i) => i,
        None if a.width() <= b.width() => a,
        None => b,
    })
}

/// H(y) = y³ + 15.4y² − 35.5y + 18.
pub fn h_eval(y: &Interval) -> Interval {
    let p = y.prec();
    y.powi(3)
        .add_iv(&ri(&rat(77, 5), p).mul_iv(&y.sqr()))
        .sub_iv(&ri(&rat(71, 2), p).mul_iv(y))
        .add_i64(18)
}

/// H(y) at a rational point, exactly.
pub fn h_exact(y: &BigRational) -> BigRational {
    y * y * y + rat(77, 5) * y * y - rat(71, 2) * y + rat(18, 1)
}

/// 17·G(68, y) as a cubic in y: y³ + (31/2 − 27/272)y² − (71/2)y + 18.
pub fn g68_times_17(y: &BigRational) -> BigRational {
    y * y * y + (rat(31, 2) - rat(27, 272)) * y * y - rat(71, 2) * y + rat(18, 1)
}

/// The critical points of H, (−30.8 ∓ √(30.8² + 426))/6.
pub fn h_critical_points(prec: u32) -> Result<(Interval, Interval), NumfieldError> {
    // 3y² + 30.8y − 35.5 = 0; disc = 30.8² + 12·35.5 = 948.64 + 426
    let disc = ri(&(rat(154, 5) * rat(154, 5) + rat(426, 1)), prec);
    let root = disc.sqrt()?;
    let b = ri(&rat(154, 5), prec);
    let lo = b.neg_iv().sub_iv(&root).div_i64(6)?;
    let hi = b.neg_iv().add_iv(&root).div_i64(6)?;
    Ok((lo, hi))
}

/// Exact rationals appearing in the positivity argument for large Pell pairs.
#[derive(Clone, Debug)]
pub struct LargePairBounds {
    /// 8 − (108/70³ + 36/70²)·1.6
    pub positive_subcase: BigRational,
    /// −8/70 − 108/70³ − (36/70²)(1 + 1.42 + 2/70)
    pub negative_subcase_excess: BigRational,
    /// 0.41² − 27·1.41²/70²
    pub negative_subcase_g: BigRational,
    /// 1.41 (1 + 2/70)⁻¹ (1 − 4/99)
    pub lambda_lower: BigRational,
    /// 1.42 (1 − 2/70)⁻¹ (1 + 4/99)
    pub lambda_upper: BigRational,
}

pub fn large_pair_bounds() -> LargePairBounds {
    let one = BigRational::one();
    LargePairBounds {
        positive_subcase: rat(8, 1) - (rat(108, 343000) + rat(36, 4900)) * rat(8, 5),
        negative_subcase_excess: -rat(8, 70) - rat(108, 343000) - rat(36, 4900) * (rat(242, 100) + rat(2, 70)),
        negative_subcase_g: rat(41, 100) * rat(41, 100) - rat(27, 1) * rat(141, 100) * rat(141, 100) / rat(4900, 1),
        lambda_lower: rat(141, 100) / (&one + rat(2, 70)) * (&one - rat(4, 99)),
        lambda_upper: rat(142, 100) / (&one - rat(2, 70)) * (&one + rat(4, 99)),
    }
}

/// Whether (r/s)² ∈ [2 − 1/4900, 2 + 1/4900] for every pair with |s| ≥ 70.
pub fn ratio_bound_holds(pairs: &[PellSolution]) -> bool {
    let lo = rat(2, 1) - rat(1, 4900);
    let hi = rat(2, 1) + rat(1, 4900);
    pairs.iter().filter(|p| p.s.abs() >= 70).all(|p| {
        let q = rat(p.r, p.s);
        let q2 = &q * &q;
        q2 >= lo && q2 <= hi
    })
}

#[derive(Clone, Debug)]
pub struct ScanRecord {
    pub candidate: IntPolynomial,
    pub r: i64,
    pub s: i64,
    pub variant: u8,
    pub discriminant: BigInt,
    pub discriminant_without_bcd: BigInt,
    /// Real root and the root of positive imaginary part, for Δ < 0.
    pub roots: Option<(Interval, CBox)>,
}

impl ScanRecord {
    pub fn survives(&self) -> bool {
        self.discriminant.is_negative()
    }

    pub fn verdict(&self) -> &'static str {
        if self.discriminant.is_positive() {
            "positive-discriminant"
        } else if self.discriminant.is_zero() {
            "repeated-root"
        } else {
            "survivor"
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "candidate": self.candidate.to_string(),
            "r": self.r,
            "s": self.s,
            "variant": self.variant,
            "discriminant": self.discriminant.to_string(),
            "discriminant_without_bcd": self.discriminant_without_bcd.to_string(),
            "verdict": self.verdict(),
        });
        if let Some((sigma, pair)) = &self.roots {
            v["roots"] = json!({
                "real": interval_json(sigma),
                "re": interval_json(&pair.re),
                "im": interval_json(&pair.im),
            });
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
}

impl ScanReport {
    pub fn positive_count(&self) -> usize {
        self.records.iter().filter(|r| r.discriminant.is_positive()).count()
    }

    /// Positive count under the discriminant formula lacking 18bcd.
    pub fn positive_count_without_bcd(&self) -> usize {
        self.records.iter().filter(|r| r.discriminant_without_bcd.is_positive()).count()
    }

    pub fn survivors(&self) -> impl Iterator<Item = &ScanRecord> {
        self.records.iter().filter(|r| r.survives())
    }

    pub fn find(&self, r: i64, s: i64, variant: u8) -> Option<&ScanRecord> {
        self.records.iter().find(|x| x.r == r && x.s == s && x.variant == variant)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "candidates": self.records.len(),
            "positive_discriminant": self.positive_count(),
            "survivors": self.survivors().map(|r| json!([r.r, r.s, r.variant])).collect::<Vec<_>>(),
            "records": self.records.iter().map(ScanRecord::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Both families over the given Pell pairs, discriminants exact and roots of
/// the negative-discriminant survivors certified.
pub fn survivor_scan(pairs: &[(i64, i64)], prec: u32) -> Result<ScanReport, NumfieldError> {
    let mut records = Vec::new();
    for &(r, s) in pairs {
        for variant in [0u8, 2] {
            let candidate = candidate_family(r, s, variant)?;
            let discriminant = discriminant_cubic(&candidate)?;
            let discriminant_without_bcd = discriminant_without_bcd_term(&candidate)?;
            let roots = if discriminant.is_negative() {
                match roots_cubic(&candidate, prec)? {
                    CubicRoots::Complex { sigma, pair } => Some((sigma, pair)),
                    CubicRoots::Real(_) => unreachable!("negative discriminant"),
                }
            } else {
                None
            };
            records.push(ScanRecord {
                candidate,
                r,
                s,
                variant,
                discriminant,
                discriminant_without_bcd,
                roots,
            });
        }
    }
    Ok(ScanReport { records })
}

pub fn appendix_survivor_scan(prec: u32) -> Result<ScanReport, NumfieldError> {
    survivor_scan(&listed_pell_pairs(), prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::pell::pell_solutions;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c).unwrap()
    }

    #[test]
    fn family_examples() {
        assert_eq!(candidate_family(7, 5, 0).unwrap(), p(&[1, 3, -14, 11]));
        assert_eq!(candidate_family(-1, 0, 0).unwrap(), p(&[1, -2, -1, 3]));
        assert_eq!(candidate_family(-1, 0, 2).unwrap(), p(&[1, 0, -1, -1]));
        assert!(matches!(candidate_family(2, 1, 0), Err(NumfieldError::NotPell { .. })));
        assert!(matches!(candidate_family(1, 0, 1), Err(NumfieldError::InvalidVariant(1))));
    }

    #[test]
    fn g_forms_agree_at_a_point() {
        let x = Interval::from_i64(1, 64);
        let y = Interval::from_i64(0, 64);
        assert_eq!(g_expanded(&x, &y).unwrap(), Interval::from_i64(5, 64));
        assert_eq!(g_factored(&x, &y).unwrap(), Interval::from_i64(5, 64));
        assert!(g_eval(&Interval::zero(64), &y).is_err());
    }

    #[test]
    fn g68_matches_cubic() {
        for (n, d) in [(131, 100), (-131, 100), (2, 1), (-2, 1), (3, 7)] {
            let y = rat(n, d);
            let g = g_eval(&Interval::from_i64(68, 200), &Interval::from_rational(&y, 200)).unwrap();
            let want = g68_times_17(&y) / rat(17, 1);
            assert!(g.contains_rational(&want));
        }
    }

    #[test]
    fn h_values() {
        let h = h_exact(&rat(131, 100));
        assert!(h > rat(171, 1000) && h < rat(172, 1000));
        let h = h_exact(&rat(-131, 100));
        assert!(h > rat(886, 10) && h < rat(887, 10));
        let (a, b) = h_critical_points(128).unwrap();
        assert!(a.certainly_lt_rational(&rat(-1131, 100)) && a.certainly_gt_rational(&rat(-1132, 100)));
        assert!(b.certainly_gt_rational(&rat(104, 100)) && b.certainly_lt_rational(&rat(105, 100)));
    }

    #[test]
    fn large_pair_rationals() {
        let b = large_pair_bounds();
        assert!(b.positive_subcase > rat(798, 100) && b.positive_subcase < rat(799, 100));
        assert!(b.negative_subcase_excess > rat(-134, 1000));
        assert!(b.negative_subcase_g > rat(15, 100));
        assert!(b.lambda_lower > rat(131, 100));
        assert!(b.lambda_upper < rat(16, 10));
    }

    #[test]
    fn ratio_bound_for_large_pairs() {
        assert!(ratio_bound_holds(&pell_solutions(10_000)));
    }

    #[test]
    fn scan_counts() {
        let scan = appendix_survivor_scan(96).unwrap();
        assert_eq!(scan.records.len(), 36);
        assert_eq!(scan.positive_count(), 29);
        let f = scan.find(7, 5, 0).unwrap();
        let (_, pair) = f.roots.as_ref().unwrap();
        assert!(pair.im.certainly_gt_rational(&rat(54, 1000)) && pair.im.certainly_lt_rational(&rat(55, 1000)));
        let im = &scan.find(-1, 0, 0).unwrap().roots.as_ref().unwrap().1.im;
        assert!(im.certainly_gt_rational(&rat(368, 1000)) && im.certainly_lt_rational(&rat(369, 1000)));
    }
}
