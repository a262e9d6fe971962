//! Closed intervals with outward-rounded endpoint arithmetic.

use std::cmp::{max, min, Ordering};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::dyadic::{Dyadic, Round};
use super::RigorError;

/// Default working precision in bits.
pub const DEFAULT_PREC: u32 = 128;
/// Upper bound for automatic precision doubling.
pub const MAX_PREC: u32 = 1024;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Result<Interval, RigorError> {
        if lo > hi {
            return Err(RigorError::InvalidInterval);
        }
        Ok(Interval { lo, hi, prec })
    }

    pub(crate) fn from_sorted(lo: Dyadic, hi: Dyadic, prec: u32) -> Interval {
        debug_assert!(lo <= hi, "unsorted endpoints {lo:?} > {hi:?}");
        Interval { lo, hi, prec }
    }

    pub fn point(x: Dyadic, prec: u32) -> Interval {
        Interval {
            lo: x.clone(),
            hi: x,
            prec,
        }
    }

    pub fn zero(prec: u32) -> Interval {
        Interval::point(Dyadic::zero(), prec)
    }

    pub fn one(prec: u32) -> Interval {
        Interval::point(Dyadic::one(), prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Interval {
        Interval::point(Dyadic::from_i64(v), prec)
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Interval {
        Interval::point(Dyadic::from_bigint(v), prec)
    }

    /// Exact enclosure of an f64 value; `None` for non-finite input.
    pub fn from_f64(v: f64, prec: u32) -> Option<Interval> {
        Dyadic::from_f64(v).map(|d| Interval::point(d, prec))
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Interval {
        let lo = Dyadic::from_rational(q, prec, Round::Down);
        let hi = Dyadic::from_rational(q, prec, Round::Up);
        Interval { lo, hi, prec }
    }

    pub fn from_ratio(num: i64, den: i64, prec: u32) -> Interval {
        Interval::from_rational(&BigRational::new(num.into(), den.into()), prec)
    }

    /// Smallest interval containing both rationals.
    pub fn from_rational_bounds(lo: &BigRational, hi: &BigRational, prec: u32) -> Interval {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        Interval {
            lo: Dyadic::from_rational(lo, prec, Round::Down),
            hi: Dyadic::from_rational(hi, prec, Round::Up),
            prec,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Interval {
        Interval {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            prec,
        }
    }

    /// Re-round the endpoints outward to the interval's own precision.
    pub fn normalized(&self) -> Interval {
        self.rounded(self.prec)
    }

    pub fn rounded(&self, prec: u32) -> Interval {
        Interval {
            lo: self.lo.round(prec, Round::Down),
            hi: self.hi.round(prec, Round::Up),
            prec,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn mid(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64()
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        self.lo.cmp_rational(q) != Ordering::Greater && self.hi.cmp_rational(q) != Ordering::Less
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn subset_of(&self, other: &Interval) -> bool {
        other.contains_interval(self)
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = max(&self.lo, &other.lo).clone();
        let hi = min(&self.hi, &other.hi).clone();
        if lo <= hi {
            Some(Interval {
                lo,
                hi,
                prec: self.prec.max(other.prec),
            })
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: min(&self.lo, &other.lo).clone(),
            hi: max(&self.hi, &other.hi).clone(),
            prec: self.prec.max(other.prec),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn is_nonneg(&self) -> bool {
        !self.lo.is_negative()
    }

    /// Every point of `self` is below every point of `other`.
    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_gt(&self, other: &Interval) -> bool {
        other.certainly_lt(self)
    }

    pub fn certainly_ge(&self, other: &Interval) -> bool {
        other.certainly_le(self)
    }

    pub fn certainly_gt_rational(&self, q: &BigRational) -> bool {
        self.lo.cmp_rational(q) == Ordering::Greater
    }

    pub fn certainly_lt_rational(&self, q: &BigRational) -> bool {
        self.hi.cmp_rational(q) == Ordering::Less
    }

    fn join_prec(&self, other: &Interval) -> u32 {
        self.prec.max(other.prec)
    }

    pub fn add_iv(&self, other: &Interval) -> Interval {
        let p = self.join_prec(other);
        Interval {
            lo: self.lo.add_round(&other.lo, p, Round::Down),
            hi: self.hi.add_round(&other.hi, p, Round::Up),
            prec: p,
        }
    }

    pub fn sub_iv(&self, other: &Interval) -> Interval {
        self.add_iv(&other.neg_iv())
    }

    pub fn neg_iv(&self) -> Interval {
        Interval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            prec: self.prec,
        }
    }

    pub fn mul_iv(&self, other: &Interval) -> Interval {
        let p = self.join_prec(other);
        let (a, b, c, d) = (&self.lo, &self.hi, &other.lo, &other.hi);
        if !a.is_negative() && !c.is_negative() {
            return Interval {
                lo: a.mul_round(c, p, Round::Down),
                hi: b.mul_round(d, p, Round::Up),
                prec: p,
            };
        }
        if !b.is_positive() && !d.is_positive() {
            return Interval {
                lo: b.mul_round(d, p, Round::Down),
                hi: a.mul_round(c, p, Round::Up),
                prec: p,
            };
        }
        let prods = [a.mul(c), a.mul(d), b.mul(c), b.mul(d)];
        let lo = prods.iter().min().unwrap().round(p, Round::Down);
        let hi = prods.iter().max().unwrap().round(p, Round::Up);
        Interval { lo, hi, prec: p }
    }

    pub fn sqr(&self) -> Interval {
        let p = self.prec;
        if !self.lo.is_negative() {
            Interval {
                lo: self.lo.mul_round(&self.lo, p, Round::Down),
                hi: self.hi.mul_round(&self.hi, p, Round::Up),
                prec: p,
            }
        } else if !self.hi.is_positive() {
            Interval {
                lo: self.hi.mul_round(&self.hi, p, Round::Down),
                hi: self.lo.mul_round(&self.lo, p, Round::Up),
                prec: p,
            }
        } else {
            let m = max(self.lo.abs(), self.hi.abs());
            Interval {
                lo: Dyadic::zero(),
                hi: m.mul_round(&m, p, Round::Up),
                prec: p,
            }
        }
    }

    pub fn powi(&self, n: u32) -> Interval {
        match n {
            0 => Interval::one(self.prec),
            1 => self.clone(),
            _ => {
                let half = self.powi(n / 2).sqr();
                if n.is_multiple_of(2) {
                    half
                } else {
                    half.mul_iv(self)
                }
            }
        }
    }

    pub fn checked_div(&self, other: &Interval) -> Result<Interval, RigorError> {
        if other.contains_zero() {
            return Err(RigorError::DivisionByZero);
        }
        let p = self.join_prec(other);
        let (a, b, c, d) = (&self.lo, &self.hi, &other.lo, &other.hi);
        let cands = [(a, c), (a, d), (b, c), (b, d)];
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for (x, y) in cands {
            let l = x.div_round(y, p, Round::Down).unwrap();
            let h = x.div_round(y, p, Round::Up).unwrap();
            lo = Some(match lo {
                Some(v) if v <= l => v,
                _ => l,
            });
            hi = Some(match hi {
                Some(v) if v >= h => v,
                _ => h,
            });
        }
        Ok(Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
            prec: p,
        })
    }

    pub fn recip(&self) -> Result<Interval, RigorError> {
        Interval::one(self.prec).checked_div(self)
    }

    pub fn mul_i64(&self, k: i64) -> Interval {
        self.mul_iv(&Interval::from_i64(k, self.prec))
    }

    pub fn div_i64(&self, k: i64) -> Result<Interval, RigorError> {
        self.checked_div(&Interval::from_i64(k, self.prec))
    }

    pub fn add_i64(&self, k: i64) -> Interval {
        self.add_iv(&Interval::from_i64(k, self.prec))
    }

    pub fn mul_pow2(&self, k: i64) -> Interval {
        Interval {
            lo: self.lo.mul_pow2(k),
            hi: self.hi.mul_pow2(k),
            prec: self.prec,
        }
    }

    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg_iv()
        } else {
            Interval {
                lo: Dyadic::zero(),
                hi: max(self.lo.abs(), self.hi.clone()),
                prec: self.prec,
            }
        }
    }

    /// Pointwise maximum.
    pub fn max_iv(&self, other: &Interval) -> Interval {
        Interval {
            lo: max(&self.lo, &other.lo).clone(),
            hi: max(&self.hi, &other.hi).clone(),
            prec: self.join_prec(other),
        }
    }

    /// Pointwise minimum.
    pub fn min_iv(&self, other: &Interval) -> Interval {
        Interval {
            lo: min(&self.lo, &other.lo).clone(),
            hi: min(&self.hi, &other.hi).clone(),
            prec: self.join_prec(other),
        }
    }

    /// Clamp the lower endpoint at zero. Only sound when the caller knows the
    /// exact quantity is nonnegative.
    pub fn clamp_nonneg(&self) -> Interval {
        if !self.lo.is_negative() {
            return self.clone();
        }
        Interval {
            lo: Dyadic::zero(),
            hi: max(self.hi.clone(), Dyadic::zero()),
            prec: self.prec,
        }
    }

    /// Intersect with [lo, hi]; used where the exact range is known a priori.
    pub fn clamp_to(&self, lo: &Dyadic, hi: &Dyadic) -> Interval {
        let clamp = |x: &Dyadic| x.clone().clamp(lo.clone(), hi.clone());
        Interval {
            lo: clamp(&self.lo),
            hi: clamp(&self.hi),
            prec: self.prec,
        }
    }

    /// Rough magnitude bound: floor(log2 max |x|), `None` for [0, 0].
    pub fn mag_hi(&self) -> Option<i64> {
        let m = max(self.lo.abs(), self.hi.abs());
        m.mag()
    }

    /// floor(log2 min |x|) when the interval excludes zero.
    pub fn mag_lo(&self) -> Option<i64> {
        if self.contains_zero() {
            None
        } else {
            min(self.lo.abs(), self.hi.abs()).mag()
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]@{}", self.lo.to_f64(), self.hi.to_f64(), self.prec)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            super::format::decimal_string(&self.lo, 12, Round::Down),
            super::format::decimal_string(&self.hi, 12, Round::Up)
        )
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Interval> for &Interval {
            type Output = Interval;
            fn $m(self, rhs: &Interval) -> Interval {
                self.$f(rhs)
            }
        }
        impl $tr<Interval> for Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Interval> for Interval {
            type Output = Interval;
            fn $m(self, rhs: &Interval) -> Interval {
                (&self).$f(rhs)
            }
        }
        impl $tr<Interval> for &Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                self.$f(&rhs)
            }
        }
    };
}

binop!(Add, add, add_iv);
binop!(Sub, sub, sub_iv);
binop!(Mul, mul, mul_iv);

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        self.neg_iv()
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        self.neg_iv()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(Dyadic::from_f64(a).unwrap(), Dyadic::from_f64(b).unwrap(), 64).unwrap()
    }

    #[test]
    fn rejects_reversed_endpoints() {
        assert!(Interval::new(Dyadic::one(), Dyadic::zero(), 64).is_err());
    }

    #[test]
    fn mixed_sign_product() {
        let p = iv(-2.0, 3.0) * iv(-5.0, 1.0);
        assert_eq!(p, iv(-15.0, 10.0));
    }

    #[test]
    fn square_of_straddling_interval_is_nonnegative() {
        assert_eq!(iv(-3.0, 2.0).sqr(), iv(0.0, 9.0));
    }

    #[test]
    fn division_by_interval_containing_zero_is_an_error() {
        assert!(matches!(iv(1.0, 2.0).checked_div(&iv(-1.0, 1.0)), Err(RigorError::DivisionByZero)));
    }

    #[test]
    fn third_is_enclosed() {
        let t = Interval::from_ratio(1, 3, 80);
        let q = BigRational::new(1.into(), 3.into());
        assert!(t.contains_rational(&q));
        assert!(!t.is_point());
        assert!(t.width().mag().unwrap() <= -80);
    }

    #[test]
    fn powi_matches_repeated_product() {
        let x = iv(-1.5, 0.5);
        let p3 = x.powi(3);
        assert!(p3.contains(&Dyadic::from_f64(-3.375).unwrap()));
        assert!(p3.contains(&Dyadic::from_f64(0.125).unwrap()));
    }

    #[test]
    fn clamp_nonneg_keeps_upper_end() {
        let c = iv(-1e-30, 2.0).clamp_nonneg();
        assert_eq!(c, iv(0.0, 2.0));
    }
}
