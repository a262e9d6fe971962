//! Precision-parameterised enclosures of π, log 2, log 3, √2, √3.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::dyadic::{Dyadic, Round};
use super::interval::Interval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Const {
    Pi,
    Ln2,
    Log3,
    Sqrt2,
    Sqrt3,
}

fn cache() -> &'static Mutex<HashMap<(Const, u32), Interval>> {
    static CACHE: OnceLock<Mutex<HashMap<(Const, u32), Interval>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(c: Const, prec: u32, build: impl FnOnce() -> Interval) -> Interval {
    if let Some(v) = cache().lock().unwrap().get(&(c, prec)) {
        return v.clone();
    }
    let v = build();
    cache().lock().unwrap().insert((c, prec), v.clone());
    v
}

/// Fixed-point Σ_k s^k / ((2k+1) n^(2k+1)) scaled by 2^w, where s = -1 for
/// arctan and +1 for artanh. Returns the truncated sum and an error bound in
/// units of 2^-w covering both the per-term floors and the discarded tail.
fn inv_series(n: u64, w: u64, alternating: bool) -> (BigInt, BigInt) {
    let one = BigInt::one() << w;
    let n = BigInt::from(n);
    let n2 = &n * &n;
    let mut npow = n.clone();
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let term = &one / (&npow * BigInt::from(2 * k + 1));
        if term.is_zero() {
            break;
        }
        if alternating && k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        npow *= &n2;
        k += 1;
    }
    // k floors each off by < 1, plus a tail below 2 units for n >= 3.
    (sum, BigInt::from(k + 2))
}

fn fixed_to_interval(val: BigInt, err: BigInt, w: u64, prec: u32) -> Interval {
    let lo = Dyadic::new(&val - &err, -(w as i64)).round(prec, Round::Down);
    let hi = Dyadic::new(&val + &err, -(w as i64)).round(prec, Round::Up);
    Interval::new(lo, hi, prec).expect("ordered by construction")
}

pub fn pi(prec: u32) -> Interval {
    cached(Const::Pi, prec, || {
        let w = prec as u64 + 32;
        let (a5, e5) = inv_series(5, w, true);
        let (a239, e239) = inv_series(239, w, true);
        let val = a5 * 16 - a239 * 4;
        let err = e5 * 16 + e239 * 4;
        fixed_to_interval(val, err, w, prec)
    })
}

pub fn ln2(prec: u32) -> Interval {
    cached(Const::Ln2, prec, || {
        let w = prec as u64 + 32;
        let (s, e) = inv_series(3, w, false);
        fixed_to_interval(s * 2, e * 2, w, prec)
    })
}

pub fn log3(prec: u32) -> Interval {
    cached(Const::Log3, prec, || {
        // log 3 = log 2 + log(3/2) and log(3/2) = 2 artanh(1/5)
        let w = prec as u64 + 32;
        let (s3, e3) = inv_series(3, w, false);
        let (s5, e5) = inv_series(5, w, false);
        fixed_to_interval((s3 + s5) * 2, (e3 + e5) * 2, w, prec)
    })
}

fn sqrt_int(v: i64, prec: u32) -> Interval {
    let d = Dyadic::from_i64(v);
    let lo = d.sqrt_round(prec, Round::Down).unwrap();
    let hi = d.sqrt_round(prec, Round::Up).unwrap();
    Interval::new(lo, hi, prec).unwrap()
}

pub fn sqrt2(prec: u32) -> Interval {
    cached(Const::Sqrt2, prec, || sqrt_int(2, prec))
}

pub fn sqrt3(prec: u32) -> Interval {
    cached(Const::Sqrt3, prec, || sqrt_int(3, prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(s: &str) -> BigRational {
        let (n, d) = s.split_once('/').unwrap();
        BigRational::new(n.parse().unwrap(), d.parse().unwrap())
    }

    #[test]
    fn pi_brackets_known_digits() {
        let p = pi(200);
        // 3.14159265358979323846264338327950288 and its successor at 35 digits
        assert!(p.certainly_gt_rational(&q("314159265358979323846264338327950288/100000000000000000000000000000000000")));
        assert!(p.certainly_lt_rational(&q("314159265358979323846264338327950289/100000000000000000000000000000000000")));
        assert!(p.width().mag().unwrap() < -190);
    }

    #[test]
    fn logs_bracket_known_digits() {
        let l2 = ln2(128);
        assert!(l2.certainly_gt_rational(&q("693147180559945309417/1000000000000000000000")));
        assert!(l2.certainly_lt_rational(&q("693147180559945309418/1000000000000000000000")));
        let l3 = log3(128);
        assert!(l3.certainly_gt_rational(&q("1098612288668109691395/1000000000000000000000")));
        assert!(l3.certainly_lt_rational(&q("1098612288668109691396/1000000000000000000000")));
    }

    #[test]
    fn roots_square_back() {
        let s = sqrt3(100);
        assert!(s.sqr().contains(&Dyadic::from_i64(3)));
        let s = sqrt2(100);
        assert!(s.sqr().contains(&Dyadic::from_i64(2)));
    }

    #[test]
    fn cache_returns_identical_values() {
        assert_eq!(pi(96), pi(96));
    }
}
