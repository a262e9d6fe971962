//! Independent fixed-point oracle for the elementary functions.
//!
//! The oracle works with 640-bit fixed point and deliberately different
//! algorithms: unreduced Taylor series for exp/sin/cos, Halley iteration for
//! log, Euler's series for atan, Gauss-Legendre AGM for π.

use margulis::rigor::{interval_fn, Dyadic, ElemFn, Interval};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const W: u64 = 640;
pub const SAMPLES: usize = 10_000;
/// Oracle error allowance, in units of 2^-W.
pub const SLACK_BITS: u64 = 40;

fn one() -> BigInt {
    BigInt::one() << W
}

fn mul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> W
}

fn div(a: &BigInt, b: &BigInt) -> BigInt {
    (a << W) / b
}

fn from_f64(x: f64) -> BigInt {
    let d = Dyadic::from_f64(x).unwrap();
    let shift = d.exponent() + W as i64;
    assert!(shift >= 0, "input below oracle resolution");
    d.mantissa() << shift as u64
}

fn sqrt(a: &BigInt) -> BigInt {
    (a << W).sqrt()
}

fn exp(x: &BigInt) -> BigInt {
    if x.is_negative() {
        return div(&one(), &exp(&-x));
    }
    let mut term = one();
    let mut sum = one();
    let mut k = 1u32;
    while !term.is_zero() {
        term = mul(&term, x) / k;
        sum += &term;
        k += 1;
    }
    sum
}

fn ln(x: &BigInt, approx: f64) -> BigInt {
    let mut y = from_f64(approx);
    for _ in 0..6 {
        let e = exp(&y);
        y += div(&((x - &e) * 2), &(x + &e));
    }
    y
}

fn sin_cos(x: &BigInt) -> (BigInt, BigInt) {
    let x2 = mul(x, x);
    let mut s_term = x.clone();
    let mut s = x.clone();
    let mut c_term = one();
    let mut c = one();
    let mut k: u32 = 1;
    while !s_term.is_zero() || !c_term.is_zero() {
        c_term = -mul(&c_term, &x2) / ((2 * k - 1) * (2 * k));
        s_term = -mul(&s_term, &x2) / ((2 * k) * (2 * k + 1));
        c += &c_term;
        s += &s_term;
        k += 1;
    }
    (s, c)
}

fn pi() -> BigInt {
    let mut a = one();
    let mut b = sqrt(&(one() >> 1));
    let mut t = one() >> 2;
    let mut p = BigInt::one();
    for _ in 0..12 {
        let an = (&a + &b) >> 1;
        let bn = sqrt(&mul(&a, &b));
        let d = &a - &an;
        t -= mul(&d, &d) * &p;
        p <<= 1;
        a = an;
        b = bn;
    }
    let s = &a + &b;
    div(&mul(&s, &s), &(t << 2))
}

/// Euler: atan x = Σ 2^{2k} (k!)^2 / (2k+1)! · x^{2k+1} / (1+x^2)^{k+1}, |x| ≤ 1.
fn atan_small(x: &BigInt) -> BigInt {
    let x2 = mul(x, x);
    let q = div(&x2, &(one() + &x2));
    let mut term = div(x, &(one() + &x2));
    let mut sum = term.clone();
    let mut k: u32 = 1;
    while !term.is_zero() {
        term = mul(&term, &q) * (2 * k) / (2 * k + 1);
        sum += &term;
        k += 1;
    }
    sum
}

fn atan(x: &BigInt) -> BigInt {
    if x.is_negative() {
        return -atan(&-x);
    }
    if x > &one() {
        (pi() >> 1) - atan_small(&div(&one(), x))
    } else {
        atan_small(x)
    }
}

fn oracle(f: ElemFn, xf: f64) -> BigInt {
    let x = from_f64(xf);
    match f {
        ElemFn::Exp => exp(&x),
        ElemFn::Expm1 => exp(&x) - one(),
        ElemFn::Log => ln(&x, xf.ln()),
        ElemFn::Log1p => ln(&(&x + one()), xf.ln_1p()),
        ElemFn::Sqrt => sqrt(&x),
        ElemFn::Sinh => (exp(&x) - exp(&-&x)) >> 1,
        ElemFn::Cosh => (exp(&x) + exp(&-&x)) >> 1,
        ElemFn::Arcsinh => {
            let r = sqrt(&(mul(&x, &x) + one()));
            ln(&(&x + r), xf.asinh())
        }
        ElemFn::Arccosh => {
            let r = sqrt(&(mul(&x, &x) - one()));
            ln(&(&x + r), xf.acosh())
        }
        ElemFn::Sin => sin_cos(&x).0,
        ElemFn::Cos => sin_cos(&x).1,
        ElemFn::Atan => atan(&x),
    }
}

fn sample(f: ElemFn, rng: &mut ChaCha8Rng) -> f64 {
    let log_uniform = |rng: &mut ChaCha8Rng, lo: f64, hi: f64| (rng.gen_range(lo.ln()..hi.ln())).exp();
    match f {
        ElemFn::Exp | ElemFn::Sinh | ElemFn::Cosh | ElemFn::Sin | ElemFn::Cos => rng.gen_range(-20.0..20.0),
        ElemFn::Expm1 => {
            let m = log_uniform(rng, 1e-12, 5.0);
            if rng.gen() {
                m
            } else {
                -m
            }
        }
        ElemFn::Log | ElemFn::Sqrt => log_uniform(rng, 1e-6, 1e6),
        ElemFn::Log1p => rng.gen_range(-0.99..10.0),
        ElemFn::Arcsinh | ElemFn::Atan => rng.gen_range(-100.0..100.0),
        ElemFn::Arccosh => 1.0 + log_uniform(rng, 1e-9, 100.0),
    }
}

/// Enclosure misses (and over-wide enclosures) for `samples` seeded inputs.
pub fn violations(f: ElemFn, samples: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ f as u64);
    let slack = BigInt::one() << SLACK_BITS;
    let mut bad = Vec::new();
    for _ in 0..samples {
        let x = sample(f, &mut rng);
        let got = interval_fn(f, &Interval::from_f64(x, 128).unwrap()).unwrap();
        let v = oracle(f, x);
        let lo = Dyadic::new(&v - &slack, -(W as i64));
        let hi = Dyadic::new(&v + &slack, -(W as i64));
        if !(got.lo() <= &lo && &hi <= got.hi()) {
            bad.push(format!("{}({x:e}) = {got:?} misses the oracle value", f.name()));
            continue;
        }
        // a few ulps at 128 bits, relative to the value
        let scale = std::cmp::max(lo.abs(), hi.abs());
        if !scale.is_zero() {
            let w = got.width();
            if !(w.is_zero() || w.mag().unwrap() <= scale.mag().unwrap() - 120) {
                bad.push(format!("{}({x:e}) enclosure too wide: {got:?}", f.name()));
            }
        }
    }
    bad
}

pub fn oracle_pi() -> BigInt {
    pi()
}
