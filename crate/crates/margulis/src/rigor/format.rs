//! Directed decimal rendering of dyadic values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::dyadic::{Dyadic, Round};
use super::interval::Interval;

fn pow10(k: i64) -> BigRational {
    let p = num_traits::pow(BigInt::from(10), k.unsigned_abs() as usize);
    if k >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// floor(log10 q) for q > 0.
fn decimal_exponent(q: &BigRational, bin_mag: i64) -> i64 {
    let mut e = ((bin_mag as f64) * std::f64::consts::LOG10_2).floor() as i64;
    while &pow10(e) > q {
        e -= 1;
    }
    while &pow10(e + 1) <= q {
        e += 1;
    }
    e
}

/// `d` rounded in direction `dir` to `sig` significant decimal digits.
///
/// Positional notation for decimal exponents in [-7, 15), scientific
/// otherwise.
pub fn decimal_string(d: &Dyadic, sig: usize, dir: Round) -> String {
    if d.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1) as i64;
    let q = d.to_rational();
    let neg = q.is_negative();
    let a = q.abs();
    let mut e = decimal_exponent(&a, d.mag().unwrap());
    // magnitude rounds away from zero when the direction points outward
    let away = matches!((dir, neg), (Round::Up, false) | (Round::Down, true));
    let n = loop {
        let scaled = &a * pow10(sig - 1 - e);
        let n = if away { scaled.ceil() } else { scaled.floor() }.to_integer();
        if n >= num_traits::pow(BigInt::from(10), sig as usize) {
            e += 1;
            continue;
        }
        break n;
    };
    if n.is_zero() {
        return "0".to_string();
    }
    let digits = n.to_string();
    let trimmed = digits.trim_end_matches('0');
    let body = if (-7..15).contains(&e) {
        positional(trimmed, e)
    } else {
        let (first, rest) = trimmed.split_at(1);
        if rest.is_empty() {
            format!("{first}e{e}")
        } else {
            format!("{first}.{rest}e{e}")
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Place the decimal point in a digit string whose leading digit has weight 10^e.
fn positional(digits: &str, e: i64) -> String {
    let len = digits.len() as i64;
    if e < 0 {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    } else if len <= e + 1 {
        format!("{}{}", digits, "0".repeat((e + 1 - len) as usize))
    } else {
        let (int, frac) = digits.split_at((e + 1) as usize);
        format!("{int}.{frac}")
    }
}

/// Canonical report form `{"lo": "...", "hi": "..."}`.
pub fn interval_json(x: &Interval) -> Value {
    json!({
        "lo": decimal_string(x.lo(), 12, Round::Down),
        "hi": decimal_string(x.hi(), 12, Round::Up),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: f64, dir: Round) -> String {
        decimal_string(&Dyadic::from_f64(v).unwrap(), 12, dir)
    }

    #[test]
    fn outward_rounding() {
        assert_eq!(ds(0.1, Round::Down), "0.1");
        assert_eq!(ds(0.1, Round::Up), "0.100000000001");
        assert_eq!(ds(-0.1, Round::Down), "-0.100000000001");
        assert_eq!(ds(-0.1, Round::Up), "-0.1");
    }

    #[test]
    fn exact_values_print_exactly() {
        assert_eq!(ds(0.5, Round::Up), "0.5");
        assert_eq!(ds(1024.0, Round::Down), "1024");
        assert_eq!(ds(-49.0, Round::Up), "-49");
        assert_eq!(ds(0.0, Round::Up), "0");
    }

    #[test]
    fn carry_into_next_decade() {
        let v = Dyadic::from_f64(9.9999999999999).unwrap();
        assert_eq!(decimal_string(&v, 12, Round::Up), "10");
    }

    #[test]
    fn scientific_outside_window() {
        assert_eq!(ds(1e-9, Round::Down), "1e-9");
        assert_eq!(ds(2.5e20, Round::Up), "2.5e20");
        assert_eq!(ds(1.5e-7, Round::Up), "0.00000015");
    }

    #[test]
    fn rendered_bounds_enclose() {
        for v in [0.513188, -1.5739, 88.684849, 3.0e-5, 6578647.0, 1.0 / 3.0] {
            let d = Dyadic::from_f64(v).unwrap();
            let lo: f64 = decimal_string(&d, 12, Round::Down).parse().unwrap();
            let hi: f64 = decimal_string(&d, 12, Round::Up).parse().unwrap();
            assert!(lo <= v && v <= hi, "{v}");
        }
    }
}
