//! Unit tests by integer norms, nifty/swell classification and the τ ↦ τ²−2
//! recursion on cubic minimal polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use super::poly::IntPolynomial;
use super::NumfieldError;

/// Absolute norms of τ, τ−1, τ+1 and τ²−2 for a root τ of f.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormWitnesses {
    pub n_tau: BigInt,
    pub n_tau_minus_1: BigInt,
    pub n_tau_plus_1: BigInt,
    pub n_tau_sq_minus_2: BigInt,
}

impl NormWitnesses {
    pub fn as_array(&self) -> [&BigInt; 4] {
        [&self.n_tau, &self.n_tau_minus_1, &self.n_tau_plus_1, &self.n_tau_sq_minus_2]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Swell,
    NiftyNotSwell,
    NonNifty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiftyVerdict {
    pub verdict: Verdict,
    pub witnesses: NormWitnesses,
}

fn horner(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().fold(BigInt::from(0), |acc, c| acc * x + c)
}

pub fn norm_witnesses(f: &IntPolynomial) -> NormWitnesses {
    let (p, q) = f.even_odd_split();
    let two = BigInt::from(2);
    let (p2, q2) = (horner(&p, &two), horner(&q, &two));
    NormWitnesses {
        n_tau: f.eval(&BigInt::from(0)).abs(),
        n_tau_minus_1: f.eval(&BigInt::one()).abs(),
        n_tau_plus_1: f.eval(&BigInt::from(-1)).abs(),
        n_tau_sq_minus_2: (&p2 * &p2 - &q2 * &q2 * BigInt::from(2)).abs(),
    }
}

pub fn verdict_from_witnesses(w: &NormWitnesses) -> Verdict {
    let unit = |n: &BigInt| n.is_one();
    if !unit(&w.n_tau) && !unit(&w.n_tau_sq_minus_2) {
        Verdict::Swell
    } else if !unit(&w.n_tau_minus_1) && !unit(&w.n_tau_plus_1) {
        Verdict::NiftyNotSwell
    } else {
        Verdict::NonNifty
    }
}

pub fn classify_nifty(f: &IntPolynomial) -> Result<NiftyVerdict, NumfieldError> {
    f.require_irreducible()?;
    let witnesses = norm_witnesses(f);
    Ok(NiftyVerdict {
        verdict: verdict_from_witnesses(&witnesses),
        witnesses,
    })
}

/// Δ = 18bcd − 4b³d + b²c² − 4c³ − 27d².
pub fn discriminant_cubic(f: &IntPolynomial) -> Result<BigInt, NumfieldError> {
    let (b, c, d) = f.cubic_coeffs()?;
    Ok(&b * &c * &d * 18 - &b * &b * &b * &d * 4 + &b * &b * &c * &c - &c * &c * &c * 4 - &d * &d * 27)
}

/// The standard cubic discriminant with its 18bcd term dropped:
/// b²c² − 4c³ − 4b³d − 27d².
pub fn discriminant_without_bcd_term(f: &IntPolynomial) -> Result<BigInt, NumfieldError> {
    let (b, c, d) = f.cubic_coeffs()?;
    Ok(&b * &b * &c * &c - &c * &c * &c * 4 - &b * &b * &b * &d * 4 - &d * &d * 27)
}

/// Minimal polynomial of τ² when f is that of τ:
/// X³ + (2c−b²)X² + (c²−2bd)X − d².
pub fn square_minpoly(f: &IntPolynomial) -> Result<IntPolynomial, NumfieldError> {
    let (b, c, d) = f.cubic_coeffs()?;
    IntPolynomial::new(vec![
        BigInt::one(),
        &c * 2 - &b * &b,
        &c * &c - &b * &d * 2,
        -(&d * &d),
    ])
}

/// Minimal polynomial of τ²−2, i.e. the square map followed by a shift by 2.
pub fn min_poly_square_minus_two(f: &IntPolynomial) -> Result<IntPolynomial, NumfieldError> {
    let (b, c, d) = f.cubic_coeffs()?;
    f.require_irreducible()?;
    let b2 = &b * &b;
    IntPolynomial::new(vec![
        BigInt::one(),
        &c * 2 - &b2 + 6,
        &c * &c + &c * 8 - &b2 * 4 - &b * &d * 2 + 12,
        &c * &c * 2 + &c * 8 - &b * &d * 4 - &b2 * 4 - &d * &d + 8,
    ])
}

/// f₀, f₁, …, f_rmax with f_{r+1} the minimal polynomial of τ_r² − 2.
pub fn trace_power_sequence(f0: &IntPolynomial, rmax: usize) -> Result<Vec<IntPolynomial>, NumfieldError> {
    f0.cubic_coeffs()?;
    let mut out = vec![f0.clone()];
    for r in 0..rmax {
        let cur = &out[r];
        if let Some(root) = cur.rational_roots().into_iter().next() {
            return Err(NumfieldError::ReducibleIterate { index: r, root });
        }
        out.push(min_poly_square_minus_two(cur)?);
    }
    if let Some(root) = out[rmax].rational_roots().into_iter().next() {
        return Err(NumfieldError::ReducibleIterate { index: rmax, root });
    }
    Ok(out)
}
