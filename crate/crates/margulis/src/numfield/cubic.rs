//! Certified roots of integer cubics and exact powers of a cubic generator.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::nifty::discriminant_cubic;
use super::poly::IntPolynomial;
use super::NumfieldError;
use crate::rigor::{CBox, Dyadic, Interval};

/// Extra bits carried by bisection beyond the requested precision.
const ROOT_GUARD: u32 = 16;
/// Precision ceiling for separating close real roots.
const MAX_SEPARATION_PREC: u32 = 8192;

#[derive(Clone, Debug)]
pub enum CubicRoots {
    /// Three real roots in increasing order.
    Real([Interval; 3]),
    /// Real root σ and the root u + iv with v > 0 (its conjugate is implied).
    Complex { sigma: Interval, pair: CBox },
}

impl CubicRoots {
    /// All three roots as boxes: real roots first, then u + iv, u − iv.
    pub fn boxes(&self) -> Vec<CBox> {
        match self {
            CubicRoots::Real(r) => r.iter().map(|x| CBox::real(x.clone())).collect(),
            CubicRoots::Complex { sigma, pair } => vec![CBox::real(sigma.clone()), pair.clone(), pair.conj()],
        }
    }
}

fn sign_at(f: &IntPolynomial, x: &Dyadic) -> Ordering {
    let v = f
        .coeffs()
        .iter()
        .fold(Dyadic::zero(), |acc, c| acc.mul(x).add(&Dyadic::from_bigint(c)));
    v.signum().cmp(&0)
}

/// Bisect a sign change of f on [lo, hi] down to width 2^-bits.
fn bisect(f: &IntPolynomial, mut lo: Dyadic, mut hi: Dyadic, bits: u32, prec: u32) -> Interval {
    let s_lo = sign_at(f, &lo);
    if s_lo == Ordering::Equal {
        return Interval::point(lo, prec);
    }
    if sign_at(f, &hi) == Ordering::Equal {
        return Interval::point(hi, prec);
    }
    loop {
        let w = hi.sub(&lo);
        if w.mag().is_none_or(|m| m < -(bits as i64)) {
            return Interval::new(lo, hi, prec).expect("bisection keeps order").rounded(prec);
        }
        let mid = lo.add(&hi).mul_pow2(-1);
        match sign_at(f, &mid) {
            Ordering::Equal => return Interval::point(mid, prec),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
}

fn cauchy_bound(f: &IntPolynomial) -> Dyadic {
    let m = f.coeffs().iter().skip(1).map(|c| c.abs()).max().unwrap_or_default();
    Dyadic::from_bigint(&(m + 1))
}

/// Isolate the roots of a monic cubic with nonzero discriminant.
pub fn roots_cubic(f: &IntPolynomial, prec: u32) -> Result<CubicRoots, NumfieldError> {
    let (b, c, d) = f.cubic_coeffs()?;
    let disc = discriminant_cubic(f)?;
    let bits = prec + ROOT_GUARD;
    let bound = cauchy_bound(f);
    match disc.sign() {
        num_bigint::Sign::NoSign => Err(NumfieldError::RepeatedRoot),
        num_bigint::Sign::Plus => {
            let (p1, p2) = separators(f, &b, &c)?;
            Ok(CubicRoots::Real([
                bisect(f, bound.neg(), p1.clone(), bits, prec),
                bisect(f, p1, p2.clone(), bits, prec),
                bisect(f, p2, bound, bits, prec),
            ]))
        }
        num_bigint::Sign::Minus => {
            let mut work = bits;
            loop {
                let sigma = bisect(f, bound.neg(), bound.clone(), work, work);
                if let Some(pair) = complex_pair(&sigma, &b, &c, &d)? {
                    return Ok(CubicRoots::Complex {
                        sigma: sigma.rounded(prec),
                        pair: CBox::new(pair.re.rounded(prec), pair.im.rounded(prec)),
                    });
                }
                work *= 2;
                if work > MAX_SEPARATION_PREC {
                    return Err(NumfieldError::Precision("imaginary part not certified positive".into()));
                }
            }
        }
    }
}

/// u + iv from the real root σ: u = (−b−σ)/2 and v² from either
/// σ(u²+v²) = −d or 2uσ + u² + v² = c, intersected when both apply.
fn complex_pair(sigma: &Interval, b: &BigInt, c: &BigInt, d: &BigInt) -> Result<Option<CBox>, NumfieldError> {
    let p = sigma.prec();
    let u = Interval::from_bigint(&-b, p).sub_iv(sigma).mul_pow2(-1);
    let u2 = u.sqr();
    let from_c = Interval::from_bigint(c, p).sub_iv(&u.mul_iv(sigma).mul_pow2(1)).sub_iv(&u2);
    let v2 = if sigma.contains_zero() {
        from_c
    } else {
        let from_d = Interval::from_bigint(&-d, p).checked_div(sigma)?.sub_iv(&u2);
        from_d.intersect(&from_c).unwrap_or(from_c)
    };
    if !v2.is_positive() {
        return Ok(None);
    }
    Ok(Some(CBox::new(u, v2.sqrt()?)))
}

/// Dyadic points p1 < p2 with f(p1) > 0 > f(p2), near the critical points.
fn separators(f: &IntPolynomial, b: &BigInt, c: &BigInt) -> Result<(Dyadic, Dyadic), NumfieldError> {
    let mut wp = 64;
    while wp <= MAX_SEPARATION_PREC {
        let disc = Interval::from_bigint(&(b * b - c * 3), wp);
        let root = disc.sqrt()?;
        let nb = Interval::from_bigint(&-b, wp);
        let t1 = nb.sub_iv(&root).div_i64(3)?.mid();
        let t2 = nb.add_iv(&root).div_i64(3)?.mid();
        if sign_at(f, &t1) == Ordering::Greater && sign_at(f, &t2) == Ordering::Less {
            return Ok((t1, t2));
        }
        wp *= 2;
    }
    Err(NumfieldError::Precision("real roots not separated".into()))
}

/// Enclosures of |f(0)|, |f(1)|, |f(−1)| and |f(√2) f(−√2)| as products over
/// the certified roots.
pub fn witnesses_from_roots(f: &IntPolynomial, prec: u32) -> Result<[Interval; 4], NumfieldError> {
    let roots = roots_cubic(f, prec)?.boxes();
    let prod = |g: &dyn Fn(&CBox) -> CBox| -> Result<Interval, NumfieldError> {
        let mut acc = Interval::one(prec);
        for r in &roots {
            acc = acc.mul_iv(&g(r).abs()?);
        }
        Ok(acc)
    };
    Ok([
        prod(&|r| r.clone())?,
        prod(&|r| r.add_i64(-1))?,
        prod(&|r| r.add_i64(1))?,
        prod(&|r| r.sqr().add_i64(-2))?,
    ])
}

/// An algebraic integer of degree ≤ 3 with an isolating box for one root.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    pub minpoly: IntPolynomial,
    pub root_box: CBox,
    /// Coordinates in the power basis 1, ξ, ξ² of the generator, when known.
    pub coords: Option<Vec<BigInt>>,
}

impl AlgebraicNumber {
    /// The root of a cubic with positive imaginary part.
    pub fn cubic_imaginary_root(f: &IntPolynomial, prec: u32) -> Result<AlgebraicNumber, NumfieldError> {
        f.require_irreducible()?;
        match roots_cubic(f, prec)? {
            CubicRoots::Complex { pair, .. } => Ok(AlgebraicNumber {
                minpoly: f.clone(),
                root_box: pair,
                coords: Some(vec![BigInt::zero(), BigInt::one(), BigInt::zero()]),
            }),
            CubicRoots::Real(_) => Err(NumfieldError::NoImaginaryRoot),
        }
    }
}

/// Product in Z[X]/(X³ + bX² + cX + d), coordinates low degree first.
fn mul_mod(x: &[BigInt], y: &[BigInt], b: &BigInt, c: &BigInt, d: &BigInt) -> Vec<BigInt> {
    let mut prod = vec![BigInt::zero(); 5];
    for i in 0..3 {
        for j in 0..3 {
            prod[i + j] += &x[i] * &y[j];
        }
    }
    // X³ = −bX² − cX − d
    for k in (3..5).rev() {
        let t = std::mem::take(&mut prod[k]);
        prod[k - 1] -= &t * b;
        prod[k - 2] -= &t * c;
        prod[k - 3] -= &t * d;
    }
    prod.truncate(3);
    prod
}

fn charpoly(m: &[[BigInt; 3]; 3]) -> Vec<BigInt> {
    // Faddeev–LeVerrier; all divisions are exact for integer matrices
    let n = 3;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk: [[BigInt; 3]; 3] = Default::default();
    for k in 1..=n {
        let mut next: [[BigInt; 3]; 3] = Default::default();
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    s += &m[i][l] * &mk[l][j];
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &m[i][l] * &next[l][i];
            }
        }
        let (q, r) = (-tr).div_rem(&BigInt::from(k as i64));
        debug_assert!(r.is_zero());
        coeffs[n - k] = q;
        mk = next;
    }
    coeffs.reverse();
    coeffs
}

/// ξ^m in the power basis of ξ, a root of the irreducible cubic `gen`, with
/// its box at the root of positive imaginary part.
pub fn element_power(gen: &IntPolynomial, m: i64, prec: u32) -> Result<AlgebraicNumber, NumfieldError> {
    let (b, c, d) = gen.cubic_coeffs()?;
    let xi = AlgebraicNumber::cubic_imaginary_root(gen, prec + 32)?;
    let base = if m >= 0 {
        vec![BigInt::zero(), BigInt::one(), BigInt::zero()]
    } else {
        if !d.abs().is_one() {
            return Err(NumfieldError::NotUnit);
        }
        // ξ⁻¹ = −(ξ² + bξ + c)/d with d = ±1
        vec![-(&c * &d), -(&b * &d), -d.clone()]
    };
    let mut acc = vec![BigInt::one(), BigInt::zero(), BigInt::zero()];
    let mut pow = base;
    let mut e = m.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &pow, &b, &c, &d);
        }
        pow = mul_mod(&pow, &pow, &b, &c, &d);
        e >>= 1;
    }
    let minpoly = if acc[1].is_zero() && acc[2].is_zero() {
        IntPolynomial::new(vec![BigInt::one(), -acc[0].clone()])?
    } else {
        let mut mat: [[BigInt; 3]; 3] = Default::default();
        let mut col = acc.clone();
        let x = vec![BigInt::zero(), BigInt::one(), BigInt::zero()];
        for j in 0..3 {
            for (row, v) in mat.iter_mut().zip(&col) {
                row[j] = v.clone();
            }
            col = mul_mod(&col, &x, &b, &c, &d);
        }
        IntPolynomial::new(charpoly(&mat))?
    };
    let z = &xi.root_box;
    let p = z.prec();
    let mut val = CBox::from_i64(0, p);
    let mut zp = CBox::from_i64(1, p);
    for a in &acc {
        val = val.add(&zp.scale(&Interval::from_bigint(a, p)));
        zp = zp.mul(z);
    }
    Ok(AlgebraicNumber {
        minpoly,
        root_box: CBox::new(val.re.rounded(prec), val.im.rounded(prec)),
        coords: Some(acc),
    })
}

/// Product of two elements given in the power basis of a root of `gen`.
pub fn basis_product(gen: &IntPolynomial, x: &[BigInt], y: &[BigInt]) -> Result<Vec<BigInt>, NumfieldError> {
    let (b, c, d) = gen.cubic_coeffs()?;
    Ok(mul_mod(x, y, &b, &c, &d))
}
