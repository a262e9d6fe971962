//! Complex length, the distance-to-axis function ω, tube radii and
//! Zagier's integer.

use serde_json::{json, Value};

use super::{domain, HypError};
use crate::rigor::consts::{pi, sqrt3};
use crate::rigor::{interval_json, CBox, Interval, MAX_PREC};

const GUARD: u32 = 32;

/// l + iθ with l > 0 and θ normalized into (−π, π].
#[derive(Clone, Debug)]
pub struct ComplexLength {
    pub l: Interval,
    pub theta: Interval,
}

impl ComplexLength {
    pub fn new(l: Interval, theta: Interval) -> Result<ComplexLength, HypError> {
        if !l.is_positive() {
            return Err(domain("complex length", "real part must be positive"));
        }
        Ok(ComplexLength { l, theta: normalize_angle(&theta) })
    }

    /// θ/π.
    pub fn theta_over_pi(&self) -> Interval {
        let p = self.theta.prec();
        self.theta.checked_div(&pi(p)).expect("π ≠ 0")
    }

    /// The complex length of the m-th power, l·m + i·θ·m reduced mod 2π.
    pub fn scale(&self, m: u32) -> ComplexLength {
        let m = m as i64;
        ComplexLength { l: self.l.mul_i64(m), theta: normalize_angle(&self.theta.mul_i64(m)) }
    }

    /// 2 cosh(L/2).
    pub fn trace(&self) -> Result<CBox, HypError> {
        let h = self.l.mul_pow2(-1);
        let t = self.theta.mul_pow2(-1);
        let re = h.cosh()?.mul_iv(&t.cos()?).mul_pow2(1);
        let im = h.sinh()?.mul_iv(&t.sin()?).mul_pow2(1);
        Ok(CBox::new(re, im))
    }

    pub fn to_json(&self) -> Value {
        json!({"l": interval_json(&self.l), "theta": interval_json(&self.theta), "theta_over_pi": interval_json(&self.theta_over_pi())})
    }
}

/// Shift θ by the multiple of 2π nearest its midpoint's excess over (−π, π].
fn normalize_angle(theta: &Interval) -> Interval {
    let p = theta.prec();
    let two_pi = pi(p + GUARD).mul_pow2(1);
    let turns = (theta.mid_f64() / two_pi.mid_f64()).round() as i64;
    let mut t = theta.sub_iv(&two_pi.mul_i64(turns));
    // a box reaching −π is moved up to π
    if t.lo() <= pi(p + GUARD).neg_iv().hi() {
        t = t.add_iv(&two_pi);
    }
    t.rounded(p)
}

/// The complex length L with 2 cosh(L/2) = ±τ.
pub fn complex_length_from_trace(tau: &CBox) -> Result<ComplexLength, HypError> {
    let p = tau.prec();
    let w = p + GUARD;
    let re = tau.re.with_prec(w);
    let im = tau.im.with_prec(w);
    let outside_real_segment = !im.contains_zero() || re.abs().certainly_gt(&Interval::from_i64(2, w));
    if !outside_real_segment {
        return Err(HypError::NotLoxodromic);
    }
    let pure_imaginary = re.is_point() && re.lo().is_zero();
    // choose the sign of ±τ/2 with nonnegative real part, so |θ/2| ≤ π/2
    let half = if re.is_positive() || pure_imaginary {
        CBox::new(re, im).mul_pow2(-1)
    } else if re.is_negative() {
        CBox::new(re, im).mul_pow2(-1).neg()
    } else {
        return Err(HypError::Ambiguous("sign of Re τ"));
    };
    // cosh x = (|w − 1| + |w + 1|)/2 for w = cosh(x + iφ)
    let ch_m1 = half
        .add_i64(-1)
        .abs()?
        .add_iv(&half.add_i64(1).abs()?)
        .mul_pow2(-1)
        .add_i64(-1)
        .clamp_nonneg();
    let x = ch_m1.add_i64(1).acosh()?;
    if !x.is_positive() {
        return Err(HypError::Ambiguous("translation length"));
    }
    let phi = if pure_imaginary {
        pi(w).mul_pow2(-1)
    } else {
        let ch = ch_m1.add_i64(1);
        Interval::atan2(&half.im.mul_iv(&ch), &half.re.mul_iv(&x.sinh()?))?
    };
    let l = x.mul_pow2(1).rounded(p);
    let theta = phi.mul_pow2(1).rounded(p);
    ComplexLength::new(l, theta)
}

/// ω(l + iθ, D) = arcsinh(√((cosh D − cosh l)/(cosh l − cos θ))).
pub fn omega(len: &ComplexLength, d: &Interval) -> Result<Interval, HypError> {
    // D and l may be the same enclosure; only a D reaching below l is refused
    if d.lo() < len.l.lo() {
        return Err(domain("omega", "requires D ≥ l"));
    }
    let p = d.prec().max(len.l.prec());
    let w = p + GUARD;
    let l = len.l.with_prec(w);
    let dw = d.with_prec(w);
    let num = dw.cosh_m1()?.sub_iv(&l.cosh_m1()?).clamp_nonneg();
    let one_minus_cos = len.theta.with_prec(w).cos()?.neg_iv().add_i64(1).clamp_nonneg();
    let den = l.cosh_m1()?.add_iv(&one_minus_cos);
    if !den.is_positive() {
        return Err(domain("omega", "cosh l − cos θ not certainly positive"));
    }
    Ok(num.checked_div(&den)?.sqrt()?.asinh()?.rounded(p))
}

/// cosh√(4πl/√3) − 1 together with the square root itself.
fn zagier_terms(l: &Interval) -> Result<(Interval, Interval), HypError> {
    let w = l.prec();
    let s = pi(w).mul_iv(l).mul_i64(4).checked_div(&sqrt3(w))?.sqrt()?;
    Ok((s.cosh_m1()?, s))
}

/// cosh√(4πl/√3) − 1, the right-hand side of Zagier's inequality.
pub fn zagier_bound(l: &Interval) -> Result<Interval, HypError> {
    let p = l.prec();
    Ok(zagier_terms(&l.with_prec(p + GUARD))?.0.rounded(p))
}

#[derive(Clone, Debug)]
pub enum TubeRadius {
    Radius(Interval),
    /// The bound gives nothing: cosh√(4πl/√3) ≥ cosh μ.
    NoTube,
}

impl TubeRadius {
    pub fn radius(&self) -> Option<&Interval> {
        match self {
            TubeRadius::Radius(r) => Some(r),
            TubeRadius::NoTube => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            TubeRadius::Radius(r) => interval_json(r),
            TubeRadius::NoTube => json!("none"),
        }
    }
}

/// sinh²R = (cosh μ − cosh s)/(cosh s − 1) with s = √(4πl/√3).
pub fn tube_radius(l: &Interval, mu: &Interval) -> Result<TubeRadius, HypError> {
    if !l.is_positive() {
        return Err(domain("tube_radius", "requires l > 0"));
    }
    let p = l.prec().max(mu.prec());
    let w = p + GUARD;
    let (den, _) = zagier_terms(&l.with_prec(w))?;
    let num = mu.with_prec(w).cosh_m1()?.sub_iv(&den);
    if !num.lo().is_positive() && !num.hi().is_positive() {
        return Ok(TubeRadius::NoTube);
    }
    if !num.is_positive() {
        return Err(HypError::Ambiguous("tube_radius numerator sign"));
    }
    Ok(TubeRadius::Radius(num.checked_div(&den)?.sqrt()?.asinh()?.rounded(p)))
}

/// √3 (cosh μ − 1)/(2π).
pub fn asymptotic_constant(mu: &Interval) -> Result<Interval, HypError> {
    if !mu.is_positive() {
        return Err(domain("asymptotic_constant", "requires μ > 0"));
    }
    let p = mu.prec();
    let w = p + GUARD;
    let v = sqrt3(w).mul_iv(&mu.with_prec(w).cosh_m1()?).checked_div(&pi(w).mul_pow2(1))?;
    Ok(v.rounded(p))
}

/// Search cap; Zagier's lemma guarantees a solution well below it for the
/// lengths in use.
pub const ZAGIER_MAX_N: u64 = 1 << 20;

/// The least n ≥ 1 with cosh(nl) − cos(nθ) ≤ cosh√(4πl/√3) − 1.
pub fn zagier_n(l: &Interval, theta: &Interval) -> Result<u64, HypError> {
    let p0 = l.prec().max(theta.prec());
    let limit = pi(p0).mul_iv(&sqrt3(p0));
    if !l.is_positive() || !l.certainly_lt(&limit) {
        return Err(domain("zagier_n", "requires 0 < l < π√3"));
    }
    let mut p = p0 + GUARD;
    let mut bound = zagier_terms(&l.with_prec(p))?.0;
    for n in 1..=ZAGIER_MAX_N {
        loop {
            let k = n as i64;
            let v = l
                .with_prec(p)
                .mul_i64(k)
                .cosh_m1()?
                .add_iv(&theta.with_prec(p).mul_i64(k).cos()?.neg_iv().add_i64(1));
            if v.certainly_le(&bound) {
                return Ok(n);
            }
            if v.certainly_gt(&bound) {
                break;
            }
            if p >= MAX_PREC {
                return Err(HypError::Inconclusive { n });
            }
            p = (2 * p).min(MAX_PREC);
            bound = zagier_terms(&l.with_prec(p))?.0;
        }
    }
    Err(HypError::Inconclusive { n: ZAGIER_MAX_N })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigor::consts::log3;
    use crate::rigor::Dyadic;

    fn d(v: f64) -> Interval {
        Interval::from_f64(v, 128).unwrap()
    }

    fn r(n: i64, m: i64) -> Interval {
        Interval::from_ratio(n, m, 128)
    }

    fn within(x: &Interval, lo: f64, hi: f64) -> bool {
        x.lo().to_f64() >= lo && x.hi().to_f64() <= hi
    }

    #[test]
    fn real_trace() {
        let tau = CBox::real(Interval::one(128).cosh().unwrap().mul_pow2(1));
        let len = complex_length_from_trace(&tau).unwrap();
        assert!(len.l.contains(&Dyadic::from_i64(2)) && len.l.width().to_f64() < 1e-30);
        assert!(len.theta.contains(&Dyadic::zero()) && len.theta.width().to_f64() < 1e-30);
        let neg = complex_length_from_trace(&tau.neg()).unwrap();
        assert!(neg.l.overlaps(&len.l) && neg.theta.contains(&Dyadic::zero()));
    }

    #[test]
    fn rejects_elliptic_and_parabolic() {
        assert_eq!(complex_length_from_trace(&CBox::real(r(3, 2))).unwrap_err(), HypError::NotLoxodromic);
        assert!(complex_length_from_trace(&CBox::real(Interval::from_i64(2, 64))).is_err());
    }

    #[test]
    fn pure_imaginary_trace_has_theta_pi() {
        let len = complex_length_from_trace(&CBox::new(Interval::zero(128), Interval::one(128))).unwrap();
        assert!(len.theta.contains(pi(128).lo()));
    }

    #[test]
    fn roundtrip() {
        let tau = CBox::new(d(1.38068), d(0.05457));
        let len = complex_length_from_trace(&tau).unwrap();
        assert!(within(&len.l, 0.0753, 0.0754));
        assert!(within(&len.theta_over_pi(), 0.5153, 0.5154));
        let back = len.trace().unwrap();
        assert!(back.overlaps(&tau));
    }

    #[test]
    fn omega_at_d_equal_l() {
        let len = ComplexLength::new(r(1, 5), r(1, 1)).unwrap();
        let v = omega(&len, &r(1, 5)).unwrap();
        assert!(v.contains(&Dyadic::zero()) && v.width().to_f64() < 1e-15);
        assert!(omega(&len, &r(1, 10)).is_err());
    }

    #[test]
    fn scaling_normalizes() {
        let len = ComplexLength::new(r(1, 10), pi(128).mul_i64(3).mul_pow2(-2)).unwrap();
        let t = len.scale(2).theta;
        // 3π/2 ≡ −π/2
        assert!(t.contains(pi(128).mul_pow2(-1).neg_iv().lo()) || t.overlaps(&pi(128).mul_pow2(-1).neg_iv()));
    }

    #[test]
    fn tube_radius_examples() {
        let mu = log3(128).div_i64(3).unwrap();
        let rad = tube_radius(&r(1, 100), &mu).unwrap();
        assert!(within(rad.radius().unwrap(), 0.82, 0.84));
        assert!(matches!(tube_radius(&r(1, 1), &mu).unwrap(), TubeRadius::NoTube));
        let l = r(1, 1_000_000);
        let rr = tube_radius(&l, &mu).unwrap().radius().unwrap().sinh().unwrap();
        assert!(within(&l.mul_iv(&rr.sqr()), 0.0186, 0.0188));
    }

    #[test]
    fn asymptotic_constants() {
        let mu = log3(128).div_i64(3).unwrap();
        assert!(within(&asymptotic_constant(&mu).unwrap(), 0.01869, 0.01870));
        assert!(within(&asymptotic_constant(&r(104, 1000)).unwrap(), 0.00149, 0.00150));
        assert!(asymptotic_constant(&r(1, 1000)).unwrap().hi().to_f64() < 1e-6);
    }

    #[test]
    fn zagier_examples() {
        let l = r(1, 10);
        assert_eq!(zagier_n(&l, &Interval::zero(128)).unwrap(), 1);
        assert_eq!(zagier_n(&l, &pi(128)).unwrap(), 2);
        assert_eq!(zagier_n(&l, &pi(128).mul_i64(2).div_i64(3).unwrap()).unwrap(), 3);
        assert!(within(&zagier_bound(&l).unwrap(), 0.385, 0.386));
        assert!(zagier_n(&Interval::from_i64(6, 64), &Interval::zero(64)).is_err());
    }
}
