//! Displacement bounds: Φ, the oak and acorn bounds, the two-isometry
//! inequality and the trace ellipse.

use super::{domain, HypError};
use crate::rigor::{CBox, Interval};

const GUARD: u32 = 32;

fn positive(x: &Interval, func: &'static str, what: &str) -> Result<(), HypError> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(domain(func, &format!("requires {what} > 0")))
    }
}

/// The two branches 2 arccosh((1+T/2) sinh²μ + cosh h) and
/// arccosh(cosh μ cosh(μ−h)) + 2μ.
pub fn phi_branches(t: &Interval, mu: &Interval, h: &Interval) -> Result<(Interval, Interval), HypError> {
    positive(t, "phi", "T")?;
    positive(h, "phi", "h")?;
    if !t.certainly_lt(&Interval::from_i64(2, t.prec())) {
        return Err(domain("phi", "requires T < 2"));
    }
    if !h.certainly_lt(mu) {
        return Err(domain("phi", "requires h < μ"));
    }
    let p = t.prec().max(mu.prec()).max(h.prec());
    let w = p + GUARD;
    let (t, mu, h) = (t.with_prec(w), mu.with_prec(w), h.with_prec(w));
    let coef = t.mul_pow2(-1).add_i64(1);
    let first = coef
        .mul_iv(&mu.sinh()?.sqr())
        .add_iv(&h.cosh()?)
        .acosh()?
        .mul_pow2(1);
    let second = mu
        .cosh()?
        .mul_iv(&mu.sub_iv(&h).cosh()?)
        .max_iv(&Interval::one(w))
        .acosh()?
        .add_iv(&mu.mul_pow2(1));
    Ok((first.rounded(p), second.rounded(p)))
}

/// Φ(T, μ, h), the larger of the two branches.
pub fn phi(t: &Interval, mu: &Interval, h: &Interval) -> Result<Interval, HypError> {
    let (a, b) = phi_branches(t, mu, h)?;
    Ok(a.max_iv(&b))
}

/// Φ(T, μ, h) + (n − 4)μ.
pub fn oak_bound(t: &Interval, mu: &Interval, h: &Interval, n: u32) -> Result<Interval, HypError> {
    if n < 4 {
        return Err(domain("oak_bound", "requires n ≥ 4"));
    }
    Ok(phi(t, mu, h)?.add_iv(&mu.mul_i64(n as i64 - 4)))
}

/// arccosh(cosh²μ + T sinh²μ) + (n − 2)μ.
pub fn acorn_bound(t: &Interval, mu: &Interval, n: u32) -> Result<Interval, HypError> {
    let p = t.prec().max(mu.prec());
    if !t.certainly_ge(&Interval::from_i64(-1, p)) || !t.certainly_le(&Interval::one(p)) {
        return Err(domain("acorn_bound", "requires T ∈ [−1, 1]"));
    }
    positive(mu, "acorn_bound", "μ")?;
    if n < 2 {
        return Err(domain("acorn_bound", "requires n ≥ 2"));
    }
    let w = p + GUARD;
    let (t, mu) = (t.with_prec(w), mu.with_prec(w));
    // cosh²μ + T sinh²μ = 1 + (1 + T) sinh²μ ≥ 1
    let arg = t.add_i64(1).mul_iv(&mu.sinh()?.sqr()).clamp_nonneg().add_i64(1);
    Ok(arg.acosh()?.add_iv(&mu.mul_i64(n as i64 - 2)).rounded(p))
}

/// 1/(1 + e^{d₁}) + 1/(1 + e^{d₂}).
pub fn margulis_pair_value(d1: &Interval, d2: &Interval) -> Result<Interval, HypError> {
    let p = d1.prec().max(d2.prec());
    let w = p + GUARD;
    let term = |d: &Interval| -> Result<Interval, HypError> { Ok(d.with_prec(w).exp()?.add_i64(1).recip()?) };
    Ok(term(d1)?.add_iv(&term(d2)?).rounded(p))
}

/// (ξ/(2 cosh(μ/2)))² + (η/(2 sinh(μ/2)))² − 1 for τ = ξ + iη.
pub fn trace_ellipse_margin(tau: &CBox, mu: &Interval) -> Result<Interval, HypError> {
    positive(mu, "trace_ellipse_margin", "μ")?;
    let p = tau.prec().max(mu.prec());
    let w = p + GUARD;
    let half = mu.with_prec(w).mul_pow2(-1);
    let a = tau.re.with_prec(w).checked_div(&half.cosh()?.mul_pow2(1))?;
    let b = tau.im.with_prec(w).checked_div(&half.sinh()?.mul_pow2(1))?;
    Ok(a.sqr().add_iv(&b.sqr()).add_i64(-1).rounded(p))
}
