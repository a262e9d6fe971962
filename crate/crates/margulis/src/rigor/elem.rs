//! Elementary functions over intervals.
//!
//! Each function is evaluated at the (exact, dyadic) endpoints at a raised
//! working precision with an explicit series remainder, then rounded
//! outward. Non-monotone functions add their interior extrema.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use super::consts;
use super::dyadic::Dyadic;
use super::interval::Interval;
use super::RigorError;

const GUARD: u32 = 24;
/// Largest accepted |x| (as a power of two) for exp/sin/cos arguments.
const MAX_ARG_MAG: i64 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElemFn {
    Exp,
    Expm1,
    Log,
    Log1p,
    Sqrt,
    Sinh,
    Cosh,
    Arcsinh,
    Arccosh,
    Sin,
    Cos,
    Atan,
}

impl ElemFn {
    pub const ALL: [ElemFn; 12] = [
        ElemFn::Exp,
        ElemFn::Expm1,
        ElemFn::Log,
        ElemFn::Log1p,
        ElemFn::Sqrt,
        ElemFn::Sinh,
        ElemFn::Cosh,
        ElemFn::Arcsinh,
        ElemFn::Arccosh,
        ElemFn::Sin,
        ElemFn::Cos,
        ElemFn::Atan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ElemFn::Exp => "exp",
            ElemFn::Expm1 => "expm1",
            ElemFn::Log => "log",
            ElemFn::Log1p => "log1p",
            ElemFn::Sqrt => "sqrt",
            ElemFn::Sinh => "sinh",
            ElemFn::Cosh => "cosh",
            ElemFn::Arcsinh => "arcsinh",
            ElemFn::Arccosh => "arccosh",
            ElemFn::Sin => "sin",
            ElemFn::Cos => "cos",
            ElemFn::Atan => "atan",
        }
    }

    pub fn from_name(name: &str) -> Option<ElemFn> {
        ElemFn::ALL.iter().copied().find(|f| f.name() == name)
    }
}

/// Enclosure of `f` over `x`.
pub fn interval_fn(f: ElemFn, x: &Interval) -> Result<Interval, RigorError> {
    match f {
        ElemFn::Exp => x.exp(),
        ElemFn::Expm1 => x.expm1(),
        ElemFn::Log => x.ln(),
        ElemFn::Log1p => x.ln1p(),
        ElemFn::Sqrt => x.sqrt(),
        ElemFn::Sinh => x.sinh(),
        ElemFn::Cosh => x.cosh(),
        ElemFn::Arcsinh => x.asinh(),
        ElemFn::Arccosh => x.acosh(),
        ElemFn::Sin => x.sin(),
        ElemFn::Cos => x.cos(),
        ElemFn::Atan => x.atan(),
    }
}

fn domain(func: &'static str, detail: impl Into<String>) -> RigorError {
    RigorError::Domain {
        func,
        detail: detail.into(),
    }
}

/// Stop once |term| is below 2^-wp relative to the running sum (or absolutely
/// when the sum may vanish).
fn negligible(term: &Interval, sum: &Interval, wp: u32) -> bool {
    let t = match term.mag_hi() {
        None => return true,
        Some(t) => t,
    };
    match sum.mag_lo() {
        Some(s) => t < s - wp as i64 - 4,
        None => t < -(wp as i64) - 4,
    }
}

fn widen(sum: &Interval, err: &Interval) -> Interval {
    let e = err.abs().hi().clone();
    let pm = Interval::new(e.neg(), e, sum.prec()).unwrap();
    sum.add_iv(&pm)
}

/// Σ_{k≥k0} r^k / k! for |r| ≤ 1/2, with the tail bounded by the last term.
fn exp_series(r: &Interval, wp: u32, k0: u32) -> Result<Interval, RigorError> {
    let mut term = Interval::one(wp);
    let mut sum = if k0 == 0 { Interval::one(wp) } else { Interval::zero(wp) };
    let mut k: i64 = 1;
    loop {
        term = term.mul_iv(r).div_i64(k)?;
        if k >= k0 as i64 {
            sum = sum.add_iv(&term);
        }
        if k >= k0 as i64 && negligible(&term, &sum, wp) {
            return Ok(widen(&sum, &term));
        }
        k += 1;
        if k > 100_000 {
            return Err(domain("exp", "series failed to converge"));
        }
    }
}

fn exp_point(x: &Dyadic, w: u32) -> Result<Interval, RigorError> {
    if x.is_zero() {
        return Ok(Interval::one(w));
    }
    let mag = x.mag().unwrap();
    if mag > MAX_ARG_MAG {
        return Err(RigorError::Overflow { func: "exp" });
    }
    let s = (mag + 9).max(0) as u32;
    let wp = w + s + 16;
    let r = Interval::point(x.mul_pow2(-(s as i64)), wp);
    let mut v = exp_series(&r, wp, 0)?;
    for _ in 0..s {
        v = v.sqr();
    }
    Ok(v)
}

fn expm1_point(x: &Dyadic, w: u32) -> Result<Interval, RigorError> {
    if x.is_zero() {
        return Ok(Interval::zero(w));
    }
    if x.mag().unwrap() < -4 {
        let wp = w + 16;
        exp_series(&Interval::point(x.clone(), wp), wp, 1)
    } else {
        Ok(exp_point(x, w + 8)?.add_i64(-1))
    }
}

fn ln_point(x: &Dyadic, w: u32) -> Result<Interval, RigorError> {
    if !x.is_positive() {
        return Err(domain("log", "argument must be positive"));
    }
    let wp = w + 16;
    let mut e = x.mag().unwrap();
    let mut m = x.mul_pow2(-e);
    if m.mul_pow2(1) > Dyadic::from_i64(3) {
        m = m.mul_pow2(-1);
        e += 1;
    }
    let log_m = if m == Dyadic::one() {
        Interval::zero(wp)
    } else {
        let num = Interval::point(m.sub(&Dyadic::one()), wp);
        let den = Interval::point(m.add(&Dyadic::one()), wp);
        let z = num.checked_div(&den)?;
        let z2 = z.sqr();
        let mut pow = z.clone();
        let mut sum = z.clone();
        let mut k: i64 = 1;
        loop {
            pow = pow.mul_iv(&z2);
            let t = pow.div_i64(2 * k + 1)?;
            sum = sum.add_iv(&t);
            if negligible(&t, &sum, wp) {
                // ratio of successive terms is below z^2 <= 1/25
                break widen(&sum, &t).mul_pow2(1);
            }
            k += 1;
        }
    };
    if e == 0 {
        Ok(log_m)
    } else {
        Ok(log_m.add_iv(&consts::ln2(wp).mul_i64(e)))
    }
}

fn ln1p_point(t: &Dyadic, w: u32) -> Result<Interval, RigorError> {
    let one_plus = Dyadic::one().add(t);
    if !one_plus.is_positive() {
        return Err(domain("log1p", "argument must exceed -1"));
    }
    ln_point(&one_plus, w)
}

/// ln(1 + t) over an interval t, evaluated at the endpoints.
fn ln1p_iv(t: &Interval, w: u32) -> Result<Interval, RigorError> {
    let lo = ln1p_point(t.lo(), w)?;
    let hi = if t.is_point() { lo.clone() } else { ln1p_point(t.hi(), w)? };
    Ok(Interval::from_sorted(lo.lo().clone(), hi.hi().clone(), w))
}

fn sinh_point(x: &Dyadic, w: u32) -> Result<Interval, RigorError> {
    if x.is_negative() {
        return Ok(sinh_point(&x.neg(), w)?.neg_iv());
    }
    let wp = w + 8;
    let e = expm1_point(x, wp)?;
    let inv = e.checked_div(&e.add_i64(1))?;
    Ok(e.add_iv(&inv).mul_pow2(-1))
}

fn cosh_m1_point(x: &Dyadic, w: u32) -> Result<Interval, RigorError> {
    let a = x.abs();
    let wp = w + 8;
    let e = expm1_point(&a, wp)?;
    e.sqr().checked_div(&e.add_i64(1).mul_pow2(1))
}

fn asinh_point(x: &Dyadic, w: u32) -> Result<Interval, RigorError> {
    if x.is_zero() {
        return Ok(Interval::zero(w));
    }
    if x.is_negative() {
        return Ok(asinh_point(&x.neg(), w)?.neg_iv());
    }
    let wp = w + 16;
    let xi = Interval::point(x.clone(), wp);
    let x2 = xi.sqr();
    let root = x2.add_i64(1).sqrt()?;
    let t = xi.add_iv(&x2.checked_div(&root.add_i64(1))?);
    ln1p_iv(&t, wp)
}

fn acosh_point(x: &Dyadic, w: u32) -> Result<Interval, RigorError> {
    let delta = x.sub(&Dyadic::one());
    if delta.is_negative() {
        return Err(domain("arccosh", "argument must be at least 1"));
    }
    if delta.is_zero() {
        return Ok(Interval::zero(w));
    }
    let wp = w + 16;
    let d = Interval::point(delta, wp);
    let t = d.add_iv(&d.mul_iv(&d.add_i64(2)).sqrt()?);
    ln1p_iv(&t, wp)
}

/// sin and cos of an interval with |r| ≤ 1, by Taylor series.
fn sincos_series(r: &Interval, wp: u32) -> Result<(Interval, Interval), RigorError> {
    let r2 = r.sqr();
    let mut s_term = r.clone();
    let mut s_sum = r.clone();
    let mut k: i64 = 1;
    let sin = loop {
        s_term = s_term.mul_iv(&r2).div_i64(2 * k * (2 * k + 1))?.neg_iv();
        s_sum = s_sum.add_iv(&s_term);
        if negligible(&s_term, &s_sum, wp) {
            break widen(&s_sum, &s_term);
        }
        k += 1;
    };
    let mut c_term = Interval::one(wp);
    let mut c_sum = Interval::one(wp);
    let mut k: i64 = 1;
    let cos = loop {
        c_term = c_term.mul_iv(&r2).div_i64((2 * k - 1) * (2 * k))?.neg_iv();
        c_sum = c_sum.add_iv(&c_term);
        if negligible(&c_term, &c_sum, wp) {
            break widen(&c_sum, &c_term);
        }
        k += 1;
    };
    Ok((sin, cos))
}

fn sincos_point(x: &Dyadic, w: u32) -> Result<(Interval, Interval), RigorError> {
    if x.is_zero() {
        return Ok((Interval::zero(w), Interval::one(w)));
    }
    let mag = x.mag().unwrap();
    if mag > MAX_ARG_MAG {
        return Err(RigorError::Overflow { func: "sin/cos" });
    }
    let kf = (x.to_f64() / FRAC_PI_2).round();
    let k = kf as i64;
    let mut extra: u32 = 0;
    loop {
        let wp = w + GUARD + mag.max(0) as u32 + extra;
        let half_pi = consts::pi(wp).mul_pow2(-1);
        let r = Interval::point(x.clone(), wp).sub_iv(&half_pi.mul_i64(k));
        let lost = match r.mag_lo() {
            Some(m) => (-m).max(0) as u32,
            None => extra + 64,
        };
        if lost > extra && extra < 8192 {
            extra = lost + 32;
            continue;
        }
        let (s, c) = sincos_series(&r, wp)?;
        let out = match k.rem_euclid(4) {
            0 => (s, c),
            1 => (c, s.neg_iv()),
            2 => (s.neg_iv(), c.neg_iv()),
            _ => (c.neg_iv(), s),
        };
        return Ok(out);
    }
}

fn atan_small(x: &Interval, wp: u32) -> Result<Interval, RigorError> {
    // three argument halvings: tan(a/2) = tan a / (1 + sec a)
    let mut v = x.clone();
    for _ in 0..3 {
        let root = v.sqr().add_i64(1).sqrt()?;
        v = v.checked_div(&root.add_i64(1))?;
    }
    let v2 = v.sqr();
    let mut pow = v.clone();
    let mut sum = v.clone();
    let mut k: i64 = 1;
    let s = loop {
        pow = pow.mul_iv(&v2).neg_iv();
        let t = pow.div_i64(2 * k + 1)?;
        sum = sum.add_iv(&t);
        if negligible(&t, &sum, wp) {
            break widen(&sum, &t);
        }
        k += 1;
    };
    Ok(s.mul_pow2(3))
}

fn atan_point(x: &Dyadic, w: u32) -> Result<Interval, RigorError> {
    if x.is_zero() {
        return Ok(Interval::zero(w));
    }
    if x.is_negative() {
        return Ok(atan_point(&x.neg(), w)?.neg_iv());
    }
    let wp = w + GUARD;
    let xi = Interval::point(x.clone(), wp);
    if x > &Dyadic::one() {
        let inv = xi.recip()?;
        let half_pi = consts::pi(wp).mul_pow2(-1);
        Ok(half_pi.sub_iv(&atan_small(&inv, wp)?))
    } else {
        atan_small(&xi, wp)
    }
}

/// Apply an increasing point evaluator at both endpoints.
fn monotone_up(
    x: &Interval,
    w: u32,
    f: impl Fn(&Dyadic, u32) -> Result<Interval, RigorError>,
) -> Result<Interval, RigorError> {
    let lo = f(x.lo(), w)?;
    let hi = if x.is_point() { lo.clone() } else { f(x.hi(), w)? };
    Ok(Interval::from_sorted(lo.lo().clone(), hi.hi().clone(), w).rounded(x.prec()))
}

fn working(x: &Interval) -> u32 {
    x.prec() + GUARD
}

impl Interval {
    pub fn exp(&self) -> Result<Interval, RigorError> {
        monotone_up(self, working(self), exp_point)
    }

    pub fn expm1(&self) -> Result<Interval, RigorError> {
        monotone_up(self, working(self), expm1_point)
    }

    pub fn ln(&self) -> Result<Interval, RigorError> {
        if !self.is_positive() {
            return Err(domain("log", format!("interval {self:?} is not positive")));
        }
        monotone_up(self, working(self), ln_point)
    }

    pub fn ln1p(&self) -> Result<Interval, RigorError> {
        if self.lo() <= &Dyadic::from_i64(-1) {
            return Err(domain("log1p", format!("interval {self:?} reaches -1")));
        }
        monotone_up(self, working(self), ln1p_point)
    }

    pub fn sqrt(&self) -> Result<Interval, RigorError> {
        use super::dyadic::Round;
        if self.lo().is_negative() {
            return Err(domain("sqrt", format!("interval {self:?} has negative part")));
        }
        let p = self.prec();
        let lo = self.lo().sqrt_round(p, Round::Down).unwrap();
        let hi = self.hi().sqrt_round(p, Round::Up).unwrap();
        Ok(Interval::from_sorted(lo, hi, p))
    }

    pub fn sinh(&self) -> Result<Interval, RigorError> {
        monotone_up(self, working(self), sinh_point)
    }

    /// cosh(x) - 1, accurate near zero.
    pub fn cosh_m1(&self) -> Result<Interval, RigorError> {
        let w = working(self);
        let p = self.prec();
        if self.is_nonneg() {
            monotone_up(self, w, cosh_m1_point)
        } else if !self.hi().is_positive() {
            monotone_up(&self.neg_iv(), w, cosh_m1_point)
        } else {
            let a = cosh_m1_point(self.lo(), w)?;
            let b = cosh_m1_point(self.hi(), w)?;
            let hi = std::cmp::max(a.hi(), b.hi()).clone();
            Ok(Interval::from_sorted(Dyadic::zero(), hi, w).rounded(p))
        }
    }

    pub fn cosh(&self) -> Result<Interval, RigorError> {
        Ok(self.cosh_m1()?.add_i64(1).rounded(self.prec()))
    }

    pub fn asinh(&self) -> Result<Interval, RigorError> {
        monotone_up(self, working(self), asinh_point)
    }

    pub fn acosh(&self) -> Result<Interval, RigorError> {
        if self.lo() < &Dyadic::one() {
            return Err(domain("arccosh", format!("interval {self:?} extends below 1")));
        }
        monotone_up(self, working(self), acosh_point)
    }

    pub fn atan(&self) -> Result<Interval, RigorError> {
        monotone_up(self, working(self), atan_point)
    }

    pub fn sin(&self) -> Result<Interval, RigorError> {
        self.trig(false)
    }

    pub fn cos(&self) -> Result<Interval, RigorError> {
        self.trig(true)
    }

    fn trig(&self, cosine: bool) -> Result<Interval, RigorError> {
        let w = working(self);
        let p = self.prec();
        let pick = |x: &Dyadic| -> Result<Interval, RigorError> {
            let (s, c) = sincos_point(x, w)?;
            Ok(if cosine { c } else { s })
        };
        let unit = Interval::from_sorted(Dyadic::from_i64(-1), Dyadic::one(), p);
        if self.is_point() {
            let v = pick(self.lo())?;
            return Ok(clamp_unit(&v).rounded(p));
        }
        if self.width() > Dyadic::from_i64(7) {
            return Ok(unit);
        }
        let mut acc = pick(self.lo())?.hull(&pick(self.hi())?);
        // extrema of cos at jπ, of sin at (j + 1/2)π, with value (-1)^j
        let pi = consts::pi(w);
        let offset = if cosine { 0.0 } else { 0.5 };
        let j0 = (self.lo().to_f64() / PI - offset).floor() as i64 - 1;
        let j1 = (self.hi().to_f64() / PI - offset).ceil() as i64 + 1;
        for j in j0..=j1 {
            let at = if cosine {
                pi.mul_i64(j)
            } else {
                pi.mul_i64(2 * j + 1).mul_pow2(-1)
            };
            if at.hi() < self.lo() || at.lo() > self.hi() {
                continue;
            }
            let v = if j.rem_euclid(2) == 0 { 1 } else { -1 };
            acc = acc.hull(&Interval::from_i64(v, w));
        }
        Ok(clamp_unit(&acc).rounded(p))
    }

    /// Argument of (x, y) in (-π, π]. The box must avoid the origin and may
    /// only touch the negative real axis at y = 0 exactly.
    pub fn atan2(y: &Interval, x: &Interval) -> Result<Interval, RigorError> {
        let p = x.prec().max(y.prec());
        let w = p + GUARD;
        let (xw, yw) = (x.with_prec(w), y.with_prec(w));
        let half_pi = consts::pi(w).mul_pow2(-1);
        let v = if x.is_positive() {
            yw.checked_div(&xw)?.atan()?
        } else if y.is_positive() {
            half_pi.sub_iv(&xw.checked_div(&yw)?.atan()?)
        } else if y.is_negative() {
            half_pi.neg_iv().sub_iv(&xw.checked_div(&yw)?.atan()?)
        } else if x.is_negative() && y.is_point() && y.lo().is_zero() {
            consts::pi(w)
        } else {
            return Err(domain("atan2", "box meets the origin or the branch cut"));
        };
        Ok(v.rounded(p))
    }
}

fn clamp_unit(v: &Interval) -> Interval {
    v.clamp_to(&Dyadic::from_i64(-1), &Dyadic::one())
}
