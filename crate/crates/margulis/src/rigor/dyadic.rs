//! Exact binary floating values `mant * 2^exp` with directed rounding.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rounding direction for operations whose exact result does not fit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        }
    }
}

/// A dyadic rational. The mantissa is kept odd (or zero with `exp == 0`),
/// so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

/// floor(m / 2^k) or ceil(m / 2^k).
fn shift_right_round(m: &BigInt, k: u64, dir: Round) -> BigInt {
    if k == 0 {
        return m.clone();
    }
    let mag: &BigUint = m.magnitude();
    let q = mag >> k;
    let exact = mag.trailing_zeros().is_none_or(|tz| tz >= k);
    let q = BigInt::from_biguint(Sign::Plus, q);
    match (m.sign(), dir, exact) {
        (_, _, true) => {
            if m.is_negative() {
                -q
            } else {
                q
            }
        }
        (Sign::Minus, Round::Down, false) => -(q + 1u32),
        (Sign::Minus, Round::Up, false) => -q,
        (_, Round::Down, false) => q,
        (_, Round::Up, false) => q + 1u32,
    }
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Dyadic {
        if mant.is_zero() {
            return Dyadic::zero();
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        if tz == 0 {
            Dyadic { mant, exp }
        } else {
            Dyadic {
                mant: mant >> tz,
                exp: exp + tz as i64,
            }
        }
    }

    pub fn zero() -> Dyadic {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Dyadic {
        Dyadic {
            mant: BigInt::one(),
            exp: 0,
        }
    }

    pub fn from_i64(v: i64) -> Dyadic {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn from_bigint(v: &BigInt) -> Dyadic {
        Dyadic::new(v.clone(), 0)
    }

    /// Exact conversion; `None` for NaN and infinities.
    pub fn from_f64(v: f64) -> Option<Dyadic> {
        if !v.is_finite() {
            return None;
        }
        if v == 0.0 {
            return Some(Dyadic::zero());
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 0 { 1i64 } else { -1i64 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Some(Dyadic::new(BigInt::from(m) * sign, e))
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// Number of significant bits of the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// floor(log2 |x|); `None` for zero.
    pub fn mag(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.bits() as i64 - 1)
        }
    }

    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    /// Round to at most `prec` significant bits in direction `dir`.
    pub fn round(&self, prec: u32, dir: Round) -> Dyadic {
        let bits = self.bits();
        let prec = prec.max(2) as u64;
        if bits <= prec {
            return self.clone();
        }
        let k = bits - prec;
        Dyadic::new(shift_right_round(&self.mant, k, dir), self.exp + k as i64)
    }

    /// Directed sum. Operands far below the other's last place are folded into
    /// a one-ulp nudge instead of materialising a huge exact mantissa.
    pub fn add_round(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        if self.is_zero() {
            return other.round(prec, dir);
        }
        if other.is_zero() {
            return self.round(prec, dir);
        }
        let (big, small) = if self.mag() >= other.mag() {
            (self, other)
        } else {
            (other, self)
        };
        let gap = big.mag().unwrap() - small.mag().unwrap();
        if gap > prec as i64 + 8 {
            let r = big.round(prec, dir);
            let nudge_needed = match dir {
                Round::Down => small.is_negative(),
                Round::Up => small.is_positive(),
            };
            if !nudge_needed {
                return r;
            }
            let ulp_exp = r.mag().unwrap() - prec as i64 - 1;
            let ulp = Dyadic::new(BigInt::one(), ulp_exp);
            let nudged = match dir {
                Round::Down => r.sub(&ulp),
                Round::Up => r.add(&ulp),
            };
            return nudged.round(prec, dir);
        }
        self.add(other).round(prec, dir)
    }

    pub fn mul_round(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        self.mul(other).round(prec, dir)
    }

    /// Directed quotient; `None` when dividing by zero.
    pub fn div_round(&self, other: &Dyadic, prec: u32, dir: Round) -> Option<Dyadic> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Dyadic::zero());
        }
        let want = prec as i64 + 2;
        let s = (want + other.bits() as i64 - self.bits() as i64).max(0) as u64;
        let n = &self.mant << s;
        let (q, r) = n.div_mod_floor(&other.mant);
        let q = if dir == Round::Up && !r.is_zero() {
            q + 1
        } else {
            q
        };
        Some(Dyadic::new(q, self.exp - other.exp - s as i64).round(prec, dir))
    }

    /// Directed square root; `None` for negative input.
    pub fn sqrt_round(&self, prec: u32, dir: Round) -> Option<Dyadic> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Dyadic::zero());
        }
        let (mut m, mut e) = (self.mant.clone(), self.exp);
        if e.rem_euclid(2) != 0 {
            m <<= 1u32;
            e -= 1;
        }
        let need = 2 * prec as i64 + 4 - m.bits() as i64;
        let t = if need > 0 { (need + 1) / 2 } else { 0 };
        let n = m << (2 * t) as u64;
        let s = n.sqrt();
        let s = if dir == Round::Up && &s * &s != n {
            s + 1
        } else {
            s
        };
        Some(Dyadic::new(s, (e - 2 * t) / 2).round(prec, dir))
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), pow2((-self.exp) as u64))
        }
    }

    /// Directed conversion of a rational.
    pub fn from_rational(q: &BigRational, prec: u32, dir: Round) -> Dyadic {
        let n = Dyadic::from_bigint(q.numer());
        let d = Dyadic::from_bigint(q.denom());
        n.div_round(&d, prec, dir).expect("rational denominator is nonzero")
    }

    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        // compare mant * 2^exp * den with num
        let den = q.denom();
        let num = q.numer();
        if self.exp >= 0 {
            ((&self.mant << self.exp as u64) * den).cmp(num)
        } else {
            (&self.mant * den).cmp(&(num << (-self.exp) as u64))
        }
    }

    pub fn floor_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            shift_right_round(&self.mant, (-self.exp) as u64, Round::Down)
        }
    }

    pub fn ceil_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            shift_right_round(&self.mant, (-self.exp) as u64, Round::Up)
        }
    }

    /// Nearest f64 (for diagnostics and search heuristics only).
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits();
        let (m, e) = if bits > 60 {
            let k = bits - 60;
            (&self.mant >> k, self.exp + k as i64)
        } else {
            (self.mant.clone(), self.exp)
        };
        let m = m.to_f64().unwrap_or(f64::NAN);
        let e = e.clamp(-4000, 4000) as i32;
        m * 2f64.powi(e.clamp(-1000, 1000)) * 2f64.powi(e - e.clamp(-1000, 1000))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let (ma, mb) = (self.mag().unwrap(), other.mag().unwrap());
        if ma != mb {
            let by_mag = ma.cmp(&mb);
            return if sa > 0 { by_mag } else { by_mag.reverse() };
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{} (~{:e})", self.mant, self.exp, self.to_f64())
    }
}
