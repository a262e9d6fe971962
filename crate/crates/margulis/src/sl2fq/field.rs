//! Finite fields F_{p^n} with p^n ≤ 81, by lookup tables.

use serde::Serialize;
use std::fmt;

use super::Sl2Error;

pub const MAX_FIELD_SIZE: u32 = 81;

/// An element of a small finite field, stored as its index Σ rep[i]·p^i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FqElement(pub u8);

impl FqElement {
    pub const ZERO: FqElement = FqElement(0);
    pub const ONE: FqElement = FqElement(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone)]
pub struct Field {
    p: u32,
    n: u32,
    q: u32,
    /// Monic modulus, low degree first, leading 1 included.
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{} (modulus {})", self.q, self.modulus_string())
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

/// (p, n) with q = p^n, or None when q is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|k| q.is_multiple_of(*k))?;
    let (mut m, mut n) = (q, 0);
    while m % p == 0 {
        m /= p;
        n += 1;
    }
    (m == 1).then_some((p, n))
}

fn digits(mut x: u32, p: u32, n: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of a mod the monic polynomial m, coefficients low degree first.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        let shift = r.len() - dm;
        for (i, &c) in m[..dm].iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - c) * lead) % p;
        }
    }
    r.resize(dm, 0);
    r
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let n = m.len() as u32 - 1;
    // any factorisation has a monic factor of degree ≤ n/2
    for d in 1..=n / 2 {
        for low in 0..p.pow(d) {
            let mut f = digits(low, p, d);
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    pub fn new(p: u32, n: u32) -> Result<Field, Sl2Error> {
        if !is_prime(p) {
            return Err(Sl2Error::NotPrime(p));
        }
        if !(1..=4).contains(&n) || p.checked_pow(n).is_none_or(|q| q > MAX_FIELD_SIZE) {
            return Err(Sl2Error::FieldSize { p, n });
        }
        let q = p.pow(n);
        // lowest monic irreducible, comparing coefficients from X^{n-1} down
        let modulus = (0..q)
            .map(|k| {
                let mut m = digits(k, p, n);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("irreducible polynomials exist in every degree");
        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for x in 0..q {
            let dx = digits(x, p, n);
            for y in 0..q {
                let dy = digits(y, p, n);
                let s: Vec<u32> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                let mut prod = vec![0u32; 2 * n as usize - 1];
                for (i, a) in dx.iter().enumerate() {
                    for (j, b) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                let idx = (x * q + y) as usize;
                add[idx] = undigits(&s, p) as u8;
                mul[idx] = undigits(&poly_rem(&prod, &modulus, p), p) as u8;
            }
        }
        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for x in 0..qs {
            for y in 0..qs {
                if add[x * qs + y] == 0 {
                    neg[x] = y as u8;
                }
                if mul[x * qs + y] == 1 {
                    inv[x] = y as u8;
                }
            }
        }
        Ok(Field { p, n, q, modulus, add, mul, neg, inv })
    }

    pub fn from_order(q: u32) -> Result<Field, Sl2Error> {
        let (p, n) = prime_power(q).ok_or(Sl2Error::NotPrimePower(q))?;
        Field::new(p, n)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (k, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && k > 0 { String::new() } else { c.to_string() };
            terms.push(match k {
                0 => coef,
                1 => format!("{coef}X"),
                _ => format!("{coef}X^{k}"),
            });
        }
        terms.join("+")
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElement> {
        (0..self.q as u8).map(FqElement)
    }

    /// Coefficients over Z_p, low degree first.
    pub fn rep(&self, x: FqElement) -> Vec<u32> {
        digits(x.0 as u32, self.p, self.n)
    }

    pub fn from_rep(&self, rep: &[u32]) -> Option<FqElement> {
        (rep.len() == self.n as usize && rep.iter().all(|&d| d < self.p)).then(|| FqElement(undigits(rep, self.p) as u8))
    }

    /// The image of an integer under Z → F_p ⊆ F_q.
    pub fn from_int(&self, k: i64) -> FqElement {
        FqElement(k.rem_euclid(self.p as i64) as u8)
    }

    pub fn add(&self, x: FqElement, y: FqElement) -> FqElement {
        FqElement(self.add[x.index() * self.q as usize + y.index()])
    }

    pub fn sub(&self, x: FqElement, y: FqElement) -> FqElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FqElement, y: FqElement) -> FqElement {
        FqElement(self.mul[x.index() * self.q as usize + y.index()])
    }

    pub fn neg(&self, x: FqElement) -> FqElement {
        FqElement(self.neg[x.index()])
    }

    pub fn inv(&self, x: FqElement) -> Option<FqElement> {
        (x.0 != 0).then(|| FqElement(self.inv[x.index()]))
    }

    pub fn sqr(&self, x: FqElement) -> FqElement {
        self.mul(x, x)
    }
}
