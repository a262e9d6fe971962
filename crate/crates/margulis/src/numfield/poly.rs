//! Monic integer polynomials.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::NumfieldError;
use crate::rigor::{CBox, Interval};

/// Inputs longer than this are rejected by the parser.
pub const MAX_POLY_TEXT: usize = 4096;
/// Largest exponent accepted in the human-readable form.
pub const MAX_PARSED_DEGREE: usize = 64;

/// Monic polynomial with integer coefficients, highest degree first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Result<IntPolynomial, NumfieldError> {
        match coeffs.first() {
            Some(c) if c.is_one() => Ok(IntPolynomial { coeffs }),
            Some(_) => Err(NumfieldError::NotMonic),
            None => Err(NumfieldError::Parse("empty coefficient list".into())),
        }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<IntPolynomial, NumfieldError> {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// X³ + bX² + cX + d.
    pub fn cubic(b: i64, c: i64, d: i64) -> IntPolynomial {
        IntPolynomial::from_i64s(&[1, b, c, d]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, highest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of X^k.
    pub fn coeff(&self, k: usize) -> BigInt {
        if k > self.degree() {
            BigInt::zero()
        } else {
            self.coeffs[self.degree() - k].clone()
        }
    }

    /// (b, c, d) of a monic cubic.
    pub fn cubic_coeffs(&self) -> Result<(BigInt, BigInt, BigInt), NumfieldError> {
        if self.degree() != 3 {
            return Err(NumfieldError::Degree {
                expected: 3,
                got: self.degree(),
            });
        }
        Ok((self.coeffs[1].clone(), self.coeffs[2].clone(), self.coeffs[3].clone()))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let p = x.prec();
        self.coeffs
            .iter()
            .fold(Interval::zero(p), |acc, c| acc.mul_iv(x).add_iv(&Interval::from_bigint(c, p)))
    }

    pub fn eval_cbox(&self, z: &CBox) -> CBox {
        let p = z.prec();
        self.coeffs.iter().fold(CBox::from_i64(0, p), |acc, c| {
            acc.mul(z).add(&CBox::real(Interval::from_bigint(c, p)))
        })
    }

    /// f(X + c).
    pub fn shift(&self, c: &BigInt) -> IntPolynomial {
        // Horner in the variable (X + c)
        let mut out: Vec<BigInt> = vec![BigInt::zero()];
        for a in &self.coeffs {
            // out <- out * (X + c) + a, stored highest first
            let mut next = vec![BigInt::zero(); out.len() + 1];
            for (i, o) in out.iter().enumerate() {
                next[i] += o;
                next[i + 1] += o * c;
            }
            *next.last_mut().unwrap() += a;
            out = next;
        }
        out.remove(0);
        IntPolynomial { coeffs: out }
    }

    /// Even/odd split f(X) = P(X²) + X·Q(X²), returned as (P, Q) coefficient
    /// lists, highest degree first.
    pub fn even_odd_split(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let n = self.degree();
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if (n - i).is_multiple_of(2) {
                even.push(c.clone());
            } else {
                odd.push(c.clone());
            }
        }
        (even, odd)
    }

    /// Rational roots, which for a monic integer polynomial are integer
    /// divisors of the constant term (0 included when it vanishes).
    pub fn rational_roots(&self) -> Vec<BigInt> {
        let d = self.coeff(0);
        let mut roots = Vec::new();
        if d.is_zero() {
            roots.push(BigInt::zero());
            let reduced = IntPolynomial {
                coeffs: self.coeffs[..self.degree()].to_vec(),
            };
            if reduced.degree() > 0 {
                roots.extend(reduced.rational_roots().into_iter().filter(|r| !r.is_zero()));
            }
            roots.sort();
            return roots;
        }
        for k in divisors(&d.abs()) {
            for r in [k.clone(), -k] {
                if self.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
        roots.sort();
        roots
    }

    /// Irreducibility over Q for degree ≤ 3 by the rational root test.
    pub fn is_irreducible(&self) -> Result<bool, NumfieldError> {
        match self.degree() {
            0 => Ok(false),
            1 => Ok(true),
            2 | 3 => Ok(self.rational_roots().is_empty()),
            n => Err(NumfieldError::Degree { expected: 3, got: n }),
        }
    }

    /// Errors with the offending rational root unless irreducible.
    pub fn require_irreducible(&self) -> Result<(), NumfieldError> {
        if self.degree() > 3 {
            return Err(NumfieldError::Degree {
                expected: 3,
                got: self.degree(),
            });
        }
        if self.degree() >= 2 {
            if let Some(r) = self.rational_roots().into_iter().next() {
                return Err(NumfieldError::Reducible { root: r });
            }
        }
        Ok(())
    }

    /// Bracketed coefficient list, e.g. "[1, 3, -14, 11]".
    pub fn to_bracket(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // coefficient sizes here are small; trial division to sqrt(n)
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= *n {
        if n.is_multiple_of(&k) {
            out.push(k.clone());
            let q = n / &k;
            if q != k {
                out.push(q);
            }
        }
        k += 1;
    }
    out
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = n - i;
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            if !a.is_one() || k == 0 {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn parse_poly(s: &str) -> Result<IntPolynomial, NumfieldError> {
    s.parse()
}

impl FromStr for IntPolynomial {
    type Err = NumfieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.len() > MAX_POLY_TEXT {
            return Err(NumfieldError::Parse(format!("input longer than {MAX_POLY_TEXT} bytes")));
        }
        let t = s.trim();
        let coeffs = if let Some(inner) = t.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| NumfieldError::Parse("missing closing bracket".into()))?;
            parse_bracket(inner)?
        } else {
            parse_human(t)?
        };
        IntPolynomial::new(coeffs)
    }
}

fn parse_int(tok: &str) -> Result<BigInt, NumfieldError> {
    let tok = tok.trim().replace('\u{2212}', "-");
    let digits = tok.strip_prefix(['-', '+']).unwrap_or(&tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(NumfieldError::Parse(format!("bad integer {tok:?}")));
    }
    tok.parse().map_err(|_| NumfieldError::Parse(format!("bad integer {tok:?}")))
}

fn parse_bracket(inner: &str) -> Result<Vec<BigInt>, NumfieldError> {
    if inner.trim().is_empty() {
        return Err(NumfieldError::Parse("empty coefficient list".into()));
    }
    inner.split(',').map(parse_int).collect()
}

fn parse_human(t: &str) -> Result<Vec<BigInt>, NumfieldError> {
    let compact: String = t
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .map(|c| match c {
            '\u{2212}' => '-',
            'X' => 'x',
            _ => c,
        })
        .collect();
    if compact.is_empty() {
        return Err(NumfieldError::Parse("empty polynomial".into()));
    }
    // split into signed terms
    let mut terms: Vec<String> = Vec::new();
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
            terms.push(String::new());
        }
        if terms.is_empty() {
            terms.push(String::new());
        }
        terms.last_mut().unwrap().push(ch);
    }
    let mut by_degree: Vec<BigInt> = Vec::new();
    for term in &terms {
        let (coef, deg) = parse_term(term)?;
        if by_degree.len() <= deg {
            by_degree.resize(deg + 1, BigInt::zero());
        }
        by_degree[deg] += coef;
    }
    while by_degree.len() > 1 && by_degree.last().unwrap().is_zero() {
        by_degree.pop();
    }
    by_degree.reverse();
    Ok(by_degree)
}

fn parse_term(term: &str) -> Result<(BigInt, usize), NumfieldError> {
    let err = || NumfieldError::Parse(format!("bad term {term:?}"));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-1, &term[1..]),
        Some(b'+') => (1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(err());
    }
    let (coef_txt, var) = match body.find('x') {
        Some(i) => (&body[..i], Some(&body[i + 1..])),
        None => (body, None),
    };
    let coef = if coef_txt.is_empty() {
        if var.is_none() {
            return Err(err());
        }
        BigInt::one()
    } else {
        parse_int(coef_txt)?
    };
    let deg = match var {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let e = rest.strip_prefix('^').ok_or_else(err)?;
            if e.is_empty() || e.len() > 3 || !e.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let e: usize = e.parse().map_err(|_| err())?;
            if e > MAX_PARSED_DEGREE {
                return Err(NumfieldError::Parse(format!("degree {e} exceeds {MAX_PARSED_DEGREE}")));
            }
            e
        }
    };
    Ok((coef * sign, deg))
}
