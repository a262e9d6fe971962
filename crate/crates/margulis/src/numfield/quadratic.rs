//! Units of imaginary quadratic rings of integers.

use num_rational::BigRational;
use serde::Serialize;

use super::NumfieldError;
use crate::rigor::Interval;

/// The unit (a + b√−d)/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuadUnit {
    pub d: u64,
    pub a: i64,
    pub b: i64,
}

impl QuadUnit {
    pub fn re(&self) -> BigRational {
        BigRational::new(self.a.into(), 2.into())
    }

    /// Im² = d·b²/4, exactly.
    pub fn im_sq(&self) -> BigRational {
        BigRational::new((self.d as i64 * self.b * self.b).into(), 4.into())
    }

    pub fn is_real(&self) -> bool {
        self.b == 0
    }

    pub fn im_abs(&self, prec: u32) -> Interval {
        Interval::from_rational(&self.im_sq(), prec + 8)
            .sqrt()
            .expect("nonnegative")
            .rounded(prec)
    }

    /// |Im| ≥ 1/2, decided exactly.
    pub fn im_at_least_half(&self) -> bool {
        self.im_sq() >= BigRational::new(1.into(), 4.into())
    }
}

pub fn is_squarefree(n: u64) -> bool {
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    n >= 1
}

/// Units of the ring of integers of Q(√−d), found by scanning the norm
/// equation (a² + d b²)/4 = 1.
pub fn imag_quadratic_unit_facts(d: u64) -> Result<Vec<QuadUnit>, NumfieldError> {
    if !is_squarefree(d) {
        return Err(NumfieldError::NotSquarefree(d));
    }
    // O_K = Z[(1+√−d)/2] when −d ≡ 1 mod 4, else Z[√−d]
    let half_integral = d % 4 == 3;
    let mut out = Vec::new();
    for b in -2i64..=2 {
        for a in -2i64..=2 {
            let ok_parity = if half_integral { (a - b) % 2 == 0 } else { a % 2 == 0 && b % 2 == 0 };
            if ok_parity && (a * a) as i128 + d as i128 * (b * b) as i128 == 4 {
                out.push(QuadUnit { d, a, b });
            }
        }
    }
    Ok(out)
}
