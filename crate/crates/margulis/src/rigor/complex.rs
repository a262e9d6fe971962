//! Rectangular complex enclosures.

use std::fmt;

use super::interval::Interval;
use super::RigorError;

#[derive(Clone, PartialEq, Eq)]
pub struct CBox {
    pub re: Interval,
    pub im: Interval,
}

impl CBox {
    pub fn new(re: Interval, im: Interval) -> CBox {
        CBox { re, im }
    }

    pub fn real(re: Interval) -> CBox {
        let p = re.prec();
        CBox { re, im: Interval::zero(p) }
    }

    pub fn from_i64(v: i64, prec: u32) -> CBox {
        CBox::real(Interval::from_i64(v, prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn add(&self, o: &CBox) -> CBox {
        CBox::new(self.re.add_iv(&o.re), self.im.add_iv(&o.im))
    }

    pub fn sub(&self, o: &CBox) -> CBox {
        CBox::new(self.re.sub_iv(&o.re), self.im.sub_iv(&o.im))
    }

    pub fn neg(&self) -> CBox {
        CBox::new(self.re.neg_iv(), self.im.neg_iv())
    }

    pub fn conj(&self) -> CBox {
        CBox::new(self.re.clone(), self.im.neg_iv())
    }

    pub fn add_i64(&self, k: i64) -> CBox {
        CBox::new(self.re.add_i64(k), self.im.clone())
    }

    pub fn mul(&self, o: &CBox) -> CBox {
        let re = self.re.mul_iv(&o.re).sub_iv(&self.im.mul_iv(&o.im));
        let im = self.re.mul_iv(&o.im).add_iv(&self.im.mul_iv(&o.re));
        CBox::new(re, im)
    }

    pub fn scale(&self, k: &Interval) -> CBox {
        CBox::new(self.re.mul_iv(k), self.im.mul_iv(k))
    }

    pub fn mul_pow2(&self, k: i64) -> CBox {
        CBox::new(self.re.mul_pow2(k), self.im.mul_pow2(k))
    }

    pub fn sqr(&self) -> CBox {
        let re = self.re.sqr().sub_iv(&self.im.sqr());
        let im = self.re.mul_iv(&self.im).mul_pow2(1);
        CBox::new(re, im)
    }

    pub fn powi(&self, n: u32) -> CBox {
        let mut acc = CBox::from_i64(1, self.prec());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.sqr();
            n >>= 1;
        }
        acc
    }

    /// |z|^2 as a real enclosure.
    pub fn norm_sqr(&self) -> Interval {
        self.re.sqr().add_iv(&self.im.sqr())
    }

    pub fn abs(&self) -> Result<Interval, RigorError> {
        self.norm_sqr().sqrt()
    }

    pub fn div(&self, o: &CBox) -> Result<CBox, RigorError> {
        let d = o.norm_sqr();
        let num = self.mul(&o.conj());
        Ok(CBox::new(num.re.checked_div(&d)?, num.im.checked_div(&d)?))
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn overlaps(&self, o: &CBox) -> bool {
        self.re.overlaps(&o.re) && self.im.overlaps(&o.im)
    }

    /// Principal argument in (-π, π].
    pub fn arg(&self) -> Result<Interval, RigorError> {
        Interval::atan2(&self.im, &self.re)
    }
}

impl fmt::Debug for CBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + i{:?}", self.re, self.im)
    }
}

impl fmt::Display for CBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + i{}", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: i64, b: i64) -> CBox {
        CBox::new(Interval::from_i64(a, 64), Interval::from_i64(b, 64))
    }

    #[test]
    fn ring_operations_on_gaussian_integers() {
        let z = c(2, 3).mul(&c(1, -1));
        assert_eq!(z, c(5, 1));
        assert_eq!(c(1, 1).powi(4), c(-4, 0));
        let q = c(5, 1).div(&c(1, -1)).unwrap();
        assert!(q.re.contains(&crate::rigor::Dyadic::from_i64(2)));
        assert!(q.im.contains(&crate::rigor::Dyadic::from_i64(3)));
    }

    #[test]
    fn modulus_and_argument() {
        let z = c(3, 4);
        assert!(z.abs().unwrap().contains(&crate::rigor::Dyadic::from_i64(5)));
        let a = c(0, 1).arg().unwrap();
        assert!((a.mid_f64() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!(c(0, 0).div(&c(0, 0)).is_err());
    }
}
