//! 2×2 matrices of determinant one over a small finite field.

use serde::Serialize;
use std::fmt;

use super::field::{Field, FqElement};
use super::Sl2Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SL2Matrix {
    pub a: FqElement,
    pub b: FqElement,
    pub c: FqElement,
    pub d: FqElement,
}

impl fmt::Display for SL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl SL2Matrix {
    pub fn new(k: &Field, a: FqElement, b: FqElement, c: FqElement, d: FqElement) -> Result<SL2Matrix, Sl2Error> {
        let m = SL2Matrix { a, b, c, d };
        if m.det(k) != FqElement::ONE {
            return Err(Sl2Error::NotSpecial(m.to_string()));
        }
        Ok(m)
    }

    pub fn from_ints(k: &Field, e: [i64; 4]) -> Result<SL2Matrix, Sl2Error> {
        SL2Matrix::new(k, k.from_int(e[0]), k.from_int(e[1]), k.from_int(e[2]), k.from_int(e[3]))
    }

    pub fn identity() -> SL2Matrix {
        SL2Matrix { a: FqElement::ONE, b: FqElement::ZERO, c: FqElement::ZERO, d: FqElement::ONE }
    }

    pub fn entries(&self) -> [FqElement; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self, k: &Field) -> FqElement {
        k.sub(k.mul(self.a, self.d), k.mul(self.b, self.c))
    }

    pub fn trace(&self, k: &Field) -> FqElement {
        k.add(self.a, self.d)
    }

    pub fn mul(&self, k: &Field, o: &SL2Matrix) -> SL2Matrix {
        SL2Matrix {
            a: k.add(k.mul(self.a, o.a), k.mul(self.b, o.c)),
            b: k.add(k.mul(self.a, o.b), k.mul(self.b, o.d)),
            c: k.add(k.mul(self.c, o.a), k.mul(self.d, o.c)),
            d: k.add(k.mul(self.c, o.b), k.mul(self.d, o.d)),
        }
    }

    pub fn neg(&self, k: &Field) -> SL2Matrix {
        SL2Matrix { a: k.neg(self.a), b: k.neg(self.b), c: k.neg(self.c), d: k.neg(self.d) }
    }

    /// The inverse [[d, −b], [−c, a]].
    pub fn inv(&self, k: &Field) -> SL2Matrix {
        SL2Matrix { a: self.d, b: k.neg(self.b), c: k.neg(self.c), d: self.a }
    }

    pub fn is_identity(&self) -> bool {
        *self == SL2Matrix::identity()
    }

    /// Representative of the coset {M, −M}: the first nonzero entry in the
    /// order a, b, c, d is made to have the smaller index of {x, −x}.
    pub fn psl2_canonical(&self, k: &Field) -> SL2Matrix {
        let lead = self.entries().into_iter().find(|x| *x != FqElement::ZERO).expect("det 1 matrix is nonzero");
        if k.neg(lead) < lead {
            self.neg(k)
        } else {
            *self
        }
    }
}

/// Least m ≥ 1 with M^m = id.
pub fn element_order(k: &Field, m: &SL2Matrix) -> u64 {
    let cap = sl2_order(k.q());
    let mut x = *m;
    let mut e = 1;
    while !x.is_identity() {
        x = x.mul(k, m);
        e += 1;
        assert!(e <= cap, "order exceeds group order");
    }
    e
}

pub fn sl2_order(q: u32) -> u64 {
    let q = q as u64;
    q * q * q - q
}

/// Every element of SL2(F_q), in lexicographic order of (a, b, c, d).
pub fn sl2_elements(k: &Field) -> Vec<SL2Matrix> {
    let mut out = Vec::with_capacity(sl2_order(k.q()) as usize);
    for a in k.elements() {
        for b in k.elements() {
            match k.inv(a) {
                Some(ai) => {
                    for c in k.elements() {
                        let d = k.mul(k.add(FqElement::ONE, k.mul(b, c)), ai);
                        out.push(SL2Matrix { a, b, c, d });
                    }
                }
                None => {
                    if let Some(bi) = k.inv(b) {
                        let c = k.neg(bi);
                        for d in k.elements() {
                            out.push(SL2Matrix { a, b, c, d });
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// M² − tM + id = 0 for every M in SL2(F_q).
pub fn cayley_hamilton_holds(k: &Field, elements: &[SL2Matrix]) -> bool {
    elements.iter().all(|m| {
        let t = m.trace(k);
        let m2 = m.mul(k, m);
        let lhs = [
            k.add(k.sub(m2.a, k.mul(t, m.a)), FqElement::ONE),
            k.sub(m2.b, k.mul(t, m.b)),
            k.sub(m2.c, k.mul(t, m.c)),
            k.add(k.sub(m2.d, k.mul(t, m.d)), FqElement::ONE),
        ];
        lhs.iter().all(|x| *x == FqElement::ZERO)
    })
}
