//! Bounded-height search for non-nifty algebraic integers.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::nifty::{classify_nifty, NiftyVerdict, Verdict};
use super::poly::IntPolynomial;
use super::NumfieldError;

/// Every monic irreducible polynomial of the given degree with coefficients
/// in [−height, height] whose roots are not nifty, in lexicographic order of
/// the coefficient vector.
pub fn enumerate_nonnifty(degree: usize, height: i64) -> Result<Vec<(IntPolynomial, NiftyVerdict)>, NumfieldError> {
    if !(2..=3).contains(&degree) {
        return Err(NumfieldError::Degree { expected: 3, got: degree });
    }
    if height < 0 {
        return Ok(Vec::new());
    }
    let rest = degree - 1;
    let chunks: Vec<Vec<(IntPolynomial, NiftyVerdict)>> = (-height..=height)
        .into_par_iter()
        .map(|lead| {
            let mut out = Vec::new();
            let mut tail = vec![-height; rest];
            loop {
                let mut coeffs = vec![BigInt::from(1), BigInt::from(lead)];
                coeffs.extend(tail.iter().map(|&c| BigInt::from(c)));
                let f = IntPolynomial::new(coeffs).expect("monic by construction");
                if let Ok(v) = classify_nifty(&f) {
                    if v.verdict == Verdict::NonNifty {
                        out.push((f, v));
                    }
                }
                // odometer over the remaining coefficients
                let mut i = rest;
                loop {
                    if i == 0 {
                        return out;
                    }
                    i -= 1;
                    if tail[i] < height {
                        tail[i] += 1;
                        break;
                    }
                    tail[i] = -height;
                }
            }
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c).unwrap()
    }

    #[test]
    fn quadratic_height_one() {
        let found: Vec<IntPolynomial> = enumerate_nonnifty(2, 1).unwrap().into_iter().map(|x| x.0).collect();
        assert!(found.contains(&p(&[1, 1, 1])));
        assert!(!found.contains(&p(&[1, 0, 1])));
        assert!(found.contains(&p(&[1, -1, 1])));
        let mut sorted = found.clone();
        sorted.sort_by_key(|f| f.coeffs().to_vec());
        assert_eq!(sorted, found);
    }

    #[test]
    fn cubic_height_zero_is_empty() {
        assert!(enumerate_nonnifty(3, 0).unwrap().is_empty());
    }

    #[test]
    fn rejects_other_degrees() {
        assert!(enumerate_nonnifty(4, 1).is_err());
    }
}
