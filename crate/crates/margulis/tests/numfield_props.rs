use margulis::numfield::appendix::{g_expanded, g_factored, ratio_bound_holds};
use margulis::numfield::cubic::basis_product;
use margulis::numfield::nifty::square_minpoly;
use margulis::numfield::pell::pell_bruteforce;
use margulis::numfield::{
    classify_nifty, discriminant_cubic, element_power, g_eval, min_poly_square_minus_two, pell_solutions, roots_cubic,
    witnesses_from_roots, CubicRoots, IntPolynomial, NumfieldError,
};
use margulis::rigor::{Dyadic, Interval};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn cubic(b: i64, c: i64, d: i64) -> IntPolynomial {
    IntPolynomial::cubic(b, c, d)
}

#[test]
fn discriminant_sign_matches_root_structure() {
    let mut checked = 0;
    for b in -10..=10 {
        for c in -10..=10 {
            for d in -10..=10 {
                let f = cubic(b, c, d);
                let disc = discriminant_cubic(&f).unwrap();
                match roots_cubic(&f, 64) {
                    Err(NumfieldError::RepeatedRoot) => assert!(disc.is_zero(), "{f}"),
                    Ok(CubicRoots::Real(r)) => {
                        assert!(disc.is_positive(), "{f}");
                        for i in 0..3 {
                            for j in i + 1..3 {
                                assert!(!r[i].overlaps(&r[j]), "{f}");
                            }
                        }
                        checked += 1;
                    }
                    Ok(CubicRoots::Complex { pair, .. }) => {
                        assert!(disc.is_negative(), "{f}");
                        assert!(pair.im.is_positive(), "{f}");
                        checked += 1;
                    }
                    Err(e) => panic!("{f}: {e}"),
                }
            }
        }
    }
    assert!(checked > 9000);
}

#[test]
fn pell_complete_to_1000() {
    let v = pell_solutions(1000);
    assert_eq!(v, pell_bruteforce(1000));
    for p in &v {
        assert_eq!(p.r as i128 * p.r as i128 - 2 * p.s as i128 * p.s as i128, p.sign as i128);
    }
}

#[test]
fn ratio_bound_for_large_pairs() {
    let v = pell_solutions(10_000);
    assert!(v.iter().any(|p| p.s.abs() >= 70));
    assert!(ratio_bound_holds(&v));
}

#[test]
fn g_forms_agree_on_grid() {
    let prec = 96;
    for i in 0..100 {
        // 50 points on each side of the origin
        let xr = if i < 50 {
            BigRational::new((-100 * 49 + 99 * i).into(), 49.into())
        } else {
            BigRational::new((49 + 99 * (i - 50)).into(), 49.into())
        };
        let x = Interval::from_rational(&xr, prec);
        for j in 0..100 {
            let yr = BigRational::new((-2 * 99 + 4 * j).into(), 99.into());
            let y = Interval::from_rational(&yr, prec);
            let a = g_expanded(&x, &y).unwrap();
            let b = g_factored(&x, &y).unwrap();
            assert!(a.overlaps(&b), "x = {xr}, y = {yr}");
            let g = g_eval(&x, &y).unwrap();
            assert!(g.subset_of(&a) || g.subset_of(&b));
        }
    }
    let zero = Interval::from_i64(0, prec);
    assert!(g_eval(&Interval::new(Dyadic::from_i64(-1), Dyadic::from_i64(1), prec).unwrap(), &zero).is_err());
}

fn small_cubic() -> impl Strategy<Value = IntPolynomial> {
    (-20i64..=20, -20i64..=20, -20i64..=20)
        .prop_map(|(b, c, d)| cubic(b, c, d))
        .prop_filter("irreducible", |f| f.is_irreducible().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn witnesses_enclosed_by_root_products(f in small_cubic()) {
        let v = classify_nifty(&f).unwrap();
        let w = witnesses_from_roots(&f, 128).unwrap();
        for (iv, n) in w.iter().zip(v.witnesses.as_array()) {
            prop_assert!(iv.contains(&Dyadic::from_bigint(n)), "{} {:?} vs {}", f, iv, n);
        }
    }

    #[test]
    fn square_minus_two_vanishes_on_shifted_roots(f in small_cubic()) {
        let g = min_poly_square_minus_two(&f).unwrap();
        prop_assert_eq!(&g, &square_minpoly(&f).unwrap().shift(&BigInt::from(2)));
        for r in roots_cubic(&f, 128).unwrap().boxes() {
            let z = r.sqr().add_i64(-2);
            prop_assert!(g.eval_cbox(&z).contains_zero());
        }
    }

    #[test]
    fn inverse_powers_cancel(b in -8i64..=8, c in -8i64..=8, unit in prop_oneof![Just(1i64), Just(-1)], m in 1i64..12) {
        let f = cubic(b, c, unit);
        prop_assume!(f.is_irreducible().unwrap() && discriminant_cubic(&f).unwrap().is_negative());
        let x = element_power(&f, m, 64).unwrap();
        let y = element_power(&f, -m, 64).unwrap();
        let one = vec![BigInt::one(), BigInt::zero(), BigInt::zero()];
        prop_assert_eq!(basis_product(&f, x.coords.as_ref().unwrap(), y.coords.as_ref().unwrap()).unwrap(), one);
        prop_assert!(x.root_box.mul(&y.root_box).add_i64(-1).contains_zero());
    }
}
