use margulis::hypgeom::{
    complex_length_from_trace, omega, phi, tube_radius, zagier_bound, zagier_n, ComplexLength, TubeRadius,
};
use margulis::rigor::consts::log3;
use margulis::rigor::{CBox, Interval};
use proptest::prelude::*;

fn pt(v: f64) -> Interval {
    Interval::from_f64(v, 128).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn trace_roundtrip(re in -6.0f64..6.0, im in 0.01f64..6.0, flip in any::<bool>()) {
        let im = if flip { -im } else { im };
        prop_assume!(re.abs() > 1e-3);
        let tau = CBox::new(pt(re), pt(im));
        let len = complex_length_from_trace(&tau).unwrap();
        prop_assert!(len.l.is_positive());
        let pi = std::f64::consts::PI;
        prop_assert!(len.theta.lo().to_f64() > -pi - 1e-12 && len.theta.hi().to_f64() <= pi + 1e-12);
        let back = len.trace().unwrap();
        prop_assert!(back.overlaps(&tau) || back.overlaps(&tau.neg()), "{:?} vs {:?}", back, tau);
    }

    #[test]
    fn zagier_n_satisfies_inequality(l in 0.001f64..0.5, theta in -3.1f64..3.1) {
        let (li, ti) = (pt(l), pt(theta));
        let n = zagier_n(&li, &ti).unwrap();
        let v = (n as f64 * l).cosh() - (n as f64 * theta).cos();
        let b = zagier_bound(&li).unwrap();
        prop_assert!(v <= b.hi().to_f64() + 1e-12);
        // pigeonhole scale: n stays within a few multiples of 2π/√l
        prop_assert!((n as f64) <= 8.0 * std::f64::consts::PI / l.sqrt());
    }

    #[test]
    fn omega_monotone_in_d(l in 0.01f64..1.0, theta in -3.0f64..3.0, a in 0.0f64..2.0, b in 0.0f64..2.0) {
        let len = ComplexLength::new(pt(l), pt(theta)).unwrap();
        let (d1, d2) = if a < b { (l + a, l + b) } else { (l + b, l + a) };
        prop_assume!(d2 - d1 > 1e-9);
        let w1 = omega(&len, &pt(d1)).unwrap();
        let w2 = omega(&len, &pt(d2)).unwrap();
        prop_assert!(w1.hi() <= w2.hi() && w1.lo() <= w2.lo());
    }

    #[test]
    fn tube_radius_substitutes_back(l in 1e-6f64..0.02) {
        let mu = log3(128).div_i64(3).unwrap();
        let li = pt(l);
        match tube_radius(&li, &mu).unwrap() {
            TubeRadius::Radius(r) => {
                let b = zagier_bound(&li).unwrap();
                let back = r.sinh().unwrap().sqr().mul_iv(&b).add_iv(&b).add_i64(1);
                prop_assert!(back.overlaps(&mu.cosh().unwrap()));
            }
            TubeRadius::NoTube => prop_assert!(l > 0.01),
        }
    }

    #[test]
    fn triangle_pairs_respect_phi(
        a in proptest::array::uniform2(0.0f64..1.0),
        b in proptest::array::uniform2(0.0f64..1.0),
        g in proptest::array::uniform2(0.0f64..std::f64::consts::PI),
        t in 0.05f64..1.95,
        mu in 0.1f64..0.6,
        hfrac in 0.05f64..0.95,
    ) {
        prop_assume!(g[0].cos() + g[1].cos() >= -t);
        let h = mu * hfrac;
        let bound = phi(&pt(t), &pt(mu), &pt(h)).unwrap();
        let mut total = Interval::zero(128);
        for i in 0..2 {
            let (ai, bi, gi) = (pt(a[i] * mu), pt(b[i] * mu), pt(g[i]));
            let ch = ai.cosh().unwrap().mul_iv(&bi.cosh().unwrap())
                .sub_iv(&ai.sinh().unwrap().mul_iv(&bi.sinh().unwrap()).mul_iv(&gi.cos().unwrap()));
            total = total.add_iv(&ch.max_iv(&Interval::one(128)).acosh().unwrap());
        }
        prop_assert!(total.lo() <= bound.hi());
    }
}

#[test]
fn complex_lengths_of_the_three_traces() {
    use margulis::numfield::{roots_cubic, CubicRoots, IntPolynomial};
    for (f, l, t) in [
        ([1, -5, 4, -1], 0.1872, 0.8528),
        ([1, 2, -3, 1], 0.18927, 0.8268),
        ([1, 3, -14, 11], 0.0753, 0.5153),
    ] {
        let f = IntPolynomial::from_i64s(&f).unwrap();
        let CubicRoots::Complex { pair, .. } = roots_cubic(&f, 128).unwrap() else { panic!() };
        let len = complex_length_from_trace(&pair).unwrap();
        assert!((len.l.mid_f64() - l).abs() < 1e-4, "{f}");
        assert!((len.theta_over_pi().mid_f64() - t).abs() < 1e-4, "{f}");
    }
}
