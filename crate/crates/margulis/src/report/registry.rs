//! The claim registry.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::claim::{Claim, Computed, Expected, Mode};
use super::config::Settings;
use crate::hypgeom::{
    acorn_bound, asymptotic_constant, complex_length_from_trace, margulis_pair_value, oak_bound, omega, ComplexLength,
};
use crate::numfield::appendix::{g_eval, h_critical_points, h_exact, large_pair_bounds, ratio_bound_holds};
use crate::numfield::{
    appendix_survivor_scan, classify_nifty, discriminant_cubic, element_power, enumerate_nonnifty,
    imag_quadratic_unit_facts, listed_pell_pairs, pell_solutions, roots_cubic, survivor_scan, trace_power_sequence,
    CubicRoots, IntPolynomial, PellSolution,
};
use crate::rigor::{consts, parse_decimal, CBox, DecimalLiteral, Interval};
use crate::sl2fq::{
    cayley_hamilton_holds, find_sum_squares_pair, gl_order, group_summary, sl2_elements, sl2_order,
    verify_trace_order_lemma, Field,
};
use crate::sphere::{averaging_identity_exact, find_good_triple, pairwise_cos_sum, triple_candidates, UnitVector3};

type R = Result<Computed, String>;

fn s<E: ToString>(e: E) -> String {
    e.to_string()
}

fn lit(v: &str) -> DecimalLiteral {
    parse_decimal(v).expect("registry literals are well formed")
}

/// An exact decimal as an interval.
fn x(v: &str, p: u32) -> Interval {
    lit(v).to_interval(p)
}

fn dec(v: &str) -> Expected {
    Expected::Decimal(lit(v))
}

fn int(n: i64) -> Expected {
    Expected::Integer(n.into())
}

fn above(v: &str) -> Expected {
    Expected::Above(lit(v))
}

fn below(v: &str) -> Expected {
    Expected::Below(lit(v))
}

fn text(v: &str) -> Expected {
    Expected::Text(v.to_string())
}

fn flag(b: bool) -> Computed {
    Computed::Int(if b { BigInt::one() } else { BigInt::zero() })
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c).expect("registry polynomials are monic")
}

/// Minimal polynomial of −τ from that of τ: −f(−X).
fn negate(f: &IntPolynomial) -> IntPolynomial {
    let c = f.coeffs().iter().enumerate().map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() }).collect();
    IntPolynomial::new(c).expect("negation keeps the polynomial monic")
}

fn complex_root(f: &IntPolynomial, p: u32) -> Result<(Interval, CBox), String> {
    match roots_cubic(f, p).map_err(s)? {
        CubicRoots::Complex { sigma, pair } => Ok((sigma, pair)),
        CubicRoots::Real(_) => Err(format!("{f} has three real roots")),
    }
}

fn cubic_length(c: &[i64], p: u32) -> Result<ComplexLength, String> {
    let (_, pair) = complex_root(&poly(c), p + 16)?;
    complex_length_from_trace(&pair).map_err(s)
}

fn pair_value(d1: &Interval, d2: &Interval) -> R {
    margulis_pair_value(d1, d2).map(Computed::from).map_err(s)
}

struct Builder {
    claims: Vec<Claim>,
}

impl Builder {
    fn add(
        &mut self,
        id: &str,
        description: &str,
        location: &str,
        mode: Mode,
        expected: Expected,
        f: impl Fn(u32) -> R + Send + Sync + 'static,
    ) {
        self.claims.push(Claim::new(id, description, location, mode, expected, Box::new(f)));
    }

    fn must(&mut self, id: &str, d: &str, loc: &str, e: Expected, f: impl Fn(u32) -> R + Send + Sync + 'static) {
        self.add(id, d, loc, Mode::MustMatch, e, f);
    }

    fn check(&mut self, id: &str, d: &str, loc: &str, e: Expected, f: impl Fn(u32) -> R + Send + Sync + 'static) {
        self.add(id, d, loc, Mode::CheckAndReport, e, f);
    }
}

pub fn registry(settings: &Settings) -> Vec<Claim> {
    let mut b = Builder { claims: Vec::new() };
    intro(&mut b);
    conventions(&mut b);
    pour_peu(&mut b);
    quadratic(&mut b);
    cubic_lemmas(&mut b, settings.enumerate_height);
    bette_davis(&mut b);
    nifty_consequence(&mut b);
    buy_now(&mut b);
    groups(&mut b, settings.exhaustion_budget);
    appendix(&mut b);
    sphere(&mut b);
    let mut claims = b.claims;
    claims.sort_by(|a, c| a.id.cmp(&c.id));
    claims
}

pub fn default_registry() -> Vec<Claim> {
    registry(&Settings::default())
}

fn intro(b: &mut Builder) {
    b.must(
        "intro.asymptotic-constant.log3-over-3",
        "A = sqrt(3)(cosh((log 3)/3) - 1)/(2 pi)",
        "Introduction, after Thm. \"nifty consequence\": \"A=\\sqrt3(\\cosh((\\log3)/3)-1)/(2\\pi)= 0.01869\\ldots\"",
        dec("0.01869..."),
        |p| {
            let mu = consts::log3(p).div_i64(3).map_err(s)?;
            asymptotic_constant(&mu).map(Computed::from).map_err(s)
        },
    );
    b.must(
        "intro.asymptotic-constant.0104",
        "A' = sqrt(3)(cosh(0.104) - 1)/(2 pi)",
        "Introduction: \"A'=\\sqrt3(\\cosh(0.104)-1)/2\\pi=0.00149\\ldots\"",
        dec("0.00149..."),
        |p| asymptotic_constant(&x("0.104", p)).map(Computed::from).map_err(s),
    );
    b.must(
        "intro.sketch.0502",
        "1/(1+exp(0.375)) + 1/(1+exp(6 x 0.375))",
        "Introduction, proof sketch: \"\\frac1{1+\\exp(0.375)}+\\frac1{1+\\exp(6\\times0.375)}\\\\&=0.502\\ldots\"",
        dec("0.502..."),
        |p| pair_value(&x("0.375", p), &x("0.375", p).mul_i64(6)),
    );
}

fn conventions(b: &mut Builder) {
    b.must(
        "conventions.decimals.square-of-0395",
        "x = 0.395... implies x^2 = 0.156...",
        "Conventions, \"decimals\": \"from $x=0.395\\ldots$ we may deduce that $x^2=0.156\\ldots$\"",
        dec("0.156..."),
        |p| Ok(x("0.395...", p).sqr().into()),
    );
    b.must(
        "conventions.decimals.square-of-0375",
        "x = 0.375... implies x^2 = 0.14...",
        "Conventions, \"decimals\": \"from $x=0.375\\ldots$ we may deduce only that $x^2=0.14\\ldots$\"",
        dec("0.14..."),
        |p| Ok(x("0.375...", p).sqr().into()),
    );
}

fn pour_peu(b: &mut Builder) {
    let loc = "Proof of Thm. \"pour peu de chose\"";
    b.must(
        "thm-pour-peu.swell-case.oak-2084",
        "Phi(2/3, 0.3925, 0.07) + 2 x 0.3925",
        &format!("{loc}, swell case: \"\\Phi(2/3,0.3925,0.07)+0.3925\\times2=2.084\\ldots\""),
        dec("2.084..."),
        |p| {
            oak_bound(&Interval::from_ratio(2, 3, p), &x("0.3925", p), &x("0.07", p), 6)
                .map(Computed::from)
                .map_err(s)
        },
    );
    b.must(
        "thm-pour-peu.swell-case.oak-below-209",
        "the displacement bound used in the next display is below 2.09",
        &format!("{loc}, swell case: \"1/(1+\\exp(2.09))\""),
        below("2.09"),
        |p| {
            oak_bound(&Interval::from_ratio(2, 3, p), &x("0.3925", p), &x("0.07", p), 6)
                .map(Computed::from)
                .map_err(s)
        },
    );
    b.must(
        "thm-pour-peu.swell-case.0513",
        "1/(1+exp(0.3925)) + 1/(1+exp(2.09))",
        &format!("{loc}, swell case: \"1/(1+\\exp(0.3925) )+1/(1+\\exp(2.09))\\\\&=0.513\\ldots\""),
        dec("0.513..."),
        |p| pair_value(&x("0.3925", p), &x("2.09", p)),
    );
    b.must(
        "thm-pour-peu.swell-case.acorn-1469007",
        "arccosh(cosh^2(0.3925) + sinh^2(0.3925)/2) + 0.785",
        &format!("{loc}, swell case: \"+0.785\\\\&=1.469007\\ldots\""),
        dec("1.469007..."),
        |p| acorn_bound(&Interval::from_ratio(1, 2, p), &x("0.3925", p), 4).map(Computed::from).map_err(s),
    );
    b.must(
        "thm-pour-peu.swell-case.acorn-below-146901",
        "the displacement bound used in the next display is below 1.46901",
        &format!("{loc}, swell case: \"1/(1+e^{{ 1.46901}})\""),
        below("1.46901"),
        |p| acorn_bound(&Interval::from_ratio(1, 2, p), &x("0.3925", p), 4).map(Computed::from).map_err(s),
    );
    b.must(
        "thm-pour-peu.swell-case.05003",
        "1/(1+exp(2 x 0.3925)) + 1/(1+exp(1.46901))",
        &format!("{loc}, swell case: \"1/(1+e^{{2\\times0.3925}} ))+1/(1+e^{{ 1.46901}}))\\\\&=0.5003\\ldots\""),
        dec("0.5003..."),
        |p| pair_value(&x("0.785", p), &x("1.46901", p)),
    );
    b.must(
        "thm-pour-peu.nonswell-case.oak-129",
        "Phi(2/3, 0.3, 0.06) + 0.3",
        &format!("{loc}, non-swell case: \"\\Phi(2/3,0.3,0.06)+0.3=1.29\\ldots\""),
        dec("1.29..."),
        |p| {
            oak_bound(&Interval::from_ratio(2, 3, p), &x("0.3", p), &x("0.06", p), 5)
                .map(Computed::from)
                .map_err(s)
        },
    );
    b.must(
        "thm-pour-peu.nonswell-case.oak-below-13",
        "the displacement bound used in the next display is below 1.3",
        &format!("{loc}, non-swell case: \"1/(1+e^{{ 1.3}})\""),
        below("1.3"),
        |p| {
            oak_bound(&Interval::from_ratio(2, 3, p), &x("0.3", p), &x("0.06", p), 5)
                .map(Computed::from)
                .map_err(s)
        },
    );
    b.must(
        "thm-pour-peu.nonswell-case.0503",
        "1/(1+exp(0.9)) + 1/(1+exp(1.3))",
        &format!("{loc}, non-swell case: \"1/(1+e^{{0.9}} ))+1/(1+e^{{ 1.3}}))\\\\&=0.503\\ldots\""),
        dec("0.503..."),
        |p| pair_value(&x("0.9", p), &x("1.3", p)),
    );
}

fn quadratic(b: &mut Builder) {
    b.must(
        "thm-i-make-a-mirror.im-bound-0395",
        "2 sinh(0.3925/2)",
        "Proof of Thm. \"i make a mirror\": \"|\\eta|\\le2\\sinh(0.3925/2)=0.395\\ldots\"",
        dec("0.395..."),
        |p| Ok(x("0.3925", p).mul_pow2(-1).sinh().map_err(s)?.mul_i64(2).into()),
    );
    b.must(
        "thm-i-make-a-mirror.nonreal-units-im-at-least-half",
        "non-real units of Q(sqrt(-d)), squarefree d <= 100, with |Im| < 1/2",
        "Proof of Thm. \"i make a mirror\": \"If $\\tau=\\pm i$, or $\\tau=(1\\pm i\\sqrt3)/2$, then $\\eta\\ge1/2$\"",
        int(0),
        |_| {
            let mut bad = 0i64;
            for d in (1..=100u64).filter(|&d| crate::numfield::quadratic::is_squarefree(d)) {
                let units = imag_quadratic_unit_facts(d).map_err(s)?;
                bad += units.iter().filter(|u| !u.is_real() && !u.im_at_least_half()).count() as i64;
            }
            Ok(bad.into())
        },
    );
    b.must(
        "thm-hendekkasyllable.chain-at-03925",
        "1/(1+exp(0.785)) + 1/(1+exp(acorn bound at 0.3925)) exceeds 1/2",
        "Thm. \"hendekkasyllable\": \"Then $0.3925$ is a Margulis number for $\\Gamma$\"",
        above("0.5"),
        |p| {
            let mu = x("0.3925", p);
            let d2 = acorn_bound(&Interval::from_ratio(1, 2, p), &mu, 4).map_err(s)?;
            pair_value(&mu.mul_i64(2), &d2)
        },
    );
    b.check(
        "thm-hendekkasyllable.chain-at-0395",
        "the same chain with mu = 0.395 exceeds 1/2",
        "Abstract: \"If the trace field of $M$ is quadratic then $0.395$ is a Margulis number for $M$\"",
        above("0.5"),
        |p| {
            let mu = x("0.395", p);
            let d2 = acorn_bound(&Interval::from_ratio(1, 2, p), &mu, 4).map_err(s)?;
            pair_value(&mu.mul_i64(2), &d2)
        },
    );
}

fn cubic_lemmas(b: &mut Builder, height: i64) {
    let noah = "Proof of Lemma \"oh mr noah\"";
    let xi = || poly(&[1, 1, 0, -1]);
    let eta = || poly(&[1, 0, 1, -1]);
    b.must(
        "lemma-oh-mr-noah.xi.re",
        "real part of the non-real root of X^3+X^2-1",
        &format!("{noah}: \"$\\xi=-(0.877\\ldots)\\pm i(0.744\\ldots)$\""),
        dec("-0.877..."),
        move |p| Ok(complex_root(&xi(), p)?.1.re.into()),
    );
    b.must(
        "lemma-oh-mr-noah.xi.im",
        "imaginary part of the non-real root of X^3+X^2-1",
        &format!("{noah}: \"$\\xi=-(0.877\\ldots)\\pm i(0.744\\ldots)$\""),
        dec("0.744..."),
        move |p| Ok(complex_root(&xi(), p)?.1.im.into()),
    );
    b.check(
        "lemma-oh-mr-noah.statement-polynomial",
        "real part of the non-real root of X^3+X^2+1, the polynomial named in the statement",
        "Lemma \"oh mr noah\": \"a unit $\\xi\\in\\ok$ with minimal polynomial $X^3+X^2+1$\"",
        dec("-0.877..."),
        |p| Ok(complex_root(&poly(&[1, 1, 0, 1]), p)?.1.re.into()),
    );
    b.must(
        "lemma-oh-mr-noah.xi-powers-im-above-half",
        "m in [-3,-1] u [1,5] with |Im xi^m| not above 1/2",
        &format!("{noah}: \"for $-3\\le m\\le-1$ and for $1\\le m\\le5$ we have $|\\Im(\\xi)|>0.5$\""),
        int(0),
        move |p| {
            let half = BigRational::new(1.into(), 2.into());
            let mut bad = 0i64;
            for m in (-3..=-1).chain(1..=5) {
                let z = element_power(&xi(), m, p).map_err(s)?;
                bad += i64::from(!z.root_box.im.abs().certainly_gt_rational(&half));
            }
            Ok(bad.into())
        },
    );
    b.must(
        "lemma-oh-mr-noah.xi-inv4.im",
        "|Im xi^-4|",
        &format!("{noah}: \"$\\Im(\\xi^{{-4}})=0.18\\ldots$\""),
        dec("0.18..."),
        move |p| Ok(element_power(&xi(), -4, p).map_err(s)?.root_box.im.abs().into()),
    );
    b.must(
        "lemma-oh-mr-noah.xi-inv5-minus-inv4",
        "coordinates of xi^-5 - xi^-4 in the basis 1, xi, xi^2",
        &format!("{noah}: \"we have $\\xi^{{-5}}=\\xi^{{-4}}+1$\""),
        text("[1, 0, 0]"),
        move |p| {
            let a = element_power(&xi(), -5, p).map_err(s)?.coords.ok_or("no coordinates")?;
            let c = element_power(&xi(), -4, p).map_err(s)?.coords.ok_or("no coordinates")?;
            let d: Vec<String> = a.iter().zip(&c).map(|(u, v)| (u - v).to_string()).collect();
            Ok(Computed::Text(format!("[{}]", d.join(", "))))
        },
    );
    b.must(
        "lemma-oh-mr-noah.eta.re",
        "real part of the non-real root of X^3+X-1",
        &format!("{noah}: \"$\\eta=-(0.34116\\ldots)+i(1.16154\\ldots)$\""),
        dec("-0.34116..."),
        move |p| Ok(complex_root(&eta(), p)?.1.re.into()),
    );
    b.must(
        "lemma-oh-mr-noah.eta.im",
        "imaginary part of the non-real root of X^3+X-1",
        &format!("{noah}: \"$\\eta=-(0.34116\\ldots)+i(1.16154\\ldots)$\""),
        dec("1.16154..."),
        move |p| Ok(complex_root(&eta(), p)?.1.im.into()),
    );
    b.must(
        "lemma-oh-mr-noah.eta-powers-im-above-07",
        "m in {-1, 1, 2, 3} with |Im eta^m| not above 0.7",
        &format!("{noah}: \"for $m=-1$ and for $1\\le m\\le3$ we have $|\\Im(\\eta)|>0.7$\""),
        int(0),
        move |p| {
            let bound = BigRational::new(7.into(), 10.into());
            let mut bad = 0i64;
            for m in [-1, 1, 2, 3] {
                let z = element_power(&eta(), m, p).map_err(s)?;
                bad += i64::from(!z.root_box.im.abs().certainly_gt_rational(&bound));
            }
            Ok(bad.into())
        },
    );
    for m in [-2i64, -3] {
        b.must(
            &format!("lemma-oh-mr-noah.eta-inv{}.im", -m),
            &format!("|Im eta^{m}|"),
            &format!("{noah}: \"$\\Im(\\eta^{{{m}}})=0.368\\ldots$\""),
            dec("0.368..."),
            move |p| Ok(element_power(&eta(), m, p).map_err(s)?.root_box.im.abs().into()),
        );
    }

    b.must(
        "lemma-big-a-mist.minpoly-of-minus-xi-inv4",
        "minimal polynomial of -xi^-4, xi a root of X^3+X^2-1",
        "Proof of Lemma \"big a mist\": \"$-\\xi^{-4}$ is a root of the polynomial $X^3+2X^2-3X+1$\"",
        text("[1, 2, -3, 1]"),
        move |p| Ok(Computed::Text(negate(&element_power(&xi(), -4, p).map_err(s)?.minpoly).to_bracket())),
    );
    let loc = "Lemma \"big a mist\": \"$\\Im(\\tau)>0.36$; or one of the elements $\\tau$, $-\\tau$, $1+\\tau$ or $1-\\tau$ of $\\ok$ has minimal polynomial $X^3+2X^2-3X+1$; or ... $X^3+3X^2-14X+11$\"";
    b.check(
        &format!("lemma-big-a-mist.enumeration-height-{height:02}"),
        &format!("non-nifty cubics with a non-real root and coefficients bounded by {height} that satisfy no alternative as printed"),
        loc,
        int(0),
        move |p| big_a_mist_exceptions(height, false, p),
    );
    b.must(
        &format!("lemma-big-a-mist.enumeration-height-{height:02}-with-tau-minus-1"),
        "the same count when tau - 1 and -1 - tau are admitted in the third alternative",
        loc,
        int(0),
        move |p| big_a_mist_exceptions(height, true, p),
    );
}

/// Non-nifty complex cubics of bounded height whose root τ has |Im τ| not
/// above 0.36 and no listed minimal polynomial among ±τ, 1±τ (and ±τ−1 when
/// `both_shifts`).
fn big_a_mist_exceptions(height: i64, both_shifts: bool, p: u32) -> R {
    let g1 = poly(&[1, 2, -3, 1]);
    let g2 = poly(&[1, 3, -14, 11]);
    let bound = BigRational::new(36.into(), 100.into());
    let one = BigInt::one();
    let mut bad = 0i64;
    for (f, _) in enumerate_nonnifty(3, height).map_err(s)? {
        if !discriminant_cubic(&f).map_err(s)?.is_negative() {
            continue;
        }
        let (_, pair) = complex_root(&f, p)?;
        if pair.im.abs().certainly_gt_rational(&bound) {
            continue;
        }
        let minus = negate(&f);
        // minimal polynomials of τ, −τ, 1+τ, 1−τ; then τ−1, −1−τ
        let mut shifted = vec![f.clone(), minus.clone(), f.shift(&-&one), minus.shift(&-&one)];
        if both_shifts {
            shifted.extend([f.shift(&one), minus.shift(&one)]);
        }
        if !(shifted.contains(&g1) || f == g2 || minus == g2) {
            bad += 1;
        }
    }
    Ok(bad.into())
}

fn bette_davis(b: &mut Builder) {
    let loc = "Proof of Thm. \"bette davis\"";
    b.must(
        "thm-bette-davis.im-bound-0301",
        "2 sinh(0.3/2)",
        &format!("{loc}: \"$|\\Im(\\tau)|\\le2\\,\\sinh(0.3/2)=0.301\\ldots$\""),
        dec("0.301..."),
        |p| Ok(x("0.15", p).sinh().map_err(s)?.mul_i64(2).into()),
    );
    b.check(
        "thm-bette-davis.substitution-printed",
        "-g(1-X) for the printed g = X^3+2X^2-3X-1",
        &format!("{loc}: \"If $1-\\rho$ has minimal polynomial $X^3+2X^2-3X-1$, then $\\rho$ has minimal polynomial ... $X^3-5X^2+4X-1$\""),
        text("[1, -5, 4, -1]"),
        |_| Ok(Computed::Text(negate(&poly(&[1, 2, -3, -1])).shift(&(-1).into()).to_bracket())),
    );
    b.must(
        "thm-bette-davis.substitution",
        "-g(1-X) for g = X^3+2X^2-3X+1",
        &format!("{loc}: \"$-((1-X)^3+2(1-X)^2-3(1-X)+1)=X^3-5X^2+4X-1$\""),
        text("[1, -5, 4, -1]"),
        |_| Ok(Computed::Text(negate(&poly(&[1, 2, -3, 1])).shift(&(-1).into()).to_bracket())),
    );

    struct Case {
        tag: &'static str,
        f: [i64; 4],
        ds: &'static [(usize, i64, bool)],
        units_window: usize,
        re: &'static str,
        im: &'static str,
        l: &'static str,
        theta: &'static str,
        m: u32,
        d: &'static str,
        w1: &'static str,
        wm: &'static str,
    }
    let cases = [
        Case {
            tag: "case-5-4-1",
            f: [1, -5, 4, -1],
            ds: &[(1, -49, true), (2, 4487, false)],
            units_window: 1,
            re: "0.4602...",
            im: "0.182582...",
            l: "0.1872...",
            theta: "0.8528...",
            m: 2,
            d: "0.395",
            w1: "0.120...",
            wm: "0.13...",
        },
        Case {
            tag: "case-2-3-1",
            f: [1, 2, -3, 1],
            ds: &[(1, -23, true), (2, 53, false)],
            units_window: 1,
            re: "0.539797...",
            im: "0.182582...",
            l: "0.18927...",
            theta: "0.8268...",
            m: 2,
            d: "0.401",
            w1: "0.1205...",
            wm: "0.121...",
        },
        Case {
            tag: "case-3-14-11",
            f: [1, 3, -14, 11],
            ds: &[(2, -2569, false), (3, 6578647, false)],
            units_window: 2,
            re: "1.38068...",
            im: "0.05457...",
            l: "0.0753...",
            theta: "0.5153...",
            m: 4,
            d: "0.32",
            w1: "0.19...",
            wm: "0.29...",
        },
    ];
    for c in cases {
        let f = c.f;
        let fname = poly(&f).to_string();
        for &(r, d, reproducible) in c.ds {
            let id = format!("thm-bette-davis.{}.d{r}", c.tag);
            let desc = format!("constant term of f_{r} in the tau -> tau^2 - 2 sequence from {fname}");
            let l = format!("{loc}, case $f_0(X)={fname}$: \"$d_{r}={d}$\"");
            let run = move |_: u32| -> R {
                let seq = trace_power_sequence(&poly(&f), r).map_err(s)?;
                Ok(seq[r].coeff(0).into())
            };
            if reproducible {
                b.must(&id, &desc, &l, int(d), run);
            } else {
                b.check(&id, &desc, &l, int(d), run);
            }
        }
        let r0 = c.units_window;
        b.must(
            &format!("thm-bette-davis.{}.swell-window", c.tag),
            &format!("units among d_{r0}, d_{} for {fname}", r0 + 1),
            &format!("{loc}, Claim \"that encyclopedia\": \"If $r\\ge1$ is an integer such that $|d_r|\\ne1$ and $|d_{{r+1}}|\\ne1$\""),
            int(0),
            move |_| {
                let seq = trace_power_sequence(&poly(&f), r0 + 1).map_err(s)?;
                Ok((seq[r0..=r0 + 1].iter().filter(|g| g.coeff(0).abs().is_one()).count() as i64).into())
            },
        );
        let rl = format!("{loc}, case $f_0(X)={fname}$: \"$\\rho=({})\\pm i({})$\"", c.re, c.im);
        b.must(
            &format!("thm-bette-davis.{}.root-re", c.tag),
            &format!("real part of the non-real root of {fname}"),
            &rl,
            dec(c.re),
            move |p| Ok(complex_root(&poly(&f), p)?.1.re.into()),
        );
        b.must(
            &format!("thm-bette-davis.{}.root-im", c.tag),
            &format!("imaginary part of the non-real root of {fname}"),
            &rl,
            dec(c.im),
            move |p| Ok(complex_root(&poly(&f), p)?.1.im.into()),
        );
        let ll = format!("{loc}, case $f_0(X)={fname}$: \"$\\complength(\\Pi(x))=({})\\pm({})i\\pi$\"", c.l, c.theta);
        b.must(
            &format!("thm-bette-davis.{}.length-re", c.tag),
            &format!("translation length of the isometry with trace the root of {fname}"),
            &ll,
            dec(c.l),
            move |p| Ok(cubic_length(&f, p)?.l.into()),
        );
        b.must(
            &format!("thm-bette-davis.{}.length-im-over-pi", c.tag),
            &format!("rotation angle over pi for the root of {fname}"),
            &ll,
            dec(c.theta),
            move |p| Ok(cubic_length(&f, p)?.theta_over_pi().abs().into()),
        );
        b.must(
            &format!("thm-bette-davis.{}.omega-1", c.tag),
            &format!("omega(L, 0.3), L the complex length for {fname}"),
            &format!("{loc}, case $f_0(X)={fname}$: \"\\omega(\\complength(\\Pi(x)),0.3)={}\"", c.w1),
            dec(c.w1),
            move |p| omega(&cubic_length(&f, p)?, &x("0.3", p)).map(Computed::from).map_err(s),
        );
        let (m, d) = (c.m, c.d);
        b.must(
            &format!("thm-bette-davis.{}.omega-{m}", c.tag),
            &format!("omega({m}L, {d}), L the complex length for {fname}"),
            &format!("{loc}, case $f_0(X)={fname}$: \"\\omega({m}\\complength(\\Pi(x)),{d})={}\"", c.wm),
            dec(c.wm),
            move |p| omega(&cubic_length(&f, p)?.scale(m), &x(d, p)).map(Computed::from).map_err(s),
        );
    }
    b.must(
        "thm-bette-davis.xy-chain.05004",
        "1/(1+exp(0.401)) + 1/(1+exp(2 x 0.3 + 4 x 0.401))",
        &format!("{loc}: \"\\frac1{{1+\\exp( 0.401)}}+\\frac1{{1+\\exp( 2\\times0.3+4\\times0.401)}}=0.5004\\ldots\""),
        dec("0.5004..."),
        |p| pair_value(&x("0.401", p), &x("0.3", p).mul_i64(2).add_iv(&x("0.401", p).mul_i64(4))),
    );
    b.must(
        "thm-bette-davis.xy-chain.0507",
        "1/(1+exp(2 x 0.401)) + 1/(1+exp(2 x 0.3 + 2 x 0.401))",
        &format!("{loc}: \"\\frac1{{1+\\exp(2\\times 0.401)}}+\\frac1{{1+\\exp(2\\times0.3+2\\times0.401)}}=0.507\\ldots\""),
        dec("0.507..."),
        |p| pair_value(&x("0.401", p).mul_i64(2), &x("0.3", p).mul_i64(2).add_iv(&x("0.401", p).mul_i64(2))),
    );
}

fn nifty_consequence(b: &mut Builder) {
    let loc = "Proof of Thm. \"nifty consequence\"";
    b.must(
        "thm-nifty-consequence.swell-subcase-i",
        "1/(1+exp((log 3)/3)) + 1/(1+exp(4 (log 3)/3))",
        &format!("{loc}: \"1/(1+\\exp( (\\log3)/3))+1/(1+\\exp(4 (\\log3)/3))=0.59\\ldots\""),
        dec("0.59..."),
        |p| {
            let t = consts::log3(p).div_i64(3).map_err(s)?;
            pair_value(&t, &t.mul_i64(4))
        },
    );
    b.must(
        "thm-nifty-consequence.swell-subcase-ii",
        "2/(1+exp(2 (log 3)/3))",
        &format!("{loc}: \"1/(1+\\exp(2 (\\log3)/3))+1/(1+\\exp(2 (\\log3)/3))=0.64\\ldots\""),
        dec("0.64..."),
        |p| {
            let t = consts::log3(p).div_i64(3).map_err(s)?.mul_i64(2);
            pair_value(&t, &t)
        },
    );
    b.check(
        "thm-nifty-consequence.nonswell-printed",
        "1/(1+exp(log 3)) + 1/(1+exp(2 (log 3)/3)) as printed",
        &format!("{loc}: \"1/2>1/(1+\\exp(\\log3))+1/(1+\\exp(2 (\\log3)/3))=1/2\""),
        dec("0.5"),
        |p| pair_value(&consts::log3(p), &consts::log3(p).mul_i64(2).div_i64(3).map_err(s)?),
    );
    b.must(
        "thm-nifty-consequence.nonswell",
        "2/(1+exp(log 3)), evaluated exactly through exp(log 3) = 3",
        &format!("{loc}: \"$d(P,x^3\\cdot P)<\\log3$ and $d(P,\\gamma x^2\\gamma^{{-1}}\\cdot P))<\\log3$\""),
        dec("0.5"),
        |p| {
            let e = BigRational::from_integer(3.into());
            let one = BigRational::one();
            let v = (&one / (&one + &e)) * BigRational::from_integer(2.into());
            Ok(Interval::from_rational(&v, p).into())
        },
    );
}

fn buy_now(b: &mut Builder) {
    let loc = "Proof of Lemma \"buy now pay later\"";
    b.must(
        "lemma-buy-now.six-mu",
        "2/(1+exp(6 x 0.183))",
        &format!("{loc}: \"respectively take the values $0.5002\\ldots$ and $0.59\\ldots$ when $\\mu=0.183$\""),
        dec("0.5002..."),
        |p| {
            let d = x("0.183", p).mul_i64(6);
            pair_value(&d, &d)
        },
    );
    b.must(
        "lemma-buy-now.two-and-eight-mu",
        "1/(1+exp(2 x 0.183)) + 1/(1+exp(8 x 0.183))",
        &format!("{loc}: \"respectively take the values $0.5002\\ldots$ and $0.59\\ldots$ when $\\mu=0.183$\""),
        dec("0.59..."),
        |p| pair_value(&x("0.183", p).mul_i64(2), &x("0.183", p).mul_i64(8)),
    );
}

fn budgeted(q: u32, budget: u64) -> Result<(), String> {
    let n = sl2_order(q);
    if n > budget {
        Err(format!("|SL2(F_{q})| = {n} exceeds the exhaustion budget {budget}"))
    } else {
        Ok(())
    }
}

fn groups(b: &mut Builder, budget: u64) {
    let dd = "Lemma \"dumb-diddly dumb\"";
    for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 25, 27] {
        b.must(
            &format!("lemma-dumb-diddly.trace-orders.q{q:02}"),
            &format!("elements of SL2(F_{q}) whose order contradicts the trace clauses"),
            &format!("{dd}: \"If $t=0$ then $m$ divides $4$ ... If $t=1$ then $m$ divides $6$\""),
            int(0),
            move |_| {
                budgeted(q, budget)?;
                Ok((verify_trace_order_lemma(q).map_err(s)?.counterexamples.len() as i64).into())
            },
        );
    }
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        b.must(
            &format!("lemma-dumb-diddly.cayley-hamilton.q{q:02}"),
            &format!("1 if g^2 - tr(g) g + 1 = 0 for every g in SL2(F_{q})"),
            &format!("{dd}, proof: \"Cayley-Hamilton theorem\""),
            int(1),
            move |_| {
                budgeted(q, budget)?;
                let k = Field::from_order(q).map_err(s)?;
                Ok(flag(cayley_hamilton_holds(&k, &sl2_elements(&k))))
            },
        );
    }

    let dh = "Lemma \"d'arcy and hickenlooper\"";
    for q in [5u32, 7, 9, 11, 13] {
        b.must(
            &format!("lemma-darcy-hickenlooper.q{q:02}.center-order"),
            &format!("order of the center of SL2(F_{q})"),
            &format!("{dh}: \"The center $Z$ of $G$ has order $2$\""),
            int(2),
            move |_| {
                budgeted(q, budget)?;
                Ok((group_summary(q).map_err(s)?.center_order as i64).into())
            },
        );
        b.must(
            &format!("lemma-darcy-hickenlooper.q{q:02}.simple"),
            &format!("1 if PSL2(F_{q}) is simple"),
            &format!("{dh}: \"$G/Z$ is a non-abelian simple group\""),
            int(1),
            move |_| {
                budgeted(q, budget)?;
                Ok(flag(group_summary(q).map_err(s)?.simple))
            },
        );
        b.must(
            &format!("lemma-darcy-hickenlooper.q{q:02}.order-mod-6"),
            &format!("|PSL2(F_{q})| mod 6"),
            &format!("{dh}: \"The order of $G/Z$ is divisible by $6$\""),
            int(0),
            move |_| {
                budgeted(q, budget)?;
                Ok(((group_summary(q).map_err(s)?.psl2_order % 6) as i64).into())
            },
        );
        b.must(
            &format!("lemma-darcy-hickenlooper.q{q:02}.involutions"),
            &format!("elements of order 2 in SL2(F_{q})"),
            &format!("{dh}, proof: \"$-I$ is the only element of order $2$\""),
            int(1),
            move |_| {
                budgeted(q, budget)?;
                let k = Field::from_order(q).map_err(s)?;
                Ok((crate::sl2fq::summary::involutions(&k).len() as i64).into())
            },
        );
    }

    let fp = "Prop. \"fizz 'n' pop\"";
    for (q, rank) in [(4u32, 2i64), (5, 2), (7, 2), (8, 3), (9, 2), (11, 2), (13, 2)] {
        b.must(
            &format!("prop-fizz-n-pop.q{q:02}.sylow2-rank"),
            &format!("mod-2 abelianization rank of a Sylow 2-subgroup of PSL2(F_{q})"),
            &format!("{fp}: \"Then $\\sigma_2(\\bar G)\\ge2$\""),
            int(rank),
            move |_| {
                budgeted(q, budget)?;
                Ok(i64::from(group_summary(q).map_err(s)?.sylow2_rank).into())
            },
        );
    }
    for q in [3u32, 5, 7, 9, 11, 13, 25, 27] {
        b.must(
            &format!("prop-fizz-n-pop.q{q:02}.klein-four"),
            &format!("1 if a^2 + b^2 = -1 in F_{q} yields anticommuting elements spanning a Klein four-group in PSL2"),
            &format!("Proof of {fp}: \"$T$ is non-cyclic\""),
            int(1),
            move |_| {
                let pr = find_sum_squares_pair(q).map_err(s)?;
                Ok(flag(pr.det_is_one && pr.anticommute && pr.klein_four))
            },
        );
    }
    for q in [4u32, 5] {
        b.must(
            &format!("prop-fizz-n-pop.a5-order.q{q:02}"),
            &format!("|PSL2(F_{q})|"),
            "Lemma \"d'arcy and hickenlooper\", proof: \"$|\\bar G|=60$\"",
            int(60),
            move |_| {
                budgeted(q, budget)?;
                Ok((group_summary(q).map_err(s)?.psl2_order as i64).into())
            },
        );
    }

    let c2 = "Proof of Lemma \"characteristic 2\"";
    b.must(
        "lemma-characteristic-2.q02.h1-mod-2",
        "rank of H_1(SL2(F_2); Z_2)",
        &format!("{c2}: \"If $r=1$ then $H_1(G;\\ZZ_2)\\ne0$\""),
        int(1),
        move |_| {
            budgeted(2, budget)?;
            Ok(i64::from(group_summary(2).map_err(s)?.h1_mod2_rank).into())
        },
    );
    for r in [1u32, 2, 3] {
        let q = 1u32 << r;
        b.must(
            &format!("lemma-characteristic-2.q{q:02}.sylow2-elementary"),
            &format!("1 if the Sylow 2-subgroup of SL2(F_{q}) is elementary abelian of rank {r}"),
            &format!("{c2}: \"The $2$-Sylow subgroup of $G$ is an elementary abelian $2$-group of rank $r$\""),
            int(1),
            move |_| {
                budgeted(q, budget)?;
                let g = group_summary(q).map_err(s)?;
                Ok(flag(g.sylow2_abelian && g.sylow2_rank == r && g.sylow2_order == 1u64 << r))
            },
        );
    }
    for (q, n) in [(4u32, 60i64), (8, 504)] {
        b.must(
            &format!("lemma-characteristic-2.q{q:02}.order"),
            &format!("|SL2(F_{q})|"),
            &format!("{c2}: \"the order $(2^r)^3-(2^r)$ of $G$ is equal to $60$ or $504$\""),
            int(n),
            move |_| Ok((sl2_order(q) as i64).into()),
        );
    }
    for (d, n) in [(2u32, 6i64), (3, 168)] {
        b.must(
            &format!("lemma-characteristic-2.gl{d}-f2-order"),
            &format!("|GL_{d}(F_2)|"),
            &format!("{c2}: \"$(2^3-1)(2^3-2)(2^3-2^2)=168$\""),
            int(n),
            move |_| Ok(gl_order(d, 2).into()),
        );
    }
}

fn appendix(b: &mut Builder) {
    let pell_loc = "Proof of Lemma \"getting there\", Eq. \"nineteen twenty\": \"one of the eighteen pairs $(\\pm1,0),\\ (\\pm3,\\pm2),\\ (\\pm7,\\pm5),\\ (\\pm17,\\pm12),\\ (\\pm41,\\pm29)$\"";
    b.must(
        "appendix.pell.listed-pairs-solve",
        "printed pairs satisfying r^2 - 2s^2 = +-1",
        pell_loc,
        int(18),
        |_| Ok((listed_pell_pairs().iter().filter(|(r, s)| PellSolution::new(*r, *s).is_some()).count() as i64).into()),
    );
    b.check(
        "appendix.pell.count-up-to-29",
        "solutions of r^2 - 2s^2 = +-1 with |s| <= 29",
        pell_loc,
        int(18),
        |_| Ok((pell_solutions(29).len() as i64).into()),
    );
    let next = || pell_solutions(1000).into_iter().filter(|p| p.s.abs() > 29).min_by_key(|p| p.s.abs());
    b.must(
        "appendix.pell.next-s",
        "least |s| > 29 among the solutions",
        "Lemma \"salim\": \"$r^2-2s^2=\\pm1$, $|s|\\ge70$, and $|r|\\ge99$\"",
        int(70),
        move |_| Ok(next().ok_or("no solution")?.s.abs().into()),
    );
    b.must(
        "appendix.pell.next-r",
        "|r| for that solution",
        "Lemma \"salim\": \"$r^2-2s^2=\\pm1$, $|s|\\ge70$, and $|r|\\ge99$\"",
        int(99),
        move |_| Ok(next().ok_or("no solution")?.r.abs().into()),
    );
    b.check(
        "appendix.pell.printed-alternative",
        "least |s| beyond the listed pairs, against the printed \"|s| >= 99\"",
        "Proof of Lemma \"getting there\": \"or else we have $|r|\\ge70$ and $|s|\\ge99$\"",
        int(99),
        move |_| Ok(next().ok_or("no solution")?.s.abs().into()),
    );
    b.must(
        "appendix.salim.ratio-bound",
        "1 if (r/s)^2 lies in [2 - 1/4900, 2 + 1/4900] for every solution with 70 <= |s| <= 10^4",
        "Lemma \"salim\", Eq. \"from time immemorial\": \"1.41<\\sqrt{2-1/4900}\\le| r/s|\\le\\sqrt{2+1/4900}<1.42\"",
        int(1),
        |_| Ok(flag(ratio_bound_holds(&pell_solutions(10_000)))),
    );
    let salim = "Proof of Lemma \"salim\"";
    b.must(
        "appendix.salim.sqrt-lower",
        "sqrt(2 - 1/4900)",
        &format!("{salim}: \"1.41<\\sqrt{{2-1/4900}}\""),
        above("1.41"),
        |p| Interval::from_ratio(9799, 4900, p).sqrt().map(Computed::from).map_err(s),
    );
    b.must(
        "appendix.salim.sqrt-upper",
        "sqrt(2 + 1/4900)",
        &format!("{salim}: \"\\sqrt{{2+1/4900}}<1.42\""),
        below("1.42"),
        |p| Interval::from_ratio(9801, 4900, p).sqrt().map(Computed::from).map_err(s),
    );
    b.must(
        "appendix.salim.lambda-lower",
        "1.41 (1 + 2/70)^-1 (1 - 4/99)",
        &format!("{salim}: \"which implies (\\ref{{still crazy}})\", i.e. $1.31<|\\lambda|$"),
        above("1.31"),
        |p| Ok(Interval::from_rational(&large_pair_bounds().lambda_lower, p).into()),
    );
    b.must(
        "appendix.salim.lambda-upper",
        "1.42 (1 - 2/70)^-1 (1 + 4/99)",
        &format!("{salim}: \"which implies (\\ref{{still crazy}})\", i.e. $|\\lambda|<1.6$"),
        below("1.6"),
        |p| Ok(Interval::from_rational(&large_pair_bounds().lambda_upper, p).into()),
    );
    b.must(
        "appendix.salim.shifted-lambda-lower",
        "1.41 - 2/70",
        &format!("{salim}, Eq. \"bury, bury\": \"1.38<|\\lambda+2/b|\""),
        above("1.38"),
        |p| Ok(Interval::from_rational(&(BigRational::new(141.into(), 100.into()) - BigRational::new(2.into(), 70.into())), p).into()),
    );
    b.must(
        "appendix.salim.shifted-lambda-upper",
        "1.42 + 2/70",
        &format!("{salim}, Eq. \"bury, bury\": \"|\\lambda+2/b|<1.45\""),
        below("1.45"),
        |p| Ok(Interval::from_rational(&(BigRational::new(142.into(), 100.into()) + BigRational::new(2.into(), 70.into())), p).into()),
    );
    b.must(
        "appendix.salim.positive-subcase",
        "8 - (108/70^3 + 36/70^2)(1.6)",
        &format!("{salim}: \"\\frac1b(8-(108/70^3+36/70^2)(1.6))\\\\&=(7.98\\ldots)/b>0\""),
        dec("7.98..."),
        |p| Ok(Interval::from_rational(&large_pair_bounds().positive_subcase, p).into()),
    );
    b.must(
        "appendix.salim.negative-subcase-excess",
        "-8/70 - 108/70^3 - (36/70^2)(1 + 1.42 + 2/70)",
        &format!("{salim}: \"&>-0.134\""),
        above("-0.134"),
        |p| Ok(Interval::from_rational(&large_pair_bounds().negative_subcase_excess, p).into()),
    );
    b.must(
        "appendix.salim.negative-subcase-g",
        "0.41^2 - 27 (1.41^2/70^2)",
        &format!("{salim}: \"G(b,\\lambda+2/b)\\ge(0.41)^2-27(1.41^2/70^2)>0.15\""),
        above("0.15"),
        |p| Ok(Interval::from_rational(&large_pair_bounds().negative_subcase_g, p).into()),
    );

    let rh = "Proof of Lemma \"where rocking-horse people\"";
    b.check(
        "appendix.h.critical-max",
        "the critical point of H(y) = y^3 + 15.4y^2 - 35.5y + 18 that is a local maximum",
        &format!("{rh}: \"The critical points of $H$ occur at $-11.31$ and $1.04\\ldots$\""),
        dec("-11.31"),
        |p| Ok(h_critical_points(p).map_err(s)?.0.into()),
    );
    b.must(
        "appendix.h.critical-min",
        "the critical point of H that is a local minimum",
        &format!("{rh}: \"The critical points of $H$ occur at $-11.31$ and $1.04\\ldots$\""),
        dec("1.04..."),
        |p| Ok(h_critical_points(p).map_err(s)?.1.into()),
    );
    b.must(
        "appendix.h.at-minus-131",
        "H(-1.31)",
        &format!("{rh}: \"$H(y)\\ge H(-1.31)=88.6\\ldots$\""),
        dec("88.6..."),
        |p| Ok(Interval::from_rational(&h_exact(&BigRational::new((-131).into(), 100.into())), p).into()),
    );
    b.must(
        "appendix.h.at-131",
        "H(1.31)",
        &format!("{rh}: \"$H(y)\\ge H(1.31)=0.171\\ldots$\""),
        dec("0.171..."),
        |p| Ok(Interval::from_rational(&h_exact(&BigRational::new(131.into(), 100.into())), p).into()),
    );
    b.must(
        "appendix.g.at-68-131",
        "G(68, 1.31)",
        &format!("{rh}: \"for every $x$ with $x\\ge68$ and for every $y$ with $1.31\\le|y|\\le2$, we have $G(x,y)>0$\""),
        above("0"),
        |p| g_eval(&Interval::from_i64(68, p), &x("1.31", p)).map(Computed::from).map_err(s),
    );

    let gt = "Proof of Lemma \"getting there\"";
    b.must(
        "appendix.scan.candidates",
        "candidates f_{r,s,0}, f_{r,s,2} over the printed pairs",
        &format!("{gt}: \"Of these thirty-six possibilities for $f$\""),
        int(36),
        |p| Ok((appendix_survivor_scan(p.min(64)).map_err(s)?.records.len() as i64).into()),
    );
    b.check(
        "appendix.scan.positive-discriminant",
        "candidates with positive discriminant",
        &format!("{gt}: \"twenty-nine have positive discriminant\""),
        int(29),
        |p| Ok((appendix_survivor_scan(p.min(64)).map_err(s)?.positive_count() as i64).into()),
    );
    b.check(
        "appendix.scan.positive-discriminant-printed-formula",
        "candidates positive under the printed formula without the 18bcd term",
        "Lemma \"salim\", Eq. \"eat looking-glass pies\": \"\\Delta=b^2c^2-4c^3-4b^3d-27d^2\"",
        int(29),
        |p| Ok((appendix_survivor_scan(p.min(64)).map_err(s)?.positive_count_without_bcd() as i64).into()),
    );
    b.must(
        "appendix.scan.survivors",
        "candidates with negative discriminant",
        &format!("{gt}: \"The imaginary roots of $f$ are equal to\" (seven rows)"),
        int(7),
        |p| Ok((appendix_survivor_scan(p.min(64)).map_err(s)?.survivors().count() as i64).into()),
    );
    let prose: [(i64, i64, u8); 7] = [(-1, 0, 0), (-3, 2, 0), (7, 5, 0), (-1, 0, 2), (-3, 2, 0), (-3, -2, 0), (-7, -5, 2)];
    for (i, (r, sv, v)) in prose.into_iter().enumerate() {
        b.check(
            &format!("appendix.survivor-prose.entry-{}", i + 1),
            &format!("1 if f_{{{r},{sv},{v}}} has negative discriminant"),
            &format!("{gt}: \"The remaining possibilities for $f$ are ... $f_{{{r},{sv},{v}}}$\""),
            int(1),
            move |_| Ok(flag(discriminant_cubic(&crate::numfield::candidate_family(r, sv, v).map_err(s)?).map_err(s)?.is_negative())),
        );
    }
    b.check(
        "appendix.survivor-prose.distinct",
        "distinct entries in the printed list of remaining possibilities",
        &format!("{gt}: \"$f_{{-1,0,0}}$, $f_{{-3,2,0}}$, $f_{{7,5,0}}$, $f_{{-1,0,2}}$, $f_{{-3,2,0}}$, $f_{{-3,-2,0}}$, and $f_{{-7,-5,2}}$\""),
        int(7),
        move |_| Ok((prose.iter().collect::<BTreeSet<_>>().len() as i64).into()),
    );

    let table: [(i64, i64, u8, &str, &str); 7] = [
        (-1, 0, 0, "-1.573...", "0.368..."),
        (-3, 2, 0, "-0.662...", "0.562..."),
        (7, 5, 0, "1.380...", "0.054..."),
        (-1, 0, 2, "-0.662...", "0.562..."),
        (-3, 2, 2, "-1.539...", "0.368..."),
        (-3, -2, 2, "0.303...", "1.435..."),
        (-7, -5, 2, "1.784...", "1.307..."),
    ];
    for (r, sv, v, re, im) in table {
        let tag = format!("f{r}_{sv}_{v}").replace('-', "m");
        let loc = format!("{gt}, root table: \"{re} \\pm i({im}) if $f=f_{{{r},{sv},{v}}}$\"");
        let root = move |p: u32| -> Result<CBox, String> {
            complex_root(&crate::numfield::candidate_family(r, sv, v).map_err(s)?, p).map(|t| t.1)
        };
        b.check(
            &format!("appendix.root-table.{tag}.re"),
            &format!("real part of the non-real roots of f_{{{r},{sv},{v}}}"),
            &loc,
            dec(re),
            move |p| Ok(root(p)?.re.into()),
        );
        b.must(
            &format!("appendix.root-table.{tag}.im"),
            &format!("|Im| of the non-real roots of f_{{{r},{sv},{v}}}"),
            &loc,
            dec(im),
            move |p| Ok(root(p)?.im.abs().into()),
        );
    }
    let small_im = |pairs: Vec<(i64, i64)>, p: u32| -> R {
        let scan = survivor_scan(&pairs, p).map_err(s)?;
        let target = poly(&[1, 3, -14, 11]);
        let bound = BigRational::new(36.into(), 100.into());
        let mut n = 0i64;
        for rec in scan.survivors().filter(|r| r.candidate != target) {
            let (_, pair) = rec.roots.as_ref().ok_or("survivor without roots")?;
            n += i64::from(!pair.im.abs().certainly_gt_rational(&bound));
        }
        Ok(n.into())
    };
    b.must(
        "appendix.getting-there.listed-pairs",
        "survivors over the printed pairs, other than X^3+3X^2-14X+11, with |Im| not above 0.36",
        &format!("{gt}: \"other than $f_{{7,5,0}}(X)=X^3+3X^2-14X+11$ have imaginary parts of absolute value greater than $0.36$\""),
        int(0),
        move |p| small_im(listed_pell_pairs(), p),
    );
    b.check(
        "appendix.getting-there.all-pairs",
        "the same count over every solution with |s| <= 29",
        "Lemma \"getting there\": \"Then either $\\Im\\rho>0.36$, or the minimal polynomial of $\\rho$ over $\\QQ$ is $X^3+3X^2-14X+11$\"",
        int(0),
        move |p| small_im(pell_solutions(29).iter().map(|q| (q.r, q.s)).collect(), p),
    );
    b.check(
        "appendix.getting-there.all-pairs-survivors",
        "candidates with negative discriminant over every solution with |s| <= 29",
        &format!("{gt}: \"one of the eighteen pairs\""),
        int(7),
        |p| {
            let pairs: Vec<(i64, i64)> = pell_solutions(29).iter().map(|q| (q.r, q.s)).collect();
            Ok((survivor_scan(&pairs, p.min(64)).map_err(s)?.survivors().count() as i64).into())
        },
    );
    for (field, idx) in [("tau-minus-1", 1usize), ("tau-sq-minus-2", 3)] {
        b.must(
            &format!("appendix.getting-there.f750-{field}-norm"),
            &format!("|N({})| for a root tau of X^3+3X^2-14X+11", field.replace('-', " ")),
            "Lemma \"getting there\": \"Suppose that both $\\rho^2-2$ and $\\rho-1$ are units in $\\ok$\"",
            int(1),
            move |_| {
                let v = classify_nifty(&poly(&[1, 3, -14, 11])).map_err(s)?;
                Ok(v.witnesses.as_array()[idx].clone().into())
            },
        );
    }
}

fn random_unit(rng: &mut ChaCha8Rng, p: u32) -> Result<UnitVector3, String> {
    loop {
        let v: [f64; 3] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let n2: f64 = v.iter().map(|t| t * t).sum();
        if (0.01..=1.0).contains(&n2) {
            return UnitVector3::normalized(v, p).map_err(s);
        }
    }
}

fn tetrahedron() -> [[BigRational; 3]; 4] {
    let q = |a: i64| BigRational::from_integer(a.into());
    [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]].map(|v| v.map(q))
}

fn dot(a: &[BigRational; 3], c: &[BigRational; 3]) -> BigRational {
    a.iter().zip(c).fold(BigRational::zero(), |acc, (u, v)| acc + u * v)
}

fn exact_int(v: BigRational) -> R {
    if v.is_integer() {
        Ok(v.to_integer().into())
    } else {
        Err(format!("{v} is not an integer"))
    }
}

fn sphere(b: &mut Builder) {
    let pv = "Prop. \"mademoiselle victoire\": \"\\sum_{1\\le i<j\\le n}\\cos d_s(Q_i,Q_j)\\ge-n/2\"";
    let cp = "Cor. \"vous qui n'avez pas d'idees preconcues\"";
    b.must(
        "sphere.victoire.tetrahedron",
        "sum of pairwise cosines for the regular tetrahedron, exact",
        pv,
        int(-2),
        |_| {
            let t = tetrahedron();
            let mut sum = BigRational::zero();
            for i in 0..4 {
                for j in i + 1..4 {
                    sum += dot(&t[i], &t[j]) / BigRational::from_integer(3.into());
                }
            }
            exact_int(sum)
        },
    );
    b.must(
        "sphere.victoire.random-configurations",
        "configurations of n = 2..8 random points (1000 each) not certified above -n/2",
        pv,
        int(0),
        |p| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0001);
            let mut bad = 0i64;
            for n in 2..=8usize {
                for _ in 0..1000 {
                    let pts = (0..n).map(|_| random_unit(&mut rng, p)).collect::<Result<Vec<_>, _>>()?;
                    let sum = pairwise_cos_sum(&pts).map_err(s)?;
                    let bound = BigRational::new(BigInt::from(-(n as i64)), 2.into());
                    bad += i64::from(sum.lo().cmp_rational(&bound) == std::cmp::Ordering::Less);
                }
            }
            Ok(bad.into())
        },
    );
    b.must(
        "sphere.preconcues.candidates",
        "pairs (p, S) with |S| = 2 and p not in S over four indices",
        &format!("{cp}: \"We have $|\\calt|=12$\""),
        int(12),
        |_| Ok((triple_candidates().len() as i64).into()),
    );
    b.must(
        "sphere.preconcues.tetrahedron-sum",
        "sum of the twelve alpha values for the regular tetrahedron, exact",
        &format!("{cp}, Eq. \"dites-moi combien j'ai de pieds\": \"=4\\sum_{{1\\le i<j\\le4}}\\cos(d_s(P_i,P_j))\\ge-8\""),
        int(-8),
        |_| {
            let t = tetrahedron();
            let three = BigRational::from_integer(3.into());
            let sum = triple_candidates()
                .into_iter()
                .fold(BigRational::zero(), |acc, (p, q, q2)| acc + (dot(&t[p], &t[q]) + dot(&t[p], &t[q2])) / &three);
            exact_int(sum)
        },
    );
    b.must(
        "sphere.preconcues.averaging-identity",
        "random rational quadruples (500) violating sum(alpha) = 4 sum(<P_i, P_j>)",
        &format!("{cp}, Eq. \"dites-moi combien j'ai de pieds\""),
        int(0),
        |_| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0002);
            let mut bad = 0i64;
            for _ in 0..500 {
                let pts: [[BigRational; 3]; 4] = std::array::from_fn(|_| {
                    std::array::from_fn(|_| BigRational::new(rng.gen_range(-50..=50).into(), rng.gen_range(1..=9).into()))
                });
                bad += i64::from(!averaging_identity_exact(&pts));
            }
            Ok(bad.into())
        },
    );
    b.must(
        "sphere.preconcues.random-quadruples",
        "random quadruples (1000) with no triple certified at least -2/3",
        cp,
        int(0),
        |p| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0003);
            let mut bad = 0i64;
            for _ in 0..1000 {
                let pts = (0..4).map(|_| random_unit(&mut rng, p)).collect::<Result<Vec<_>, _>>()?;
                bad += i64::from(find_good_triple(&pts).is_err());
            }
            Ok(bad.into())
        },
    );
    b.must(
        "sphere.preconcues.square-value",
        "best alpha for the points +-e1, +-e2",
        cp,
        dec("0"),
        |p| {
            let pts = [UnitVector3::axis(0, 1, p), UnitVector3::axis(0, -1, p), UnitVector3::axis(1, 1, p), UnitVector3::axis(1, -1, p)];
            Ok(find_good_triple(&pts).map_err(s)?.value.into())
        },
    );
    b.must(
        "sphere.preconcues.square-triple",
        "indices (p, q, q') attaining it",
        cp,
        text("(0, 2, 3)"),
        |p| {
            let pts = [UnitVector3::axis(0, 1, p), UnitVector3::axis(0, -1, p), UnitVector3::axis(1, 1, p), UnitVector3::axis(1, -1, p)];
            let t = find_good_triple(&pts).map_err(s)?;
            Ok(Computed::Text(format!("({}, {}, {})", t.p, t.q, t.q2)))
        },
    );
}
