use margulis::sl2fq::summary::involutions;
use margulis::sl2fq::{
    cayley_hamilton_holds, element_order, group_summary, sl2_elements, sl2_order, verify_trace_order_lemma, Field,
    FqElement, SL2Matrix,
};
use proptest::prelude::*;

#[test]
fn trace_order_lemma_has_no_counterexamples() {
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 25, 27] {
        let r = verify_trace_order_lemma(q).unwrap();
        assert_eq!(r.elements, sl2_order(q));
        assert!(r.passed(), "q = {q}: {:?}", &r.counterexamples[..r.counterexamples.len().min(3)]);
    }
}

#[test]
fn cayley_hamilton_exhaustive_to_9() {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let k = Field::from_order(q).unwrap();
        assert!(cayley_hamilton_holds(&k, &sl2_elements(&k)), "q = {q}");
    }
}

#[test]
fn only_involution_is_minus_identity() {
    for q in [3, 5, 7, 9] {
        let k = Field::from_order(q).unwrap();
        assert_eq!(involutions(&k), vec![SL2Matrix::identity().neg(&k)], "q = {q}");
    }
}

#[test]
fn sylow_profiles() {
    for q in [4, 5, 7, 8, 9, 11, 13] {
        let s = group_summary(q).unwrap();
        assert!(s.sylow2_rank >= 2, "q = {q}");
        assert!(s.div6, "q = {q}");
        assert!(s.simple, "q = {q}");
        assert_eq!(s.sl2_order % s.psl2_order, 0);
        assert_eq!(s.sylow2_order, 1 << s.psl2_order.trailing_zeros());
    }
    for (q, r) in [(2u32, 1u32), (4, 2), (8, 3)] {
        let s = group_summary(q).unwrap();
        assert!(s.sylow2_abelian);
        assert_eq!(s.sylow2_order, 1 << r);
        assert_eq!(s.sylow2_rank, r, "q = {q}");
    }
    assert!(!group_summary(3).unwrap().simple);
}

fn random_sl2(k: &Field, a: u8, b: u8, c: u8) -> SL2Matrix {
    let q = k.q() as u8;
    let (a, b, c) = (FqElement(a % q), FqElement(b % q), FqElement(c % q));
    match k.inv(a) {
        Some(ai) => SL2Matrix { a, b, c, d: k.mul(k.add(FqElement::ONE, k.mul(b, c)), ai) },
        None => {
            let b = if b == FqElement::ZERO { FqElement::ONE } else { b };
            SL2Matrix { a, b, c: k.neg(k.inv(b).unwrap()), d: c }
        }
    }
}

proptest! {
    #[test]
    fn sampled_cayley_hamilton_and_orders(
        q in prop::sample::select(vec![11u32, 13, 16, 25, 27, 49, 81]),
        a in 0u8..81, b in 0u8..81, c in 0u8..81,
    ) {
        let k = Field::from_order(q).unwrap();
        let m = random_sl2(&k, a, b, c);
        prop_assert_eq!(m.det(&k), FqElement::ONE);
        prop_assert!(cayley_hamilton_holds(&k, &[m]));
        let ord = element_order(&k, &m);
        prop_assert_eq!(sl2_order(q) % ord, 0);
        prop_assert!(m.mul(&k, &m.inv(&k)).is_identity());
    }
}
