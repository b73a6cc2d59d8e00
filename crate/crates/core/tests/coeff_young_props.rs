use proptest::prelude::*;
use skein::coeff::{gcd, prs_gcd};
use skein::young::{enumerate_updown, UPDOWN_BOUND};
use skein::{LaurentPoly, RatFunc, YoungDiagram};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2), 1..5).prop_map(|ts| {
        let mut p = LaurentPoly::zero();
        for (c, a, s) in ts {
            p = &p + &LaurentPoly::monomial(c, a, s);
        }
        p
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_and_multiplication_associate(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn distributive_and_commutative(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &y, &y + &x);
    }

    #[test]
    fn inverses(x in ratfunc()) {
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
            prop_assert!(x.checked_div(&x).unwrap().is_one());
        }
    }

    #[test]
    fn canonical_form_is_stable(x in ratfunc()) {
        let again = RatFunc::new(x.numer().clone(), x.denom().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        let reparsed: RatFunc = x.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, x);
    }

    #[test]
    fn heuristic_gcd_agrees_with_prs(p in poly(), q in poly(), r in poly()) {
        let (x, y) = (&p * &r, &q * &r);
        prop_assert_eq!(gcd(&x, &y), prs_gcd(&x, &y));
    }
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(RatFunc::zero().inverse().is_err());
    assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
}

fn double_factorial(n: usize) -> usize {
    (1..=n).map(|k| 2 * k - 1).product()
}

#[test]
fn updown_counts_square_to_brauer_dimension() {
    for n in 1..=5 {
        let (_, counts) = enumerate_updown(n, UPDOWN_BOUND).unwrap();
        let total: usize = counts.values().map(|m| m * m).sum();
        assert_eq!(total, double_factorial(n), "n = {n}");
        assert_eq!(skein::BrauerMatching::enumerate(n, n).len(), total);
    }
}

fn diagrams_up_to(k: usize) -> Vec<YoungDiagram> {
    (0..=k).flat_map(YoungDiagram::partitions).collect()
}

#[test]
fn transpose_negates_content_and_inverts_s() {
    for l in diagrams_up_to(4) {
        let t = l.transpose().c_lambda();
        assert_eq!(t, -&l.c_lambda().invert_s(), "{l}");
    }
}

#[test]
fn content_polynomials_are_distinct() {
    let ds = diagrams_up_to(4);
    for (i, l) in ds.iter().enumerate() {
        for m in &ds[i + 1..] {
            assert_ne!(l.c_lambda(), m.c_lambda(), "{l} vs {m}");
        }
    }
}
