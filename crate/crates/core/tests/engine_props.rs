//! Engine and BMW algebra properties on random words.

mod common;

use common::{random_coeff, random_endo, random_word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use skein::bmw::{Bmw, HeckeElement};
use skein::skein::measure_bound;
use skein::tangle::Slice;
use skein::{Engine, SkeinElement, TangleWord};

fn insert(w: &TangleWord, at: usize, extra: &[Slice]) -> TangleWord {
    let mut s = w.slices().to_vec();
    s.splice(at..at, extra.iter().copied());
    TangleWord::new(w.src(), s).unwrap()
}

fn widths(w: &TangleWord) -> Vec<usize> {
    let mut out = vec![w.src()];
    for s in w.slices() {
        out.push(s.apply_width(*out.last().unwrap()).unwrap());
    }
    out
}

#[test]
fn randomized_order_is_confluent() {
    let engine = Engine::default();
    let mut rng = StdRng::seed_from_u64(11);
    let mut trials = 0;
    while trials < 1000 {
        let src = rng.gen_range(0..=3);
        let w = random_word(&mut rng, src, 8, 6);
        let want = engine.reduce_word(&w);
        let got = engine.reduce_randomized(&w, &mut rng);
        assert_eq!(got, want, "{}", w.to_text());
        trials += 1;
    }
}

#[test]
fn reduction_terminates_within_bound() {
    let engine = Engine::new(false);
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..200 {
        let src = rng.gen_range(0..=3);
        let w = random_word(&mut rng, src, 6, 6);
        let (x, steps) = engine.reduce_instrumented(&w).unwrap();
        assert!((steps as u128) <= measure_bound(w.crossing_count()), "{steps} steps");
        assert_eq!(x, engine.reduce_word(&w));
    }
}

#[test]
fn cache_does_not_change_results() {
    let cached = Engine::default();
    let plain = Engine::new(false);
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..100 {
        let w = random_word(&mut rng, 2, 6, 6);
        assert_eq!(cached.reduce_word(&w), plain.reduce_word(&w));
    }
    assert!(cached.cache_len() > 0);
    assert_eq!(plain.cache_len(), 0);
}

#[test]
fn reduction_is_linear() {
    let engine = Engine::default();
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..50 {
        let x = random_endo(&mut rng, 3, 5);
        let y = random_endo(&mut rng, 3, 5);
        let (a, b) = (random_coeff(&mut rng), random_coeff(&mut rng));
        let lhs = engine.reduce(&[(a.clone(), x.clone()), (b.clone(), y.clone())]).unwrap();
        let rhs = &engine.reduce_word(&x).scale(&a) + &engine.reduce_word(&y).scale(&b);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn trace_property() {
    let engine = Engine::default();
    let mut rng = StdRng::seed_from_u64(15);
    for _ in 0..60 {
        let n = rng.gen_range(2..=3);
        let f = random_endo(&mut rng, n, 3);
        let g = random_endo(&mut rng, n, 3);
        let fg = TangleWord::closure(&TangleWord::compose(&f, &g).unwrap()).unwrap();
        let gf = TangleWord::closure(&TangleWord::compose(&g, &f).unwrap()).unwrap();
        assert_eq!(engine.kauffman_poly(&fg).unwrap(), engine.kauffman_poly(&gf).unwrap());
    }
}

#[test]
fn reidemeister_moves_preserve_canonical_form() {
    let engine = Engine::default();
    let mut rng = StdRng::seed_from_u64(16);
    let mut r3_done = 0;
    for _ in 0..150 {
        let w = random_word(&mut rng, 3, 5, 6);
        let base = engine.reduce_word(&w);
        let ws = widths(&w);
        let at = rng.gen_range(0..ws.len());
        let width = ws[at];
        if width < 2 {
            continue;
        }
        let i = rng.gen_range(1..width);
        let sign = rng.gen_bool(0.5);
        let x = |pos, positive| Slice::Cross { pos, positive };
        let r2 = insert(&w, at, &[x(i, sign), x(i, !sign)]);
        assert_eq!(engine.reduce_word(&r2), base, "R2 in {}", w.to_text());
        if width >= 3 {
            let i = rng.gen_range(1..width - 1);
            let left = insert(&w, at, &[x(i, sign), x(i + 1, sign), x(i, sign)]);
            let right = insert(&w, at, &[x(i + 1, sign), x(i, sign), x(i + 1, sign)]);
            assert_eq!(engine.reduce_word(&left), engine.reduce_word(&right));
            r3_done += 1;
        }
    }
    assert!(r3_done > 10);
}

#[test]
fn compose_and_tensor_laws() {
    let engine = Engine::default();
    let mut rng = StdRng::seed_from_u64(17);
    let r = |w: &TangleWord| engine.reduce_word(w);
    for _ in 0..25 {
        let (f, g, h) = (
            random_endo(&mut rng, 2, 3),
            random_endo(&mut rng, 2, 3),
            random_endo(&mut rng, 2, 3),
        );
        let (rf, rg, rh) = (r(&f), r(&g), r(&h));
        let left = engine.compose(&engine.compose(&rf, &rg).unwrap(), &rh).unwrap();
        let right = engine.compose(&rf, &engine.compose(&rg, &rh).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(engine.compose(&rf, &rg).unwrap(), r(&TangleWord::compose(&f, &g).unwrap()));
        let t = engine.tensor(&engine.tensor(&rf, &rg), &rh);
        assert_eq!(t, engine.tensor(&rf, &engine.tensor(&rg, &rh)));
        assert_eq!(engine.tensor(&rf, &rg), r(&TangleWord::tensor(&f, &g)));
        let k = random_endo(&mut rng, 2, 2);
        let rk = r(&k);
        let interchange = engine.compose(&engine.tensor(&rf, &rg), &engine.tensor(&rh, &rk)).unwrap();
        let other = engine.tensor(
            &engine.compose(&rf, &rh).unwrap(),
            &engine.compose(&rg, &rk).unwrap(),
        );
        assert_eq!(interchange, other);
    }
}

fn hook_supported(x: &SkeinElement) -> bool {
    x.terms().keys().all(|m| m.hook_count() > 0)
}

#[test]
fn bmw_algebra_laws() {
    let bmw = Bmw::default();
    let mut rng = StdRng::seed_from_u64(18);
    for n in 2..=3 {
        let one = bmw.identity(n);
        let (_, hs) = bmw.gens(n).unwrap();
        for _ in 0..12 {
            let x = bmw.word(&random_endo(&mut rng, n, 3));
            let y = bmw.word(&random_endo(&mut rng, n, 3));
            let z = bmw.word(&random_endo(&mut rng, n, 3));
            let xy = bmw.mul(&x, &y).unwrap();
            assert_eq!(bmw.mul(&xy, &z).unwrap(), bmw.mul(&x, &bmw.mul(&y, &z).unwrap()).unwrap());
            assert_eq!(bmw.mul(&one, &x).unwrap(), x);
            assert_eq!(bmw.mul(&x, &one).unwrap(), x);
            let h = &hs[rng.gen_range(0..hs.len())];
            assert!(hook_supported(&bmw.mul(&x, h).unwrap()));
            assert!(hook_supported(&bmw.mul(h, &x).unwrap()));
            let (_, ideal) = bmw.split_ideal(&x);
            assert!(hook_supported(&ideal));
            let want = bmw.hecke_mul(&bmw.pi_n(&x), &bmw.pi_n(&y)).unwrap();
            assert_eq!(bmw.pi_n(&xy), want);
        }
    }
}

#[test]
fn section_inverts_projection() {
    let bmw = Bmw::default();
    for n in 2..=3 {
        let x = HeckeElement::identity(n);
        let s = bmw.section_s(&x).unwrap();
        assert_eq!(bmw.pi_n(&s), x);
        let (_, hs) = bmw.gens(n).unwrap();
        for h in &hs {
            assert!(bmw.mul(h, &s).unwrap().is_zero());
            assert!(bmw.mul(&s, h).unwrap().is_zero());
        }
    }
}
