//! Kauffman polynomial of random closures against the brute-force oracle.

mod common;

use common::{oracle, random_closure};
use rand::rngs::StdRng;
use rand::SeedableRng;
use skein::tangle::Slice;
use skein::{Engine, RatFunc, TangleWord};

#[test]
fn oracle_basics() {
    let unknot = TangleWord::closure(&TangleWord::identity(1)).unwrap();
    assert_eq!(oracle(&unknot), RatFunc::delta());
    let kink = TangleWord::closure(&TangleWord::e(2, 1).unwrap()).unwrap();
    assert_eq!(oracle(&kink), &RatFunc::alpha() * &RatFunc::delta());
    let two = TangleWord::closure(&TangleWord::identity(2)).unwrap();
    assert_eq!(oracle(&two), RatFunc::delta().pow(2).unwrap());
}

#[test]
fn engine_matches_oracle_on_random_closures() {
    let engine = Engine::default();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..120 {
        let n = if trial % 2 == 0 { 2 } else { 3 };
        let w = random_closure(&mut rng, n, 6);
        assert_eq!(engine.kauffman_poly(&w).unwrap(), oracle(&w), "{}", w.to_text());
    }
}

#[test]
fn trefoil_mirror_pair() {
    let engine = Engine::default();
    let braid = |positive| {
        let x = Slice::Cross { pos: 1, positive };
        TangleWord::closure(&TangleWord::new(2, vec![x, x, x]).unwrap()).unwrap()
    };
    let right = engine.kauffman_poly(&braid(true)).unwrap();
    let left = engine.kauffman_poly(&braid(false)).unwrap();
    assert_eq!(right, oracle(&braid(true)));
    assert_eq!(left, right.invert_a().invert_s());
    assert_ne!(left, right);
}
