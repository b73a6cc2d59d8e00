#![allow(dead_code)]
//! Shared helpers for the integration tests: random word generators and an
//! independent Kauffman polynomial evaluator.

use rand::rngs::StdRng;
use rand::Rng;
use skein::tangle::Slice;
use skein::{RatFunc, TangleWord};

/// Random word from `src` strands with at most `crossings` crossings,
/// keeping the width in `1..=max_width`.
pub fn random_word(rng: &mut StdRng, src: usize, crossings: usize, max_width: usize) -> TangleWord {
    let mut slices = Vec::new();
    let mut width = src;
    let mut placed = 0;
    let len = rng.gen_range(0..=crossings + 4);
    for _ in 0..len {
        let pick = rng.gen_range(0..10);
        let s = if pick < 6 && width >= 2 && placed < crossings {
            placed += 1;
            Slice::Cross {
                pos: rng.gen_range(1..width),
                positive: rng.gen_bool(0.5),
            }
        } else if pick < 8 && width + 2 <= max_width {
            Slice::Cup(rng.gen_range(1..=width + 1))
        } else if width >= 3 {
            Slice::Cap(rng.gen_range(1..width))
        } else {
            continue;
        };
        width = s.apply_width(width).unwrap();
        slices.push(s);
    }
    TangleWord::new(src, slices).unwrap()
}

/// Random endomorphism of `n` strands.
pub fn random_endo(rng: &mut StdRng, n: usize, crossings: usize) -> TangleWord {
    let mut slices = Vec::new();
    let len = rng.gen_range(0..=crossings + 2);
    for _ in 0..len {
        let i = rng.gen_range(1..n);
        if rng.gen_bool(0.25) {
            slices.push(Slice::Cap(i));
            slices.push(Slice::Cup(i));
        } else {
            slices.push(Slice::Cross {
                pos: i,
                positive: rng.gen_bool(0.5),
            });
        }
    }
    TangleWord::new(n, slices).unwrap()
}

pub fn random_coeff(rng: &mut StdRng) -> RatFunc {
    let m = RatFunc::monomial(rng.gen_range(1..4), rng.gen_range(-2..3), rng.gen_range(-2..3));
    &m + &RatFunc::from_int(rng.gen_range(-2..3))
}

/// Closure of a random braid-like word on `n` strands with at most
/// `max_crossings` crossings and occasional hooks.
pub fn random_closure(rng: &mut StdRng, n: usize, max_crossings: usize) -> TangleWord {
    let mut slices = Vec::new();
    let crossings = rng.gen_range(0..=max_crossings);
    let mut placed = 0;
    while placed < crossings {
        let i = rng.gen_range(1..n);
        if rng.gen_bool(0.2) {
            slices.push(Slice::Cap(i));
            slices.push(Slice::Cup(i));
        } else {
            slices.push(Slice::Cross {
                pos: i,
                positive: rng.gen_bool(0.5),
            });
            placed += 1;
        }
    }
    TangleWord::closure(&TangleWord::new(n, slices).unwrap()).unwrap()
}

// Oracle: a closed diagram as a planar graph of 4-valent nodes, evaluated by
// switching the first crossing met from below along a traversal that starts
// each component at its largest unvisited port.

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Node {
    Cross(i32),
    Vert,
    Horiz,
}

// port k of node c is 4c + k; k: 0 = SW, 1 = SE, 2 = NW, 3 = NE
const POS: [(i32, i32); 4] = [(-1, -1), (1, -1), (-1, 1), (1, 1)];

#[derive(Clone, Debug)]
struct Diagram {
    nodes: Vec<Node>,
    partner: Vec<usize>,
    free_loops: usize,
}

fn through(node: Node, k: usize) -> usize {
    match node {
        Node::Cross(_) => 3 - k,
        Node::Vert => k ^ 2,
        Node::Horiz => k ^ 1,
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
    fn fresh(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }
}

fn build(w: &TangleWord) -> Diagram {
    assert_eq!((w.src(), w.dst()), (0, 0));
    let crossings = w.slices().iter().filter(|s| s.is_crossing()).count();
    let mut dsu = Dsu((0..4 * crossings).collect());
    let mut nodes = Vec::new();
    let mut level: Vec<usize> = Vec::new();
    for s in w.slices() {
        match *s {
            Slice::Cup(p) => {
                let (a, b) = (dsu.fresh(), dsu.fresh());
                dsu.union(a, b);
                level.splice(p - 1..p - 1, [a, b]);
            }
            Slice::Cap(p) => {
                let (a, b) = (level[p - 1], level[p]);
                dsu.union(a, b);
                level.drain(p - 1..=p);
            }
            Slice::Cross { pos, positive } => {
                let c = nodes.len();
                nodes.push(Node::Cross(if positive { 1 } else { -1 }));
                dsu.union(level[pos - 1], 4 * c);
                dsu.union(level[pos], 4 * c + 1);
                level[pos - 1] = 4 * c + 2;
                level[pos] = 4 * c + 3;
            }
        }
    }
    let ports = 4 * crossings;
    let mut partner = vec![usize::MAX; ports];
    let mut by_root: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for p in 0..ports {
        by_root.entry(dsu.find(p)).or_default().push(p);
    }
    for v in by_root.values() {
        assert_eq!(v.len(), 2);
        partner[v[0]] = v[1];
        partner[v[1]] = v[0];
    }
    let mut roots: Vec<usize> = (ports..dsu.0.len()).map(|t| dsu.find(t)).collect();
    roots.sort_unstable();
    roots.dedup();
    let free_loops = roots.iter().filter(|&&r| !by_root.contains_key(&r)).count();
    Diagram {
        nodes,
        partner,
        free_loops,
    }
}

fn cross(u: (i32, i32), v: (i32, i32)) -> i32 {
    u.0 * v.1 - u.1 * v.0
}

fn eval(d: &Diagram) -> RatFunc {
    let n = d.nodes.len();
    let mut seen = vec![false; 4 * n];
    // per node: first visit (component, over?, direction), second visit
    let mut visits: Vec<Vec<(usize, bool, (i32, i32))>> = vec![Vec::new(); n];
    let mut components = d.free_loops;
    let mut bad = None;
    // start each component at its largest unvisited port
    for start in (0..4 * n).rev() {
        if seen[start] {
            continue;
        }
        let comp = components;
        components += 1;
        let mut p = start;
        while !seen[p] {
            let (c, k) = (p / 4, p % 4);
            let q = 4 * c + through(d.nodes[c], k);
            seen[p] = true;
            seen[q] = true;
            if let Node::Cross(sign) = d.nodes[c] {
                let over = (sign == 1) == (k == 0 || k == 3);
                let dir = (POS[q % 4].0 - POS[k].0, POS[q % 4].1 - POS[k].1);
                if visits[c].is_empty() && !over && bad.is_none() {
                    bad = Some(c);
                }
                visits[c].push((comp, over, dir));
            }
            p = d.partner[q];
        }
    }
    if let Some(c) = bad {
        let Node::Cross(sign) = d.nodes[c] else { unreachable!() };
        let with = |node| {
            let mut e = d.clone();
            e.nodes[c] = node;
            eval(&e)
        };
        let z = RatFunc::z().scale_int(sign as i64);
        let smoothed = &with(Node::Vert) - &with(Node::Horiz);
        return &with(Node::Cross(-sign)) + &(&z * &smoothed);
    }
    let mut writhe = 0;
    for v in &visits {
        if v.len() == 2 && v[0].0 == v[1].0 {
            let (over, under) = if v[0].1 { (v[0].2, v[1].2) } else { (v[1].2, v[0].2) };
            writhe += cross(over, under).signum();
        }
    }
    &RatFunc::alpha().pow(writhe).unwrap() * &RatFunc::delta().pow(components as i32).unwrap()
}

pub fn oracle(w: &TangleWord) -> RatFunc {
    eval(&build(w))
}

