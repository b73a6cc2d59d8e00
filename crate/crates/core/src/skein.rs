//! Reduction of tangle words modulo the Kauffman skein relations.
//!
//! Relations, in the crossing convention of [`crate::tangle`]:
//!
//! * `X+ - X- = (s - s^-1) (id - hook)`
//! * a kink with a positive self-crossing equals `a` times the strand
//! * a crossingless trivial loop equals `delta`
//!
//! A word is reduced by walking its components in a fixed order (arcs by
//! smallest endpoint, then closed loops) and switching the first crossing
//! met on its under-strand. Switching uses the first relation and produces
//! two smoothings with one crossing fewer, so the measure
//! `(crossings, crossings met from below)` strictly decreases. A word with no
//! such crossing is descending: it equals `a^w delta^k` times the canonical
//! lift of its matching, where `w` is the total self-writhe and `k` the number
//! of closed loops.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use parking_lot::RwLock;
use rand::Rng;

use crate::coeff::RatFunc;
use crate::error::{Result, SkeinError};
use crate::matching::BrauerMatching;
use crate::tangle::{Slice, TangleWord};

// ---------------------------------------------------------------------------
// Diagram traversal

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Port {
    Boundary(usize),
    /// slot: 0 = SW, 1 = SE, 2 = NW, 3 = NE
    Cross { slice: usize, slot: u8 },
    Cup,
}

struct Graph {
    ports: Vec<Port>,
    link: Vec<usize>,
    through: Vec<usize>,
    boundary_port: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl Graph {
    fn build(w: &TangleWord) -> Graph {
        let mut g = Graph {
            ports: Vec::new(),
            link: Vec::new(),
            through: Vec::new(),
            boundary_port: Vec::new(),
        };
        let add = |g: &mut Graph, p: Port| {
            g.ports.push(p);
            g.link.push(NONE);
            g.through.push(NONE);
            g.ports.len() - 1
        };
        let connect = |g: &mut Graph, a: usize, b: usize| {
            g.link[a] = b;
            g.link[b] = a;
        };
        let n_pts = w.src() + w.dst();
        for i in 0..n_pts {
            let id = add(&mut g, Port::Boundary(i));
            g.boundary_port.push(id);
        }
        let mut cur: Vec<usize> = (0..w.src()).collect();
        for (k, s) in w.slices().iter().enumerate() {
            match *s {
                Slice::Cross { pos, .. } => {
                    let i = pos - 1;
                    let ids: Vec<usize> = (0..4u8)
                        .map(|slot| add(&mut g, Port::Cross { slice: k, slot }))
                        .collect();
                    g.through[ids[0]] = ids[3];
                    g.through[ids[3]] = ids[0];
                    g.through[ids[1]] = ids[2];
                    g.through[ids[2]] = ids[1];
                    connect(&mut g, cur[i], ids[0]);
                    connect(&mut g, cur[i + 1], ids[1]);
                    cur[i] = ids[2];
                    cur[i + 1] = ids[3];
                }
                Slice::Cap(pos) => {
                    let i = pos - 1;
                    connect(&mut g, cur[i], cur[i + 1]);
                    cur.drain(i..=i + 1);
                }
                Slice::Cup(pos) => {
                    let i = pos - 1;
                    let a = add(&mut g, Port::Cup);
                    let b = add(&mut g, Port::Cup);
                    g.through[a] = b;
                    g.through[b] = a;
                    cur.splice(i..i, [a, b]);
                }
            }
        }
        for (k, &p) in cur.iter().enumerate() {
            let top = g.boundary_port[w.src() + k];
            connect(&mut g, p, top);
        }
        g
    }
}

/// Direction of travel when entering a crossing at `slot`.
fn direction(slot: u8) -> (i32, i32) {
    match slot {
        0 => (1, 1),
        1 => (-1, 1),
        2 => (1, -1),
        _ => (-1, -1),
    }
}

fn is_over(positive: bool, entry_slot: u8) -> bool {
    // X+: the SW-NE strand is over; X-: the SE-NW strand is over.
    let sw_ne = entry_slot == 0 || entry_slot == 3;
    sw_ne == positive
}

/// Result of walking a word's components in canonical order.
#[derive(Clone, Debug)]
pub struct Traversal {
    pub matching: BrauerMatching,
    /// Slice indices of crossings first met on the under-strand, in walk order.
    pub bad: Vec<usize>,
    pub loops: usize,
    /// Sum of signs of self-crossings over all components.
    pub self_writhe: i32,
}

pub fn traverse(w: &TangleWord) -> Traversal {
    let g = Graph::build(w);
    let n_pts = w.src() + w.dst();
    let slices = w.slices();
    let mut visited = vec![false; g.ports.len()];
    // per crossing slice: (component, over?, direction) of the first visit
    let mut first: HashMap<usize, (usize, bool, (i32, i32))> = HashMap::new();
    let mut partner = vec![NONE; n_pts];
    let mut bad = Vec::new();
    let mut writhe = 0i32;
    let mut component = 0usize;

    let visit = |q: usize,
                     comp: usize,
                     first: &mut HashMap<usize, (usize, bool, (i32, i32))>,
                     bad: &mut Vec<usize>,
                     writhe: &mut i32| {
        if let Port::Cross { slice, slot } = g.ports[q] {
            let Slice::Cross { positive, .. } = slices[slice] else {
                unreachable!()
            };
            let over = is_over(positive, slot);
            let dir = direction(slot);
            match first.get(&slice) {
                None => {
                    first.insert(slice, (comp, over, dir));
                    if !over {
                        bad.push(slice);
                    }
                }
                Some(&(c0, over0, dir0)) => {
                    if c0 == comp {
                        let (o, u) = if over0 { (dir0, dir) } else { (dir, dir0) };
                        *writhe += (o.0 * u.1 - o.1 * u.0).signum();
                    }
                }
            }
        }
    };

    // Arcs, by smallest endpoint.
    for start in 0..n_pts {
        if partner[start] != NONE {
            continue;
        }
        let mut cur = g.boundary_port[start];
        visited[cur] = true;
        loop {
            let q = g.link[cur];
            visited[q] = true;
            if let Port::Boundary(end) = g.ports[q] {
                partner[start] = end;
                partner[end] = start;
                break;
            }
            visit(q, component, &mut first, &mut bad, &mut writhe);
            cur = g.through[q];
            visited[cur] = true;
        }
        component += 1;
    }

    // Closed loops, from the lowest unvisited port.
    let mut loops = 0;
    for p in 0..g.ports.len() {
        if visited[p] {
            continue;
        }
        loops += 1;
        let mut cur = p;
        visited[cur] = true;
        loop {
            let q = g.link[cur];
            visited[q] = true;
            visit(q, component, &mut first, &mut bad, &mut writhe);
            cur = g.through[q];
            visited[cur] = true;
            if cur == p {
                break;
            }
        }
        component += 1;
    }

    Traversal {
        matching: BrauerMatching::from_partner_unchecked(w.src(), w.dst(), partner),
        bad,
        loops,
        self_writhe: writhe,
    }
}

/// Resets every crossing sign so the word is descending.
pub fn make_descending(w: &TangleWord) -> TangleWord {
    let t = traverse(w);
    let mut slices = w.slices().to_vec();
    for k in t.bad {
        if let Slice::Cross { pos, positive } = slices[k] {
            slices[k] = Slice::Cross {
                pos,
                positive: !positive,
            };
        }
    }
    TangleWord::new(w.src(), slices).expect("sign changes keep the width chain")
}

// ---------------------------------------------------------------------------
// Skein elements

/// A `RatFunc`-linear combination of canonical lifts with common boundary.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkeinElement {
    src: usize,
    dst: usize,
    terms: BTreeMap<BrauerMatching, RatFunc>,
}

impl SkeinElement {
    pub fn zero(src: usize, dst: usize) -> Self {
        Self {
            src,
            dst,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(m: BrauerMatching) -> Self {
        Self::term(RatFunc::one(), m)
    }

    pub fn term(c: RatFunc, m: BrauerMatching) -> Self {
        let mut e = Self::zero(m.src(), m.dst());
        e.add_term(m, c);
        e
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(BrauerMatching::identity(n))
    }

    /// Scalar multiple of the empty diagram.
    pub fn scalar(c: RatFunc) -> Self {
        Self::term(c, BrauerMatching::identity(0))
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn terms(&self) -> &BTreeMap<BrauerMatching, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, m: &BrauerMatching) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: BrauerMatching, c: RatFunc) {
        debug_assert_eq!((m.src(), m.dst()), (self.src, self.dst));
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let sum = &*v + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SkeinElement, k: &RatFunc) {
        debug_assert_eq!((other.src, other.dst), (self.src, self.dst));
        if k.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * k);
        }
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        let mut out = Self::zero(self.src, self.dst);
        out.add_scaled(self, k);
        out
    }

    /// The coefficient of the empty diagram when `src = dst = 0`.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        (self.src == 0 && self.dst == 0).then(|| self.coeff(&BrauerMatching::identity(0)))
    }

    /// Splits into the part on hook-free matchings and the part on matchings with a hook.
    pub fn split_hooks(&self) -> (SkeinElement, SkeinElement) {
        let mut free = Self::zero(self.src, self.dst);
        let mut hooked = Self::zero(self.src, self.dst);
        for (m, c) in &self.terms {
            if m.hook_count() == 0 {
                free.add_term(m.clone(), c.clone());
            } else {
                hooked.add_term(m.clone(), c.clone());
            }
        }
        (free, hooked)
    }

    fn check_same_shape(&self, o: &Self) -> Result<()> {
        if (self.src, self.dst) != (o.src, o.dst) {
            return Err(SkeinError::ArityMismatch {
                expected: self.src + self.dst,
                found: o.src + o.dst,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check_same_shape(o)?;
        let mut out = self.clone();
        out.add_scaled(o, &RatFunc::one());
        Ok(out)
    }

    /// Canonical text: one line per term, `"<coeff>" * <matching>`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0\n".to_string();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("\"{c}\" * {m}\n"))
            .collect()
    }
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})*{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}->{}] {}", self.src, self.dst, self)
    }
}

/// Panics on boundary mismatch; use [`SkeinElement::checked_add`] otherwise.
impl Add for &SkeinElement {
    type Output = SkeinElement;
    fn add(self, o: &SkeinElement) -> SkeinElement {
        self.checked_add(o).expect("boundary mismatch in skein addition")
    }
}

impl Sub for &SkeinElement {
    type Output = SkeinElement;
    fn sub(self, o: &SkeinElement) -> SkeinElement {
        self + &(-o)
    }
}

impl Neg for &SkeinElement {
    type Output = SkeinElement;
    fn neg(self) -> SkeinElement {
        self.scale(&RatFunc::from_int(-1))
    }
}

// ---------------------------------------------------------------------------
// Engine

/// Reduction engine with an optional memo cache keyed by the exact word.
///
/// The cache is guarded by a reader-writer lock: concurrent reductions may
/// read it freely and insert finished results. Cached values are immutable.
pub struct Engine {
    cache: Option<RwLock<HashMap<TangleWord, Arc<SkeinElement>>>>,
    lifts: RwLock<HashMap<BrauerMatching, Arc<TangleWord>>>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(true)
    }
}

impl Engine {
    pub fn new(use_cache: bool) -> Self {
        Self {
            cache: use_cache.then(|| RwLock::new(HashMap::new())),
            lifts: RwLock::new(HashMap::new()),
        }
    }

    pub fn cache_enabled(&self) -> bool {
        self.cache.is_some()
    }

    pub fn cache_len(&self) -> usize {
        self.cache.as_ref().map_or(0, |c| c.read().len())
    }

    pub fn lift(&self, m: &BrauerMatching) -> Arc<TangleWord> {
        if let Some(w) = self.lifts.read().get(m) {
            return w.clone();
        }
        let w = Arc::new(m.lift());
        self.lifts.write().insert(m.clone(), w.clone());
        w
    }

    /// Canonical form of a single word.
    pub fn reduce_word(&self, w: &TangleWord) -> SkeinElement {
        self.reduce_arc(w).as_ref().clone()
    }

    fn reduce_arc(&self, w: &TangleWord) -> Arc<SkeinElement> {
        if let Some(cache) = &self.cache {
            if let Some(v) = cache.read().get(w) {
                return v.clone();
            }
        }
        let v = Arc::new(self.reduce_uncached(w));
        if let Some(cache) = &self.cache {
            cache.write().insert(w.clone(), v.clone());
        }
        v
    }

    fn reduce_uncached(&self, w: &TangleWord) -> SkeinElement {
        let t = traverse(w);
        if t.bad.is_empty() {
            return descending_value(&t);
        }
        let (switched, smooth_id, smooth_hook, sign) = resolve(w, t.bad[0]);
        combine(
            &self.reduce_arc(&switched),
            &self.reduce_arc(&smooth_id),
            &self.reduce_arc(&smooth_hook),
            sign,
        )
    }

    /// Reduction that switches a uniformly random offending crossing at each
    /// step, bypassing the engine cache. Each distinct subword gets its own
    /// random choice. Used to test confluence.
    pub fn reduce_randomized<R: Rng>(&self, w: &TangleWord, rng: &mut R) -> SkeinElement {
        fn go<R: Rng>(w: &TangleWord, rng: &mut R, memo: &mut HashMap<TangleWord, SkeinElement>) -> SkeinElement {
            if let Some(v) = memo.get(w) {
                return v.clone();
            }
            let t = traverse(w);
            let v = if t.bad.is_empty() {
                descending_value(&t)
            } else {
                let k = t.bad[rng.gen_range(0..t.bad.len())];
                let (switched, smooth_id, smooth_hook, sign) = resolve(w, k);
                let a = go(&switched, rng, memo);
                let b = go(&smooth_id, rng, memo);
                let c = go(&smooth_hook, rng, memo);
                combine(&a, &b, &c, sign)
            };
            memo.insert(w.clone(), v.clone());
            v
        }
        go(w, rng, &mut HashMap::new())
    }

    /// Reduction that counts steps and checks the termination measure
    /// decreases strictly at every step. Returns the element and the step count.
    pub fn reduce_instrumented(&self, w: &TangleWord) -> Result<(SkeinElement, usize)> {
        fn go(w: &TangleWord, steps: &mut usize) -> Result<SkeinElement> {
            *steps += 1;
            let t = traverse(w);
            if t.bad.is_empty() {
                return Ok(descending_value(&t));
            }
            let measure = (w.crossing_count(), t.bad.len());
            let (switched, smooth_id, smooth_hook, sign) = resolve(w, t.bad[0]);
            for child in [&switched, &smooth_id, &smooth_hook] {
                let m = (child.crossing_count(), traverse(child).bad.len());
                if m >= measure {
                    return Err(SkeinError::CheckFailed(format!(
                        "measure did not decrease: {measure:?} -> {m:?} for {child}"
                    )));
                }
            }
            let z = RatFunc::z();
            let zs = if sign { z } else { -z };
            let mut out = go(&switched, steps)?;
            out.add_scaled(&go(&smooth_id, steps)?, &zs);
            out.add_scaled(&go(&smooth_hook, steps)?, &-zs);
            Ok(out)
        }
        let mut steps = 0;
        let v = go(w, &mut steps)?;
        Ok((v, steps))
    }

    /// Reduces a formal combination of words sharing one boundary.
    pub fn reduce(&self, terms: &[(RatFunc, TangleWord)]) -> Result<SkeinElement> {
        let Some((_, w0)) = terms.first() else {
            return Err(SkeinError::InvalidArgument("empty combination".into()));
        };
        let mut out = SkeinElement::zero(w0.src(), w0.dst());
        for (c, w) in terms {
            if (w.src(), w.dst()) != (w0.src(), w0.dst()) {
                return Err(SkeinError::ArityMismatch {
                    expected: w0.src() + w0.dst(),
                    found: w.src() + w.dst(),
                });
            }
            out.add_scaled(&self.reduce_arc(w), c);
        }
        Ok(out)
    }

    /// Kauffman polynomial (regular isotopy, unknot = `delta`) of a closed word.
    pub fn kauffman_poly(&self, w: &TangleWord) -> Result<RatFunc> {
        if w.src() != 0 || w.dst() != 0 {
            return Err(SkeinError::ArityMismatch {
                expected: 0,
                found: w.src() + w.dst(),
            });
        }
        Ok(self.reduce_arc(w).coeff(&BrauerMatching::identity(0)))
    }

    /// `f` stacked on top of `g`.
    pub fn compose(&self, f: &SkeinElement, g: &SkeinElement) -> Result<SkeinElement> {
        if f.src() != g.dst() {
            return Err(SkeinError::ArityMismatch {
                expected: g.dst(),
                found: f.src(),
            });
        }
        let mut out = SkeinElement::zero(g.src(), f.dst());
        for (mf, cf) in f.terms() {
            let wf = self.lift(mf);
            for (mg, cg) in g.terms() {
                let wg = self.lift(mg);
                let w = TangleWord::compose(&wf, &wg)?;
                out.add_scaled(&self.reduce_arc(&w), &(cf * cg));
            }
        }
        Ok(out)
    }

    /// `f` to the left of `g`.
    pub fn tensor(&self, f: &SkeinElement, g: &SkeinElement) -> SkeinElement {
        let mut out = SkeinElement::zero(f.src() + g.src(), f.dst() + g.dst());
        for (mf, cf) in f.terms() {
            let wf = self.lift(mf);
            for (mg, cg) in g.terms() {
                let wg = self.lift(mg);
                let w = TangleWord::tensor(&wf, &wg);
                out.add_scaled(&self.reduce_arc(&w), &(cf * cg));
            }
        }
        out
    }

    /// Sum of word-level closures, reduced to a scalar.
    pub fn closure_scalar(&self, x: &SkeinElement) -> Result<RatFunc> {
        let mut acc = RatFunc::zero();
        for (m, c) in x.terms() {
            let w = TangleWord::closure(&self.lift(m))?;
            acc = &acc + &(c * &self.kauffman_poly(&w)?);
        }
        Ok(acc)
    }

    /// Pre-composes and post-composes a word around every term of `x`:
    /// `above * x * below`, reduced.
    pub fn sandwich(
        &self,
        above: &TangleWord,
        x: &SkeinElement,
        below: &TangleWord,
    ) -> Result<SkeinElement> {
        let mut out = SkeinElement::zero(below.src(), above.dst());
        for (m, c) in x.terms() {
            let w = TangleWord::compose(&TangleWord::compose(above, &self.lift(m))?, below)?;
            out.add_scaled(&self.reduce_arc(&w), c);
        }
        Ok(out)
    }
}

/// `switched + sign z (smooth_id - smooth_hook)`.
fn combine(switched: &SkeinElement, id: &SkeinElement, hook: &SkeinElement, sign: bool) -> SkeinElement {
    let z = RatFunc::z();
    let zs = if sign { z } else { -z };
    let mut out = switched.clone();
    out.add_scaled(id, &zs);
    out.add_scaled(hook, &-zs);
    out
}

fn descending_value(t: &Traversal) -> SkeinElement {
    let c = &RatFunc::alpha()
        .pow(t.self_writhe)
        .expect("alpha is invertible")
        * &RatFunc::delta().pow(t.loops as i32).expect("nonnegative power");
    SkeinElement::term(c, t.matching.clone())
}

/// Applies `X+ - X- = z (id - hook)` at slice `k`. Returns
/// `(switched, id-smoothing, hook-smoothing, was_positive)` so that
/// `w = switched + sign * z * (id - hook)` with `sign = +1` for `X+`.
fn resolve(w: &TangleWord, k: usize) -> (TangleWord, TangleWord, TangleWord, bool) {
    let Slice::Cross { pos, positive } = w.slices()[k] else {
        panic!("slice {k} is not a crossing");
    };
    let mut sw = w.slices().to_vec();
    sw[k] = Slice::Cross {
        pos,
        positive: !positive,
    };
    let mut id = w.slices().to_vec();
    id.remove(k);
    let mut hook = w.slices().to_vec();
    hook.splice(k..=k, [Slice::Cap(pos), Slice::Cup(pos)]);
    let mk = |s: Vec<Slice>| TangleWord::new(w.src(), s).expect("local move keeps widths");
    (mk(sw), mk(id), mk(hook), positive)
}

/// Upper bound on reduction steps for a word with `c` crossings.
pub fn measure_bound(c: usize) -> u128 {
    // S(c) = (c + 1)(1 + 2 S(c - 1)), S(0) = 1
    (1..=c as u128).fold(1u128, |s, k| (k + 1).saturating_mul(1 + 2 * s))
}
