//! Brauer matchings of tangle endpoints and their canonical lifts.
//!
//! Endpoints are indexed bottom `0..src` left to right, then top
//! `src..src+dst` left to right. The canonical lift of a matching is a
//! crossing-minimal-per-pair word that is *descending*: arcs are ordered by
//! their smaller endpoint, each arc is traversed from that endpoint, and at
//! every crossing the strand visited first passes over. Such a lift has no
//! self-crossings, so it carries no framing correction.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Result, SkeinError};
use crate::tangle::{Slice, TangleWord};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BrauerMatching {
    src: usize,
    dst: usize,
    partner: Vec<usize>,
}

impl BrauerMatching {
    pub fn new(src: usize, dst: usize, partner: Vec<usize>) -> Result<Self> {
        let n = src + dst;
        if partner.len() != n {
            return Err(SkeinError::InvalidArgument(format!(
                "matching has {} entries, expected {n}",
                partner.len()
            )));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= n || p == i || partner[p] != i {
                return Err(SkeinError::InvalidArgument(format!(
                    "partner array {partner:?} is not a perfect matching"
                )));
            }
        }
        Ok(Self { src, dst, partner })
    }

    pub(crate) fn from_partner_unchecked(src: usize, dst: usize, partner: Vec<usize>) -> Self {
        Self { src, dst, partner }
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|i| if i < n { i + n } else { i - n }).collect();
        Self { src: n, dst: n, partner }
    }

    /// Matching of bottom point `i` to top point `perm[i]`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut partner = vec![usize::MAX; 2 * n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || partner[n + p] != usize::MAX {
                return Err(SkeinError::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
            partner[i] = n + p;
            partner[n + p] = i;
        }
        Ok(Self { src: n, dst: n, partner })
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn is_bottom(&self, i: usize) -> bool {
        i < self.src
    }

    /// Arcs joining two points on the same side.
    pub fn hook_count(&self) -> usize {
        (0..self.partner.len())
            .filter(|&i| i < self.partner[i] && self.is_bottom(i) == self.is_bottom(self.partner[i]))
            .count()
    }

    pub fn through_count(&self) -> usize {
        (0..self.src).filter(|&i| !self.is_bottom(self.partner[i])).count()
    }

    /// `Some(perm)` when every arc is a through-strand.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        if self.src != self.dst || self.hook_count() != 0 {
            return None;
        }
        Some((0..self.src).map(|i| self.partner[i] - self.src).collect())
    }

    /// Arcs as `(min, max)` endpoint pairs sorted by `min`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&i| i < self.partner[i])
            .map(|i| (i, self.partner[i]))
            .collect()
    }

    /// All matchings with the given boundary, in canonical order.
    pub fn enumerate(src: usize, dst: usize) -> Vec<BrauerMatching> {
        fn go(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
                out.push(partner.clone());
                return;
            };
            for j in first + 1..partner.len() {
                if partner[j] == usize::MAX {
                    partner[first] = j;
                    partner[j] = first;
                    go(partner, out);
                    partner[first] = usize::MAX;
                    partner[j] = usize::MAX;
                }
            }
        }
        let n = src + dst;
        if n % 2 == 1 {
            return Vec::new();
        }
        let mut raw = Vec::new();
        go(&mut vec![usize::MAX; n], &mut raw);
        let mut out: Vec<_> = raw
            .into_iter()
            .map(|partner| Self { src, dst, partner })
            .collect();
        out.sort();
        out
    }

    /// Canonical lift: crossings chosen so the diagram is descending.
    pub fn lift(&self) -> TangleWord {
        let skeleton = self.skeleton();
        crate::skein::make_descending(&skeleton)
    }

    /// Planar skeleton of the lift (crossing signs not yet fixed).
    fn skeleton(&self) -> TangleWord {
        let (bottom_slices, bottom_order) = cap_off(&(0..self.src).collect::<Vec<_>>(), &self.partner);
        let top_labels: Vec<usize> = (self.src..self.src + self.dst).collect();
        let (top_slices, top_order) = cap_off(&top_labels, &self.partner);

        // Through-strands: sort the bottom survivors into the order of their
        // top partners by adjacent swaps.
        let target: Vec<usize> = top_order.iter().map(|&t| self.partner[t]).collect();
        let mut cur = bottom_order;
        let mut middle = Vec::new();
        let rank = |x: usize| target.iter().position(|&t| t == x).unwrap();
        let m = cur.len();
        for pass in 0..m {
            for i in 0..m.saturating_sub(1 + pass) {
                if rank(cur[i]) > rank(cur[i + 1]) {
                    cur.swap(i, i + 1);
                    middle.push(Slice::Cross { pos: i + 1, positive: true });
                }
            }
        }

        let mut slices = bottom_slices;
        slices.extend(middle);
        let top = TangleWord::new(self.dst, top_slices).expect("top skeleton is valid");
        slices.extend_from_slice(top.upside_down().slices());
        TangleWord::new(self.src, slices).expect("lift skeleton is valid")
    }
}

/// Caps off same-side pairs among `labels` (innermost pairs first), returning
/// the slices and the surviving labels in order.
fn cap_off(labels: &[usize], partner: &[usize]) -> (Vec<Slice>, Vec<usize>) {
    let mut cur = labels.to_vec();
    let mut slices = Vec::new();
    loop {
        let pos = |x: usize| cur.iter().position(|&y| y == x);
        let best = cur
            .iter()
            .enumerate()
            .filter_map(|(i, &x)| pos(partner[x]).filter(|&j| j > i).map(|j| (j - i, i, j)))
            .min();
        let Some((_, i, mut j)) = best else { break };
        while j > i + 1 {
            slices.push(Slice::Cross { pos: j, positive: true });
            cur.swap(j - 1, j);
            j -= 1;
        }
        slices.push(Slice::Cap(i + 1));
        cur.drain(i..=i + 1);
    }
    (slices, cur)
}

impl Ord for BrauerMatching {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.src, self.dst, self.hook_count(), &self.partner).cmp(&(
            o.src,
            o.dst,
            o.hook_count(),
            &o.partner,
        ))
    }
}

impl PartialOrd for BrauerMatching {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Arcs as `b1-t2` style pairs, e.g. `{b1-t2 b2-t1}`.
impl fmt::Display for BrauerMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |i: usize| {
            if i < self.src {
                format!("b{}", i + 1)
            } else {
                format!("t{}", i - self.src + 1)
            }
        };
        let parts: Vec<String> = self
            .arcs()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", name(a), name(b)))
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

impl fmt::Debug for BrauerMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
