//! Young diagrams, cell contents, the scalar `c_lambda`, and up-down tableaux.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::coeff::{LaurentPoly, RatFunc};
use crate::error::{Result, SkeinError};

/// Default cap on up-down tableau length.
pub const UPDOWN_BOUND: usize = 8;

/// A partition `rows[0] >= rows[1] >= ... >= 1`. The empty diagram has no rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The single-cell diagram.
    pub fn cell() -> Self {
        Self { rows: vec![1] }
    }

    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(SkeinError::InvalidArgument(format!(
                "partition {rows:?} has a zero row"
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(SkeinError::InvalidArgument(format!(
                "partition {rows:?} is not weakly decreasing"
            )));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let width = self.rows.first().copied().unwrap_or(0);
        let rows = (0..width)
            .map(|j| self.rows.iter().filter(|&&r| r > j).count())
            .collect();
        Self { rows }
    }

    /// Cells `(i, j)`, 1-based, in row-reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
            .collect()
    }

    /// `cn(c) = j - i` for every cell, in row-reading order.
    pub fn contents(&self) -> Vec<i32> {
        self.cells()
            .into_iter()
            .map(|(i, j)| j as i32 - i as i32)
            .collect()
    }

    /// `(s - s^-1) (a * sum s^{2cn(c)} - a^-1 * sum s^{-2cn(c)})`.
    pub fn c_lambda(&self) -> RatFunc {
        let mut sum = LaurentPoly::zero();
        for cn in self.contents() {
            sum.add_term((1, 2 * cn), 1.into());
            sum.add_term((-1, -2 * cn), (-1).into());
        }
        &RatFunc::z() * &RatFunc::from_poly(sum)
    }

    /// Diagrams obtained by adding one cell.
    pub fn add_moves(&self) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        for i in 0..=self.rows.len() {
            let len = self.rows.get(i).copied().unwrap_or(0);
            let above = if i == 0 { usize::MAX } else { self.rows[i - 1] };
            if len < above {
                let mut rows = self.rows.clone();
                if i == rows.len() {
                    rows.push(1);
                } else {
                    rows[i] += 1;
                }
                out.push(Self { rows });
            }
        }
        out
    }

    /// Diagrams obtained by removing one cell (the removable corners).
    pub fn remove_moves(&self) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        for i in 0..self.rows.len() {
            let below = self.rows.get(i + 1).copied().unwrap_or(0);
            if self.rows[i] > below {
                let mut rows = self.rows.clone();
                rows[i] -= 1;
                if rows[i] == 0 {
                    rows.pop();
                }
                out.push(Self { rows });
            }
        }
        out
    }

    /// All diagrams differing from this one by exactly one cell, adds first.
    pub fn corner_moves(&self) -> Vec<YoungDiagram> {
        let mut v = self.add_moves();
        v.extend(self.remove_moves());
        v
    }

    /// Content of the cell that distinguishes `self` from `smaller`, when
    /// `smaller` is `self` with one corner removed.
    pub fn removed_cell_content(&self, smaller: &YoungDiagram) -> Option<i32> {
        if smaller.size() + 1 != self.size() {
            return None;
        }
        for (i, &len) in self.rows.iter().enumerate() {
            let other = smaller.rows.get(i).copied().unwrap_or(0);
            if other + 1 == len {
                let mut rows = self.rows.clone();
                rows[i] -= 1;
                if rows[i] == 0 {
                    rows.pop();
                }
                if rows == smaller.rows {
                    return Some(len as i32 - (i as i32 + 1));
                }
                return None;
            } else if other != len {
                return None;
            }
        }
        None
    }

    /// All partitions of `n`, lexicographically ascending on rows.
    pub fn partitions(n: usize) -> Vec<YoungDiagram> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if rem == 0 {
                out.push(YoungDiagram { rows: cur.clone() });
                return;
            }
            for k in 1..=rem.min(max) {
                cur.push(k);
                go(rem - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// `2,1` or `-` for the empty diagram.
impl FromStr for YoungDiagram {
    type Err = SkeinError;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Self::empty());
        }
        let rows = s
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|_| SkeinError::Parse {
                    line: 0,
                    msg: format!("bad partition part {p:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

/// A sequence of diagrams starting at the single cell, each step adding or
/// removing exactly one cell.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct UpDownTableau {
    shapes: Vec<YoungDiagram>,
}

impl UpDownTableau {
    pub fn new(shapes: Vec<YoungDiagram>) -> Result<Self> {
        if shapes.first() != Some(&YoungDiagram::cell()) {
            return Err(SkeinError::InvalidArgument(
                "up-down tableau must start at the single cell".into(),
            ));
        }
        for w in shapes.windows(2) {
            if !w[0].corner_moves().contains(&w[1]) {
                return Err(SkeinError::InvalidArgument(format!(
                    "{} -> {} is not a single-cell move",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self { shapes })
    }

    pub fn shapes(&self) -> &[YoungDiagram] {
        &self.shapes
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn last(&self) -> &YoungDiagram {
        self.shapes.last().expect("tableau is nonempty")
    }

    /// The tableau with its last shape removed, `None` at length 1.
    pub fn parent(&self) -> Option<UpDownTableau> {
        (self.shapes.len() > 1).then(|| Self {
            shapes: self.shapes[..self.shapes.len() - 1].to_vec(),
        })
    }
}

impl fmt::Display for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shapes.iter().map(|d| format!("({d})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All up-down tableaux of length `n` in lexicographic order, with counts
/// `m_lambda(n)` per final shape.
pub fn enumerate_updown(
    n: usize,
    bound: usize,
) -> Result<(Vec<UpDownTableau>, BTreeMap<YoungDiagram, usize>)> {
    if n == 0 {
        return Err(SkeinError::InvalidArgument("tableau length must be >= 1".into()));
    }
    if n > bound {
        return Err(SkeinError::BoundExceeded {
            what: "tableau length",
            value: n,
            bound,
        });
    }
    let mut paths = vec![vec![YoungDiagram::cell()]];
    for _ in 1..n {
        let mut next = Vec::new();
        for p in &paths {
            for d in p.last().unwrap().corner_moves() {
                let mut q = p.clone();
                q.push(d);
                next.push(q);
            }
        }
        paths = next;
    }
    let mut out: Vec<UpDownTableau> = paths
        .into_iter()
        .map(|shapes| UpDownTableau { shapes })
        .collect();
    out.sort();
    let mut counts = BTreeMap::new();
    for t in &out {
        *counts.entry(t.last().clone()).or_insert(0) += 1;
    }
    Ok((out, counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn contents_of_small_diagrams() {
        assert!(YoungDiagram::empty().contents().is_empty());
        assert_eq!(YoungDiagram::cell().contents(), vec![0]);
        let mut c = yd(&[2, 1]).contents();
        c.sort();
        assert_eq!(c, vec![-1, 0, 1]);
    }

    #[test]
    fn c_lambda_values() {
        assert!(YoungDiagram::empty().c_lambda().is_zero());
        let a_minus = RatFunc::from_poly(&LaurentPoly::alpha() - &LaurentPoly::monomial(1, -1, 0));
        assert_eq!(YoungDiagram::cell().c_lambda(), &RatFunc::z() * &a_minus);
        // (2): contents {0, 1}
        let inner = LaurentPoly::from_terms([
            ((1, 0), 1.into()),
            ((1, 2), 1.into()),
            ((-1, 0), (-1).into()),
            ((-1, -2), (-1).into()),
        ]);
        assert_eq!(yd(&[2]).c_lambda(), &RatFunc::z() * &RatFunc::from_poly(inner));
    }

    #[test]
    fn corner_moves_examples() {
        assert_eq!(YoungDiagram::empty().corner_moves(), vec![YoungDiagram::cell()]);
        let mut m = YoungDiagram::cell().corner_moves();
        m.sort();
        assert_eq!(m, vec![YoungDiagram::empty(), yd(&[1, 1]), yd(&[2])]);
        let mut m = yd(&[2, 1]).corner_moves();
        m.sort();
        let mut want = vec![yd(&[3, 1]), yd(&[2, 2]), yd(&[2, 1, 1]), yd(&[1, 1]), yd(&[2])];
        want.sort();
        assert_eq!(m, want);
    }

    #[test]
    fn updown_small() {
        let (t, c) = enumerate_updown(1, UPDOWN_BOUND).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(c.len(), 1);
        let (t, c) = enumerate_updown(2, UPDOWN_BOUND).unwrap();
        assert_eq!(t.len(), 3);
        assert!(c.values().all(|&m| m == 1));
        assert!(c.contains_key(&YoungDiagram::empty()));
        assert!(enumerate_updown(9, UPDOWN_BOUND).is_err());
        assert!(enumerate_updown(0, UPDOWN_BOUND).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("2,1".parse::<YoungDiagram>().unwrap(), yd(&[2, 1]));
        assert_eq!("-".parse::<YoungDiagram>().unwrap(), YoungDiagram::empty());
        assert!("1,2".parse::<YoungDiagram>().is_err());
        assert_eq!(yd(&[3, 1]).to_string(), "3,1");
    }

    #[test]
    fn removed_cell() {
        assert_eq!(yd(&[2]).removed_cell_content(&YoungDiagram::cell()), Some(1));
        assert_eq!(yd(&[1, 1]).removed_cell_content(&YoungDiagram::cell()), Some(-1));
        assert_eq!(yd(&[2, 1]).removed_cell_content(&yd(&[2])), Some(-1));
        assert_eq!(yd(&[2, 1]).removed_cell_content(&yd(&[1, 1])), Some(1));
        assert_eq!(yd(&[2, 1]).removed_cell_content(&yd(&[3])), None);
    }

    #[test]
    fn transpose_involution() {
        for n in 0..6 {
            for p in YoungDiagram::partitions(n) {
                assert_eq!(p.transpose().transpose(), p);
            }
        }
    }
}
