//! Framed planar tangles stored as words of elementary horizontal slices.
//!
//! A word is read bottom to top. `src` counts the bottom endpoints and `dst`
//! the top endpoints. Positions are 1-based. Conventions:
//!
//! * `X+ i`: strands at `i` and `i+1` cross; the strand running from bottom
//!   left to top right passes over.
//! * `X- i`: the mirror image; the strand from bottom right to top left is over.
//! * `CAP i`: the strands at `i` and `i+1` are joined by a maximum (width - 2).
//! * `CUP i`: a minimum is born at positions `i`, `i+1` (width + 2).
//!
//! Framing is the blackboard framing of the drawn word.

use std::fmt;

use crate::error::{Result, SkeinError};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Slice {
    Cross { pos: usize, positive: bool },
    Cap(usize),
    Cup(usize),
}

impl Slice {
    pub fn pos(self) -> usize {
        match self {
            Slice::Cross { pos, .. } | Slice::Cap(pos) | Slice::Cup(pos) => pos,
        }
    }

    pub fn shifted(self, by: usize) -> Slice {
        match self {
            Slice::Cross { pos, positive } => Slice::Cross {
                pos: pos + by,
                positive,
            },
            Slice::Cap(p) => Slice::Cap(p + by),
            Slice::Cup(p) => Slice::Cup(p + by),
        }
    }

    /// Width above the slice given the width below, or an error if it does not fit.
    pub fn apply_width(self, width: usize) -> Result<usize> {
        match self {
            Slice::Cross { pos, .. } if pos >= 1 && pos < width => Ok(width),
            Slice::Cap(pos) if pos >= 1 && pos < width => Ok(width - 2),
            Slice::Cup(pos) if pos >= 1 && pos <= width + 1 => Ok(width + 2),
            s => Err(SkeinError::InvalidSlice(format!("{s} does not fit width {width}"))),
        }
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, Slice::Cross { .. })
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slice::Cross { pos, positive: true } => write!(f, "X+ {pos}"),
            Slice::Cross { pos, positive: false } => write!(f, "X- {pos}"),
            Slice::Cap(p) => write!(f, "CAP {p}"),
            Slice::Cup(p) => write!(f, "CUP {p}"),
        }
    }
}

/// A tangle diagram as a validated slice word.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct TangleWord {
    src: usize,
    dst: usize,
    slices: Vec<Slice>,
}

impl TangleWord {
    /// Validates the width chain.
    pub fn new(src: usize, slices: Vec<Slice>) -> Result<Self> {
        let mut w = src;
        for s in &slices {
            w = s.apply_width(w)?;
        }
        Ok(Self { src, dst: w, slices })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            src: n,
            dst: n,
            slices: Vec::new(),
        }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| s.is_crossing()).count()
    }

    /// Positive crossing `e_i` on `n` strands.
    pub fn e(n: usize, i: usize) -> Result<Self> {
        Self::new(n, vec![Slice::Cross { pos: i, positive: true }])
    }

    /// Negative crossing `e_i^-1` on `n` strands.
    pub fn e_inv(n: usize, i: usize) -> Result<Self> {
        Self::new(n, vec![Slice::Cross { pos: i, positive: false }])
    }

    /// Hook `h_i`: a cap at `i` followed by a cup at `i`.
    pub fn h(n: usize, i: usize) -> Result<Self> {
        Self::new(n, vec![Slice::Cap(i), Slice::Cup(i)])
    }

    /// A single cup (`0 -> 2`).
    pub fn cup() -> Self {
        Self {
            src: 0,
            dst: 2,
            slices: vec![Slice::Cup(1)],
        }
    }

    /// A single cap (`2 -> 0`).
    pub fn cap() -> Self {
        Self {
            src: 2,
            dst: 0,
            slices: vec![Slice::Cap(1)],
        }
    }

    /// `f` stacked on top of `g`.
    pub fn compose(f: &TangleWord, g: &TangleWord) -> Result<Self> {
        if f.src != g.dst {
            return Err(SkeinError::ArityMismatch {
                expected: g.dst,
                found: f.src,
            });
        }
        let mut slices = g.slices.clone();
        slices.extend_from_slice(&f.slices);
        Ok(Self {
            src: g.src,
            dst: f.dst,
            slices,
        })
    }

    /// `f` placed to the left of `g`.
    pub fn tensor(f: &TangleWord, g: &TangleWord) -> Self {
        let mut slices = f.slices.clone();
        slices.extend(g.slices.iter().map(|s| s.shifted(f.dst)));
        Self {
            src: f.src + g.src,
            dst: f.dst + g.dst,
            slices,
        }
    }

    /// Closure joining top point `k` to bottom point `k` by nested arcs on the right.
    pub fn closure(f: &TangleWord) -> Result<Self> {
        if f.src != f.dst {
            return Err(SkeinError::ArityMismatch {
                expected: f.src,
                found: f.dst,
            });
        }
        let n = f.src;
        let mut slices: Vec<Slice> = (1..=n).map(Slice::Cup).collect();
        slices.extend_from_slice(&f.slices);
        slices.extend((1..=n).rev().map(Slice::Cap));
        Ok(Self {
            src: 0,
            dst: 0,
            slices,
        })
    }

    /// Identity on `n` strands with one loop around all of them. The loop
    /// is born to the right, passes in front of every strand going left and
    /// behind every strand coming back.
    pub fn encircling(n: usize) -> Self {
        let mut slices = vec![Slice::Cup(n + 1)];
        slices.extend((1..=n).rev().map(|pos| Slice::Cross { pos, positive: false }));
        slices.extend((1..=n).map(|pos| Slice::Cross { pos, positive: false }));
        slices.push(Slice::Cap(n + 1));
        Self {
            src: n,
            dst: n,
            slices,
        }
    }

    /// Full twist of the last strand around the first `n - 1` strands
    /// (`sigma_{n-1} ... sigma_1 sigma_1 ... sigma_{n-1}`), positive or negative.
    pub fn last_strand_full_twist(n: usize, positive: bool) -> Self {
        let mut slices = Vec::new();
        if n >= 2 {
            slices.extend((1..n).rev().map(|pos| Slice::Cross { pos, positive }));
            slices.extend((1..n).map(|pos| Slice::Cross { pos, positive }));
        }
        Self {
            src: n,
            dst: n,
            slices,
        }
    }

    /// The diagram rotated a half turn about a horizontal axis in the page:
    /// read top to bottom with caps and cups exchanged. Crossing signs are
    /// preserved by this rotation.
    pub fn upside_down(&self) -> Self {
        let slices = self
            .slices
            .iter()
            .rev()
            .map(|s| match *s {
                Slice::Cap(p) => Slice::Cup(p),
                Slice::Cup(p) => Slice::Cap(p),
                c => c,
            })
            .collect();
        Self {
            src: self.dst,
            dst: self.src,
            slices,
        }
    }

    /// Renders the line-oriented file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("TANGLE src={}\n", self.src);
        for s in &self.slices {
            out.push_str(&format!("{s}\n"));
        }
        out.push_str(&format!("END dst={}\n", self.dst));
        out
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}->{}:", self.src, self.dst)?;
        for s in &self.slices {
            write!(f, " {s};")?;
        }
        write!(f, "]")
    }
}

/// One block of a tangle file, with its optional coefficient text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleBlock {
    pub coeff: Option<String>,
    pub word: TangleWord,
}

fn parse_err(line: usize, msg: impl Into<String>) -> SkeinError {
    SkeinError::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_kv(line_no: usize, text: &str, key: &str) -> Result<usize> {
    let v = text
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| parse_err(line_no, format!("expected `{key}=<n>`")))?;
    v.trim()
        .parse()
        .map_err(|_| parse_err(line_no, format!("bad integer in `{text}`")))
}

/// Parses one or more `TANGLE ... END` blocks. A block header may carry a
/// coefficient prefix: `"<ratfunc>" * TANGLE src=2`. Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_tangle_file(text: &str) -> Result<Vec<TangleBlock>> {
    let mut blocks = Vec::new();
    let mut current: Option<(Option<String>, usize, usize, Vec<Slice>)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match current.as_mut() {
            None => {
                let (coeff, rest) = if let Some(r) = line.strip_prefix('"') {
                    let end = r
                        .find('"')
                        .ok_or_else(|| parse_err(line_no, "unterminated coefficient"))?;
                    let rest = r[end + 1..].trim_start();
                    let rest = rest
                        .strip_prefix('*')
                        .ok_or_else(|| parse_err(line_no, "expected `*` after coefficient"))?;
                    (Some(r[..end].to_string()), rest.trim())
                } else {
                    (None, line)
                };
                let hdr = rest
                    .strip_prefix("TANGLE")
                    .ok_or_else(|| parse_err(line_no, "expected `TANGLE src=<n>`"))?;
                let src = parse_kv(line_no, hdr.trim(), "src")?;
                current = Some((coeff, src, src, Vec::new()));
            }
            Some((coeff, src, width, slices)) => {
                let mut parts = line.split_whitespace();
                let op = parts.next().unwrap_or_default();
                if op == "END" {
                    let dst = parse_kv(line_no, parts.next().unwrap_or_default(), "dst")?;
                    if parts.next().is_some() {
                        return Err(parse_err(line_no, "trailing tokens after END"));
                    }
                    if dst != *width {
                        return Err(parse_err(
                            line_no,
                            format!("END dst={dst} but the word ends at width {width}"),
                        ));
                    }
                    let word = TangleWord {
                        src: *src,
                        dst,
                        slices: std::mem::take(slices),
                    };
                    blocks.push(TangleBlock {
                        coeff: coeff.take(),
                        word,
                    });
                    current = None;
                    continue;
                }
                let pos: usize = parts
                    .next()
                    .ok_or_else(|| parse_err(line_no, "missing position"))?
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad position"))?;
                if parts.next().is_some() {
                    return Err(parse_err(line_no, "trailing tokens"));
                }
                let slice = match op {
                    "X+" => Slice::Cross { pos, positive: true },
                    "X-" => Slice::Cross { pos, positive: false },
                    "CAP" => Slice::Cap(pos),
                    "CUP" => Slice::Cup(pos),
                    other => return Err(parse_err(line_no, format!("unknown slice `{other}`"))),
                };
                *width = slice
                    .apply_width(*width)
                    .map_err(|e| parse_err(line_no, e.to_string()))?;
                slices.push(slice);
            }
        }
    }
    if current.is_some() {
        return Err(parse_err(text.lines().count(), "missing END"));
    }
    Ok(blocks)
}

/// Parses a file that must contain exactly one uncoefficiented block.
pub fn parse_tangle(text: &str) -> Result<TangleWord> {
    let mut blocks = parse_tangle_file(text)?;
    if blocks.len() != 1 {
        return Err(parse_err(0, format!("expected one tangle, found {}", blocks.len())));
    }
    Ok(blocks.pop().unwrap().word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn width_chain_is_validated() {
        assert!(TangleWord::new(1, vec![Slice::Cap(1)]).is_err());
        assert!(TangleWord::new(2, vec![Slice::Cross { pos: 2, positive: true }]).is_err());
        let w = TangleWord::new(1, vec![Slice::Cup(2), Slice::Cap(1)]).unwrap();
        assert_eq!(w.dst(), 1);
    }

    #[test]
    fn compose_identity_and_arity() {
        let e = TangleWord::e(3, 1).unwrap();
        assert_eq!(TangleWord::compose(&TangleWord::identity(3), &e).unwrap(), e);
        assert_eq!(TangleWord::compose(&e, &TangleWord::identity(3)).unwrap(), e);
        assert!(TangleWord::compose(&e, &TangleWord::identity(2)).is_err());
        let ee = TangleWord::compose(&e, &TangleWord::e_inv(3, 1).unwrap()).unwrap();
        assert_eq!(ee.crossing_count(), 2);
        assert_eq!((ee.src(), ee.dst()), (3, 3));
    }

    #[test]
    fn tensor_examples() {
        let x = TangleWord::h(2, 1).unwrap();
        assert_eq!(TangleWord::tensor(&x, &TangleWord::identity(0)), x);
        assert_eq!(
            TangleWord::tensor(&TangleWord::identity(1), &TangleWord::identity(1)),
            TangleWord::identity(2)
        );
        let t = TangleWord::tensor(&TangleWord::identity(1), &x);
        assert_eq!(t.slices(), &[Slice::Cap(2), Slice::Cup(2)]);
        assert_eq!(TangleWord::tensor(&x, &TangleWord::identity(1)).src(), 3);
    }

    #[test]
    fn closure_shapes() {
        assert_eq!(
            TangleWord::closure(&TangleWord::identity(0)).unwrap().slices().len(),
            0
        );
        let c2 = TangleWord::closure(&TangleWord::identity(2)).unwrap();
        assert_eq!(
            c2.slices(),
            &[Slice::Cup(1), Slice::Cup(2), Slice::Cap(2), Slice::Cap(1)]
        );
        assert!(TangleWord::closure(&TangleWord::cup()).is_err());
    }

    #[test]
    fn file_round_trip() {
        let w = TangleWord::compose(&TangleWord::h(3, 2).unwrap(), &TangleWord::e(3, 1).unwrap())
            .unwrap();
        assert_eq!(parse_tangle(&w.to_text()).unwrap(), w);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "TANGLE src=2\nX+ 1\nCAP 2\nEND dst=0\n";
        match parse_tangle(bad) {
            Err(SkeinError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let bad = "TANGLE src=2\nX+ 1\nEND dst=1\n";
        assert!(matches!(parse_tangle(bad), Err(SkeinError::Parse { line: 3, .. })));
        assert!(parse_tangle("TANGLE src=1\n").is_err());
        assert!(parse_tangle("TANGLE src=1\nFOO 1\nEND dst=1").is_err());
    }

    #[test]
    fn coefficient_prefix() {
        let txt = "\"s - s^-1\" * TANGLE src=2\nX+ 1\nEND dst=2\nTANGLE src=2\nEND dst=2\n";
        let b = parse_tangle_file(txt).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].coeff.as_deref(), Some("s - s^-1"));
        assert_eq!(b[1].coeff, None);
    }
}
