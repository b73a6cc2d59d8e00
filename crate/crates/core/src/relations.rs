//! Checks the defining relations and derived generator identities in `K_2` and `K_3`.

use std::fmt;

use crate::bmw::{proportionality, CheckLine};
use crate::coeff::RatFunc;
use crate::error::Result;
use crate::skein::{Engine, SkeinElement};
use crate::tangle::{Slice, TangleWord};

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub lines: Vec<CheckLine>,
    /// The sign in `e_i h_i = h_i e_i = a^eps h_i`, when consistent.
    pub epsilon: Option<i32>,
}

impl RelationReport {
    pub fn all_ok(&self) -> bool {
        self.epsilon.is_some() && self.lines.iter().all(|l| l.ok)
    }

    pub fn first_failure(&self) -> Option<&CheckLine> {
        self.lines.iter().find(|l| !l.ok)
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        match self.epsilon {
            Some(e) => writeln!(f, "epsilon = {e}"),
            None => writeln!(f, "epsilon = inconsistent"),
        }
    }
}

fn word(src: usize, slices: Vec<Slice>) -> Result<TangleWord> {
    TangleWord::new(src, slices)
}

fn prod(ws: &[TangleWord]) -> Result<TangleWord> {
    // ws[0] on top
    let mut it = ws.iter().rev();
    let mut acc = it.next().expect("nonempty product").clone();
    for w in it {
        acc = TangleWord::compose(w, &acc)?;
    }
    Ok(acc)
}

pub fn relation_suite(engine: &Engine) -> Result<RelationReport> {
    let mut lines = Vec::new();
    let z = RatFunc::z();
    let delta = RatFunc::delta();
    let alpha = RatFunc::alpha();
    let r = |w: &TangleWord| engine.reduce_word(w);

    for (n, i) in [(2, 1), (3, 1), (3, 2)] {
        let lhs = &r(&TangleWord::e(n, i)?) - &r(&TangleWord::e_inv(n, i)?);
        let rhs = (&SkeinElement::identity(n) - &r(&TangleWord::h(n, i)?)).scale(&z);
        lines.push(CheckLine::compare(
            format!("(i) e{i} - e{i}^-1 = z(1 - h{i}) in K{n}"),
            &lhs,
            &rhs,
        ));
    }

    let xp = |pos| Slice::Cross { pos, positive: true };
    let xm = |pos| Slice::Cross { pos, positive: false };
    let a1 = SkeinElement::identity(1).scale(&alpha);
    let a1inv = SkeinElement::identity(1).scale(&alpha.inverse()?);
    for (name, w, want) in [
        ("(ii) right positive kink = a", word(1, vec![Slice::Cup(2), xp(1), Slice::Cap(2)])?, &a1),
        ("(ii) left positive kink = a", word(1, vec![Slice::Cup(1), xp(2), Slice::Cap(1)])?, &a1),
        ("(ii) right negative kink = a^-1", word(1, vec![Slice::Cup(2), xm(1), Slice::Cap(2)])?, &a1inv),
        ("(ii) left negative kink = a^-1", word(1, vec![Slice::Cup(1), xm(2), Slice::Cap(1)])?, &a1inv),
    ] {
        lines.push(CheckLine::compare(name, &r(&w), want));
    }

    let free_loop = word(0, vec![Slice::Cup(1), Slice::Cap(1)])?;
    lines.push(CheckLine::compare(
        "(iii) free loop = delta",
        &r(&free_loop),
        &SkeinElement::scalar(delta.clone()),
    ));
    let loop_beside = TangleWord::tensor(&TangleWord::identity(1), &free_loop);
    lines.push(CheckLine::compare(
        "(iii) strand with loop = delta strand",
        &r(&loop_beside),
        &SkeinElement::identity(1).scale(&delta),
    ));

    let h = |n, i| TangleWord::h(n, i);
    let e = |n, i| TangleWord::e(n, i);
    lines.push(CheckLine::compare(
        "h1 h1 = delta h1",
        &r(&prod(&[h(2, 1)?, h(2, 1)?])?),
        &r(&h(2, 1)?).scale(&delta),
    ));
    lines.push(CheckLine::compare(
        "h1 h2 h1 = h1",
        &r(&prod(&[h(3, 1)?, h(3, 2)?, h(3, 1)?])?),
        &r(&h(3, 1)?),
    ));
    lines.push(CheckLine::compare(
        "h2 h1 h2 = h2",
        &r(&prod(&[h(3, 2)?, h(3, 1)?, h(3, 2)?])?),
        &r(&h(3, 2)?),
    ));
    lines.push(CheckLine::compare(
        "e1 e2 e1 = e2 e1 e2",
        &r(&prod(&[e(3, 1)?, e(3, 2)?, e(3, 1)?])?),
        &r(&prod(&[e(3, 2)?, e(3, 1)?, e(3, 2)?])?),
    ));
    lines.push(CheckLine::compare(
        "e1 e1^-1 = 1",
        &r(&prod(&[e(2, 1)?, TangleWord::e_inv(2, 1)?])?),
        &SkeinElement::identity(2),
    ));

    // e_i h_i and h_i e_i against a^eps h_i
    let mut eps: Option<i32> = None;
    let mut consistent = true;
    for (n, i) in [(2, 1), (3, 1), (3, 2)] {
        let hi = r(&h(n, i)?);
        for (side, w) in [
            ("e h", prod(&[e(n, i)?, h(n, i)?])?),
            ("h e", prod(&[h(n, i)?, e(n, i)?])?),
        ] {
            let got = r(&w);
            let k = proportionality(&got, &hi);
            let this = match k {
                Some(ref c) if *c == alpha => Some(1),
                Some(ref c) if Some(c) == alpha.inverse().ok().as_ref() => Some(-1),
                _ => None,
            };
            match (this, eps) {
                (None, _) => consistent = false,
                (Some(t), None) => eps = Some(t),
                (Some(t), Some(e0)) if t != e0 => consistent = false,
                _ => {}
            }
            let detail = match &k {
                Some(c) => format!("scalar {c}"),
                None => format!("not a multiple of h{i}: {got}"),
            };
            lines.push(CheckLine::new(
                format!("{side} at i={i} in K{n} = a^eps h{i}"),
                this.is_some(),
                detail,
            ));
        }
    }
    Ok(RelationReport {
        lines,
        epsilon: if consistent { eps } else { None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let rep = relation_suite(&Engine::default()).unwrap();
        assert!(rep.all_ok(), "{rep}");
    }
}
