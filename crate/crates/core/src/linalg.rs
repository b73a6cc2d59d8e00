//! Gaussian elimination over `RatFunc`.

use crate::coeff::RatFunc;
use crate::error::{Result, SkeinError};

/// Row-reduces `rows` in place and returns the pivot columns.
fn eliminate(rows: &mut Vec<Vec<RatFunc>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inverse().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<RatFunc>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m = rows.to_vec();
    eliminate(&mut m, ncols).len()
}

/// Solves `A x = b` for a possibly overdetermined system. Fails if the
/// solution is not unique or the system is inconsistent.
pub fn solve(a: &[Vec<RatFunc>], b: &[RatFunc]) -> Result<Vec<RatFunc>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<RatFunc>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = eliminate(&mut m, ncols);
    if pivots.len() < ncols {
        return Err(SkeinError::SingularSystem(format!(
            "rank {} < {ncols} unknowns",
            pivots.len()
        )));
    }
    if m.iter().skip(ncols).any(|row| !row[ncols].is_zero()) {
        return Err(SkeinError::SingularSystem("inconsistent system".into()));
    }
    Ok(m.iter().take(ncols).map(|row| row[ncols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(c: i64) -> RatFunc {
        RatFunc::from_int(c)
    }

    #[test]
    fn solves_overdetermined() {
        let a = vec![vec![r(1), r(1)], vec![r(1), r(-1)], vec![r(2), r(0)]];
        let b = vec![r(3), r(1), r(4)];
        assert_eq!(solve(&a, &b).unwrap(), vec![r(2), r(1)]);
        let bad = vec![r(3), r(1), r(5)];
        assert!(solve(&a, &bad).is_err());
    }

    #[test]
    fn rank_with_symbols() {
        let s = RatFunc::s();
        let rows = vec![vec![s.clone(), r(1)], vec![&s * &s, s.clone()]];
        assert_eq!(rank(&rows), 1);
        assert!(solve(&rows, &[r(0), r(0)]).is_err());
    }
}
