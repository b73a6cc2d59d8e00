//! Polynomial gcd over `Z[a, s]`.
//!
//! Polynomials are viewed as univariate in `s` with coefficients in `Z[a]`,
//! and the gcd is computed with primitive pseudo-remainder sequences at both
//! levels (content removal after every step keeps coefficients small).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;

/// Dense polynomial in `a` over `Z`, index = exponent, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct UPoly(Vec<BigInt>);

impl UPoly {
    fn zero() -> Self {
        UPoly(Vec::new())
    }

    fn constant(c: BigInt) -> Self {
        let mut p = UPoly(vec![c]);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigInt {
        self.0.last().expect("lead of zero polynomial")
    }

    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        let mut p = UPoly(out);
        p.trim();
        p
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = self.0.get(i).cloned().unwrap_or_default();
            let y = o.0.get(i).cloned().unwrap_or_default();
            out.push(x - y);
        }
        let mut p = UPoly(out);
        p.trim();
        p
    }

    fn scale(&self, k: &BigInt) -> Self {
        let mut p = UPoly(self.0.iter().map(|c| c * k).collect());
        p.trim();
        p
    }

    fn div_scalar(&self, k: &BigInt) -> Self {
        UPoly(self.0.iter().map(|c| c / k).collect())
    }

    fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// Pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let dl = d.lead().clone();
        while !r.is_zero() && r.degree() >= d.degree() {
            let shift = r.degree() - d.degree();
            let rl = r.lead().clone();
            r = r.scale(&dl);
            let mut t = vec![BigInt::zero(); shift];
            t.extend(d.0.iter().map(|c| c * &rl));
            r = r.sub(&UPoly(t));
        }
        r
    }

    /// Exact division; panics if not exact.
    fn div_exact(&self, d: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.degree() - d.degree() + 1];
        let dl = d.lead().clone();
        while !r.is_zero() {
            assert!(r.degree() >= d.degree(), "inexact division in Z[a]");
            let shift = r.degree() - d.degree();
            let (c, rem) = r.lead().div_rem(&dl);
            assert!(rem.is_zero(), "inexact division in Z[a]");
            let mut t = vec![BigInt::zero(); shift];
            t.extend(d.0.iter().map(|x| x * &c));
            q[shift] = c;
            r = r.sub(&UPoly(t));
        }
        let mut q = UPoly(q);
        q.trim();
        q
    }

    fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive_with_content();
        }
        if o.is_zero() {
            return self.primitive_with_content();
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().scale(&c)
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    fn try_div_exact(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.degree() - d.degree() + 1];
        let dl = d.lead().clone();
        while !r.is_zero() {
            if r.degree() < d.degree() {
                return None;
            }
            let shift = r.degree() - d.degree();
            let (c, rem) = r.lead().div_rem(&dl);
            if !rem.is_zero() {
                return None;
            }
            let mut t = vec![BigInt::zero(); shift];
            t.extend(d.0.iter().map(|x| x * &c));
            q[shift] = c;
            r = r.sub(&UPoly(t));
        }
        let mut q = UPoly(q);
        q.trim();
        Some(q)
    }

    fn primitive_with_content(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if self.lead().is_negative() {
            self.scale(&-BigInt::one())
        } else {
            self.clone()
        }
    }
}

/// Dense polynomial in `s` with `Z[a]` coefficients.
#[derive(Clone, Debug)]
struct SPoly(Vec<UPoly>);

impl SPoly {
    fn from_laurent(p: &LaurentPoly) -> Self {
        let (ma, ms) = p.min_exponents().unwrap_or((0, 0));
        let mut rows: Vec<UPoly> = Vec::new();
        for (&(a, s), c) in p.terms() {
            let (a, s) = ((a - ma) as usize, (s - ms) as usize);
            if rows.len() <= s {
                rows.resize(s + 1, UPoly::zero());
            }
            let row = &mut rows[s].0;
            if row.len() <= a {
                row.resize(a + 1, BigInt::zero());
            }
            row[a] = c.clone();
        }
        SPoly(rows)
    }

    fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.0.iter().enumerate().flat_map(|(s, row)| {
            row.0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(a, c)| ((a as i32, s as i32), c.clone()))
        }))
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn content(&self) -> UPoly {
        self.0.iter().fold(UPoly::zero(), |g, c| g.gcd(c))
    }

    fn div_coeff(&self, d: &UPoly) -> Self {
        SPoly(self.0.iter().map(|c| c.div_exact(d)).collect())
    }

    fn mul_coeff(&self, k: &UPoly) -> Self {
        let mut p = SPoly(self.0.iter().map(|c| c.mul(k)).collect());
        p.trim();
        p
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let z = UPoly::zero();
            let x = self.0.get(i).unwrap_or(&z);
            let y = o.0.get(i).unwrap_or(&z);
            out.push(x.sub(y));
        }
        let mut p = SPoly(out);
        p.trim();
        p
    }

    fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        let mut p = self.div_coeff(&c);
        if p.0.last().unwrap().lead().is_negative() {
            p = p.mul_coeff(&UPoly::constant(-BigInt::one()));
        }
        p
    }

    fn max_norm(&self) -> BigInt {
        self.0
            .iter()
            .flat_map(|row| row.0.iter())
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    fn integer_content(&self) -> BigInt {
        self.0
            .iter()
            .flat_map(|row| row.0.iter())
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn div_integer(&self, k: &BigInt) -> Self {
        SPoly(self.0.iter().map(|row| row.div_scalar(k)).collect())
    }

    fn eval_s(&self, x: &BigInt) -> UPoly {
        let mut acc = UPoly::zero();
        for row in self.0.iter().rev() {
            acc = acc.scale(x);
            let n = acc.0.len().max(row.0.len());
            acc.0.resize(n, BigInt::zero());
            for (a, c) in acc.0.iter_mut().zip(&row.0) {
                *a += c;
            }
            acc.trim();
        }
        acc
    }

    fn divides(&self, d: &Self) -> bool {
        if d.is_zero() {
            return false;
        }
        let mut r = self.clone();
        let dl = d.0.last().unwrap();
        while !r.is_zero() {
            if r.degree() < d.degree() {
                return false;
            }
            let shift = r.degree() - d.degree();
            let Some(q) = r.0.last().unwrap().try_div_exact(dl) else {
                return false;
            };
            let mut t = vec![UPoly::zero(); shift];
            t.extend(d.0.iter().map(|c| c.mul(&q)));
            r = r.sub(&SPoly(t));
        }
        true
    }

    fn prem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let dl = d.0.last().unwrap().clone();
        while !r.is_zero() && r.degree() >= d.degree() {
            let shift = r.degree() - d.degree();
            let rl = r.0.last().unwrap().clone();
            r = r.mul_coeff(&dl);
            let mut t = vec![UPoly::zero(); shift];
            t.extend(d.0.iter().map(|c| c.mul(&rl)));
            r = r.sub(&SPoly(t));
        }
        r
    }
}

/// Gcd of two Laurent polynomials in `Z[a, s]` after shifting both to
/// polynomials not divisible by `a` or `s`. The result has nonnegative
/// exponents and positive leading coefficient in `(s, a)` order.
pub fn gcd(x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
    if x.is_zero() {
        return normalize_sign(&SPoly::from_laurent(y).to_laurent());
    }
    if y.is_zero() {
        return normalize_sign(&SPoly::from_laurent(x).to_laurent());
    }
    if x.is_monomial() || y.is_monomial() {
        let g = x.integer_content().gcd(&y.integer_content());
        return LaurentPoly::monomial(g, 0, 0);
    }
    let (px, py) = (SPoly::from_laurent(x), SPoly::from_laurent(y));
    if let Some(g) = heuristic_gcd(&px, &py) {
        return normalize_sign(&g.to_laurent());
    }
    prs(px, py)
}

/// Same contract as [`gcd`], always through the primitive remainder sequence.
pub fn prs_gcd(x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
    if x.is_zero() || y.is_zero() || x.is_monomial() || y.is_monomial() {
        return gcd(x, y);
    }
    prs(SPoly::from_laurent(x), SPoly::from_laurent(y))
}

fn prs(px: SPoly, py: SPoly) -> LaurentPoly {
    let cont = px.content().gcd(&py.content());
    let (mut a, mut b) = (px.primitive(), py.primitive());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.prem(&b);
        a = b;
        b = r.primitive();
    }
    let g = a.primitive().mul_coeff(&cont);
    normalize_sign(&g.to_laurent())
}

/// Heuristic gcd: evaluate `s` at a large integer, take the gcd in `Z[a]`,
/// read the `s`-coefficients back as balanced base-`x` digits, and accept the
/// candidate only if it divides both inputs (which makes it the gcd).
fn heuristic_gcd(p: &SPoly, q: &SPoly) -> Option<SPoly> {
    let (cp, cq) = (p.integer_content(), q.integer_content());
    let c = cp.gcd(&cq);
    let (p, q) = (p.div_integer(&cp), q.div_integer(&cq));
    let mut x: BigInt = 2 * p.max_norm().min(q.max_norm()) + 29;
    for _ in 0..6 {
        let (ep, eq) = (p.eval_s(&x), q.eval_s(&x));
        if !ep.is_zero() && !eq.is_zero() {
            let h = ep.gcd(&eq);
            let cand = interpolate(&h, &x);
            if !cand.is_zero() {
                let cc = cand.integer_content();
                let cand = cand.div_integer(&cc);
                if p.divides(&cand) && q.divides(&cand) {
                    return Some(cand.mul_coeff(&UPoly::constant(c)));
                }
            }
        }
        x = &x * 73794 / 27011 + 1;
    }
    None
}

/// Splits each integer coefficient of `h` into balanced base-`x` digits,
/// digit `j` becoming the coefficient of `s^j`.
fn interpolate(h: &UPoly, x: &BigInt) -> SPoly {
    let half = x / 2;
    let mut rows: Vec<UPoly> = Vec::new();
    for (i, c) in h.0.iter().enumerate() {
        let mut v = c.clone();
        let mut j = 0;
        while !v.is_zero() {
            let mut d = v.mod_floor(x);
            if d > half {
                d -= x;
            }
            v = (&v - &d) / x;
            if rows.len() <= j {
                rows.resize(j + 1, UPoly::zero());
            }
            let row = &mut rows[j].0;
            if row.len() <= i {
                row.resize(i + 1, BigInt::zero());
            }
            row[i] = d;
            j += 1;
        }
    }
    for r in rows.iter_mut() {
        r.trim();
    }
    let mut p = SPoly(rows);
    p.trim();
    p
}

fn normalize_sign(p: &LaurentPoly) -> LaurentPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -p,
        _ => p.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i32, i32)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(c, a, s)| ((a, s), BigInt::from(c))))
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = p(&[(1, 1, 0), (1, 0, 1), (2, 0, 0)]); // a + s + 2
        let g = p(&[(1, 0, 2), (-1, 0, 0)]); // s^2 - 1
        let h = p(&[(1, 1, 1), (-3, 0, 0)]); // a s - 3
        let x = &f * &g;
        let y = &f * &h;
        let d = gcd(&x, &y);
        assert_eq!(d, f);
    }

    #[test]
    fn coprime_gives_unit() {
        let f = p(&[(1, 1, 0), (1, 0, 0)]);
        let g = p(&[(1, 0, 1), (1, 0, 0)]);
        assert_eq!(gcd(&f, &g), LaurentPoly::one());
    }

    #[test]
    fn integer_content_is_kept() {
        let f = p(&[(6, 1, 0), (4, 0, 0)]);
        let g = p(&[(9, 0, 1), (6, 0, 0)]);
        assert_eq!(gcd(&f, &g), LaurentPoly::constant(1));
        let g2 = p(&[(3, 1, 0), (2, 0, 0)]);
        assert_eq!(gcd(&f, &g2.scale(&BigInt::from(4))), p(&[(6, 1, 0), (4, 0, 0)]));
    }
}
