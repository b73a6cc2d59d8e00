use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponents of `a^i * s^j`. Ordered lexicographically by `(a, s)`.
pub type Monomial = (i32, i32);

/// Element of `Z[a, a^-1, s, s^-1]`, stored sparsely. Zero is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, a: i32, s: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, s), c);
        }
        Self { terms }
    }

    /// The variable `a` (alpha).
    pub fn alpha() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn s() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Greatest monomial and its coefficient.
    pub fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Componentwise minimum exponents; `None` for zero.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |(a, s), &(x, y)| (a.min(x), s.min(y))))
    }

    pub fn shift(&self, da: i32, ds: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, s), c)| ((a + da, s + ds), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    /// Integer content (positive gcd of all coefficients); zero for the zero polynomial.
    pub fn integer_content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn div_integer(&self, k: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c / k)).collect(),
        }
    }

    /// Substitute `s -> s^-1`.
    pub fn invert_s(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, s), c)| ((a, -s), c.clone())).collect(),
        }
    }

    /// Substitute `a -> a^-1`.
    pub fn invert_a(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, s), c)| ((-a, s), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division. Returns `None` unless `self = q * d` for a Laurent polynomial `q`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let (&(da, ds), dc) = d.terms.iter().next().unwrap();
            let mut q = Self::zero();
            for (&(a, s), c) in &self.terms {
                if (c % dc).is_zero() {
                    q.terms.insert((a - da, s - ds), c / dc);
                } else {
                    return None;
                }
            }
            return Some(q);
        }
        // Shift both to nonnegative exponents so the lex-leading division terminates.
        let (na, ns) = self.min_exponents().unwrap();
        let (da0, ds0) = d.min_exponents().unwrap();
        let mut rem = self.shift(-na, -ns);
        let den = d.shift(-da0, -ds0);
        let ((la, ls), lc) = den.leading().map(|(m, c)| (m, c.clone())).unwrap();
        let mut q = Self::zero();
        while let Some(((ra, rs), rc)) = rem.leading().map(|(m, c)| (m, c.clone())) {
            if ra < la || rs < ls || !(&rc % &lc).is_zero() {
                return None;
            }
            let t = Self::monomial(&rc / &lc, ra - la, rs - ls);
            rem = &rem - &(&t * &den);
            q.add_term((ra - la, rs - ls), rc / &lc);
        }
        Some(q.shift(na - da0, ns - ds0))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, a: i32, s: i32) -> fmt::Result {
    match (a, s) {
        (0, 0) => Ok(()),
        (a, 0) => write!(f, "a^{a}"),
        (0, s) => write!(f, "s^{s}"),
        (a, s) => write!(f, "a^{a}*s^{s}"),
    }
}

/// Terms in descending monomial order: `3*a^1*s^-2 - s^2 + 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(a, s), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if (a, s) == (0, 0) {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(f, a, s)?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a1, s1), c1) in &self.terms {
            for (&(a2, s2), c2) in &rhs.terms {
                out.add_term((a1 + a2, s1 + s2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$f(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
