use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::gcd::gcd;
use super::laurent::LaurentPoly;
use crate::error::{Result, SkeinError};

/// Element of the fraction field `Q(a, s)`, kept in canonical form.
///
/// Canonical form: the denominator is a polynomial in `a, s` divisible by
/// neither variable, numerator and denominator share no nonunit factor, and
/// the denominator's greatest monomial (lex on `(a, s)`) has a positive
/// coefficient. Structural equality is therefore field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    pub fn monomial(c: i64, a: i32, s: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, a, s))
    }

    pub fn alpha() -> Self {
        Self::from_poly(LaurentPoly::alpha())
    }

    pub fn s() -> Self {
        Self::from_poly(LaurentPoly::s())
    }

    /// `s - s^-1`
    pub fn z() -> Self {
        Self::from_poly(&LaurentPoly::s() - &LaurentPoly::monomial(1, 0, -1))
    }

    /// Value of a trivial loop: `(a - a^-1)/(s - s^-1) + 1`.
    pub fn delta() -> Self {
        let a_part = Self::from_poly(&LaurentPoly::alpha() - &LaurentPoly::monomial(1, -1, 0));
        &(&a_part / &Self::z()) + &Self::one()
    }

    /// Builds `num/den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(SkeinError::DivisionByZero);
        }
        Ok(Self::canonicalize(num, den))
    }

    fn canonicalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (da, ds) = den.min_exponents().unwrap();
        let mut num = num.shift(-da, -ds);
        let mut den = den.shift(-da, -ds);
        if den.is_monomial() {
            // den is a nonzero integer constant here
            let c = den.leading().unwrap().1.clone();
            let g = {
                use num_integer::Integer;
                num.integer_content().gcd(&c)
            };
            let g = if c.is_negative() { -g } else { g };
            return Self {
                num: num.div_integer(&g),
                den: den.div_integer(&g),
            };
        }
        let g = gcd(&num, &den);
        if !g.is_one() {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
            // dividing may leave a monomial factor in den only if g had one; re-shift
            let (da, ds) = den.min_exponents().unwrap();
            num = num.shift(-da, -ds);
            den = den.shift(-da, -ds);
        }
        if den.leading().unwrap().1.is_negative() {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inverse()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(Self {
            num: base.num.pow(e),
            den: base.den.pow(e),
        }
        .recanon())
    }

    fn recanon(self) -> Self {
        Self::canonicalize(self.num, self.den)
    }

    /// Substitute `s -> s^-1`.
    pub fn invert_s(&self) -> Self {
        Self::canonicalize(self.num.invert_s(), self.den.invert_s())
    }

    /// Substitute `a -> a^-1`.
    pub fn invert_a(&self) -> Self {
        Self::canonicalize(self.num.invert_a(), self.den.invert_a())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        Self::canonicalize(self.num.scale(&BigInt::from(k)), self.den.clone())
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::canonicalize(&self.num + &o.num, self.den.clone());
        }
        RatFunc::canonicalize(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.is_laurent() && o.is_laurent() {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        // Cross-cancel first to keep the final gcd small.
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = o.den.exact_div(&g1).unwrap();
        let n2 = o.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RatFunc::canonicalize(&n1 * &n2, &d1 * &d2)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] for a `Result`.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self.checked_div(o).expect("division by zero RatFunc")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc { (&self).$f(&rhs) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: &RatFunc) -> RatFunc { (&self).$f(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}
