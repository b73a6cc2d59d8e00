use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::error::{Result, SkeinError};

/// Parses expressions over `a`, `s`, integers, `+ - * / ^` and parentheses.
/// The rendered form of any [`RatFunc`] parses back to the same value.
/// `delta` and `z` are accepted as names for the loop value and `s - s^-1`.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl std::str::FromStr for RatFunc {
    type Err = SkeinError;
    fn from_str(s: &str) -> Result<Self> {
        parse_ratfunc(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> SkeinError {
        SkeinError::Parse {
            line: 0,
            msg: format!("{msg} at column {} in coefficient", self.pos + 1),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.signed_int()?;
            let e: i32 = e
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let digits = self.digits()?;
        let v: i64 = digits.parse().map_err(|_| self.err("bad integer"))?;
        Ok(if neg { -v } else { v })
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                let n: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                Ok(RatFunc::from_poly(LaurentPoly::monomial(n, 0, 0)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                match &self.src[start..self.pos] {
                    b"a" | b"alpha" => Ok(RatFunc::alpha()),
                    b"s" => Ok(RatFunc::s()),
                    b"delta" => Ok(RatFunc::delta()),
                    b"z" => Ok(RatFunc::z()),
                    _ => {
                        self.pos = start;
                        Err(self.err("unknown symbol"))
                    }
                }
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rendered_forms() {
        for x in [
            RatFunc::delta(),
            RatFunc::z(),
            RatFunc::monomial(-3, 2, -1),
            RatFunc::zero(),
            RatFunc::delta().inverse().unwrap(),
        ] {
            assert_eq!(parse_ratfunc(&x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn general_expressions() {
        let v = parse_ratfunc("(s - s^-1)*(a - a^-1)").unwrap();
        let w = &RatFunc::z() * &RatFunc::from_poly(
            &LaurentPoly::alpha() - &LaurentPoly::monomial(1, -1, 0),
        );
        assert_eq!(v, w);
        assert!(parse_ratfunc("1/0").is_err());
        assert!(parse_ratfunc("q + 1").is_err());
        assert!(parse_ratfunc("(a + 1").is_err());
    }
}
