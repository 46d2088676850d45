//! Reader for the canonical polynomial text (and general rational expressions).

use std::str::FromStr;

use num_bigint::BigInt;

use super::mpoly::MPoly;
use super::ratfun::RatFun;
use super::var::Var;
use super::Rat;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::parse(1, self.pos + 1, msg))
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

    fn expr(&mut self) -> Result<RatFun> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = acc.div(&d).map_err(|_| Error::parse(1, at + 1, "division by zero"))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFun> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let Ok(e) = digits.parse::<i32>() else {
                return self.err("expected integer exponent");
            };
            let e = if neg { -e } else { e };
            return base
                .pow(e)
                .map_err(|_| Error::parse(1, start + 1, "negative power of zero"));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n = BigInt::from_str(s).expect("digits");
                Ok(RatFun::from(Rat::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' || c == b'@' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric()
                        || self.src[self.pos] == b'_'
                        || self.src[self.pos] == b'@')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(RatFun::var(Var::new(name)))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(crate) fn parse_ratfun(s: &str) -> Result<RatFun> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl FromStr for RatFun {
    type Err = Error;
    fn from_str(s: &str) -> Result<RatFun> {
        parse_ratfun(s)
    }
}

impl FromStr for MPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<MPoly> {
        let r = parse_ratfun(s)?;
        r.as_polynomial()
            .ok_or_else(|| Error::parse(1, 1, format!("{s:?} is not a polynomial")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_canonical_text() {
        for s in ["q^2*t - 3/2*q + 1", "0", "-q", "q^3 + q^2*u + q*u + u^2", "k^2 - 7*k"] {
            let p: MPoly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn rational_expressions() {
        let r: RatFun = "(q^2 - 1)/(q - 1)".parse().unwrap();
        assert_eq!(r.to_string(), "q + 1");
        let r: RatFun = "q^-2".parse().unwrap();
        assert_eq!(r.to_string(), "1/q^2");
        assert!("q +".parse::<MPoly>().is_err());
        assert!("1/q".parse::<MPoly>().is_err());
        match "q $ t".parse::<MPoly>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 3),
            other => panic!("unexpected {other:?}"),
        }
    }
}
