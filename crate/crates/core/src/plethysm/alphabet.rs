//! Formal alphabets and their power-sum images.

use std::collections::HashMap;
use std::fmt;
use std::ops;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::coefficients::{Rat, RatFun, Var};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfun::{Basis, SymFun};

/// Which symmetric-function alphabet a plethysm result is expressed in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SymAlphabet {
    /// The main alphabet `z`.
    Z,
    /// The parameter alphabet `q = q_1, q_2, …`.
    Q,
}

impl fmt::Display for SymAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymAlphabet::Z => "Z",
            SymAlphabet::Q => "Q",
        })
    }
}

/// Expression tree for a plethystic alphabet.
///
/// Leaves distinguish variables (`p_k[x] = x^k`) from constants (`p_k[c] = c`);
/// `Epsilon` is the formal sign with `p_k[ε] = (−1)^k`.
#[derive(Clone, PartialEq, Debug)]
pub enum Alphabet {
    Var(Var),
    Const(RatFun),
    Epsilon,
    Sym(SymAlphabet),
    Sum(Box<Alphabet>, Box<Alphabet>),
    Diff(Box<Alphabet>, Box<Alphabet>),
    Prod(Box<Alphabet>, Box<Alphabet>),
    Quot(Box<Alphabet>, Box<Alphabet>),
    Scale(Rat, Box<Alphabet>),
}

impl Alphabet {
    pub fn var(name: &str) -> Alphabet {
        Alphabet::Var(Var::new(name))
    }

    pub fn constant(c: impl Into<RatFun>) -> Alphabet {
        Alphabet::Const(c.into())
    }

    /// A constant that is a formal parameter, such as the `k` of `1^k`.
    pub fn symbolic_constant(name: &str) -> Alphabet {
        Alphabet::Const(RatFun::var(Var::new(name)))
    }

    pub fn int(c: i64) -> Alphabet {
        Alphabet::Const(RatFun::int(c))
    }

    pub fn epsilon() -> Alphabet {
        Alphabet::Epsilon
    }

    pub fn z() -> Alphabet {
        Alphabet::Sym(SymAlphabet::Z)
    }

    pub fn q_alphabet() -> Alphabet {
        Alphabet::Sym(SymAlphabet::Q)
    }

    pub fn scaled(self, c: Rat) -> Alphabet {
        Alphabet::Scale(c, Box::new(self))
    }

    /// `q − εu`, the hook-detecting alphabet.
    pub fn q_minus_eps_u() -> Alphabet {
        Alphabet::var("q") - Alphabet::epsilon() * Alphabet::var("u")
    }

    /// Parses the alphabet text syntax; identifiers in `constants` become
    /// constant leaves, `eps`/`epsilon` the formal sign, `Z` and `Q` the
    /// symmetric-function alphabets, anything else a variable.
    pub fn parse_with(text: &str, constants: &[&str]) -> Result<Alphabet> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            constants,
        };
        let a = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(a)
    }

    /// Replaces named constants by values.
    pub fn bind(&self, values: &HashMap<Var, RatFun>) -> Result<Alphabet> {
        use Alphabet::*;
        let two = |a: &Alphabet, b: &Alphabet| -> Result<(Box<Alphabet>, Box<Alphabet>)> {
            Ok((Box::new(a.bind(values)?), Box::new(b.bind(values)?)))
        };
        Ok(match self {
            Const(c) => Const(c.substitute(values)?),
            Var(_) | Epsilon | Sym(_) => self.clone(),
            Sum(a, b) => {
                let (a, b) = two(a, b)?;
                Sum(a, b)
            }
            Diff(a, b) => {
                let (a, b) = two(a, b)?;
                Diff(a, b)
            }
            Prod(a, b) => {
                let (a, b) = two(a, b)?;
                Prod(a, b)
            }
            Quot(a, b) => {
                let (a, b) = two(a, b)?;
                Quot(a, b)
            }
            Scale(c, a) => Scale(c.clone(), Box::new(a.bind(values)?)),
        })
    }

    /// The symmetric-function alphabet this expression involves, if any.
    pub fn sym_alphabet(&self) -> Result<Option<SymAlphabet>> {
        use Alphabet::*;
        match self {
            Sym(s) => Ok(Some(*s)),
            Var(_) | Const(_) | Epsilon => Ok(None),
            Scale(_, a) => a.sym_alphabet(),
            Sum(a, b) | Diff(a, b) | Prod(a, b) | Quot(a, b) => {
                match (a.sym_alphabet()?, b.sym_alphabet()?) {
                    (Some(x), Some(y)) if x != y => Err(Error::Unsupported(format!(
                        "alphabet {self} mixes {x} and {y}"
                    ))),
                    (x, y) => Ok(x.or(y)),
                }
            }
        }
    }

    /// `p_k[A]` as a power-sum expansion over `ℚ(…)`.
    pub fn power_sum(&self, k: u32) -> Result<SymFun<RatFun>> {
        use Alphabet::*;
        let scalar = |c: RatFun| SymFun::term(Basis::P, Partition::empty(), c);
        Ok(match self {
            Var(v) => scalar(RatFun::var(*v).pow(k as i32)?),
            Const(c) => scalar(c.clone()),
            Epsilon => scalar(RatFun::int(if k.is_multiple_of(2) { 1 } else { -1 })),
            Sym(_) => SymFun::basis_elem(Basis::P, Partition::row(k)),
            Sum(a, b) => a.power_sum(k)?.add(&b.power_sum(k)?),
            Diff(a, b) => a.power_sum(k)?.sub(&b.power_sum(k)?),
            Prod(a, b) => a.power_sum(k)?.mul(&b.power_sum(k)?),
            Quot(a, b) => {
                let den = b.power_sum(k)?;
                if den.terms().any(|(p, _)| !p.is_empty()) {
                    return Err(Error::Unsupported(format!(
                        "division by the non-scalar alphabet {b}"
                    )));
                }
                let d = den.coeff(&Partition::empty());
                if d.is_zero() {
                    return Err(Error::Pole(format!("p_{k}[{b}] vanishes")));
                }
                a.power_sum(k)?.scale_by(&d.inv()?)
            }
            Scale(c, a) => a.power_sum(k)?.scale(c),
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Alphabet::Sum(..) | Alphabet::Diff(..) => 1,
            Alphabet::Prod(..) | Alphabet::Quot(..) | Alphabet::Scale(..) => 2,
            Alphabet::Const(c) if !c.den().is_one() || c.num().len() > 1 => 1,
            _ => 3,
        }
    }
}

fn wrap(a: &Alphabet, min: u8) -> String {
    if a.precedence() < min {
        format!("({a})")
    } else {
        a.to_string()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Alphabet::*;
        match self {
            Var(v) => write!(f, "{v}"),
            Const(c) => write!(f, "{c}"),
            Epsilon => f.write_str("eps"),
            Sym(s) => write!(f, "{s}"),
            Sum(a, b) => write!(f, "{a} + {}", wrap(b, 2)),
            Diff(a, b) => write!(f, "{a} - {}", wrap(b, 2)),
            Prod(a, b) => write!(f, "{}*{}", wrap(a, 2), wrap(b, 3)),
            Quot(a, b) => write!(f, "{}/{}", wrap(a, 2), wrap(b, 3)),
            Scale(c, a) => {
                if c.is_integer() {
                    write!(f, "{c}*{}", wrap(a, 3))
                } else {
                    write!(f, "({c})*{}", wrap(a, 3))
                }
            }
        }
    }
}

impl FromStr for Alphabet {
    type Err = Error;
    /// Treats `k` and `n` as constants.
    fn from_str(s: &str) -> Result<Alphabet> {
        Alphabet::parse_with(s, &["k", "n"])
    }
}

impl ops::Add for Alphabet {
    type Output = Alphabet;
    fn add(self, o: Alphabet) -> Alphabet {
        Alphabet::Sum(Box::new(self), Box::new(o))
    }
}

impl ops::Sub for Alphabet {
    type Output = Alphabet;
    fn sub(self, o: Alphabet) -> Alphabet {
        Alphabet::Diff(Box::new(self), Box::new(o))
    }
}

impl ops::Mul for Alphabet {
    type Output = Alphabet;
    fn mul(self, o: Alphabet) -> Alphabet {
        Alphabet::Prod(Box::new(self), Box::new(o))
    }
}

impl ops::Div for Alphabet {
    type Output = Alphabet;
    fn div(self, o: Alphabet) -> Alphabet {
        Alphabet::Quot(Box::new(self), Box::new(o))
    }
}

impl ops::Neg for Alphabet {
    type Output = Alphabet;
    fn neg(self) -> Alphabet {
        Alphabet::Scale(Rat::from_integer(BigInt::from(-1)), Box::new(self))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    constants: &'a [&'a str],
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::parse(1, self.pos + 1, msg))
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Alphabet> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Alphabet> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc / self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Alphabet> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.peek();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let Ok(e) = std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse::<u32>() else {
            return self.err("expected a nonnegative integer exponent");
        };
        if e == 0 {
            return Ok(Alphabet::int(1));
        }
        let mut acc = base.clone();
        for _ in 1..e {
            acc = acc * base.clone();
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Alphabet> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let a = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(a)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n = BigInt::from_str(s).expect("digits");
                Ok(Alphabet::constant(Rat::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(match name {
                    "eps" | "epsilon" => Alphabet::Epsilon,
                    "Z" => Alphabet::z(),
                    "Q" => Alphabet::q_alphabet(),
                    _ if self.constants.contains(&name) => Alphabet::symbolic_constant(name),
                    _ => Alphabet::var(name),
                })
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::p;

    fn scalar(a: &Alphabet, k: u32) -> RatFun {
        a.power_sum(k).unwrap().coeff(&Partition::empty())
    }

    #[test]
    fn parses_spec_examples() {
        for text in ["q - eps*u", "1 + Q", "Z/(1-q)", "(n+1)*Z"] {
            let a: Alphabet = text.parse().unwrap();
            let again: Alphabet = a.to_string().parse().unwrap();
            assert_eq!(a, again, "{text}");
        }
        assert!("q - ".parse::<Alphabet>().is_err());
        assert!("Z + Q".parse::<Alphabet>().unwrap().sym_alphabet().is_err());
    }

    #[test]
    fn power_sum_rules() {
        let a = Alphabet::q_minus_eps_u();
        assert_eq!(scalar(&a, 2), "q^2 - u^2".parse().unwrap());
        assert_eq!(scalar(&a, 3), "q^3 + u^3".parse().unwrap());
        let k: Alphabet = "k".parse().unwrap();
        assert_eq!(scalar(&k, 5), "k".parse().unwrap());
        let z: Alphabet = "Z/(1-q)".parse().unwrap();
        let expect = p(2).to_ratfun().scale_by(&"1/(1-q^2)".parse().unwrap());
        assert_eq!(z.power_sum(2).unwrap(), expect);
        let bad: Alphabet = "Z/(q-q)".parse().unwrap();
        assert!(matches!(bad.power_sum(1), Err(Error::Pole(_))));
    }

    #[test]
    fn binding_constants() {
        let a: Alphabet = "(n+1)*Z".parse().unwrap();
        let b = a.bind(&HashMap::from([(Var::new("n"), RatFun::int(3))])).unwrap();
        assert_eq!(b.power_sum(2).unwrap(), p(2).to_ratfun().scale(&Rat::from_integer(4.into())));
    }
}
