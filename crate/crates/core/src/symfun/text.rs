//! Text form `s[2,1] + 3*s[1,1,1]`, coefficients written before the basis letter.

use super::{Basis, SymFun};
use crate::coefficients::{Coeff, RatFun};
use crate::error::{Error, Result};
use crate::partitions::Partition;

pub(super) fn render<C: Coeff>(f: &SymFun<C>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (p, c)) in f.terms().enumerate() {
        let elem = format!("{}[{}]", f.basis().letter(), p);
        let (neg, body) = match c.unit_sign() {
            Some(1) => (false, elem),
            Some(_) => (true, elem),
            None => {
                let t = c.factor_text();
                match t.strip_prefix('-') {
                    Some(rest) if !t.starts_with('(') => (true, format!("{rest}*{elem}")),
                    _ => (false, format!("{t}*{elem}")),
                }
            }
        };
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

/// Finds the next basis element `x[...]` at or after `from`, returning
/// `(letter index, '[' index, ']' index)`.
fn next_element(b: &[u8], from: usize) -> Option<(usize, usize, usize)> {
    let mut depth = 0i32;
    let mut i = from;
    while i < b.len() {
        match b[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'[' if depth == 0 && i > 0 && Basis::from_letter(b[i - 1] as char).is_some() => {
                let boundary = i < 2 || !(b[i - 2].is_ascii_alphanumeric() || b[i - 2] == b'_');
                if boundary {
                    let close = b[i..].iter().position(|&c| c == b']')? + i;
                    return Some((i - 1, i, close));
                }
            }
            _ => {}
        }
        i += 1;
    }
    None
}

pub(super) fn parse<C: Coeff>(s: &str) -> Result<SymFun<C>> {
    let trimmed = s.trim();
    if trimmed == "0" {
        return Ok(SymFun::zero(Basis::S));
    }
    let b = s.as_bytes();
    let mut pos = 0;
    let mut basis: Option<Basis> = None;
    let mut out: Option<SymFun<C>> = None;
    loop {
        while pos < b.len() && b[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos >= b.len() {
            break;
        }
        let mut sign_neg = false;
        if out.is_some() {
            match b[pos] {
                b'+' => {}
                b'-' => sign_neg = true,
                _ => return Err(Error::parse(1, pos + 1, "expected '+' or '-'")),
            }
            pos += 1;
        }
        let (letter, open, close) =
            next_element(b, pos).ok_or_else(|| Error::parse(1, pos + 1, "expected a basis element"))?;
        let mut coef_text = s[pos..letter].trim();
        if let Some(stripped) = coef_text.strip_suffix('*') {
            coef_text = stripped.trim();
        }
        let coef = match coef_text {
            "" | "+" => RatFun::one(),
            "-" => RatFun::int(-1),
            t => t.parse::<RatFun>().map_err(|e| match e {
                Error::Parse { column, message, .. } => Error::parse(1, pos + column, message),
                other => other,
            })?,
        };
        let coef = if sign_neg { coef.neg() } else { coef };
        let c = C::from_ratfun(&coef)
            .ok_or_else(|| Error::parse(1, pos + 1, format!("coefficient {coef} not in ring")))?;
        let this = Basis::from_letter(b[letter] as char).unwrap();
        if basis.is_some_and(|x| x != this) {
            return Err(Error::parse(1, letter + 1, "mixed bases in one expression"));
        }
        basis = Some(this);
        let part: Partition = s[open + 1..close]
            .parse()
            .map_err(|_| Error::parse(1, open + 2, "bad partition"))?;
        out.get_or_insert_with(|| SymFun::zero(this)).add_term(part, c);
        pos = close + 1;
    }
    out.ok_or_else(|| Error::parse(1, 1, "empty expression"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{MPoly, Rat};
    use crate::symfun::s;

    #[test]
    fn render_and_parse() {
        let f = s(&[2, 1]).add(&s(&[1, 1, 1]).scale(&crate::coefficients::rat_int(3)));
        assert_eq!(f.to_string(), "s[2,1] + 3*s[1,1,1]");
        let g: SymFun<Rat> = "s[2,1] + 3*s[1,1,1]".parse().unwrap();
        assert_eq!(g, f);
        let h: SymFun<MPoly> = "s[3] + (q + t)*s[2,1] - q*t*s[1,1,1]".parse().unwrap();
        assert_eq!(h.to_string(), "s[3] + (q + t)*s[2,1] - q*t*s[1,1,1]");
        let z: SymFun<Rat> = "s[] - 1/2*s[10,1]".parse().unwrap();
        assert_eq!(z.to_string(), "s[] - 1/2*s[10,1]");
        assert!("s[2,1] + e[3]".parse::<SymFun<Rat>>().is_err());
        assert!("q*s[1]".parse::<SymFun<Rat>>().is_err());
    }
}
