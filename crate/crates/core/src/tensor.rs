//! Schur-⊗-Schur characters `Σ c_{λμ} s_λ ⊗ s_μ`: left factors are
//! GL characters in the parameters `q`, right factors Frobenius characters
//! in `z`, all `μ ⊢ n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::coefficients::{MPoly, Rat, Var};
use crate::error::{Error, Result};
use crate::partitions::{schur_dim_eval, schur_dim_poly, Partition};
use crate::plethysm::{compose, pleth_one_plus};
use crate::symfun::{p, perp, schur_eval_vars, schur_expand_two_params, Basis, SymFun};

/// Version tag shared by the JSON exports and the on-disk cache.
pub const FORMAT_VERSION: &str = "dharmonic-1";

#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorExp {
    n: u32,
    blocks: BTreeMap<Partition, BTreeMap<Partition, i64>>,
}

fn to_integer(c: &Rat) -> Result<i64> {
    if !c.is_integer() {
        return Err(Error::NotIntegral(format!("multiplicity {c}")));
    }
    c.to_integer()
        .to_i64()
        .ok_or_else(|| Error::NotIntegral(format!("multiplicity {c} out of range")))
}

impl TensorExp {
    pub fn zero(n: u32) -> TensorExp {
        TensorExp {
            n,
            blocks: BTreeMap::new(),
        }
    }

    /// Right degree `n`.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, mu: Partition, mult: i64) -> Result<()> {
        if mu.size() != self.n {
            return Err(Error::Unsupported(format!(
                "right factor s[{mu}] does not have degree {}",
                self.n
            )));
        }
        if mult == 0 {
            return Ok(());
        }
        let block = self.blocks.entry(mu.clone()).or_default();
        let v = block.entry(lambda.clone()).or_insert(0);
        *v += mult;
        if *v == 0 {
            block.remove(&lambda);
            if block.is_empty() {
                self.blocks.remove(&mu);
            }
        }
        Ok(())
    }

    /// Assembles `Σ_μ 𝐜_μ ⊗ s_μ`; every `𝐜_μ` must have integer Schur coefficients.
    pub fn from_coefficients<'a, I>(n: u32, blocks: I) -> Result<TensorExp>
    where
        I: IntoIterator<Item = (Partition, &'a SymFun<Rat>)>,
    {
        let mut t = TensorExp::zero(n);
        for (mu, c) in blocks {
            for (lam, m) in c.to_schur().terms() {
                t.add_term(lam.clone(), mu.clone(), to_integer(m)?)?;
            }
        }
        Ok(t)
    }

    /// `(λ, μ, c_{λμ})` ordered by `μ`, then `λ`.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Partition, i64)> {
        self.blocks
            .iter()
            .flat_map(|(mu, b)| b.iter().map(move |(lam, &c)| (lam, mu, c)))
    }

    /// The `μ` with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.blocks.keys()
    }

    /// The GL coefficient `𝐜_μ = Σ_λ c_{λμ} s_λ`.
    pub fn coefficient_of(&self, mu: &Partition) -> SymFun<Rat> {
        let mut f = SymFun::zero(Basis::S);
        if let Some(b) = self.blocks.get(mu) {
            for (lam, &c) in b {
                f.add_term(lam.clone(), Rat::from_integer(c.into()));
            }
        }
        f
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&Partition, SymFun<Rat>)> {
        self.blocks.keys().map(|mu| (mu, self.coefficient_of(mu)))
    }

    pub fn add(&self, other: &TensorExp) -> Result<TensorExp> {
        let mut out = self.clone();
        for (lam, mu, c) in other.terms() {
            out.add_term(lam.clone(), mu.clone(), c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> TensorExp {
        TensorExp {
            n: self.n,
            blocks: self
                .blocks
                .iter()
                .map(|(mu, b)| (mu.clone(), b.iter().map(|(l, &c)| (l.clone(), -c)).collect()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &TensorExp) -> Result<TensorExp> {
        self.add(&other.neg())
    }

    /// Applies a linear map to every left factor.
    pub fn map_left(&self, f: impl Fn(&SymFun<Rat>) -> SymFun<Rat>) -> Result<TensorExp> {
        let images: Vec<(Partition, SymFun<Rat>)> =
            self.coefficients().map(|(mu, c)| (mu.clone(), f(&c))).collect();
        TensorExp::from_coefficients(self.n, images.iter().map(|(mu, c)| (mu.clone(), c)))
    }

    fn filter_left(&self, keep: impl Fn(&Partition) -> bool) -> TensorExp {
        let mut out = TensorExp::zero(self.n);
        for (lam, mu, c) in self.terms() {
            if keep(lam) {
                out.add_term(lam.clone(), mu.clone(), c).expect("same degree");
            }
        }
        out
    }

    /// `g^⊥` applied to every left factor.
    pub fn skew_left(&self, g: &SymFun<Rat>) -> TensorExp {
        self.map_left(|c| perp(g, c)).expect("skewing preserves integrality")
    }

    pub fn skew_left_e(&self, k: u32) -> TensorExp {
        self.map_left(|c| c.e_perp(k)).expect("skewing preserves integrality")
    }

    /// Terms whose left index has exactly `d` parts.
    pub fn length_component(&self, d: usize) -> TensorExp {
        self.filter_left(|lam| lam.len() == d)
    }

    /// Terms whose left index has at most `d` parts.
    pub fn restrict_length(&self, d: usize) -> TensorExp {
        self.filter_left(|lam| lam.len() <= d)
    }

    /// `ε^{(k)} = e_k^⊥` of the length-`k` component.
    pub fn reduced_length(&self, k: u32) -> TensorExp {
        self.length_component(k as usize).skew_left_e(k)
    }

    /// `max ℓ(λ)` over the support.
    pub fn length(&self) -> usize {
        self.terms().map(|(l, _, _)| l.len()).max().unwrap_or(0)
    }

    /// `max |λ|` over the support.
    pub fn degree(&self) -> u32 {
        self.terms().map(|(l, _, _)| l.size()).max().unwrap_or(0)
    }

    /// `Σ_μ 𝐜_μ(x_1,…,x_k) s_μ(z)`; left factors with more than `k` parts vanish.
    pub fn evaluate_vars(&self, vars: &[MPoly]) -> SymFun<MPoly> {
        let mut memo = HashMap::new();
        let mut out = SymFun::zero(Basis::S);
        for (mu, b) in &self.blocks {
            let mut acc = MPoly::zero();
            for (lam, &c) in b {
                let v = schur_eval_vars(lam, vars, &mut memo);
                acc = acc.add(&v.scale(&Rat::from_integer(c.into())));
            }
            out.add_term(mu.clone(), acc);
        }
        out
    }

    /// Evaluation at the two parameters `(q, t)`.
    pub fn evaluate_qt(&self) -> SymFun<MPoly> {
        self.evaluate_vars(&[MPoly::var(Var::q()), MPoly::var(Var::t())])
    }

    /// Evaluation at `1^k`.
    pub fn evaluate_ones(&self, k: i64) -> SymFun<Rat> {
        let mut out = SymFun::zero(Basis::S);
        for (mu, b) in &self.blocks {
            let mut acc = <Rat as Zero>::zero();
            for (lam, &c) in b {
                acc += schur_dim_eval(lam, k) * Rat::from_integer(c.into());
            }
            out.add_term(mu.clone(), acc);
        }
        out
    }

    /// Evaluation at `1^k` with `k` an indeterminate.
    pub fn evaluate_ones_symbolic(&self) -> SymFun<MPoly> {
        let mut out = SymFun::zero(Basis::S);
        for (mu, b) in &self.blocks {
            let mut acc = MPoly::zero();
            for (lam, &c) in b {
                acc = acc.add(&schur_dim_poly(lam).scale(&Rat::from_integer(c.into())));
            }
            out.add_term(mu.clone(), acc);
        }
        out
    }

    /// `p_k[T]`, acting on both tensor factors: `p_k[s_λ ⊗ s_μ] = p_k[s_λ] ⊗ p_k[s_μ]`.
    pub fn adams(&self, k: u32) -> Result<TensorExp> {
        let mut memo: HashMap<Partition, SymFun<Rat>> = HashMap::new();
        let mut image = |lam: &Partition| {
            memo.entry(lam.clone())
                .or_insert_with(|| compose(&SymFun::basis_elem(Basis::S, lam.clone()), &p(k)).to_schur())
                .clone()
        };
        let mut out = TensorExp::zero(self.n * k);
        for (lam, mu, c) in self.terms() {
            let (left, right) = (image(lam), image(mu));
            for (a, x) in left.terms() {
                for (b, y) in right.terms() {
                    out.add_term(a.clone(), b.clone(), to_integer(&(x * y * Rat::from_integer(c.into())))?)?;
                }
            }
        }
        Ok(out)
    }

    /// Left factors plethystically evaluated at `1 + q`.
    pub fn at_one_plus_q(&self) -> TensorExp {
        self.map_left(pleth_one_plus).expect("integral")
    }

    /// Rewrites `Σ_μ 𝐜_μ ⊗ s_μ(z)` as `Σ_ν 𝐝_ν ⊗ e_ν(z)`.
    pub fn to_e_format(&self) -> BTreeMap<Partition, SymFun<Rat>> {
        let mut out: BTreeMap<Partition, SymFun<Rat>> = BTreeMap::new();
        for (mu, c) in self.coefficients() {
            let s_mu: SymFun<Rat> = SymFun::basis_elem(Basis::S, mu.clone());
            for (nu, x) in s_mu.to_basis(Basis::E).terms() {
                let entry = out.entry(nu.clone()).or_insert_with(|| SymFun::zero(Basis::S));
                *entry = entry.add(&c.scale(x));
            }
        }
        out.retain(|_, d| !d.is_zero());
        out
    }

    /// Inverse of [`TensorExp::to_e_format`].
    pub fn from_e_format(n: u32, d: &BTreeMap<Partition, SymFun<Rat>>) -> Result<TensorExp> {
        let mut blocks: BTreeMap<Partition, SymFun<Rat>> = BTreeMap::new();
        for (nu, dn) in d {
            if nu.size() != n {
                return Err(Error::Unsupported(format!("e[{nu}] does not have degree {n}")));
            }
            let e_nu: SymFun<Rat> = SymFun::basis_elem(Basis::E, nu.clone());
            for (mu, x) in e_nu.to_schur().terms() {
                let entry = blocks.entry(mu.clone()).or_insert_with(|| SymFun::zero(Basis::S));
                *entry = entry.add(&dn.scale(x));
            }
        }
        TensorExp::from_coefficients(n, blocks.iter().map(|(mu, c)| (mu.clone(), c)))
    }

    /// Lifts a Schur expansion whose coefficients are symmetric in `q, t` to
    /// the tensor form, reading each coefficient in two-row Schur functions.
    pub fn lift_two_params(f: &SymFun<MPoly>) -> Result<TensorExp> {
        let s = f.to_schur();
        let n = s.degrees().first().copied().unwrap_or(0);
        if !s.is_homogeneous() {
            return Err(Error::Unsupported("lifting needs a homogeneous input".into()));
        }
        let mut t = TensorExp::zero(n);
        for (mu, c) in s.terms() {
            for (lam, m) in schur_expand_two_params(c)? {
                let m = m
                    .to_i64()
                    .ok_or_else(|| Error::NotIntegral(format!("multiplicity {m} out of range")))?;
                t.add_term(lam, mu.clone(), m)?;
            }
        }
        Ok(t)
    }

    pub fn to_json(&self, id: &str) -> TensorJson {
        TensorJson {
            format_version: FORMAT_VERSION.to_string(),
            id: id.to_string(),
            n: self.n,
            blocks: self
                .blocks
                .iter()
                .map(|(mu, b)| BlockJson {
                    mu: mu.clone(),
                    terms: b
                        .iter()
                        .map(|(lam, &mult)| TermJson {
                            lambda: lam.clone(),
                            mult,
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &TensorJson) -> Result<TensorExp> {
        let mut t = TensorExp::zero(j.n);
        for b in &j.blocks {
            for term in &b.terms {
                t.add_term(term.lambda.clone(), b.mu.clone(), term.mult)?;
            }
        }
        Ok(t)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorJson {
    pub format_version: String,
    pub id: String,
    pub n: u32,
    pub blocks: Vec<BlockJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockJson {
    pub mu: Partition,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub lambda: Partition,
    pub mult: i64,
}

/// Left factor text: `1`, `s[2]`, `2*s[3,1]`, joined by `+`/`-` without spaces.
pub fn render_left(terms: &BTreeMap<Partition, i64>) -> String {
    let mut out = String::new();
    for (i, (lam, &c)) in terms.iter().enumerate() {
        let base = if lam.is_empty() {
            "1".to_string()
        } else {
            format!("s[{lam}]")
        };
        let a = c.unsigned_abs();
        let body = match (a, lam.is_empty()) {
            (1, _) => base,
            (_, true) => a.to_string(),
            _ => format!("{a}*{base}"),
        };
        if c < 0 {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for TensorExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (mu, b)) in self.blocks.iter().enumerate() {
            let single_neg = b.len() == 1 && *b.values().next().unwrap() < 0;
            let left = if single_neg {
                render_left(&b.iter().map(|(l, &c)| (l.clone(), -c)).collect())
            } else {
                render_left(b)
            };
            let left = if b.len() > 1 { format!("({left})") } else { left };
            match (i, single_neg) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write!(f, "{left} (x) s[{mu}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a left factor `1 + s[1] - 2*s[2,1]`.
pub fn parse_left(text: &str) -> Result<BTreeMap<Partition, i64>> {
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    let b = text.as_bytes();
    let mut pos = 0;
    let mut first = true;
    while pos < b.len() {
        while pos < b.len() && b[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos >= b.len() {
            break;
        }
        let mut sign = 1i64;
        match b[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = -1;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(Error::parse(1, pos + 1, "expected '+' or '-'")),
        }
        first = false;
        let start = pos;
        let mut depth = 0;
        while pos < b.len() {
            match b[pos] {
                b'[' => depth += 1,
                b']' => depth -= 1,
                b'+' | b'-' if depth == 0 => break,
                _ => {}
            }
            pos += 1;
        }
        let term = text[start..pos].trim();
        let (coef, elem) = match term.find("s[") {
            Some(i) => (term[..i].trim().trim_end_matches('*').trim(), Some(&term[i..])),
            None => (term, None),
        };
        let c: i64 = if coef.is_empty() {
            1
        } else {
            coef.parse()
                .map_err(|_| Error::parse(1, start + 1, format!("bad multiplicity {coef:?}")))?
        };
        let lam = match elem {
            None => Partition::empty(),
            Some(e) => {
                let inner = e
                    .strip_prefix("s[")
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| Error::parse(1, start + 1, format!("bad Schur term {e:?}")))?;
                inner
                    .parse()
                    .map_err(|_| Error::parse(1, start + 1, format!("bad partition {inner:?}")))?
            }
        };
        let v = out.entry(lam.clone()).or_insert(0);
        *v += sign * c;
        if *v == 0 {
            out.remove(&lam);
        }
    }
    Ok(out)
}

impl FromStr for TensorExp {
    type Err = Error;
    fn from_str(s: &str) -> Result<TensorExp> {
        let text = s.trim();
        if text == "0" {
            return Ok(TensorExp::zero(0));
        }
        let b = text.as_bytes();
        let mut pos = 0;
        let mut out: Option<TensorExp> = None;
        let skip = |pos: &mut usize| {
            while *pos < b.len() && b[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        loop {
            skip(&mut pos);
            if pos >= b.len() {
                break;
            }
            let mut sign = 1;
            if out.is_some() {
                match b[pos] {
                    b'+' => {}
                    b'-' => sign = -1,
                    _ => return Err(Error::parse(1, pos + 1, "expected '+' or '-'")),
                }
                pos += 1;
                skip(&mut pos);
            } else if b[pos] == b'-' {
                sign = -1;
                pos += 1;
                skip(&mut pos);
            }
            let left = if b.get(pos) == Some(&b'(') && !text[pos..].starts_with("(x)") {
                let close = text[pos..]
                    .find(')')
                    .map(|i| i + pos)
                    .ok_or_else(|| Error::parse(1, pos + 1, "unclosed '('"))?;
                let l = parse_left(&text[pos + 1..close]).map_err(|e| shift(e, pos + 1))?;
                pos = close + 1;
                l
            } else {
                let end = text[pos..]
                    .find("(x)")
                    .map(|i| i + pos)
                    .ok_or_else(|| Error::parse(1, pos + 1, "expected '(x)'"))?;
                let l = parse_left(&text[pos..end]).map_err(|e| shift(e, pos))?;
                pos = end;
                l
            };
            skip(&mut pos);
            if !text[pos..].starts_with("(x)") {
                return Err(Error::parse(1, pos + 1, "expected '(x)'"));
            }
            pos += 3;
            skip(&mut pos);
            if !text[pos..].starts_with("s[") {
                return Err(Error::parse(1, pos + 1, "expected a right factor s[...]"));
            }
            let close = text[pos..]
                .find(']')
                .map(|i| i + pos)
                .ok_or_else(|| Error::parse(1, pos + 1, "unclosed '['"))?;
            let mu: Partition = text[pos + 2..close]
                .parse()
                .map_err(|_| Error::parse(1, pos + 3, "bad partition"))?;
            pos = close + 1;
            let t = out.get_or_insert_with(|| TensorExp::zero(mu.size()));
            for (lam, c) in left {
                t.add_term(lam, mu.clone(), sign * c)
                    .map_err(|_| Error::parse(1, close + 1, "right factors of different degrees"))?;
            }
        }
        out.ok_or_else(|| Error::parse(1, 1, "empty expression"))
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { line, column, message } => Error::Parse {
            line,
            column: column + by,
            message,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;
    use crate::symfun::s;

    fn e3() -> TensorExp {
        "1 (x) s[3] + (s[1]+s[2]) (x) s[2,1] + (s[1,1]+s[3]) (x) s[1,1,1]".parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        let t = e3();
        assert_eq!(t.to_string(), "1 (x) s[3] + (s[1]+s[2]) (x) s[2,1] + (s[1,1]+s[3]) (x) s[1,1,1]");
        let u: TensorExp = "-s[1] (x) s[2] + (2-3*s[10,1]) (x) s[1,1]".parse().unwrap();
        assert_eq!(u.to_string(), "-s[1] (x) s[2] + (2-3*s[10,1]) (x) s[1,1]");
        assert_eq!(u.to_string().parse::<TensorExp>().unwrap(), u);
        assert!("s[1] (x) s[2] + s[1] (x) s[1]".parse::<TensorExp>().is_err());
        let j = serde_json::to_string(&t.to_json("E3")).unwrap();
        let back: TensorJson = serde_json::from_str(&j).unwrap();
        assert_eq!(TensorExp::from_json(&back).unwrap(), t);
    }

    #[test]
    fn coefficients_and_components() {
        let t = e3();
        assert_eq!(t.coefficient_of(&part(&[1, 1, 1])), s(&[1, 1]).add(&s(&[3])));
        assert_eq!(t.length_component(0).to_string(), "1 (x) s[3]");
        assert_eq!(t.length(), 2);
        assert_eq!(t.degree(), 3);
        let r = t.reduced_length(1);
        assert_eq!(r.to_string(), "(1+s[1]) (x) s[2,1] + s[2] (x) s[1,1,1]");
    }

    #[test]
    fn evaluations() {
        let t = e3();
        let at_one = t.evaluate_ones(1);
        assert_eq!(at_one, s(&[3]).add(&s(&[2, 1]).scale(&crate::coefficients::rat_int(2))).add(&s(&[1, 1, 1])));
        assert_eq!(t.evaluate_ones(0), s(&[3]));
        let sym = t.evaluate_ones_symbolic();
        let c = sym.coeff(&part(&[2, 1]));
        assert_eq!(c, "k^2/2 + 3/2*k".parse::<crate::RatFun>().unwrap().as_polynomial().unwrap());
        let qt = t.evaluate_qt();
        assert_eq!(qt.coeff(&part(&[2, 1])), "q + t + q^2 + q*t + t^2".parse().unwrap());
        let lifted = TensorExp::lift_two_params(&qt).unwrap();
        assert_eq!(lifted, t);
    }

    #[test]
    fn e_format_round_trip() {
        let t = e3().at_one_plus_q();
        let d = t.to_e_format();
        assert_eq!(d[&part(&[1, 1, 1])], SymFun::one());
        assert_eq!(TensorExp::from_e_format(3, &d).unwrap(), t);
    }
}
