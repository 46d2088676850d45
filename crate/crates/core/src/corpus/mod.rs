//! Bundled transcriptions of the explicit `E_n`, `F_n` and `A_7` tables,
//! their line format, and the on-disk cache.
//!
//! Table format, one record per line:
//!
//! ```text
//! # id: E3
//! # kind: tensor
//! # n: 3
//! # source: free text
//! lambda=[1] mu=[2,1] mult=1
//! ```
//!
//! `kind` is `tensor` (`lambda`/`mu`), `e-tensor` (`lambda`/`nu`, plus
//! `nu=[..] expr=e1perp(A4) + A3` for entries written through alternants)
//! or `coefficient` (`lambda`/`mult` only). `# base: nabla` marks a tensor
//! stored relative to `∇(e_n)`.

mod cache;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coefficients::{rat_int, Rat};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfun::{perp, Basis, SymFun};
use crate::tensor::{render_left, TensorExp, FORMAT_VERSION};

pub use cache::{cached_macdonald_basis, default_cache, nabla_e, set_default_cache, CacheStore};

macro_rules! bundled {
    ($($id:literal),* $(,)?) => {
        &[$(($id, include_str!(concat!("../../data/", $id, ".txt")))),*]
    };
}

static BUNDLED: &[(&str, &str)] = bundled!(
    "E0", "E1", "E2", "E3", "E4", "E5", "E6", "F1", "F2", "F3", "F4", "F5", "F6", "A7_len1", "A7_len2",
    "A7_len3", "A7_len4", "A7_len5", "A7_len6", "A6_partial", "nabla_e6_dep", "E6_s21111_delta",
    "E6_s3111_delta", "c13_hooks", "E4_len0", "E4_len1", "E4_len2", "E4_len3", "eps4_0", "eps4_1", "eps4_2",
    "eps4_3",
);

/// Ids of all bundled tables.
pub fn table_ids() -> Vec<&'static str> {
    BUNDLED.iter().map(|(id, _)| *id).collect()
}

/// Raw text of a bundled table.
pub fn table_source(id: &str) -> Result<&'static str> {
    BUNDLED
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::UnknownTable(id.to_string()))
}

/// `e_skew^⊥ A_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlternantTerm {
    pub skew: u32,
    pub index: u32,
}

impl fmt::Display for AlternantTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.skew == 0 {
            write!(f, "A{}", self.index)
        } else {
            write!(f, "e{}perp(A{})", self.skew, self.index)
        }
    }
}

/// Coefficients of `e_ν(z)`, some given numerically, some through alternants.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ETable {
    pub numeric: BTreeMap<Partition, BTreeMap<Partition, i64>>,
    pub symbolic: BTreeMap<Partition, Vec<AlternantTerm>>,
}

impl ETable {
    /// Every `d_ν` as a Schur expansion, alternant entries evaluated from the corpus.
    pub fn resolve(&self) -> Result<BTreeMap<Partition, SymFun<Rat>>> {
        let mut out = BTreeMap::new();
        for (nu, terms) in &self.numeric {
            out.insert(nu.clone(), schur_from_mults(terms));
        }
        for (nu, terms) in &self.symbolic {
            let mut acc = SymFun::zero(Basis::S);
            for t in terms {
                let a = alternant(t.index)?;
                acc = acc.add(&perp(&crate::symfun::e(t.skew), &a).to_schur());
            }
            let slot = out.entry(nu.clone()).or_insert_with(|| SymFun::zero(Basis::S));
            *slot = slot.add(&acc);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Tensor(TensorExp),
    ETensor(ETable),
    Coefficient(BTreeMap<Partition, i64>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusTable {
    pub id: String,
    pub n: u32,
    /// Stored relative to `∇(e_n)` when set.
    pub relative_to_nabla: bool,
    pub source: Vec<String>,
    pub payload: Payload,
}

pub fn schur_from_mults(terms: &BTreeMap<Partition, i64>) -> SymFun<Rat> {
    SymFun::from_terms(Basis::S, terms.iter().map(|(l, &c)| (l.clone(), rat_int(c))))
}

fn parse_bracket(line: usize, text: &str, key: &str) -> Result<Option<(Partition, usize)>> {
    let pat = format!("{key}=[");
    let Some(start) = text.find(&pat) else {
        return Ok(None);
    };
    let open = start + pat.len();
    let close = text[open..]
        .find(']')
        .ok_or_else(|| Error::parse(line, open, "unclosed '['"))?
        + open;
    let p = text[open..close]
        .parse()
        .map_err(|_| Error::parse(line, open + 1, format!("bad partition {:?}", &text[open..close])))?;
    Ok(Some((p, close + 1)))
}

fn parse_mult(line: usize, text: &str) -> Result<i64> {
    let start = text
        .find("mult=")
        .ok_or_else(|| Error::parse(line, text.len() + 1, "missing mult="))?
        + 5;
    let tail = &text[start..];
    let end = tail.find(char::is_whitespace).unwrap_or(tail.len());
    tail[..end]
        .parse()
        .map_err(|_| Error::parse(line, start + 1, format!("bad multiplicity {:?}", &tail[..end])))
}

fn parse_expr(line: usize, col: usize, text: &str) -> Result<Vec<AlternantTerm>> {
    let mut out = Vec::new();
    for piece in text.split('+') {
        let p = piece.trim();
        let bad = || Error::parse(line, col, format!("bad alternant term {p:?}"));
        let term = if let Some(rest) = p.strip_prefix('e') {
            let (k, inner) = rest.split_once("perp(").ok_or_else(bad)?;
            let a = inner.strip_suffix(')').and_then(|x| x.strip_prefix('A')).ok_or_else(bad)?;
            AlternantTerm {
                skew: k.parse().map_err(|_| bad())?,
                index: a.parse().map_err(|_| bad())?,
            }
        } else {
            let a = p.strip_prefix('A').ok_or_else(bad)?;
            AlternantTerm {
                skew: 0,
                index: a.parse().map_err(|_| bad())?,
            }
        };
        out.push(term);
    }
    Ok(out)
}

fn add_mult(map: &mut BTreeMap<Partition, i64>, p: Partition, c: i64) {
    let v = map.entry(p.clone()).or_insert(0);
    *v += c;
    if *v == 0 {
        map.remove(&p);
    }
}

impl CorpusTable {
    pub fn parse(text: &str) -> Result<CorpusTable> {
        let mut id = None;
        let mut kind = None;
        let mut n = None;
        let mut relative_to_nabla = false;
        let mut source = Vec::new();
        let mut records = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() {
                continue;
            }
            if let Some(c) = t.strip_prefix('#') {
                let c = c.trim();
                if let Some((k, v)) = c.split_once(':') {
                    let v = v.trim();
                    match k.trim() {
                        "id" => id = Some(v.to_string()),
                        "kind" => kind = Some(v.to_string()),
                        "n" => {
                            n = Some(v.parse::<u32>().map_err(|_| Error::parse(line, 1, "bad n"))?);
                        }
                        "base" if v == "nabla" => relative_to_nabla = true,
                        "base" => return Err(Error::parse(line, 1, format!("unknown base {v:?}"))),
                        "source" => source.push(v.to_string()),
                        _ => {}
                    }
                }
                continue;
            }
            records.push((line, t));
        }
        let id = id.ok_or_else(|| Error::parse(1, 1, "missing '# id:'"))?;
        let n = n.ok_or_else(|| Error::parse(1, 1, "missing '# n:'"))?;
        let kind = kind.ok_or_else(|| Error::parse(1, 1, "missing '# kind:'"))?;
        let payload = match kind.as_str() {
            "tensor" => {
                let mut t = TensorExp::zero(n);
                for (line, r) in records {
                    let (lam, _) =
                        parse_bracket(line, r, "lambda")?.ok_or_else(|| Error::parse(line, 1, "missing lambda="))?;
                    let (mu, col) =
                        parse_bracket(line, r, "mu")?.ok_or_else(|| Error::parse(line, 1, "missing mu="))?;
                    let mult = parse_mult(line, r)?;
                    t.add_term(lam, mu, mult).map_err(|e| Error::parse(line, col, e.to_string()))?;
                }
                Payload::Tensor(t)
            }
            "e-tensor" => {
                let mut et = ETable::default();
                for (line, r) in records {
                    let (nu, col) =
                        parse_bracket(line, r, "nu")?.ok_or_else(|| Error::parse(line, 1, "missing nu="))?;
                    if nu.size() != n {
                        return Err(Error::parse(line, col, format!("e[{nu}] does not have degree {n}")));
                    }
                    if let Some(pos) = r.find("expr=") {
                        et.symbolic
                            .entry(nu)
                            .or_default()
                            .extend(parse_expr(line, pos + 6, &r[pos + 5..])?);
                    } else {
                        let (lam, _) = parse_bracket(line, r, "lambda")?
                            .ok_or_else(|| Error::parse(line, 1, "missing lambda="))?;
                        add_mult(et.numeric.entry(nu).or_default(), lam, parse_mult(line, r)?);
                    }
                }
                et.numeric.retain(|_, v| !v.is_empty());
                Payload::ETensor(et)
            }
            "coefficient" => {
                let mut m = BTreeMap::new();
                for (line, r) in records {
                    let (lam, _) =
                        parse_bracket(line, r, "lambda")?.ok_or_else(|| Error::parse(line, 1, "missing lambda="))?;
                    add_mult(&mut m, lam, parse_mult(line, r)?);
                }
                Payload::Coefficient(m)
            }
            other => return Err(Error::parse(1, 1, format!("unknown kind {other:?}"))),
        };
        Ok(CorpusTable {
            id,
            n,
            relative_to_nabla,
            source,
            payload,
        })
    }

    pub fn kind(&self) -> &'static str {
        match self.payload {
            Payload::Tensor(_) => "tensor",
            Payload::ETensor(_) => "e-tensor",
            Payload::Coefficient(_) => "coefficient",
        }
    }

    pub fn tensor(&self) -> Option<&TensorExp> {
        match &self.payload {
            Payload::Tensor(t) => Some(t),
            _ => None,
        }
    }

    pub fn coefficient(&self) -> Option<SymFun<Rat>> {
        match &self.payload {
            Payload::Coefficient(m) => Some(schur_from_mults(m)),
            _ => None,
        }
    }

    pub fn e_table(&self) -> Option<&ETable> {
        match &self.payload {
            Payload::ETensor(e) => Some(e),
            _ => None,
        }
    }

    /// Replaces a table stored relative to `∇(e_n)` by the full character.
    pub fn materialize(mut self) -> Result<CorpusTable> {
        if !self.relative_to_nabla {
            return Ok(self);
        }
        let Payload::Tensor(delta) = &self.payload else {
            return Err(Error::Internal(format!("{}: base applies only to tensor tables", self.id)));
        };
        let base = TensorExp::lift_two_params(nabla_e(self.n)?.as_ref())?;
        self.payload = Payload::Tensor(base.add(delta)?);
        self.relative_to_nabla = false;
        Ok(self)
    }

    /// Human-readable rendering: tensor text, Schur expansion, or the `e`-expansion.
    pub fn render(&self) -> Result<String> {
        Ok(match &self.payload {
            Payload::Tensor(t) => t.to_string(),
            Payload::Coefficient(m) => schur_from_mults(m).to_string(),
            Payload::ETensor(et) => render_e(&et.resolve()?),
        })
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let v = match &self.payload {
            Payload::Tensor(t) => serde_json::to_value(t.to_json(&self.id)),
            Payload::Coefficient(m) => serde_json::to_value(CoefficientJson {
                format_version: FORMAT_VERSION.to_string(),
                id: self.id.clone(),
                n: self.n,
                terms: terms_json(m),
            }),
            Payload::ETensor(et) => {
                let mut blocks = Vec::new();
                for (nu, f) in et.resolve()? {
                    blocks.push(EBlockJson {
                        nu,
                        terms: terms_json(&mults_of(&f)?),
                    });
                }
                serde_json::to_value(ETensorJson {
                    format_version: FORMAT_VERSION.to_string(),
                    id: self.id.clone(),
                    n: self.n,
                    blocks,
                })
            }
        };
        v.map_err(|e| Error::Internal(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    lambda: Partition,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct CoefficientJson {
    format_version: String,
    id: String,
    n: u32,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct EBlockJson {
    nu: Partition,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct ETensorJson {
    format_version: String,
    id: String,
    n: u32,
    blocks: Vec<EBlockJson>,
}

fn terms_json(m: &BTreeMap<Partition, i64>) -> Vec<TermJson> {
    m.iter()
        .map(|(l, &c)| TermJson {
            lambda: l.clone(),
            mult: c,
        })
        .collect()
}

/// Integer Schur multiplicities of `f`.
pub fn mults_of(f: &SymFun<Rat>) -> Result<BTreeMap<Partition, i64>> {
    let mut out = BTreeMap::new();
    for (l, c) in f.to_schur().terms() {
        if !c.is_integer() {
            return Err(Error::NotIntegral(format!("coefficient {c} of s[{l}]")));
        }
        let v: i64 = c
            .to_integer()
            .try_into()
            .map_err(|_| Error::NotIntegral(format!("coefficient {c} out of range")))?;
        out.insert(l.clone(), v);
    }
    Ok(out)
}

/// `Σ d_ν ⊗ e_ν` as text, `(x)` for the tensor sign.
pub fn render_e(d: &BTreeMap<Partition, SymFun<Rat>>) -> String {
    let mut out = String::new();
    for (nu, f) in d {
        if f.is_zero() {
            continue;
        }
        let m = mults_of(f).unwrap_or_default();
        let left = render_left(&m);
        let left = if m.len() > 1 { format!("({left})") } else { left };
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&format!("{left} (x) e[{nu}]"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for CorpusTable {
    /// Canonical table file text; `parse` inverts it.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# id: {}", self.id)?;
        writeln!(f, "# kind: {}", self.kind())?;
        writeln!(f, "# n: {}", self.n)?;
        if self.relative_to_nabla {
            writeln!(f, "# base: nabla")?;
        }
        for s in &self.source {
            writeln!(f, "# source: {s}")?;
        }
        match &self.payload {
            Payload::Tensor(t) => {
                for (lam, mu, c) in t.terms() {
                    writeln!(f, "lambda=[{lam}] mu=[{mu}] mult={c}")?;
                }
            }
            Payload::Coefficient(m) => {
                for (lam, c) in m {
                    writeln!(f, "lambda=[{lam}] mult={c}")?;
                }
            }
            Payload::ETensor(et) => {
                let mut nus: Vec<&Partition> = et.numeric.keys().chain(et.symbolic.keys()).collect();
                nus.sort();
                nus.dedup();
                for nu in nus {
                    if let Some(terms) = et.symbolic.get(nu) {
                        let expr: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                        writeln!(f, "nu=[{nu}] expr={}", expr.join(" + "))?;
                    }
                    for (lam, c) in et.numeric.get(nu).into_iter().flatten() {
                        writeln!(f, "lambda=[{lam}] nu=[{nu}] mult={c}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parses a bundled table as stored.
pub fn raw_table(id: &str) -> Result<CorpusTable> {
    CorpusTable::parse(table_source(id)?)
}

/// A bundled table with tables stored relative to `∇(e_n)` materialized.
pub fn load_table(id: &str) -> Result<CorpusTable> {
    raw_table(id)?.materialize()
}

/// `E_n` from the corpus, `n ≤ 6`.
pub fn e_table(n: u32) -> Result<Arc<TensorExp>> {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<TensorExp>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    if n > 6 {
        return Err(Error::Unsupported(format!("no E_{n} table (n ≤ 6)")));
    }
    let t = load_table(&format!("E{n}"))?;
    let t = Arc::new(
        t.tensor()
            .cloned()
            .ok_or_else(|| Error::Internal(format!("E{n} is not a tensor table")))?,
    );
    Ok(cache.lock().unwrap().entry(n).or_insert(t).clone())
}

/// `A_n = ⟨E_n, s_{1^n}⟩`: from `E_n` for `n ≤ 6`, assembled from the length
/// components for `n = 7` (no length-0 component is listed, so `A_7^{(0)} = 0`).
pub fn alternant(n: u32) -> Result<SymFun<Rat>> {
    match n {
        0..=6 => Ok(e_table(n)?.coefficient_of(&Partition::column(n))),
        7 => {
            let mut acc = SymFun::zero(Basis::S);
            for d in 1..=6 {
                let t = load_table(&format!("A7_len{d}"))?;
                let c = t
                    .coefficient()
                    .ok_or_else(|| Error::Internal("A7 component is not a coefficient table".into()))?;
                if let Some((l, _)) = c.terms().find(|(l, _)| l.len() != d) {
                    return Err(Error::Internal(format!("A7_len{d} contains s[{l}] of length {}", l.len())));
                }
                acc = acc.add(&c);
            }
            Ok(acc)
        }
        _ => Err(Error::Unsupported(format!("A_{n} is not available (n ≤ 7)"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    #[test]
    fn bundled_tables_round_trip() {
        for id in table_ids() {
            let text = table_source(id).unwrap();
            let t = CorpusTable::parse(text).unwrap();
            assert_eq!(t.id, id);
            assert_eq!(t.to_string(), text, "{id} is not in canonical form");
            assert_eq!(CorpusTable::parse(&t.to_string()).unwrap(), t);
        }
    }

    #[test]
    fn small_tables() {
        let e2 = load_table("E2").unwrap();
        assert_eq!(e2.render().unwrap(), "1 (x) s[2] + s[1] (x) s[1,1]");
        let e3 = e_table(3).unwrap();
        assert_eq!(e3.coefficient_of(&part(&[1, 1, 1])).to_string(), "s[1,1] + s[3]");
        assert_eq!(alternant(2).unwrap().to_string(), "s[1]");
        assert_eq!(alternant(4).unwrap().to_string(), "s[1,1,1] + s[3,1] + s[4,1] + s[6]");
        let a75 = load_table("A7_len5").unwrap().coefficient().unwrap();
        assert_eq!(
            a75.to_string(),
            "s[3,1,1,1,1] + s[4,1,1,1,1] + s[5,1,1,1,1] + s[6,1,1,1,1] + s[7,1,1,1,1]"
        );
        assert_eq!(e_table(5).unwrap().support().count(), 7);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let bad = "# id: X\n# kind: tensor\n# n: 2\nlambda=[1] mu=[1,1] mult=1\nlambda=[1] mu=[1,1 mult=1\n";
        match CorpusTable::parse(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("unexpected {other:?}"),
        }
        let bad = "# id: X\n# kind: tensor\n# n: 2\nlambda=[1] mu=[2,1] mult=1\n";
        assert!(matches!(CorpusTable::parse(bad), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(load_table("E9"), Err(Error::UnknownTable(_))));
    }

    #[test]
    fn e_tables_resolve() {
        let f4 = load_table("F4").unwrap();
        let d = f4.e_table().unwrap().resolve().unwrap();
        assert_eq!(d[&part(&[3, 1])].to_string(), "2*s[1,1] + 2*s[3] + s[2,1] + s[4] + s[3,1] + s[5]");
        assert!(f4.render().unwrap().starts_with("(s[1,1,1]+s[3,1]+s[4,1]+s[6]) (x) e[4]"));
    }
}
