//! Combinatorial Macdonald polynomials `H̃_μ(q,t)` and the eigenoperators
//! `∇`, `Δ_{e_k}`, `Δ′_{e_k}`.
//!
//! The characterization is a linear system over `ℚ(q,t)`. It is solved at
//! rational points `(q_0, t_0)`, each Schur coefficient is interpolated on a
//! grid sized by the degree bounds `deg_q ≤ n(μ′)`, `deg_t ≤ n(μ)`, and the
//! resulting polynomials are then checked against the characterization
//! symbolically, so the returned basis is exact.

mod operators;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::coefficients::{bareiss_solve, interpolate_bivariate, rat, rat_int, rat_solve, MPoly, Rat, Var};
use crate::error::{Error, Result};
use crate::partitions::{partitions, Partition};
use crate::plethysm::schur_twist_matrix;
use crate::symfun::{Basis, SymFun};

pub use operators::{
    apply_eigen_operator, apply_eigen_operator_symbolic, delta_e, nabla, qt_inverse_special, Eigenvalue, QtReading,
};

#[derive(Clone, Debug, PartialEq)]
pub struct MacdonaldBasis {
    n: u32,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    polys: Vec<SymFun<MPoly>>,
}

impl MacdonaldBasis {
    fn new(n: u32, polys: Vec<SymFun<MPoly>>) -> MacdonaldBasis {
        let parts = partitions(n);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        MacdonaldBasis { n, parts, index, polys }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    /// `H̃_μ` in the Schur basis.
    pub fn get(&self, mu: &Partition) -> &SymFun<MPoly> {
        &self.polys[self.index[mu]]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &SymFun<MPoly>)> {
        self.parts.iter().zip(&self.polys)
    }

    /// `⟨H̃_μ, s_λ⟩`.
    pub fn coefficient(&self, mu: &Partition, lambda: &Partition) -> MPoly {
        self.get(mu).coeff(lambda)
    }

    /// `H[μ][λ] = ⟨H̃_μ, s_λ⟩` at a point.
    pub(crate) fn at_point(&self, pt: &mut Point) -> Vec<Vec<Rat>> {
        self.polys
            .iter()
            .map(|h| self.parts.iter().map(|lam| pt.eval(&h.coeff(lam))).collect())
            .collect()
    }

    /// Canonical text, one `H̃_μ` per line: `mu=[..] <Schur expansion>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (mu, h) in self.iter() {
            out.push_str(&format!("mu=[{mu}] {h}\n"));
        }
        out
    }

    pub fn from_text(n: u32, text: &str) -> Result<MacdonaldBasis> {
        let mut found: BTreeMap<Partition, SymFun<MPoly>> = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let rest = line
                .strip_prefix("mu=[")
                .ok_or_else(|| Error::parse(i + 1, 1, "expected mu=[...]"))?;
            let close = rest.find(']').ok_or_else(|| Error::parse(i + 1, 5, "unclosed '['"))?;
            let mu: Partition = rest[..close]
                .parse()
                .map_err(|_| Error::parse(i + 1, 5, "bad partition"))?;
            let h: SymFun<MPoly> = rest[close + 1..].trim().parse().map_err(|e| match e {
                Error::Parse { column, message, .. } => Error::parse(i + 1, column + close + 5, message),
                other => other,
            })?;
            found.insert(mu, h);
        }
        let parts = partitions(n);
        let mut polys = Vec::with_capacity(parts.len());
        for mu in &parts {
            polys.push(
                found
                    .remove(mu)
                    .ok_or_else(|| Error::parse(1, 1, format!("missing mu=[{mu}]")))?,
            );
        }
        Ok(MacdonaldBasis::new(n, polys))
    }
}

/// A rational evaluation point with cached powers.
pub(crate) struct Point {
    pub q: Rat,
    pub t: Rat,
    qpow: Vec<Rat>,
    tpow: Vec<Rat>,
}

impl Point {
    pub fn new(q: Rat, t: Rat) -> Point {
        Point {
            qpow: vec![Rat::one()],
            tpow: vec![Rat::one()],
            q,
            t,
        }
    }

    fn pow(cache: &mut Vec<Rat>, base: &Rat, e: usize) -> Rat {
        while cache.len() <= e {
            let next = cache.last().unwrap() * base;
            cache.push(next);
        }
        cache[e].clone()
    }

    pub fn qt(&mut self, i: u32, j: u32) -> Rat {
        Point::pow(&mut self.qpow, &self.q, i as usize) * Point::pow(&mut self.tpow, &self.t, j as usize)
    }

    /// Evaluates a polynomial in `q, t` (other variables must be absent).
    pub fn eval(&mut self, p: &MPoly) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in p.terms() {
            acc += self.qt(m.exp(Var::q()), m.exp(Var::t())) * c;
        }
        acc
    }
}

/// `q` grid node `i`: 2, 4, 6, …
pub(crate) fn q_node(i: usize) -> Rat {
    rat_int(2 * (i as i64 + 1))
}

/// `t` grid node `j`: 1/3, 1/5, 1/7, 1/11, … (reciprocals of odd primes).
///
/// With `q` even and `t = 1/p`, no relation `q^a t^b = 1` holds, so the
/// characterization stays nonsingular at every node.
pub(crate) fn t_node(j: usize) -> Rat {
    static PRIMES: OnceLock<Vec<i64>> = OnceLock::new();
    let primes = PRIMES.get_or_init(|| {
        let mut v = Vec::new();
        let mut c = 3i64;
        while v.len() < 400 {
            if (2..c).take_while(|d| d * d <= c).all(|d| c % d != 0) {
                v.push(c);
            }
            c += 2;
        }
        v
    });
    rat(1, primes[j])
}

struct Twists {
    aq: Vec<Vec<MPoly>>,
    at: Vec<Vec<MPoly>>,
}

fn twists(n: u32) -> Result<Arc<Twists>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Twists>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let aq = schur_twist_matrix(n, Var::q())?;
    let at = aq
        .iter()
        .map(|row| row.iter().map(|p| p.swap_vars(Var::q(), Var::t())).collect())
        .collect();
    let t = Arc::new(Twists { aq, at });
    Ok(cache.lock().unwrap().entry(n).or_insert(t).clone())
}

fn eval_matrix(m: &[Vec<MPoly>], pt: &mut Point) -> Vec<Vec<Rat>> {
    m.iter().map(|row| row.iter().map(|p| pt.eval(p)).collect()).collect()
}

/// Row indices `ν` of the vanishing conditions for `μ`: `ν ⋡ μ` for the
/// `q`-twist and `ν ⋡ μ′` for the `t`-twist.
fn conditions(parts: &[Partition], mu: &Partition) -> (Vec<usize>, Vec<usize>) {
    let conj = mu.conjugate();
    let q_rows = (0..parts.len()).filter(|&v| !parts[v].dominates(mu)).collect();
    let t_rows = (0..parts.len()).filter(|&v| !parts[v].dominates(&conj)).collect();
    (q_rows, t_rows)
}

/// Solves the characterization of `H̃_μ` at one point; the rows of `aq`/`at`
/// are indexed by `λ` (the unknown) and columns by `ν` (the condition).
fn solve_point(parts: &[Partition], mu: &Partition, aq: &[Vec<Rat>], at: &[Vec<Rat>]) -> Result<Vec<Rat>> {
    let k = parts.len();
    let (q_rows, t_rows) = conditions(parts, mu);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for &v in &q_rows {
        a.push((0..k).map(|l| aq[l][v].clone()).collect());
        b.push(Rat::zero());
    }
    for &v in &t_rows {
        a.push((0..k).map(|l| at[l][v].clone()).collect());
        b.push(Rat::zero());
    }
    // ⟨s_n, H̃_μ⟩ = 1; (n) is the first partition
    let mut norm = vec![Rat::zero(); k];
    norm[0] = Rat::one();
    a.push(norm);
    b.push(Rat::one());
    rat_solve(a, b)
}

/// Checks the characterization exactly over `ℚ[q,t]`.
pub fn verify_characterization(basis: &MacdonaldBasis) -> Result<()> {
    let tw = twists(basis.n)?;
    let parts = &basis.parts;
    for (mu, h) in basis.iter() {
        let (q_rows, t_rows) = conditions(parts, mu);
        let coeffs: Vec<MPoly> = parts.iter().map(|l| h.coeff(l)).collect();
        for (rows, m, name) in [(&q_rows, &tw.aq, "(1-q)"), (&t_rows, &tw.at, "(1-t)")] {
            for &v in rows {
                let mut acc = MPoly::zero();
                for (l, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() && !m[l][v].is_zero() {
                        acc = acc.add(&c.mul(&m[l][v]));
                    }
                }
                if !acc.is_zero() {
                    return Err(Error::Internal(format!(
                        "H~[{mu}] fails the {name} triangularity at s[{}]",
                        parts[v]
                    )));
                }
            }
        }
        if !coeffs[0].is_one() {
            return Err(Error::Internal(format!("<s_n, H~[{mu}]> = {}", coeffs[0])));
        }
    }
    Ok(())
}

/// Builds `{H̃_μ : μ ⊢ n}` by point solves and interpolation, then verifies it.
pub fn compute_macdonald_basis(n: u32) -> Result<MacdonaldBasis> {
    let tw = twists(n)?;
    let parts = partitions(n);
    let k = parts.len();
    let mut aq_cache: HashMap<usize, Vec<Vec<Rat>>> = HashMap::new();
    let mut at_cache: HashMap<usize, Vec<Vec<Rat>>> = HashMap::new();
    let mut polys = Vec::with_capacity(k);
    for mu in &parts {
        let dq = mu.conjugate().eta() as usize;
        let dt = mu.eta() as usize;
        let xs: Vec<Rat> = (0..=dq).map(q_node).collect();
        let ys: Vec<Rat> = (0..=dt).map(t_node).collect();
        for (i, x) in xs.iter().enumerate() {
            aq_cache
                .entry(i)
                .or_insert_with(|| eval_matrix(&tw.aq, &mut Point::new(x.clone(), Rat::zero())));
        }
        for (j, y) in ys.iter().enumerate() {
            at_cache
                .entry(j)
                .or_insert_with(|| eval_matrix(&tw.at, &mut Point::new(Rat::zero(), y.clone())));
        }
        // values[λ][i][j]
        let mut values = vec![vec![vec![Rat::zero(); ys.len()]; xs.len()]; k];
        for i in 0..xs.len() {
            for j in 0..ys.len() {
                let c = solve_point(&parts, mu, &aq_cache[&i], &at_cache[&j])?;
                for (l, v) in c.into_iter().enumerate() {
                    values[l][i][j] = v;
                }
            }
        }
        let mut h = SymFun::zero(Basis::S);
        for (l, lam) in parts.iter().enumerate() {
            h.add_term(lam.clone(), interpolate_bivariate(Var::q(), Var::t(), &xs, &ys, &values[l]));
        }
        polys.push(h);
    }
    let basis = MacdonaldBasis::new(n, polys);
    verify_characterization(&basis)?;
    Ok(basis)
}

/// Same basis by fraction-free elimination over `ℚ[q,t]`; practical for small `n`.
pub fn macdonald_basis_symbolic(n: u32) -> Result<MacdonaldBasis> {
    let tw = twists(n)?;
    let parts = partitions(n);
    let k = parts.len();
    let mut polys = Vec::with_capacity(k);
    for mu in &parts {
        let (q_rows, t_rows) = conditions(&parts, mu);
        let mut a: Vec<Vec<MPoly>> = Vec::new();
        let mut b = Vec::new();
        for &v in &q_rows {
            a.push((0..k).map(|l| tw.aq[l][v].clone()).collect());
            b.push(MPoly::zero());
        }
        for &v in &t_rows {
            a.push((0..k).map(|l| tw.at[l][v].clone()).collect());
            b.push(MPoly::zero());
        }
        let mut norm = vec![MPoly::zero(); k];
        norm[0] = MPoly::one();
        a.push(norm);
        b.push(MPoly::one());
        let sol = bareiss_solve(a, b)?.to_ratfuns()?;
        let mut h = SymFun::zero(Basis::S);
        for (lam, c) in parts.iter().zip(sol) {
            let p = c
                .as_polynomial()
                .ok_or_else(|| Error::Internal(format!("H~[{mu}] has a non-polynomial coefficient {c}")))?;
            h.add_term(lam.clone(), p);
        }
        polys.push(h);
    }
    Ok(MacdonaldBasis::new(n, polys))
}

fn basis_cache() -> &'static Mutex<HashMap<u32, Arc<MacdonaldBasis>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<MacdonaldBasis>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The basis for degree `n`, computed once per process.
pub fn macdonald_basis(n: u32) -> Result<Arc<MacdonaldBasis>> {
    if let Some(b) = basis_cache().lock().unwrap().get(&n) {
        return Ok(b.clone());
    }
    let b = Arc::new(compute_macdonald_basis(n)?);
    Ok(basis_cache().lock().unwrap().entry(n).or_insert(b).clone())
}

/// Installs a basis obtained elsewhere (e.g. a disk cache) after verifying it.
pub fn install_macdonald_basis(basis: MacdonaldBasis) -> Result<Arc<MacdonaldBasis>> {
    verify_characterization(&basis)?;
    let b = Arc::new(basis);
    Ok(basis_cache().lock().unwrap().entry(b.n).or_insert(b).clone())
}

/// Checks `H̃_μ(q,t) = T_μ ω H̃_μ(1/q,1/t)` and `H̃_μ(t,q) = H̃_{μ′}(q,t)`.
pub fn macdonald_symmetries_check(n: u32) -> Result<bool> {
    let basis = macdonald_basis(n)?;
    for (mu, h) in basis.iter() {
        let (a, b) = (mu.conjugate().eta(), mu.eta());
        let mut flipped = SymFun::zero(Basis::S);
        for (lam, c) in h.terms() {
            let mut terms = Vec::new();
            for (m, x) in c.terms() {
                let (i, j) = (m.exp(Var::q()), m.exp(Var::t()));
                if i > a || j > b {
                    return Ok(false);
                }
                terms.push((
                    crate::coefficients::Monomial::from_pairs(&[(Var::q(), a - i), (Var::t(), b - j)]),
                    x.clone(),
                ));
            }
            flipped.add_term(lam.conjugate(), MPoly::from_terms(terms));
        }
        if &flipped != h {
            return Ok(false);
        }
        let swapped = h.map_coeffs(|c| c.swap_vars(Var::q(), Var::t()));
        if &swapped != basis.get(&mu.conjugate()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    fn poly(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn degree_two() {
        let b = macdonald_basis(2).unwrap();
        assert_eq!(b.get(&part(&[2])).to_string(), "s[2] + q*s[1,1]");
        assert_eq!(b.get(&part(&[1, 1])).to_string(), "s[2] + t*s[1,1]");
        assert_eq!(macdonald_basis(1).unwrap().get(&part(&[1])).to_string(), "s[1]");
    }

    #[test]
    fn agrees_with_symbolic_elimination() {
        for n in 0..=4 {
            assert_eq!(*macdonald_basis(n).unwrap(), macdonald_basis_symbolic(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn hook_coefficients_n4() {
        let b = macdonald_basis(4).unwrap();
        // ⟨H̃_22, s_(a|b)⟩ = e_b[q + t + qt]
        let h = b.get(&part(&[2, 2]));
        assert_eq!(h.coeff(&part(&[4])), MPoly::one());
        assert_eq!(h.coeff(&part(&[3, 1])), poly("q + t + q*t"));
        assert_eq!(h.coeff(&part(&[2, 1, 1])), poly("q*t + q^2*t + q*t^2"));
        assert_eq!(h.coeff(&part(&[1, 1, 1, 1])), poly("q^2*t^2"));
    }

    #[test]
    fn symmetries() {
        for n in 1..=4 {
            assert!(macdonald_symmetries_check(n).unwrap());
        }
    }

    #[test]
    fn text_round_trip() {
        let b = macdonald_basis(3).unwrap();
        let back = MacdonaldBasis::from_text(3, &b.to_text()).unwrap();
        assert_eq!(back, *b);
        assert!(MacdonaldBasis::from_text(3, "mu=[3] s[3]\n").is_err());
    }
}
