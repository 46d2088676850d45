//! Brute-force diagonal harmonics: the span of the Vandermonde determinant
//! under derivatives and higher polarizations, for tiny `n` and `k`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coefficients::{MPoly, Monomial, Rat, Var};
use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};
use crate::symfun::{Basis, SymFun};

/// Exponent of `x_{r,i}` stored at `r·n + i`.
type Mono = Vec<u32>;
type Poly = BTreeMap<Mono, Rat>;

pub const MAX_N: u32 = 4;
pub const MAX_K: u32 = 3;

const PARAMS: [&str; 3] = ["q", "t", "u"];

/// Names of the grading variables for `k` rows.
pub fn grading_vars(k: u32) -> Vec<Var> {
    PARAMS[..k as usize].iter().map(|s| Var::new(s)).collect()
}

fn add_scaled(acc: &mut Poly, p: &Poly, c: &Rat) {
    for (m, x) in p {
        let e = acc.entry(m.clone()).or_insert_with(Rat::zero);
        *e += x * c;
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

fn vandermonde(n: usize, width: usize) -> Poly {
    let mut acc: Poly = BTreeMap::from([(vec![0; width], Rat::one())]);
    for j in 0..n {
        for i in 0..j {
            let mut next = Poly::new();
            for (m, c) in &acc {
                let mut a = m.clone();
                a[j] += 1;
                add_scaled(&mut next, &BTreeMap::from([(a, c.clone())]), &Rat::one());
                let mut b = m.clone();
                b[i] += 1;
                add_scaled(&mut next, &BTreeMap::from([(b, c.clone())]), &-Rat::one());
            }
            acc = next;
        }
    }
    acc
}

/// `∂^j/∂x_v^j`.
fn derivative(p: &Poly, v: usize, j: u32) -> Poly {
    let mut out = Poly::new();
    for (m, c) in p {
        if m[v] < j {
            continue;
        }
        let falling: u64 = (0..j).map(|s| u64::from(m[v] - s)).product();
        let mut d = m.clone();
        d[v] -= j;
        add_scaled(&mut out, &BTreeMap::from([(d, c.clone())]), &Rat::from_integer(BigInt::from(falling)));
    }
    out
}

fn multiply_var(p: &Poly, v: usize) -> Poly {
    p.iter()
        .map(|(m, c)| {
            let mut d = m.clone();
            d[v] += 1;
            (d, c.clone())
        })
        .collect()
}

/// Reduced row-echelon basis of one homogeneous component.
#[derive(Default)]
struct Echelon {
    rows: Vec<(Mono, Poly)>,
}

impl Echelon {
    /// Adds `p` to the span; returns the new basis vector when `p` was independent.
    fn insert(&mut self, mut p: Poly) -> Option<Poly> {
        for (pivot, row) in &self.rows {
            if let Some(c) = p.get(pivot).cloned() {
                add_scaled(&mut p, row, &-c);
            }
        }
        let (pivot, lead) = p.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))?;
        let inv = lead.recip();
        p.values_mut().for_each(|c| *c *= &inv);
        for (_, row) in &mut self.rows {
            if let Some(c) = row.get(&pivot).cloned() {
                add_scaled(row, &p, &-c);
            }
        }
        self.rows.push((pivot, p.clone()));
        Some(p)
    }
}

fn multidegree(m: &Mono, n: usize, k: usize) -> Vec<u32> {
    (0..k).map(|r| m[r * n..(r + 1) * n].iter().sum()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn cycle_type(sigma: &[usize]) -> Partition {
    let mut seen = vec![false; sigma.len()];
    let mut parts = Vec::new();
    for s in 0..sigma.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = sigma[i];
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    Partition::from_unsorted(parts)
}

fn act(p: &Poly, sigma: &[usize], n: usize, k: usize) -> Poly {
    p.iter()
        .map(|(m, c)| {
            let mut d = vec![0; m.len()];
            for r in 0..k {
                for i in 0..n {
                    d[r * n + sigma[i]] = m[r * n + i];
                }
            }
            (d, c.clone())
        })
        .collect()
}

/// The harmonic components, keyed by multidegree, as echelon bases.
fn harmonic_spaces(n: usize, k: usize) -> BTreeMap<Vec<u32>, Echelon> {
    let width = n * k;
    let mut spaces: BTreeMap<Vec<u32>, Echelon> = BTreeMap::new();
    let mut queue: VecDeque<Poly> = VecDeque::new();
    let offer = |p: Poly, spaces: &mut BTreeMap<Vec<u32>, Echelon>, queue: &mut VecDeque<Poly>| {
        let Some(m) = p.keys().next() else { return };
        let d = multidegree(m, n, k);
        if let Some(b) = spaces.entry(d).or_default().insert(p) {
            queue.push_back(b);
        }
    };
    offer(vandermonde(n, width), &mut spaces, &mut queue);
    while let Some(p) = queue.pop_front() {
        let mut images = Vec::new();
        for v in 0..width {
            images.push(derivative(&p, v, 1));
        }
        let top = p.keys().map(|m| m.iter().copied().max().unwrap_or(0)).max().unwrap_or(0);
        for r in 0..k {
            for s in 0..k {
                if r == s {
                    continue;
                }
                for j in 1..=top {
                    let mut acc = Poly::new();
                    for i in 0..n {
                        let d = derivative(&p, r * n + i, j);
                        add_scaled(&mut acc, &multiply_var(&d, s * n + i), &Rat::one());
                    }
                    images.push(acc);
                }
            }
        }
        for img in images {
            offer(img, &mut spaces, &mut queue);
        }
    }
    spaces.retain(|_, e| !e.rows.is_empty());
    spaces
}

/// Multigraded Frobenius characteristic of the diagonal harmonics in `k`
/// rows of `n` variables, graded by `q, t, u` in row order.
pub fn brute_force_harmonics(n: u32, k: u32) -> Result<SymFun<MPoly>> {
    if n == 0 || k == 0 || n > MAX_N || k > MAX_K {
        return Err(Error::Unsupported(format!(
            "brute-force harmonics limited to 1 ≤ n ≤ {MAX_N}, 1 ≤ k ≤ {MAX_K}; got n={n}, k={k}"
        )));
    }
    let (nu, ku) = (n as usize, k as usize);
    let vars = grading_vars(k);
    let perms = permutations(nu);
    let types: Vec<Partition> = perms.iter().map(|s| cycle_type(s)).collect();
    let mut frob: HashMap<Partition, MPoly> = HashMap::new();
    for (d, space) in harmonic_spaces(nu, ku) {
        let mono = Monomial::from_pairs(&vars.iter().copied().zip(d.iter().copied()).collect::<Vec<_>>());
        for (sigma, ty) in perms.iter().zip(&types) {
            let mut trace = Rat::zero();
            for (pivot, row) in &space.rows {
                if let Some(c) = act(row, sigma, nu, ku).get(pivot) {
                    trace += c;
                }
            }
            let e = frob.entry(ty.clone()).or_insert_with(MPoly::zero);
            *e = e.add(&MPoly::term(mono.clone(), trace));
        }
    }
    let scale = Rat::new(BigInt::one(), factorial(n));
    let out = SymFun::from_terms(Basis::P, frob.into_iter().map(|(mu, c)| (mu, c.scale(&scale))));
    Ok(out.to_schur())
}

/// `Σ_d dim(component d) q^d` in the single-row case, read off the characteristic.
pub fn hilbert_series(frob: &SymFun<MPoly>) -> MPoly {
    let mut acc = MPoly::zero();
    for (mu, c) in frob.to_schur().terms() {
        let f = Rat::from_integer(mu.num_standard_tableaux());
        acc = acc.add(&c.scale(&f));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::q_factorial;

    #[test]
    fn coinvariants_have_q_factorial_series() {
        for n in 1..=3 {
            let f = brute_force_harmonics(n, 1).unwrap();
            assert_eq!(hilbert_series(&f), q_factorial(n), "n = {n}");
        }
    }

    #[test]
    fn single_alphabet_n2() {
        let f = brute_force_harmonics(2, 1).unwrap();
        assert_eq!(f.to_string(), "s[2] + q*s[1,1]");
    }

    #[test]
    fn refuses_large_scale() {
        assert!(brute_force_harmonics(5, 1).is_err());
        assert!(brute_force_harmonics(2, 4).is_err());
    }
}
