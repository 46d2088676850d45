//! Integer partitions, drawn in French convention.
//!
//! Cell `(i, j)` sits in column `i` of row `j`, both counted from 0, so row
//! `j` has `μ_{j+1}` cells.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::coefficients::{MPoly, Monomial, Rat, Var};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::parse(1, 1, format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn row(n: u32) -> Partition {
        Partition::from_unsorted(vec![n])
    }

    pub fn column(n: u32) -> Partition {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts, `ℓ(μ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `μ_{i+1}`, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// `(kμ_1, kμ_2, …)`.
    pub fn scale_parts(&self, k: u32) -> Partition {
        Partition::from_unsorted(self.parts().iter().map(|&i| i * k).collect())
    }

    pub fn conjugate(&self) -> Partition {
        let mut c = Vec::with_capacity(self.first() as usize);
        for i in 0..self.first() {
            c.push(self.parts.iter().filter(|&&p| p > i).count() as u32);
        }
        Partition { parts: c }
    }

    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(j, &len)| (0..len).map(move |i| (i, j as u32)))
    }

    pub fn hook_length(&self, i: u32, j: u32) -> u32 {
        let c = self.conjugate();
        self.part(j as usize) + c.part(i as usize) - i - j - 1
    }

    pub fn hook_lengths(&self) -> Vec<u32> {
        let c = self.conjugate();
        self.cells()
            .map(|(i, j)| self.part(j as usize) + c.part(i as usize) - i - j - 1)
            .collect()
    }

    pub fn hook_product(&self) -> BigInt {
        self.hook_lengths()
            .into_iter()
            .fold(BigInt::one(), |acc, h| acc * h)
    }

    /// Number of standard Young tableaux.
    pub fn num_standard_tableaux(&self) -> BigInt {
        factorial(self.size()) / self.hook_product()
    }

    /// `η(μ) = Σ_k (k−1) μ_k`.
    pub fn eta(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .map(|(k, &p)| k as u32 * p)
            .sum()
    }

    /// `T_μ = Π q^i t^j` over cells.
    pub fn t_mu(&self) -> MPoly {
        let m = Monomial::from_pairs(&[
            (Var::q(), self.conjugate().eta()),
            (Var::t(), self.eta()),
        ]);
        MPoly::term(m, Rat::one())
    }

    /// `B_μ = Σ q^i t^j` over cells.
    pub fn b_mu(&self) -> MPoly {
        MPoly::from_terms(self.cells().map(|(i, j)| {
            (
                Monomial::from_pairs(&[(Var::q(), i), (Var::t(), j)]),
                Rat::one(),
            )
        }))
    }

    /// `z_μ = Π_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut m = 0u32;
            while i < self.parts.len() && self.parts[i] == p {
                m += 1;
                i += 1;
                z *= p;
                z *= m;
            }
        }
        z
    }

    /// Positions `i` (1-based) with `μ_i > μ_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| i + 1)
            .collect()
    }

    /// Product of the parts.
    pub fn part_product(&self) -> BigInt {
        self.parts.iter().fold(BigInt::one(), |acc, &p| acc * p)
    }

    /// Dominance order `self ⪰ other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    pub fn as_hook(&self) -> Option<HookShape> {
        if self.is_empty() || !self.is_hook() {
            return None;
        }
        Some(HookShape {
            arm: self.first() - 1,
            leg: self.len() as u32 - 1,
        })
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `λ + 1^d`: adds one to each of the first `d` parts (extending by 1's).
    pub fn add_column(&self, d: usize) -> Partition {
        let mut p = self.parts.clone();
        if p.len() < d {
            p.resize(d, 0);
        }
        for x in p.iter_mut().take(d) {
            *x += 1;
        }
        Partition::from_unsorted(p)
    }

    /// All `ν ⊆ self` with `self/ν` a vertical strip of size `k`.
    pub fn remove_vertical_strips(&self, k: u32) -> Vec<Partition> {
        let c = self.conjugate();
        c.remove_horizontal_strips(k)
            .into_iter()
            .map(|p| p.conjugate())
            .collect()
    }

    /// All `ν ⊆ self` with `self/ν` a horizontal strip of size `k`.
    pub fn remove_horizontal_strips(&self, k: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.len()];
        fn go(lam: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                if left == 0 {
                    out.push(Partition::from_unsorted(cur.clone()));
                }
                return;
            }
            // ν_i ∈ [λ_{i+1}, λ_i]
            let lo = lam.get(i + 1).copied().unwrap_or(0);
            let hi = lam[i];
            for v in (lo..=hi).rev() {
                let removed = hi - v;
                if removed > left {
                    break;
                }
                cur[i] = v;
                go(lam, i + 1, left - removed, cur, out);
            }
        }
        go(&self.parts, 0, k, &mut cur, &mut out);
        out
    }

    /// All `λ ⊇ self` with `λ/self` a horizontal strip of size `k`.
    pub fn add_horizontal_strips(&self, k: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let n = self.len() + 1;
        let mut cur = vec![0u32; n];
        fn go(mu: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            let base = mu.get(i).copied().unwrap_or(0);
            if i == cur.len() - 1 {
                if i > 0 && base + left > mu[i - 1] {
                    return;
                }
                cur[i] = base + left;
                out.push(Partition::from_unsorted(cur.clone()));
                return;
            }
            // λ_i ∈ [μ_i, μ_{i−1}] (unbounded for the first row)
            let hi = if i == 0 { base + left } else { (base + left).min(mu[i - 1]) };
            for v in (base..=hi).rev() {
                cur[i] = v;
                go(mu, i + 1, left - (v - base), cur, out);
            }
        }
        if self.is_empty() {
            return vec![Partition::from_unsorted(vec![k])];
        }
        go(&self.parts, 0, k, &mut cur, &mut out);
        out
    }

    /// All `λ ⊇ self` with `λ/self` a vertical strip of size `k`.
    pub fn add_vertical_strips(&self, k: u32) -> Vec<Partition> {
        self.conjugate()
            .add_horizontal_strips(k)
            .into_iter()
            .map(|p| p.conjugate())
            .collect()
    }
}

impl Ord for Partition {
    /// By size, then reverse lexicographic, so `(n)` leads its degree.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let t = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for (idx, piece) in t.split(',').enumerate() {
            let v: u32 = piece.trim().parse().map_err(|_| {
                Error::parse(1, idx + 1, format!("bad part {piece:?} in {s:?}"))
            })?;
            parts.push(v);
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Partition> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// Shorthand for building partitions in code and tests.
pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("weakly decreasing parts")
}

/// Frobenius hook `(a|b) = (a+1, 1^b)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct HookShape {
    pub arm: u32,
    pub leg: u32,
}

impl HookShape {
    pub fn new(arm: u32, leg: u32) -> HookShape {
        HookShape { arm, leg }
    }

    pub fn size(&self) -> u32 {
        self.arm + self.leg + 1
    }

    pub fn partition(&self) -> Partition {
        let mut parts = vec![self.arm + 1];
        parts.extend(std::iter::repeat_n(1, self.leg as usize));
        Partition { parts }
    }

    /// Hooks of size `n`, leg ascending.
    pub fn all(n: u32) -> Vec<HookShape> {
        if n == 0 {
            return Vec::new();
        }
        (0..n).map(|b| HookShape::new(n - 1 - b, b)).collect()
    }
}

impl fmt::Display for HookShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.arm, self.leg)
    }
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with parts `≤ max_part` and at most `max_len` parts.
pub fn partitions_bounded(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(left: u32, max: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            go(left - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    go(n, max_part, max_len, &mut cur, &mut out);
    out
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `s_μ(1^k) = Π (k + c(i,j)) / h(i,j)`, content `c(i,j) = i − j`.
pub fn schur_dim_eval(mu: &Partition, k: i64) -> Rat {
    let mut num = BigInt::one();
    for (i, j) in mu.cells() {
        num *= k + i as i64 - j as i64;
    }
    Rat::new(num, mu.hook_product())
}

/// `s_μ(1^k)` as a polynomial in the indeterminate `k`.
pub fn schur_dim_poly(mu: &Partition) -> MPoly {
    let k = MPoly::var(Var::k());
    let mut acc = MPoly::one();
    for (i, j) in mu.cells() {
        acc = acc.mul(&k.add(&MPoly::int(i as i64 - j as i64)));
    }
    acc.scale(&Rat::new(BigInt::one(), mu.hook_product()))
}

/// `[n]_q = 1 + q + … + q^{n−1}`.
pub fn q_integer(n: u32) -> MPoly {
    MPoly::univariate(Var::q(), &vec![1; n as usize])
}

pub fn q_factorial(n: u32) -> MPoly {
    (1..=n).fold(MPoly::one(), |acc, i| acc.mul(&q_integer(i)))
}

/// Gaussian binomial `[n choose k]_q`; zero outside `0 ≤ k ≤ n`.
pub fn gaussian_binomial(n: i64, k: i64) -> MPoly {
    if k < 0 || n < 0 || k > n {
        return MPoly::zero();
    }
    // q-Pascal: [n,k] = [n−1,k−1] + q^k [n−1,k]
    let k = k as usize;
    let mut row = vec![MPoly::one()];
    for m in 1..=n as usize {
        let mut next = vec![MPoly::zero(); m + 1];
        for j in 0..=m {
            let a = if j >= 1 && j - 1 < row.len() { row[j - 1].clone() } else { MPoly::zero() };
            let b = if j < row.len() {
                row[j].mul(&MPoly::term(Monomial::var(Var::q(), j as u32), Rat::one()))
            } else {
                MPoly::zero()
            };
            next[j] = a.add(&b);
        }
        row = next;
    }
    row[k].clone()
}

/// Catalan number `C(2n, n)/(n+1)`.
pub fn catalan(n: u32) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rat_int;
    use num_traits::Zero;

    #[test]
    fn hooks_and_statistics() {
        let mut h = part(&[2, 1]).hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 1, 3]);
        assert_eq!(part(&[1]).hook_lengths(), vec![1]);
        assert_eq!(part(&[2, 1]).t_mu().to_string(), "q*t");
        assert_eq!(part(&[1, 1, 1]).t_mu().to_string(), "t^3");
        assert_eq!(part(&[4]).t_mu().to_string(), "q^6");
        assert_eq!(part(&[2, 1]).b_mu().to_string(), "q + t + 1");
        assert_eq!(part(&[2, 2]).b_mu().to_string(), "q*t + q + t + 1");
        assert_eq!(part(&[3, 1, 1]).descents(), vec![1, 3]);
    }

    #[test]
    fn hook_product_divides_factorial() {
        let mu = part(&[4, 2, 1]);
        assert_eq!(mu.hook_lengths().len(), 7);
        assert!((factorial(7) % mu.hook_product()).is_zero());
        assert_eq!(mu.num_standard_tableaux(), BigInt::from(35));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=8 {
            let total: BigInt = partitions(n).iter().map(|m| factorial(n) / m.z()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn dimension_evaluation() {
        assert_eq!(schur_dim_eval(&part(&[1, 1]), 3), rat_int(3));
        assert_eq!(schur_dim_eval(&part(&[2]), 2), rat_int(3));
        // s_21(1^k) = (k^3 - k)/3 by interpolation through k = 1..5
        let xs: Vec<Rat> = (1..=5).map(rat_int).collect();
        let ys: Vec<Rat> = (1..=5).map(|k| schur_dim_eval(&part(&[2, 1]), k)).collect();
        let c = crate::coefficients::interpolate_univariate(&xs, &ys);
        let at = |k: i64| c.iter().rev().fold(rat_int(0), |acc, x| acc * rat_int(k) + x);
        assert_eq!(at(-2), schur_dim_eval(&part(&[2, 1]), -2));
        assert_eq!(schur_dim_eval(&part(&[2, 1]), -2), rat_int(-2));
        for n in 1..=6 {
            for mu in partitions(n) {
                for k in 0..mu.len() as i64 {
                    assert!(schur_dim_eval(&mu, k).is_zero(), "{mu:?} at {k}");
                }
            }
        }
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(3, 1).to_string(), "q^2 + q + 1");
        assert_eq!(gaussian_binomial(3, 2), gaussian_binomial(3, 1));
        assert_eq!(gaussian_binomial(4, 2).to_string(), "q^4 + q^3 + 2*q^2 + q + 1");
        assert!(gaussian_binomial(4, 5).is_zero());
    }

    #[test]
    fn strips() {
        let mut v = part(&[2, 1]).remove_vertical_strips(2);
        v.sort();
        assert_eq!(v, vec![part(&[1])]);
        let mut h = part(&[2, 1]).remove_horizontal_strips(1);
        h.sort();
        assert_eq!(h, vec![part(&[2]), part(&[1, 1])]);
        let mut a = part(&[1]).add_horizontal_strips(1);
        a.sort();
        assert_eq!(a, vec![part(&[2]), part(&[1, 1])]);
        assert_eq!(Partition::empty().add_vertical_strips(3), vec![part(&[1, 1, 1])]);
    }

    #[test]
    fn text_forms() {
        assert_eq!("10,1,1".parse::<Partition>().unwrap(), part(&[10, 1, 1]));
        assert_eq!("[3,1]".parse::<Partition>().unwrap().to_string(), "3,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(HookShape::new(2, 1).to_string(), "(2|1)");
        assert_eq!(HookShape::new(2, 1).partition(), part(&[3, 1]));
    }

    #[test]
    fn order_puts_row_first() {
        let ps = partitions(4);
        let mut sorted = ps.clone();
        sorted.sort();
        assert_eq!(ps, sorted);
        assert_eq!(ps[0], part(&[4]));
    }
}
