//! Per-degree change-of-basis matrices, all routed through the monomial basis.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::Basis;
use crate::coefficients::{rat_int, rat_inverse, Rat};
use crate::partitions::{partitions, Partition};

type Matrix = Vec<Vec<Rat>>;

/// Transition data for one degree. Row `λ` of `to_m(b)` expands `b_λ` in
/// the monomial basis; `from_m(b)` is its inverse.
pub struct DegreeTables {
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    to_m: [Matrix; 6],
    from_m: [Matrix; 6],
}

impl DegreeTables {
    pub fn index(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn to_m(&self, b: Basis) -> &Matrix {
        &self.to_m[b as usize]
    }

    pub fn from_m(&self, b: Basis) -> &Matrix {
        &self.from_m[b as usize]
    }

    /// Kostka numbers `K_{λμ}` = coefficient of `m_μ` in `s_λ`.
    pub fn kostka(&self, lambda: &Partition, mu: &Partition) -> Rat {
        self.to_m(Basis::S)[self.index(lambda)][self.index(mu)].clone()
    }
}

pub fn tables(n: u32) -> Arc<DegreeTables> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    // built outside the lock; a concurrent duplicate build is harmless
    let t = Arc::new(build(n));
    cache.lock().unwrap().entry(n).or_insert(t).clone()
}

fn identity(k: usize) -> Matrix {
    (0..k)
        .map(|i| (0..k).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect()
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let k = a.len();
    let mut out = vec![vec![Rat::zero(); k]; k];
    for i in 0..k {
        for (l, ail) in a[i].iter().enumerate() {
            if ail.is_zero() {
                continue;
            }
            for j in 0..k {
                if !b[l][j].is_zero() {
                    out[i][j] += ail * &b[l][j];
                }
            }
        }
    }
    out
}

fn transpose(a: &Matrix) -> Matrix {
    let k = a.len();
    (0..k).map(|i| (0..k).map(|j| a[j][i].clone()).collect()).collect()
}

fn kostka_number(lambda: &Partition, mu: &[u32], memo: &mut HashMap<(Partition, Vec<u32>), u64>) -> u64 {
    if mu.is_empty() {
        return u64::from(lambda.is_empty());
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let last = mu[mu.len() - 1];
    let rest = &mu[..mu.len() - 1];
    let v = lambda
        .remove_horizontal_strips(last)
        .iter()
        .map(|nu| kostka_number(nu, rest, memo))
        .sum();
    memo.insert(key, v);
    v
}

/// Number of ways to distribute the parts of `lambda` into bins of sizes `mu`.
fn power_sum_monomial(lambda: &[u32], bins: &mut Vec<u32>) -> u64 {
    let Some((&first, rest)) = lambda.split_first() else {
        return u64::from(bins.iter().all(|&b| b == 0));
    };
    let mut total = 0;
    for j in 0..bins.len() {
        if bins[j] >= first {
            bins[j] -= first;
            total += power_sum_monomial(rest, bins);
            bins[j] += first;
        }
    }
    total
}

fn build(n: u32) -> DegreeTables {
    let parts = partitions(n);
    let k = parts.len();
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

    // Kostka matrix: s_λ = Σ K_{λμ} m_μ; only μ ⪯ λ contribute.
    let mut memo = HashMap::new();
    let mut kost = vec![vec![Rat::zero(); k]; k];
    for (i, lam) in parts.iter().enumerate() {
        for (j, mu) in parts.iter().enumerate() {
            if lam.dominates(mu) {
                kost[i][j] = rat_int(kostka_number(lam, mu.parts(), &mut memo) as i64);
            }
        }
    }
    let conj: Vec<usize> = parts.iter().map(|p| index[&p.conjugate()]).collect();
    // h_λ = Σ_ν K_{νλ} s_ν, e_λ = Σ_ν K_{νλ} s_{ν′}
    let kt = transpose(&kost);
    let h_to_m = matmul(&kt, &kost);
    let kost_conj: Matrix = (0..k).map(|i| kost[conj[i]].clone()).collect();
    let e_to_m = matmul(&kt, &kost_conj);
    let mut p_to_m = vec![vec![Rat::zero(); k]; k];
    for (i, lam) in parts.iter().enumerate() {
        for (j, mu) in parts.iter().enumerate() {
            let mut bins = mu.parts().to_vec();
            let c = power_sum_monomial(lam.parts(), &mut bins);
            if c > 0 {
                p_to_m[i][j] = rat_int(c as i64);
            }
        }
    }
    let m_to_h = rat_inverse(&h_to_m).expect("h basis is a basis");
    // f_λ = ω m_λ = Σ_μ (m→h)_{λμ} e_μ
    let f_to_m = matmul(&m_to_h, &e_to_m);

    let mut to_m: [Matrix; 6] = Default::default();
    to_m[Basis::M as usize] = identity(k);
    to_m[Basis::E as usize] = e_to_m;
    to_m[Basis::H as usize] = h_to_m;
    to_m[Basis::P as usize] = p_to_m;
    to_m[Basis::S as usize] = kost;
    to_m[Basis::F as usize] = f_to_m;
    let mut from_m: [Matrix; 6] = Default::default();
    for b in Basis::ALL {
        from_m[b as usize] = if b == Basis::H {
            m_to_h.clone()
        } else {
            rat_inverse(&to_m[b as usize]).expect("transition matrices are invertible")
        };
    }
    DegreeTables {
        parts,
        index,
        to_m,
        from_m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    #[test]
    fn kostka_small() {
        let t = tables(3);
        assert_eq!(t.kostka(&part(&[2, 1]), &part(&[1, 1, 1])), rat_int(2));
        assert_eq!(t.kostka(&part(&[3]), &part(&[1, 1, 1])), rat_int(1));
        assert_eq!(t.kostka(&part(&[1, 1, 1]), &part(&[2, 1])), rat_int(0));
        let t4 = tables(4);
        assert_eq!(t4.kostka(&part(&[2, 2]), &part(&[2, 1, 1])), rat_int(1));
        assert_eq!(t4.kostka(&part(&[3, 1]), &part(&[1, 1, 1, 1])), rat_int(3));
    }

    #[test]
    fn inverses_are_exact() {
        for n in 0..=6 {
            let t = tables(n);
            for b in Basis::ALL {
                let prod = matmul(t.to_m(b), t.from_m(b));
                assert_eq!(prod, identity(t.parts.len()), "basis {b:?} degree {n}");
            }
        }
    }
}
