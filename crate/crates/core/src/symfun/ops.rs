use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::transitions::tables;
use super::{Basis, SymFun};
use crate::coefficients::{rat_int, Coeff, MPoly, Monomial, Rat, Var};
use crate::error::{Error, Result};
use crate::partitions::Partition;

pub(super) fn convert<C: Coeff>(f: &SymFun<C>, target: Basis) -> SymFun<C> {
    if f.basis == target {
        return f.clone();
    }
    let mut out = SymFun::zero(target);
    let mut by_degree: BTreeMap<u32, Vec<(&Partition, &C)>> = BTreeMap::new();
    for (p, c) in &f.terms {
        by_degree.entry(p.size()).or_default().push((p, c));
    }
    for (n, terms) in by_degree {
        let t = tables(n);
        let k = t.parts.len();
        let to_m = t.to_m(f.basis);
        let mut mono: Vec<C> = vec![C::zero(); k];
        for (p, c) in terms {
            for (j, x) in to_m[t.index(p)].iter().enumerate() {
                if !Zero::is_zero(x) {
                    mono[j] = mono[j].add_ref(&c.scale(x));
                }
            }
        }
        let from_m = t.from_m(target);
        let mut acc: Vec<C> = vec![C::zero(); k];
        for (j, c) in mono.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (l, x) in from_m[j].iter().enumerate() {
                if !Zero::is_zero(x) {
                    acc[l] = acc[l].add_ref(&c.scale(x));
                }
            }
        }
        for (l, c) in acc.into_iter().enumerate() {
            out.add_term(t.parts[l].clone(), c);
        }
    }
    out
}

pub(crate) fn union(a: &Partition, b: &Partition) -> Partition {
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::from_unsorted(v)
}

impl<C: Coeff> SymFun<C> {
    /// Product, returned in the basis of `self`.
    pub fn mul(&self, other: &SymFun<C>) -> SymFun<C> {
        let work = if self.basis.is_multiplicative() {
            self.basis
        } else {
            Basis::E
        };
        let a = self.to_basis(work);
        let b = other.to_basis(work);
        let mut out = SymFun::zero(work);
        for (p, c) in &a.terms {
            for (q, d) in &b.terms {
                out.add_term(union(p, q), c.mul_ref(d));
            }
        }
        out.to_basis(self.basis)
    }

    pub fn pow(&self, k: u32) -> SymFun<C> {
        let mut acc = SymFun::one().to_basis(self.basis);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The involution with `ω s_λ = s_{λ′}`.
    pub fn omega(&self) -> SymFun<C> {
        match self.basis {
            Basis::S => self.map_partitions(|p| p.conjugate()),
            Basis::E | Basis::H | Basis::M | Basis::F => {
                let target = match self.basis {
                    Basis::E => Basis::H,
                    Basis::H => Basis::E,
                    Basis::M => Basis::F,
                    _ => Basis::M,
                };
                SymFun {
                    basis: target,
                    terms: self.terms.clone(),
                }
            }
            Basis::P => SymFun::from_terms(
                Basis::P,
                self.terms.iter().map(|(p, c)| {
                    let sign = (p.size() as usize - p.len()) % 2;
                    (p.clone(), if sign == 1 { c.neg_ref() } else { c.clone() })
                }),
            ),
        }
    }

    /// `max ℓ(λ)` over the Schur support; 0 for constants and zero.
    pub fn length(&self) -> usize {
        self.to_schur().terms.keys().map(|p| p.len()).max().unwrap_or(0)
    }

    /// Every Schur coefficient is a polynomial with nonnegative integer coefficients.
    pub fn is_schur_positive(&self) -> bool {
        self.to_schur().terms.values().all(|c| {
            c.to_ratfun()
                .as_polynomial()
                .map(|p| p.has_nonnegative_integer_coefficients())
                .unwrap_or(false)
        })
    }

    /// Every coefficient (in the current basis) is a polynomial with integer coefficients.
    pub fn has_integral_coefficients(&self) -> bool {
        self.terms.values().all(|c| {
            c.to_ratfun()
                .as_polynomial()
                .map(|p| p.has_integer_coefficients())
                .unwrap_or(false)
        })
    }

    /// `e_k^⊥` on the Schur expansion: removal of vertical strips of size `k`.
    pub fn e_perp(&self, k: u32) -> SymFun<C> {
        let s = self.to_schur();
        let mut out = SymFun::zero(Basis::S);
        for (mu, c) in &s.terms {
            if mu.size() < k {
                continue;
            }
            for nu in mu.remove_vertical_strips(k) {
                out.add_term(nu, c.clone());
            }
        }
        out
    }

    /// `h_k^⊥` on the Schur expansion: removal of horizontal strips of size `k`.
    pub fn h_perp(&self, k: u32) -> SymFun<C> {
        let s = self.to_schur();
        let mut out = SymFun::zero(Basis::S);
        for (mu, c) in &s.terms {
            if mu.size() < k {
                continue;
            }
            for nu in mu.remove_horizontal_strips(k) {
                out.add_term(nu, c.clone());
            }
        }
        out
    }

    /// Multiplies by `e_k` via the Pieri rule on the Schur expansion.
    pub fn mul_e(&self, k: u32) -> SymFun<C> {
        let s = self.to_schur();
        let mut out = SymFun::zero(Basis::S);
        for (mu, c) in &s.terms {
            for nu in mu.add_vertical_strips(k) {
                out.add_term(nu, c.clone());
            }
        }
        out
    }

    /// Multiplies by `h_k` via the Pieri rule on the Schur expansion.
    pub fn mul_h(&self, k: u32) -> SymFun<C> {
        let s = self.to_schur();
        let mut out = SymFun::zero(Basis::S);
        for (mu, c) in &s.terms {
            for nu in mu.add_horizontal_strips(k) {
                out.add_term(nu, c.clone());
            }
        }
        out
    }

    /// Evaluates a symmetric function at finitely many variables `x_1..x_k`.
    pub fn eval_vars(&self, vars: &[MPoly]) -> C
    where
        C: From<MPoly>,
    {
        let s = self.to_schur();
        let mut memo = HashMap::new();
        let mut acc = C::zero();
        for (lam, c) in &s.terms {
            let v = schur_eval_vars(lam, vars, &mut memo);
            if !v.is_zero() {
                acc = acc.add_ref(&c.mul_ref(&C::from(v)));
            }
        }
        acc
    }
}

/// `s_λ(x_1,…,x_k)` by branching on horizontal strips.
pub(crate) fn schur_eval_vars(
    lam: &Partition,
    vars: &[MPoly],
    memo: &mut HashMap<(Partition, usize), MPoly>,
) -> MPoly {
    if lam.is_empty() {
        return MPoly::one();
    }
    if lam.len() > vars.len() {
        return MPoly::zero();
    }
    let key = (lam.clone(), vars.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let k = vars.len();
    let x = &vars[k - 1];
    let mut acc = MPoly::zero();
    for r in 0..=lam.first() {
        if r > lam.size() {
            break;
        }
        for nu in lam.remove_horizontal_strips(r) {
            if nu.len() > k - 1 {
                continue;
            }
            let sub = schur_eval_vars(&nu, &vars[..k - 1], memo);
            if !sub.is_zero() {
                acc = acc.add(&sub.mul(&x.pow(r)));
            }
        }
    }
    memo.insert(key, acc.clone());
    acc
}

/// Hall scalar product, computed through the Schur basis.
pub fn hall<C: Coeff>(a: &SymFun<C>, b: &SymFun<C>) -> C {
    let a = a.to_schur();
    let b = b.to_schur();
    let mut acc = C::zero();
    for (p, c) in a.terms() {
        let d = b.coeff(p);
        if !d.is_zero() {
            acc = acc.add_ref(&c.mul_ref(&d));
        }
    }
    acc
}

/// Hall scalar product from `⟨p_λ, p_μ⟩ = z_μ δ_{λμ}`.
pub fn hall_via_power_sums<C: Coeff>(a: &SymFun<C>, b: &SymFun<C>) -> C {
    let a = a.to_basis(Basis::P);
    let b = b.to_basis(Basis::P);
    let mut acc = C::zero();
    for (p, c) in a.terms() {
        let d = b.coeff(p);
        if !d.is_zero() {
            acc = acc.add_ref(&c.mul_ref(&d).scale(&Rat::from_integer(p.z())));
        }
    }
    acc
}

/// `f^⊥ g` through the elementary expansion of `f` and the dual Pieri rule.
pub fn perp<C: Coeff>(f: &SymFun<Rat>, g: &SymFun<C>) -> SymFun<C> {
    let fe = f.to_basis(Basis::E);
    let gs = g.to_schur();
    let mut out = SymFun::zero(Basis::S);
    for (lam, c) in fe.terms() {
        let mut cur = gs.clone();
        for &k in lam.parts() {
            cur = cur.e_perp(k);
            if cur.is_zero() {
                break;
            }
        }
        out = out.add(&cur.scale(c));
    }
    out
}

/// `f^⊥ g` with `p_k^⊥ = k ∂/∂p_k`, independent of the Schur machinery.
pub fn perp_via_power_sums<C: Coeff>(f: &SymFun<Rat>, g: &SymFun<C>) -> SymFun<C> {
    let fp = f.to_basis(Basis::P);
    let gp = g.to_basis(Basis::P);
    let mut out = SymFun::zero(Basis::P);
    for (lam, c) in fp.terms() {
        let mut cur: BTreeMap<Partition, C> = gp.terms().map(|(p, d)| (p.clone(), d.clone())).collect();
        for &k in lam.parts() {
            let mut next: BTreeMap<Partition, C> = BTreeMap::new();
            for (mu, d) in cur {
                let mult = mu.parts().iter().filter(|&&x| x == k).count();
                if mult == 0 {
                    continue;
                }
                let mut parts = mu.parts().to_vec();
                let pos = parts.iter().position(|&x| x == k).unwrap();
                parts.remove(pos);
                let v = d.scale(&rat_int((k as usize * mult) as i64));
                let key = Partition::from_unsorted(parts);
                let e = next.remove(&key).unwrap_or_else(C::zero).add_ref(&v);
                if !e.is_zero() {
                    next.insert(key, e);
                }
            }
            cur = next;
        }
        for (mu, d) in cur {
            out.add_term(mu, d.scale(c));
        }
    }
    out
}

/// `s_λ(q, t)`; zero when `λ` has more than two parts.
pub fn schur_two_params(lam: &Partition) -> MPoly {
    if lam.len() > 2 {
        return MPoly::zero();
    }
    let (a, b) = (lam.part(0), lam.part(1));
    MPoly::from_terms((b..=a).map(|i| {
        (
            Monomial::from_pairs(&[(Var::q(), i), (Var::t(), a + b - i)]),
            <Rat as One>::one(),
        )
    }))
}

/// Writes a `q↔t` symmetric polynomial as `Σ c_λ s_λ(q,t)`, `ℓ(λ) ≤ 2`.
pub fn schur_expand_two_params(p: &MPoly) -> Result<BTreeMap<Partition, BigInt>> {
    if &p.swap_vars(Var::q(), Var::t()) != p {
        return Err(Error::NotSymmetric(p.to_string()));
    }
    if p.variables().iter().any(|v| *v != Var::q() && *v != Var::t()) {
        return Err(Error::NotSymmetric(format!("{p} involves variables other than q, t")));
    }
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rest
        .terms()
        .iter()
        .max_by_key(|(m, _)| (m.degree(), m.exp(Var::q())))
        .cloned()
    {
        if !c.is_integer() {
            return Err(Error::NotIntegral(format!("{c} in {p}")));
        }
        let a = m.exp(Var::q());
        let b = m.exp(Var::t());
        debug_assert!(a >= b);
        let lam = Partition::from_unsorted(vec![a, b]);
        rest = rest.sub(&schur_two_params(&lam).scale(&c));
        out.insert(lam, c.to_integer());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{part, partitions};
    use crate::symfun::{e, e_mu, h, m, p, p_mu, s};

    #[test]
    fn conversions() {
        let s21p = s(&[2, 1]).to_basis(Basis::P);
        let expect = p_mu(&[1, 1, 1])
            .scale(&Rat::new(1.into(), 3.into()))
            .sub(&p(3).scale(&Rat::new(1.into(), 3.into())));
        assert_eq!(s21p, expect);
        assert_eq!(e(3).to_basis(Basis::M), m(&[1, 1, 1]));
        assert_eq!(h(2).to_schur(), s(&[2]));
    }

    #[test]
    fn products() {
        assert_eq!(e(1).mul(&e(1)).to_schur(), s(&[2]).add(&s(&[1, 1])));
        assert_eq!(
            e(2).mul(&e(2)).to_schur(),
            s(&[2, 2]).add(&s(&[2, 1, 1])).add(&s(&[1, 1, 1, 1]))
        );
        assert_eq!(p(2).mul(&p(1)), p_mu(&[2, 1]));
        assert_eq!(s(&[1]).mul_e(2), s(&[2, 1]).add(&s(&[1, 1, 1])));
    }

    #[test]
    fn scalar_products() {
        assert_eq!(hall(&s(&[2, 1]), &s(&[2, 1])), rat_int(1));
        assert_eq!(hall(&p(2), &p(2)), rat_int(2));
        assert_eq!(hall(&h(2), &m(&[2])), rat_int(1));
        assert_eq!(hall_via_power_sums(&h(2), &m(&[2])), rat_int(1));
    }

    #[test]
    fn skewing() {
        assert_eq!(perp(&e(1), &s(&[2, 1])), s(&[2]).add(&s(&[1, 1])));
        assert_eq!(perp(&e(2), &s(&[2, 1])), s(&[1]));
        assert_eq!(perp(&e(2), &s(&[3, 1])), s(&[2]));
        assert_eq!(
            perp_via_power_sums(&e(2), &s(&[3, 1])).to_schur(),
            s(&[2])
        );
    }

    #[test]
    fn involution() {
        assert_eq!(s(&[2, 1]).omega(), s(&[2, 1]));
        assert_eq!(e(4).omega().to_schur(), h(4).to_schur());
        assert_eq!(p(3).omega(), p(3));
        assert_eq!(p(2).omega(), p(2).neg());
        for n in 1..=5 {
            for mu in partitions(n) {
                let f = SymFun::<Rat>::basis_elem(Basis::M, mu.clone());
                assert_eq!(f.omega().to_basis(Basis::P), f.to_basis(Basis::P).omega());
            }
        }
    }

    #[test]
    fn lengths_and_positivity() {
        assert_eq!(e(5).length(), 5);
        assert_eq!(h(5).length(), 1);
        for n in 1..=6 {
            for mu in partitions(n) {
                assert!(e_mu(mu.parts()).is_schur_positive());
            }
        }
        assert!(!p(2).is_schur_positive());
    }

    #[test]
    fn two_parameter_schur() {
        let f: MPoly = "q + t + q^2 + q*t + t^2".parse().unwrap();
        let c = schur_expand_two_params(&f).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[&part(&[1])], BigInt::from(1));
        assert_eq!(c[&part(&[2])], BigInt::from(1));
        let g: MPoly = "q*t + q^3 + q^2*t + q*t^2 + t^3".parse().unwrap();
        let c = schur_expand_two_params(&g).unwrap();
        assert_eq!(c[&part(&[1, 1])], BigInt::from(1));
        assert_eq!(c[&part(&[3])], BigInt::from(1));
        let c = schur_expand_two_params(&MPoly::one()).unwrap();
        assert_eq!(c[&Partition::empty()], BigInt::from(1));
        assert!(schur_expand_two_params(&"q".parse().unwrap()).is_err());
    }

    #[test]
    fn finite_variable_evaluation() {
        let x = vec![MPoly::var(Var::q()), MPoly::var(Var::t())];
        let v: MPoly = s(&[2, 1]).map_coeffs(|c| MPoly::constant(c.clone())).eval_vars(&x);
        assert_eq!(v, "q^2*t + q*t^2".parse().unwrap());
        let v: MPoly = s(&[1, 1, 1]).map_coeffs(|c| MPoly::constant(c.clone())).eval_vars(&x);
        assert!(v.is_zero());
    }
}
