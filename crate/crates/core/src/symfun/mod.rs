//! The ring of symmetric functions over an exact coefficient ring.

mod ops;
mod text;
pub mod transitions;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coefficients::{Coeff, Rat, RatFun};
use crate::partitions::Partition;

pub(crate) use ops::schur_eval_vars;
pub use ops::{
    hall, hall_via_power_sums, perp, perp_via_power_sums, schur_expand_two_params, schur_two_params,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    M = 0,
    E = 1,
    H = 2,
    P = 3,
    S = 4,
    F = 5,
}

impl Basis {
    pub const ALL: [Basis; 6] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S, Basis::F];

    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
            Basis::F => 'f',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        Some(match c {
            'm' => Basis::M,
            'e' => Basis::E,
            'h' => Basis::H,
            'p' => Basis::P,
            's' => Basis::S,
            'f' => Basis::F,
            _ => return None,
        })
    }

    /// Bases in which `b_λ b_μ = b_{λ∪μ}`.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Basis::E | Basis::H | Basis::P)
    }
}

/// Finite sum `Σ c_λ b_λ` in one basis; zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct SymFun<C: Coeff = Rat> {
    basis: Basis,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> SymFun<C> {
    pub fn zero(basis: Basis) -> Self {
        SymFun {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        SymFun::term(Basis::S, Partition::empty(), C::one())
    }

    pub fn term(basis: Basis, p: Partition, c: C) -> Self {
        let mut f = SymFun::zero(basis);
        f.add_term(p, c);
        f
    }

    pub fn basis_elem(basis: Basis, p: Partition) -> Self {
        SymFun::term(basis, p, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, C)>>(basis: Basis, terms: I) -> Self {
        let mut f = SymFun::zero(basis);
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Partition, C> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> C {
        self.terms.get(p).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, p: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(x) => {
                let s = x.add_ref(&c);
                if s.is_zero() {
                    self.terms.remove(&p);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    /// Degrees present in the support.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|p| p.size()).collect();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn degree_component(&self, n: u32) -> Self {
        SymFun {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SymFun<D> {
        SymFun::from_terms(self.basis, self.terms.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    pub fn try_map_coeffs<D: Coeff, E>(
        &self,
        f: impl Fn(&C) -> std::result::Result<D, E>,
    ) -> std::result::Result<SymFun<D>, E> {
        let mut out = SymFun::zero(self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn map_partitions(&self, f: impl Fn(&Partition) -> Partition) -> Self {
        SymFun::from_terms(self.basis, self.terms.iter().map(|(p, c)| (f(p), c.clone())))
    }

    pub fn filter(&self, keep: impl Fn(&Partition, &C) -> bool) -> Self {
        SymFun {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, c)| keep(p, c))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn to_ratfun(&self) -> SymFun<RatFun> {
        self.map_coeffs(|c| c.to_ratfun())
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (p, c) in other.terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn scale_by(&self, k: &C) -> Self {
        self.map_coeffs(|c| c.mul_ref(k))
    }

    /// Same element expressed in `target`.
    pub fn to_basis(&self, target: Basis) -> Self {
        ops::convert(self, target)
    }

    pub fn to_schur(&self) -> Self {
        self.to_basis(Basis::S)
    }
}

impl<C: Coeff> fmt::Display for SymFun<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}

impl<C: Coeff> fmt::Debug for SymFun<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}

impl<C: Coeff> std::str::FromStr for SymFun<C> {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        text::parse(s)
    }
}

fn single(basis: Basis, parts: &[u32]) -> SymFun<Rat> {
    SymFun::basis_elem(basis, Partition::from_unsorted(parts.to_vec()))
}

pub fn s(parts: &[u32]) -> SymFun<Rat> {
    single(Basis::S, parts)
}

pub fn e(n: u32) -> SymFun<Rat> {
    single(Basis::E, &[n])
}

pub fn h(n: u32) -> SymFun<Rat> {
    single(Basis::H, &[n])
}

pub fn p(k: u32) -> SymFun<Rat> {
    single(Basis::P, &[k])
}

pub fn m(parts: &[u32]) -> SymFun<Rat> {
    single(Basis::M, parts)
}

pub fn e_mu(parts: &[u32]) -> SymFun<Rat> {
    single(Basis::E, parts)
}

pub fn p_mu(parts: &[u32]) -> SymFun<Rat> {
    single(Basis::P, parts)
}

pub fn f_mu(parts: &[u32]) -> SymFun<Rat> {
    single(Basis::F, parts)
}

pub fn h_mu(parts: &[u32]) -> SymFun<Rat> {
    single(Basis::H, parts)
}
