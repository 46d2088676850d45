//! Plethystic evaluation `f[A]`.
//!
//! The general evaluator expands `f` in power sums and substitutes `p_k[A]`.
//! Alphabets used on high-degree GL characters (`q − εu`, `1 + Q`, `Q − 1`,
//! finitely many variables) also have Schur-direct evaluators that never
//! leave the Schur basis.

mod alphabet;

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use crate::coefficients::{Coeff, MPoly, Monomial, Rat, RatFun, Var};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfun::{Basis, SymFun};

pub use alphabet::{Alphabet, SymAlphabet};

/// Value of a plethysm: a power-sum expansion in the result alphabet, or a
/// scalar when the alphabet has no symmetric-function leaf.
#[derive(Clone, PartialEq, Debug)]
pub struct PlethResult {
    pub alphabet: Option<SymAlphabet>,
    pub value: SymFun<RatFun>,
}

impl PlethResult {
    /// The value when it is a scalar (only `p_∅` present).
    pub fn scalar(&self) -> Option<RatFun> {
        if self.value.terms().all(|(p, _)| p.is_empty()) {
            Some(self.value.coeff(&Partition::empty()))
        } else {
            None
        }
    }

    pub fn to_schur(&self) -> SymFun<RatFun> {
        self.value.to_schur()
    }

    /// Schur expansion with polynomial coefficients.
    pub fn to_schur_poly(&self) -> Result<SymFun<MPoly>> {
        self.to_schur().try_map_coeffs(|c| {
            c.as_polynomial()
                .ok_or_else(|| Error::NotIntegral(format!("coefficient {c} is not a polynomial")))
        })
    }
}

/// `f[A]`: linear and multiplicative in `f`, determined by the values `p_k[A]`.
pub fn pleth<C: Coeff>(f: &SymFun<C>, a: &Alphabet) -> Result<PlethResult> {
    let alphabet = a.sym_alphabet()?;
    let fp = f.to_basis(Basis::P);
    let mut images: HashMap<u32, SymFun<RatFun>> = HashMap::new();
    let mut out = SymFun::zero(Basis::P);
    for (lam, c) in fp.terms() {
        let mut prod = SymFun::term(Basis::P, Partition::empty(), c.to_ratfun());
        for &k in lam.parts() {
            if let Entry::Vacant(slot) = images.entry(k) {
                slot.insert(a.power_sum(k)?);
            }
            prod = prod.mul(&images[&k]);
            if prod.is_zero() {
                break;
            }
        }
        out = out.add(&prod);
    }
    Ok(PlethResult {
        alphabet,
        value: out,
    })
}

/// `f[g]` for `g` with constant coefficients, through `p_k[g] = Σ c_μ p_{kμ}`.
pub fn compose<C: Coeff>(f: &SymFun<C>, g: &SymFun<Rat>) -> SymFun<C> {
    let gp = g.to_basis(Basis::P);
    let mut images: HashMap<u32, SymFun<C>> = HashMap::new();
    let mut out = SymFun::zero(Basis::P);
    for (lam, c) in f.to_basis(Basis::P).terms() {
        let mut prod = SymFun::term(Basis::P, Partition::empty(), c.clone());
        for &k in lam.parts() {
            let img = images.entry(k).or_insert_with(|| {
                SymFun::from_terms(
                    Basis::P,
                    gp.terms().map(|(mu, x)| (mu.scale_parts(k), C::from_rat(x.clone()))),
                )
            });
            prod = prod.mul(img);
        }
        out = out.add(&prod);
    }
    out
}

/// Scalar alphabets with Schur-direct evaluators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScalarMode {
    /// `p_k ↦ c·p_k(z)`.
    CZ,
    /// `p_k ↦ p_k(z)/(1 − q^k)`.
    ZOver1mq,
    /// `p_k ↦ 1 + p_k(q)`.
    OnePlusQ,
}

pub fn scalar_alphabet_eval<C: Coeff>(f: &SymFun<C>, c: &Rat, mode: ScalarMode) -> Result<PlethResult> {
    let a = match mode {
        ScalarMode::CZ => Alphabet::z().scaled(c.clone()),
        ScalarMode::ZOver1mq => Alphabet::z() / (Alphabet::int(1) - Alphabet::var("q")),
        ScalarMode::OnePlusQ => Alphabet::int(1) + Alphabet::q_alphabet(),
    };
    pleth(f, &a)
}

/// `Σ_k u^k (e_k^⊥ f)(q)`, computed in the Schur basis.
///
/// Only hooks survive: the single-variable evaluation keeps one-row shapes.
pub fn skew_generating(f: &SymFun<Rat>, q: Var, u: Var) -> MPoly {
    let s = f.to_schur();
    let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
    for (lam, c) in s.terms() {
        for k in 0..=lam.len() as u32 {
            for nu in lam.remove_vertical_strips(k) {
                if nu.len() <= 1 {
                    let m = Monomial::from_pairs(&[(q, nu.size()), (u, k)]);
                    *acc.entry(m).or_insert_with(<Rat as num_traits::Zero>::zero) += c;
                }
            }
        }
    }
    MPoly::from_terms(acc)
}

/// `f[q − εu]` through the skewing generating function.
pub fn pleth_q_minus_eps_u(f: &SymFun<Rat>) -> MPoly {
    skew_generating(f, Var::q(), Var::u())
}

/// `f[q − εu]/(q + u) = Σ_{a+b=n−1} ⟨f, s_{(a|b)}⟩ q^a u^b`.
pub fn hook_content_eval(f: &SymFun<Rat>) -> Result<MPoly> {
    let num = pleth_q_minus_eps_u(f);
    let den = MPoly::var(Var::q()).add(&MPoly::var(Var::u()));
    num.div_exact(&den)
        .ok_or_else(|| Error::Internal(format!("{num} is not divisible by q + u")))
}

/// Checks `Σ_k u^k (e_k^⊥ f)(q) = f[q − εu]` with the general evaluator on
/// the right.
pub fn skew_generating_check(f: &SymFun<Rat>, q: &str, u: &str) -> Result<bool> {
    let (qv, uv) = (Var::new(q), Var::new(u));
    let left = skew_generating(f, qv, uv);
    let a = Alphabet::Var(qv) - Alphabet::epsilon() * Alphabet::Var(uv);
    let right = pleth(f, &a)?
        .scalar()
        .and_then(|r| r.as_polynomial())
        .ok_or_else(|| Error::Internal("scalar alphabet gave a non-polynomial".into()))?;
    Ok(left == right)
}

/// `f[1 + Q]` via `s_λ[1 + Q] = Σ s_μ(Q)` over horizontal strips `λ/μ`.
pub fn pleth_one_plus<C: Coeff>(f: &SymFun<C>) -> SymFun<C> {
    let s = f.to_schur();
    let mut out = SymFun::zero(Basis::S);
    for (lam, c) in s.terms() {
        for r in 0..=lam.first() {
            for mu in lam.remove_horizontal_strips(r) {
                out.add_term(mu, c.clone());
            }
        }
    }
    out
}

/// `f[Q − 1] = Σ_a (−1)^a e_a^⊥ f`.
pub fn pleth_minus_one<C: Coeff>(f: &SymFun<C>) -> SymFun<C> {
    let s = f.to_schur();
    let mut out = SymFun::zero(Basis::S);
    for (lam, c) in s.terms() {
        for a in 0..=lam.len() as u32 {
            let sign = if a % 2 == 0 { c.clone() } else { c.neg_ref() };
            for mu in lam.remove_vertical_strips(a) {
                out.add_term(mu, sign.clone());
            }
        }
    }
    out
}

/// `A[ν][λ] = ⟨s_ν[(1 − x)Z], s_λ⟩` for all `ν, λ ⊢ n`, indexed by
/// [`crate::partitions::partitions`] order.
pub fn schur_twist_matrix(n: u32, x: Var) -> Result<Vec<Vec<MPoly>>> {
    let parts = crate::partitions::partitions(n);
    let a = (Alphabet::int(1) - Alphabet::Var(x)) * Alphabet::z();
    let mut rows = Vec::with_capacity(parts.len());
    for nu in &parts {
        let img = pleth(&SymFun::<Rat>::basis_elem(Basis::S, nu.clone()), &a)?.to_schur_poly()?;
        rows.push(parts.iter().map(|lam| img.coeff(lam)).collect());
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rat_int;
    use crate::symfun::{e, h, p, s};

    fn poly(text: &str) -> MPoly {
        text.parse().unwrap()
    }

    #[test]
    fn power_sum_example() {
        let r = pleth(&p(2), &Alphabet::q_minus_eps_u()).unwrap();
        assert_eq!(r.scalar().unwrap(), "q^2 - u^2".parse().unwrap());
    }

    #[test]
    fn minus_eps_z_is_omega() {
        // p_k[εZ] = (−1)^k p_k gives f[εZ] = (−1)^deg f; ω comes from −εZ.
        let a = Alphabet::epsilon() * Alphabet::z();
        let r = pleth(&e(3), &a).unwrap().to_schur();
        assert_eq!(r, e(3).neg().to_schur().to_ratfun());
        let r = pleth(&e(3), &-a).unwrap().to_schur();
        assert_eq!(r, h(3).to_schur().to_ratfun());
    }

    #[test]
    fn hook_evaluations() {
        let r = pleth(&e(3), &Alphabet::q_minus_eps_u()).unwrap();
        assert_eq!(r.scalar().unwrap().as_polynomial().unwrap(), poly("q*u^2 + u^3"));
        assert_eq!(hook_content_eval(&s(&[3, 1, 1])).unwrap(), poly("q^2*u^2"));
        assert_eq!(hook_content_eval(&s(&[3, 1])).unwrap(), poly("q^2*u"));
        assert_eq!(hook_content_eval(&s(&[2, 2])).unwrap(), MPoly::zero());
        assert_eq!(hook_content_eval(&e(5)).unwrap(), poly("u^4"));
    }

    #[test]
    fn skewing_generating_identity() {
        for f in [s(&[2, 1]), h(3), s(&[3, 2, 1]), e(4).add(&s(&[2, 2]))] {
            assert!(skew_generating_check(&f, "q", "u").unwrap(), "{f}");
        }
    }

    #[test]
    fn scalar_modes() {
        let r = scalar_alphabet_eval(&h(2), &rat_int(1), ScalarMode::ZOver1mq).unwrap();
        let one_over = pleth(&h(2), &"1/(1-q)".parse().unwrap()).unwrap();
        assert_eq!(one_over.scalar().unwrap(), "1/((1-q)*(1-q^2))".parse().unwrap());
        assert_eq!(r.alphabet, Some(SymAlphabet::Z));
        let r = scalar_alphabet_eval(&e(1), &rat_int(1), ScalarMode::OnePlusQ).unwrap();
        assert_eq!(r.to_schur(), SymFun::one().add(&s(&[1])).to_ratfun());
        // (1/3) e_2[3Z] paired with p_1^2 gives 3 = (2+1)^(2−1).
        let r = scalar_alphabet_eval(&e(2), &rat_int(3), ScalarMode::CZ).unwrap();
        let pairing = crate::symfun::hall(&r.value, &p(1).pow(2).to_ratfun());
        assert_eq!(pairing, RatFun::int(9));
    }

    #[test]
    fn schur_direct_alphabets_agree() {
        let one_plus = Alphabet::int(1) + Alphabet::q_alphabet();
        let minus_one = Alphabet::q_alphabet() - Alphabet::int(1);
        for n in 0..=5 {
            for lam in crate::partitions::partitions(n) {
                let f = SymFun::<Rat>::basis_elem(Basis::S, lam.clone());
                let general = pleth(&f, &one_plus).unwrap().to_schur();
                assert_eq!(pleth_one_plus(&f).to_ratfun(), general, "{lam}");
                let general = pleth(&f, &minus_one).unwrap().to_schur();
                assert_eq!(pleth_minus_one(&f).to_ratfun(), general, "{lam}");
            }
        }
    }

    #[test]
    fn twist_matrix_small() {
        let a = schur_twist_matrix(2, Var::q()).unwrap();
        // h_2[Z − qZ] = h_2 − q h_1 e_1 + q^2 e_2
        assert_eq!(a[0], vec![poly("1 - q"), poly("q^2 - q")]);
        assert_eq!(a[1], vec![poly("q^2 - q"), poly("1 - q")]);
    }
}
