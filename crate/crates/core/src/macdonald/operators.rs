//! Operators diagonal in the `H̃_μ` basis.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{macdonald_basis, q_node, t_node, MacdonaldBasis, Point};
use crate::coefficients::{bareiss_solve, interpolate_bivariate, rat, rat_solve, MPoly, Rat, RatFun, Var};
use crate::error::{Error, Result};
use crate::partitions::{Partition, q_integer};
use crate::plethysm::{pleth, Alphabet};
use crate::symfun::{e, Basis, SymFun};

/// Eigenvalue attached to `H̃_μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eigenvalue {
    /// `∇`: `T_μ`.
    Nabla,
    /// `Δ_{e_k}`: `e_k[B_μ]`; primed: `e_k[B_μ − 1]`.
    DeltaE { k: u32, primed: bool },
}

impl Eigenvalue {
    fn cell_values(mu: &Partition, primed: bool, pt: &mut Point) -> Vec<Rat> {
        mu.cells()
            .filter(|&(i, j)| !(primed && i == 0 && j == 0))
            .map(|(i, j)| pt.qt(i, j))
            .collect()
    }

    pub(crate) fn at(&self, mu: &Partition, pt: &mut Point) -> Rat {
        match *self {
            Eigenvalue::Nabla => {
                let (a, b) = (mu.conjugate().eta(), mu.eta());
                pt.qt(a, b)
            }
            Eigenvalue::DeltaE { k, primed } => {
                let xs = Eigenvalue::cell_values(mu, primed, pt);
                elementary(&xs, k as usize)
            }
        }
    }

    pub fn symbolic(&self, mu: &Partition) -> MPoly {
        match *self {
            Eigenvalue::Nabla => mu.t_mu(),
            Eigenvalue::DeltaE { k, primed } => {
                let cells: Vec<MPoly> = mu
                    .cells()
                    .filter(|&(i, j)| !(primed && i == 0 && j == 0))
                    .map(|(i, j)| MPoly::var(Var::q()).pow(i).mul(&MPoly::var(Var::t()).pow(j)))
                    .collect();
                let mut es = vec![MPoly::one()];
                for x in &cells {
                    es.push(MPoly::zero());
                    for r in (1..es.len()).rev() {
                        es[r] = es[r].add(&es[r - 1].mul(x));
                    }
                }
                es.get(k as usize).cloned().unwrap_or_else(MPoly::zero)
            }
        }
    }
}

fn elementary(xs: &[Rat], k: usize) -> Rat {
    let mut es = vec![Rat::one()];
    for x in xs {
        es.push(Rat::zero());
        for r in (1..es.len()).rev() {
            let add = &es[r - 1] * x;
            es[r] += add;
        }
    }
    es.get(k).cloned().unwrap_or_else(Rat::zero)
}

/// Image of a degree-`n` Schur expansion at one point, as a Schur coefficient vector.
fn value_at(basis: &MacdonaldBasis, g: &SymFun<MPoly>, op: Eigenvalue, q0: Rat, t0: Rat) -> Result<Vec<Rat>> {
    let mut pt = Point::new(q0, t0);
    let h = basis.at_point(&mut pt);
    let parts = basis.partitions();
    let k = parts.len();
    let fv: Vec<Rat> = parts.iter().map(|l| pt.eval(&g.coeff(l))).collect();
    let m: Vec<Vec<Rat>> = (0..k).map(|l| (0..k).map(|mu| h[mu][l].clone()).collect()).collect();
    let x = rat_solve(m, fv)?;
    let mut out = vec![Rat::zero(); k];
    for (mu_i, mu) in parts.iter().enumerate() {
        if x[mu_i].is_zero() {
            continue;
        }
        let w = op.at(mu, &mut pt) * &x[mu_i];
        for l in 0..k {
            if !h[mu_i][l].is_zero() {
                out[l] += &w * &h[mu_i][l];
            }
        }
    }
    Ok(out)
}

const MAX_DEGREE: usize = 256;

fn apply_homogeneous(n: u32, g: &SymFun<MPoly>, op: Eigenvalue) -> Result<SymFun<MPoly>> {
    let basis = macdonald_basis(n)?;
    let parts = basis.partitions();
    let input_deg = g
        .terms()
        .map(|(_, c)| c.degree_in(Var::q()).max(c.degree_in(Var::t())))
        .max()
        .unwrap_or(0) as usize;
    let mut d = (n as usize * n.saturating_sub(1) as usize / 2 + input_deg).max(1);
    let mut memo: HashMap<(usize, usize), Vec<Rat>> = HashMap::new();
    let checks = [(rat(3, 1), rat(1, 2)), (rat(5, 1), rat(1, 4))];
    let expected: Vec<Vec<Rat>> = checks
        .iter()
        .map(|(a, b)| value_at(&basis, g, op, a.clone(), b.clone()))
        .collect::<Result<_>>()?;
    loop {
        let xs: Vec<Rat> = (0..=d).map(q_node).collect();
        let ys: Vec<Rat> = (0..=d).map(t_node).collect();
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                if let Entry::Vacant(slot) = memo.entry((i, j)) {
                    slot.insert(value_at(&basis, g, op, x.clone(), y.clone())?);
                }
            }
        }
        let mut out = SymFun::zero(Basis::S);
        for (l, lam) in parts.iter().enumerate() {
            let values: Vec<Vec<Rat>> = (0..=d).map(|i| (0..=d).map(|j| memo[&(i, j)][l].clone()).collect()).collect();
            out.add_term(lam.clone(), interpolate_bivariate(Var::q(), Var::t(), &xs, &ys, &values));
        }
        let agrees = checks.iter().zip(&expected).all(|((a, b), want)| {
            let mut pt = Point::new(a.clone(), b.clone());
            parts.iter().zip(want).all(|(lam, w)| pt.eval(&out.coeff(lam)) == *w)
        });
        if agrees {
            return Ok(out);
        }
        d *= 2;
        if d > MAX_DEGREE {
            return Err(Error::Internal(format!(
                "operator image in degree {n} exceeds q,t-degree {MAX_DEGREE}"
            )));
        }
    }
}

fn check_qt_only(f: &SymFun<MPoly>) -> Result<()> {
    for (_, c) in f.terms() {
        if let Some(v) = c.variables().into_iter().find(|&v| v != Var::q() && v != Var::t()) {
            return Err(Error::Unsupported(format!("coefficient involves {}", v.name())));
        }
    }
    Ok(())
}

/// Applies the operator with eigenvalue `op` on each `H̃_μ`.
pub fn apply_eigen_operator(f: &SymFun<MPoly>, op: Eigenvalue) -> Result<SymFun<MPoly>> {
    check_qt_only(f)?;
    let fs = f.to_schur();
    let mut out = SymFun::zero(Basis::S);
    for n in fs.degrees() {
        out = out.add(&apply_homogeneous(n, &fs.degree_component(n), op)?);
    }
    Ok(out)
}

/// Same operator by fraction-free elimination over `ℚ[q,t]`; slow, used as a cross-check.
pub fn apply_eigen_operator_symbolic(f: &SymFun<MPoly>, op: Eigenvalue) -> Result<SymFun<MPoly>> {
    let fs = f.to_schur();
    let mut out = SymFun::zero(Basis::S);
    for n in fs.degrees() {
        let basis = macdonald_basis(n)?;
        let parts = basis.partitions();
        let m: Vec<Vec<MPoly>> = parts
            .iter()
            .map(|l| basis.iter().map(|(_, h)| h.coeff(l)).collect())
            .collect();
        let rhs: Vec<MPoly> = parts.iter().map(|l| fs.coeff(l)).collect();
        let sol = bareiss_solve(m, rhs)?;
        let mut acc: SymFun<MPoly> = SymFun::zero(Basis::S);
        for ((mu, h), num) in basis.iter().zip(&sol.numerators) {
            let w = num.mul(&op.symbolic(mu));
            for (l, c) in h.terms() {
                acc.add_term(l.clone(), w.mul(c));
            }
        }
        for (l, c) in acc.terms() {
            let v = c
                .div_exact(&sol.denominator)
                .ok_or_else(|| Error::NotIntegral(format!("coefficient of s[{l}] is not a polynomial")))?;
            out.add_term(l.clone(), v);
        }
    }
    Ok(out)
}

/// `∇ f`.
pub fn nabla(f: &SymFun<MPoly>) -> Result<SymFun<MPoly>> {
    apply_eigen_operator(f, Eigenvalue::Nabla)
}

/// `Δ_{e_k} f`, or `Δ′_{e_k} f` when `primed`.
pub fn delta_e(k: u32, f: &SymFun<MPoly>, primed: bool) -> Result<SymFun<MPoly>> {
    apply_eigen_operator(f, Eigenvalue::DeltaE { k, primed })
}

/// Upper limit of the alternating sum in the `(q, 1/q)` formula for `e_j^⊥ E_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtReading {
    /// The sum runs to `j` itself.
    UpperIsJ,
    /// The sum runs to `n − 1 − j`.
    Complement,
}

/// `[m]_q` as an alphabet `1 + q + ⋯ + q^{m−1}`.
fn q_integer_alphabet(m: u32) -> Alphabet {
    let mut a = Alphabet::int(1);
    let mut mono = Alphabet::int(1);
    for _ in 1..m {
        mono = mono * Alphabet::var("q");
        a = a + mono.clone();
    }
    a
}

/// `Σ_{i=0}^{k} (−1)^{k−i} e_i[[n]_q] q^{−i(n−1)} e_n[[i+1]_q X] / [i+1]_q` in the
/// Schur basis over `ℚ(q)`, with `k` chosen by `reading`.
pub fn qt_inverse_special(n: u32, j: u32, reading: QtReading) -> Result<SymFun<RatFun>> {
    if j >= n.max(1) {
        return Err(Error::Unsupported(format!("need j < n, got j = {j}, n = {n}")));
    }
    let k = match reading {
        QtReading::UpperIsJ => j,
        QtReading::Complement => n - 1 - j,
    };
    let q = RatFun::var(Var::q());
    let mut out = SymFun::zero(Basis::S);
    for i in 0..=k {
        let ei = pleth(&e(i), &q_integer_alphabet(n))?
            .scalar()
            .ok_or_else(|| Error::Internal("scalar plethysm expected".into()))?;
        let inner = pleth(&e(n), &(q_integer_alphabet(i + 1) * Alphabet::z()))?.to_schur();
        let qi = RatFun::from(q_integer(i + 1));
        let mut coef = ei.div(&q.pow((i * (n - 1)) as i32)?)?.div(&qi)?;
        if (k - i) % 2 == 1 {
            coef = coef.neg();
        }
        out = out.add(&inner.scale_by(&coef));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    fn poly_sym(s: &str) -> SymFun<MPoly> {
        s.parse().unwrap()
    }

    fn e_n(n: u32) -> SymFun<MPoly> {
        e(n).map_coeffs(|c| MPoly::constant(c.clone()))
    }

    #[test]
    fn nabla_e2_e3() {
        assert_eq!(nabla(&e_n(2)).unwrap(), poly_sym("s[2] + (q + t)*s[1,1]"));
        let want = poly_sym(
            "s[3] + (q^2 + q*t + t^2 + q + t)*s[2,1] + (q^3 + q^2*t + q*t^2 + t^3 + q*t)*s[1,1,1]",
        );
        assert_eq!(nabla(&e_n(3)).unwrap(), want);
    }

    #[test]
    fn numeric_and_symbolic_routes_agree() {
        for n in 1..=4 {
            let f = e_n(n);
            for op in [
                Eigenvalue::Nabla,
                Eigenvalue::DeltaE { k: 1, primed: false },
                Eigenvalue::DeltaE { k: n - 1, primed: true },
            ] {
                assert_eq!(
                    apply_eigen_operator(&f, op).unwrap(),
                    apply_eigen_operator_symbolic(&f, op).unwrap(),
                    "n = {n}, {op:?}"
                );
            }
        }
        let mixed = poly_sym("q*s[2,1] + t*s[1,1,1] + s[3]");
        assert_eq!(
            nabla(&mixed).unwrap(),
            apply_eigen_operator_symbolic(&mixed, Eigenvalue::Nabla).unwrap()
        );
    }

    #[test]
    fn eigenvectors() {
        let b = macdonald_basis(3).unwrap();
        for (mu, h) in b.iter() {
            assert_eq!(nabla(h).unwrap(), h.scale_by(&mu.t_mu()));
            let op = Eigenvalue::DeltaE { k: 2, primed: false };
            assert_eq!(apply_eigen_operator(h, op).unwrap(), h.scale_by(&op.symbolic(mu)));
        }
    }

    #[test]
    fn delta_prime_relation() {
        // Δ_{e_k} = Δ′_{e_k} + Δ′_{e_{k−1}}
        let f = e_n(4);
        let lhs = delta_e(2, &f, false).unwrap();
        let rhs = delta_e(2, &f, true).unwrap().add(&delta_e(1, &f, true).unwrap());
        assert_eq!(lhs, rhs);
        // Δ′_{e_{n−1}} e_n = ∇ e_n
        assert_eq!(delta_e(3, &f, true).unwrap(), nabla(&f).unwrap());
    }

    #[test]
    fn eigenvalue_symbolic() {
        let mu = part(&[2, 1]);
        assert_eq!(Eigenvalue::Nabla.symbolic(&mu), "q*t".parse().unwrap());
        let d = Eigenvalue::DeltaE { k: 2, primed: false };
        assert_eq!(d.symbolic(&mu), "q + t + q*t".parse().unwrap());
        let mut pt = Point::new(rat(2, 1), rat(1, 3));
        assert_eq!(d.at(&mu, &mut pt), rat(2, 1) + rat(1, 3) + rat(2, 3));
    }

    #[test]
    fn rejects_foreign_variables() {
        assert!(nabla(&poly_sym("u*s[1]")).is_err());
    }
}
