use num_traits::Zero;

use super::mpoly::{MPoly, Monomial};
use super::var::Var;
use super::Rat;

/// Dense coefficients (constant first) of the polynomial of degree
/// `< xs.len()` through the given points.
pub fn interpolate_univariate(xs: &[Rat], ys: &[Rat]) -> Vec<Rat> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    // Newton divided differences
    let mut dd: Vec<Rat> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    let mut coeffs = vec![Rat::zero(); n.max(1)];
    for i in (0..n).rev() {
        // coeffs = coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![Rat::zero(); n.max(1)];
        for k in 0..n {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &coeffs[k];
            }
            next[k] -= &coeffs[k] * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

/// Polynomial in `(vx, vy)` through the grid values `values[i][j] = f(xs[i], ys[j])`.
pub fn interpolate_bivariate(vx: Var, vy: Var, xs: &[Rat], ys: &[Rat], values: &[Vec<Rat>]) -> MPoly {
    // per column j: coefficients in x
    let per_y: Vec<Vec<Rat>> = (0..ys.len())
        .map(|j| {
            let col: Vec<Rat> = values.iter().map(|row| row[j].clone()).collect();
            interpolate_univariate(xs, &col)
        })
        .collect();
    let mut terms = Vec::new();
    for a in 0..xs.len() {
        let along_y: Vec<Rat> = per_y.iter().map(|c| c[a].clone()).collect();
        if along_y.iter().all(|c| c.is_zero()) {
            continue;
        }
        for (b, c) in interpolate_univariate(ys, &along_y).into_iter().enumerate() {
            if !c.is_zero() {
                terms.push((Monomial::from_pairs(&[(vx, a as u32), (vy, b as u32)]), c));
            }
        }
    }
    MPoly::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{rat, rat_int};
    use std::collections::HashMap;

    #[test]
    fn recovers_cubic() {
        let xs: Vec<Rat> = (0..4).map(rat_int).collect();
        let ys: Vec<Rat> = xs.iter().map(|x| x * x * x - rat_int(2) * x + rat(1, 2)).collect();
        let c = interpolate_univariate(&xs, &ys);
        assert_eq!(c, vec![rat(1, 2), rat_int(-2), rat_int(0), rat_int(1)]);
    }

    #[test]
    fn recovers_bivariate() {
        let q = MPoly::var(Var::q());
        let t = MPoly::var(Var::t());
        let p = q.mul(&q).mul(&t).add(&t.mul(&t)).sub(&MPoly::int(3));
        let xs: Vec<Rat> = (1..4).map(rat_int).collect();
        let ys: Vec<Rat> = (1..4).map(|k| rat(1, k + 1)).collect();
        let vals: Vec<Vec<Rat>> = xs
            .iter()
            .map(|x| {
                ys.iter()
                    .map(|y| {
                        let mut b = HashMap::new();
                        b.insert(Var::q(), x.clone());
                        b.insert(Var::t(), y.clone());
                        p.eval(&b).as_constant().unwrap()
                    })
                    .collect()
            })
            .collect();
        assert_eq!(interpolate_bivariate(Var::q(), Var::t(), &xs, &ys, &vals), p);
    }
}
