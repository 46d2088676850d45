use num_traits::{One, Zero};

use super::mpoly::MPoly;
use super::ratfun::RatFun;
use super::Rat;
use crate::error::{Error, Result};

/// Solution `x_i = numerators[i] / denominator` of a polynomial system.
#[derive(Clone, Debug)]
pub struct BareissSolution {
    pub numerators: Vec<MPoly>,
    pub denominator: MPoly,
}

impl BareissSolution {
    pub fn to_ratfuns(&self) -> Result<Vec<RatFun>> {
        self.numerators
            .iter()
            .map(|y| RatFun::new(y.clone(), self.denominator.clone()))
            .collect()
    }
}

/// Fraction-free elimination for `A x = b` over ℚ[vars].
///
/// `A` may have more rows than columns provided the system is consistent; the
/// surplus rows must reduce to `0 = 0`.
pub fn bareiss_solve(a: Vec<Vec<MPoly>>, b: Vec<MPoly>) -> Result<BareissSolution> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "row count of matrix and right-hand side differ");
    let cols = a.first().map_or(0, |r| r.len());
    if rows < cols {
        return Err(Error::Singular { column: rows });
    }
    let mut m: Vec<Vec<MPoly>> = a
        .into_iter()
        .zip(b)
        .map(|(mut r, v)| {
            assert_eq!(r.len(), cols, "ragged matrix");
            r.push(v);
            r
        })
        .collect();
    let mut prev = MPoly::one();
    for k in 0..cols {
        let pivot = (k..rows)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| (m[i][k].len(), i))
            .ok_or(Error::Singular { column: k })?;
        m.swap(k, pivot);
        let (head, tail) = m.split_at_mut(k + 1);
        let pk = &head[k];
        for row in tail.iter_mut() {
            let f = row[k].clone();
            for j in k + 1..=cols {
                let v = pk[k].mul(&row[j]).sub(&f.mul(&pk[j]));
                row[j] = if prev.is_one() {
                    v
                } else {
                    v.div_exact(&prev)
                        .ok_or_else(|| Error::Internal("inexact Bareiss step".into()))?
                };
            }
            row[k] = MPoly::zero();
        }
        prev = m[k][k].clone();
    }
    for (i, row) in m.iter().enumerate().skip(cols) {
        if !row[cols].is_zero() {
            return Err(Error::Inconsistent {
                row: i,
                value: row[cols].to_string(),
            });
        }
    }
    if cols == 0 {
        return Ok(BareissSolution {
            numerators: Vec::new(),
            denominator: MPoly::one(),
        });
    }
    let d = m[cols - 1][cols - 1].clone();
    let mut y = vec![MPoly::zero(); cols];
    for i in (0..cols).rev() {
        let mut acc = d.mul(&m[i][cols]);
        for j in i + 1..cols {
            acc = acc.sub(&m[i][j].mul(&y[j]));
        }
        y[i] = acc
            .div_exact(&m[i][i])
            .ok_or_else(|| Error::Internal("inexact back-substitution".into()))?;
    }
    Ok(BareissSolution {
        numerators: y,
        denominator: d,
    })
}

/// Solves a system over the fraction field by clearing row denominators and
/// running [`bareiss_solve`].
pub fn ratfun_solve(a: &[Vec<RatFun>], b: &[RatFun]) -> Result<Vec<RatFun>> {
    let mut pa = Vec::with_capacity(a.len());
    let mut pb = Vec::with_capacity(b.len());
    for (row, rhs) in a.iter().zip(b) {
        let mut l = MPoly::one();
        for x in row.iter().chain(std::iter::once(rhs)) {
            if !x.den().is_one() {
                let g = l.gcd(x.den());
                l = l.mul(&x.den().div_exact(&g).expect("gcd divides"));
            }
        }
        let clear = |x: &RatFun| {
            x.num()
                .mul(&l.div_exact(x.den()).expect("common denominator"))
        };
        pa.push(row.iter().map(clear).collect());
        pb.push(clear(rhs));
    }
    bareiss_solve(pa, pb)?.to_ratfuns()
}

/// Gaussian elimination over ℚ for a consistent, possibly overdetermined system.
pub fn rat_solve(a: Vec<Vec<Rat>>, b: Vec<Rat>) -> Result<Vec<Rat>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a
        .into_iter()
        .zip(b)
        .map(|(mut r, v)| {
            r.push(v);
            r
        })
        .collect();
    let mut r = 0;
    for k in 0..cols {
        let p = (r..rows)
            .find(|&i| !m[i][k].is_zero())
            .ok_or(Error::Singular { column: k })?;
        m.swap(r, p);
        let inv = m[r][k].recip();
        for x in m[r][k..].iter_mut() {
            *x *= &inv;
        }
        let (head, tail) = m.split_at_mut(r + 1);
        let pr = &head[r];
        for row in tail.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let f = row[k].clone();
            for j in k..=cols {
                let d = &f * &pr[j];
                row[j] -= d;
            }
        }
        r += 1;
    }
    for (i, row) in m.iter().enumerate().skip(cols) {
        if !row[cols].is_zero() {
            return Err(Error::Inconsistent {
                row: i,
                value: row[cols].to_string(),
            });
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for i in (0..cols).rev() {
        let mut acc = m[i][cols].clone();
        for j in i + 1..cols {
            acc -= &m[i][j] * &x[j];
        }
        x[i] = acc;
    }
    Ok(x)
}

/// Inverse of a square rational matrix by Gauss–Jordan.
pub fn rat_inverse(a: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !m[i][k].is_zero())
            .ok_or(Error::Singular { column: k })?;
        m.swap(k, p);
        let inv = m[k][k].recip();
        for x in m[k].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k || row[k].is_zero() {
                continue;
            }
            let f = row[k].clone();
            for (x, p) in row.iter_mut().zip(pivot.iter()) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{rat_int, Var};

    fn q() -> MPoly {
        MPoly::var(Var::q())
    }
    fn t() -> MPoly {
        MPoly::var(Var::t())
    }

    #[test]
    fn identity_system() {
        let a = vec![vec![MPoly::one(), MPoly::zero()], vec![MPoly::zero(), MPoly::one()]];
        let b = vec![q(), t()];
        let s = bareiss_solve(a, b).unwrap();
        assert_eq!(s.to_ratfuns().unwrap(), vec![RatFun::from(q()), RatFun::from(t())]);
    }

    #[test]
    fn triangular_residual_vanishes() {
        let one = MPoly::one();
        let a = vec![
            vec![RatFun::one(), RatFun::from(q())],
            vec![RatFun::zero(), RatFun::from(one.sub(&t()))],
        ];
        let b = vec![RatFun::one(), RatFun::from(one.sub(&t()))];
        let x = ratfun_solve(&a, &b).unwrap();
        for (row, rhs) in a.iter().zip(&b) {
            let lhs = row[0].mul(&x[0]).add(&row[1].mul(&x[1]));
            assert_eq!(&lhs, rhs);
        }
        assert_eq!(x[1], RatFun::one());
    }

    #[test]
    fn overdetermined_and_singular() {
        let a = vec![vec![q()], vec![t()]];
        let s = bareiss_solve(a.clone(), vec![q().mul(&t()), t().mul(&t())]).unwrap();
        assert_eq!(s.to_ratfuns().unwrap()[0], RatFun::from(t()));
        assert!(matches!(
            bareiss_solve(a, vec![q(), q()]),
            Err(Error::Inconsistent { .. })
        ));
        let z = vec![vec![MPoly::zero(), MPoly::one()], vec![MPoly::zero(), q()]];
        assert!(matches!(
            bareiss_solve(z, vec![MPoly::one(), q()]),
            Err(Error::Singular { column: 0 })
        ));
    }

    #[test]
    fn rational_inverse() {
        let a = vec![vec![rat_int(2), rat_int(1)], vec![rat_int(1), rat_int(1)]];
        let inv = rat_inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![rat_int(1), rat_int(-1)], vec![rat_int(-1), rat_int(2)]]);
        let x = rat_solve(a, vec![rat_int(3), rat_int(2)]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(1)]);
    }
}
