use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::mpoly::{MPoly, Monomial};
use super::var::Var;
use super::Rat;
use crate::error::{Error, Result};

/// Element of the fraction field over ℚ.
///
/// Stored reduced: common polynomial factors cancelled, denominator
/// integer-primitive with positive leading coefficient.
// The reduced form is canonical, so hashing the stored fields is consistent with `eq`.
#[allow(clippy::derived_hash_with_manual_eq)]
#[derive(Clone, Hash)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

impl RatFun {
    pub fn zero() -> RatFun {
        RatFun {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> RatFun {
        RatFun {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn var(v: Var) -> RatFun {
        RatFun::from(MPoly::var(v))
    }

    pub fn int(c: i64) -> RatFun {
        RatFun::from(MPoly::int(c))
    }

    pub fn new(num: MPoly, den: MPoly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::Pole(format!("({num})/0")));
        }
        Ok(RatFun::reduce(num, den))
    }

    fn reduce(mut num: MPoly, mut den: MPoly) -> RatFun {
        if num.is_zero() {
            return RatFun::zero();
        }
        let mg = num.monomial_gcd().gcd(&den.monomial_gcd());
        if !mg.is_one() {
            let m = MPoly::term(mg, Rat::one());
            num = num.div_exact(&m).expect("monomial divides");
            den = den.div_exact(&m).expect("monomial divides");
        }
        if let Some(c) = den.as_constant() {
            return RatFun {
                num: num.scale(&c.recip()),
                den: MPoly::one(),
            };
        }
        if let Some(q) = num.div_exact(&den) {
            return RatFun {
                num: q,
                den: MPoly::one(),
            };
        }
        let g = num.gcd(&den);
        if !g.is_constant() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        let mut c = den.content();
        if den.leading().map(|(_, lc)| lc.is_negative()).unwrap_or(false) {
            c = -c;
        }
        let inv = c.recip();
        RatFun {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<MPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rat> {
        self.as_polynomial().and_then(|p| p.as_constant())
    }

    pub fn add(&self, o: &RatFun) -> RatFun {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            return RatFun::reduce(self.num.add(&o.num), self.den.clone());
        }
        RatFun::reduce(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &RatFun) -> RatFun {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun {
                num: self.num.mul(&o.num),
                den: MPoly::one(),
            };
        }
        RatFun::reduce(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<RatFun> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFun) -> Result<RatFun> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<RatFun> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RatFun {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Substitutes rational functions for variables.
    pub fn substitute(&self, bindings: &HashMap<Var, RatFun>) -> Result<RatFun> {
        let n = substitute_poly(&self.num, bindings);
        let d = substitute_poly(&self.den, bindings);
        if d.is_zero() {
            return Err(Error::Pole(self.den.to_string()));
        }
        n.div(&d)
    }

    pub fn eval(&self, values: &HashMap<Var, Rat>) -> Result<RatFun> {
        let b = values
            .iter()
            .map(|(v, r)| (*v, RatFun::from(MPoly::constant(r.clone()))))
            .collect();
        self.substitute(&b)
    }

    /// Value at a point where every variable is bound.
    pub fn eval_rat(&self, values: &HashMap<Var, Rat>) -> Result<Rat> {
        let r = self.eval(values)?;
        r.as_constant()
            .ok_or_else(|| Error::Internal(format!("unbound variables remain in {r}")))
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> RatFun {
        RatFun::reduce(self.num.swap_vars(a, b), self.den.swap_vars(a, b))
    }
}

/// `p` with variables replaced by rational functions, over a common denominator.
pub(crate) fn substitute_poly(p: &MPoly, bindings: &HashMap<Var, RatFun>) -> RatFun {
    let mut poly_b: HashMap<Var, MPoly> = HashMap::new();
    let mut den_b: Vec<(Var, MPoly, MPoly, u32)> = Vec::new();
    for (v, r) in bindings {
        if r.den.is_one() {
            poly_b.insert(*v, r.num.clone());
        } else {
            den_b.push((*v, r.num.clone(), r.den.clone(), p.degree_in(*v)));
        }
    }
    if den_b.is_empty() {
        return RatFun::from(p.substitute(&poly_b));
    }
    // v = n_v/d_v: homogenise each term to the common denominator Π d_v^{deg_v}.
    let mut cache: HashMap<(usize, u32, bool), MPoly> = HashMap::new();
    let mut num = MPoly::zero();
    for (m, c) in p.terms() {
        let mut rest = Monomial::one();
        let mut factor = MPoly::constant(c.clone());
        for (v, e) in m.iter() {
            if let Some(i) = den_b.iter().position(|d| d.0 == v) {
                let (_, nv, dv, deg) = &den_b[i];
                let a = cache.entry((i, e, true)).or_insert_with(|| nv.pow(e)).clone();
                let b = cache
                    .entry((i, deg - e, false))
                    .or_insert_with(|| dv.pow(deg - e))
                    .clone();
                factor = factor.mul(&a).mul(&b);
            } else {
                rest = rest.mul(&Monomial::var(v, e));
            }
        }
        for (i, (v, _, dv, deg)) in den_b.iter().enumerate() {
            if m.exp(*v) == 0 {
                let b = cache
                    .entry((i, *deg, false))
                    .or_insert_with(|| dv.pow(*deg))
                    .clone();
                factor = factor.mul(&b);
            }
        }
        num = num.add(&MPoly::term(rest, Rat::one()).substitute(&poly_b).mul(&factor));
    }
    let mut den = MPoly::one();
    for (_, _, dv, deg) in &den_b {
        den = den.mul(&dv.pow(*deg));
    }
    RatFun::reduce(num.substitute(&poly_b), den)
}

impl PartialEq for RatFun {
    fn eq(&self, o: &RatFun) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl Eq for RatFun {}

impl From<MPoly> for RatFun {
    fn from(p: MPoly) -> RatFun {
        RatFun {
            num: p,
            den: MPoly::one(),
        }
    }
}

impl From<Rat> for RatFun {
    fn from(c: Rat) -> RatFun {
        RatFun::from(MPoly::constant(c))
    }
}

impl From<i64> for RatFun {
    fn from(c: i64) -> RatFun {
        RatFun::int(c)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = if self.num.len() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        let d = if self.den.len() > 1 || !self.den.leading().map(|(_, c)| c.is_one()).unwrap_or(true) {
            format!("({})", self.den)
        } else {
            self.den.to_string()
        };
        write!(f, "{n}/{d}")
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        RatFun::add(self, o)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        RatFun::sub(self, o)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        RatFun::mul(self, o)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, o: &RatFun) -> RatFun {
        RatFun::div(self, o).expect("division by zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rat_int;

    fn q() -> RatFun {
        RatFun::var(Var::q())
    }
    fn t() -> RatFun {
        RatFun::var(Var::t())
    }

    #[test]
    fn cancels_common_factors() {
        let one = RatFun::one();
        let a = (&(&q() * &q()) - &one).div(&(&q() - &one)).unwrap();
        assert_eq!(a.as_polynomial().unwrap(), MPoly::var(Var::q()).add(&MPoly::int(1)));
        let b = (&q() * &t()).div(&(&(&q() * &q()) * &t())).unwrap();
        assert_eq!(b.den(), &MPoly::var(Var::q()));
        let c = (&q() - &t()).div(&(&t() - &q())).unwrap();
        assert_eq!(c, RatFun::int(-1));
    }

    #[test]
    fn sum_of_geometric_denominators() {
        let one = RatFun::one();
        let a = one.div(&(&one - &q())).unwrap();
        let b = q().div(&(&one - &q())).unwrap();
        assert_eq!(a.sub(&b), one);
    }

    #[test]
    fn pole_reported() {
        let one = RatFun::one();
        let f = one.div(&(&q() - &one)).unwrap();
        let mut b = HashMap::new();
        b.insert(Var::q(), rat_int(1));
        assert!(matches!(f.eval(&b), Err(Error::Pole(_))));
        b.insert(Var::q(), rat_int(3));
        assert_eq!(f.eval_rat(&b).unwrap(), crate::coefficients::rat(1, 2));
    }

    #[test]
    fn substitute_rational_values() {
        // q + t at t = 1/q is (q^2 + 1)/q
        let f = &q() + &t();
        let mut b = HashMap::new();
        b.insert(Var::t(), RatFun::one().div(&q()).unwrap());
        let g = f.substitute(&b).unwrap();
        let expect = (&(&q() * &q()) + &RatFun::one()).div(&q()).unwrap();
        assert_eq!(g, expect);
        assert_eq!(g.den(), &MPoly::var(Var::q()));
    }
}
