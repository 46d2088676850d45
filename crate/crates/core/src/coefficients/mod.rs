//! Exact coefficient rings: ℚ, ℚ[q,t,u,…] and the fraction field ℚ(q,t,…).

mod interp;
mod linsolve;
mod mpoly;
mod parse;
mod ratfun;
mod var;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use interp::{interpolate_bivariate, interpolate_univariate};
pub use linsolve::{bareiss_solve, rat_inverse, rat_solve, ratfun_solve, BareissSolution};
pub use mpoly::{MPoly, Monomial};
pub use ratfun::RatFun;
pub use var::Var;

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Ring operations shared by every coefficient type a [`crate::SymFun`] may carry.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rat(r: Rat) -> Self;
    fn scale(&self, r: &Rat) -> Self;
    fn to_ratfun(&self) -> RatFun;
    /// Inverse of [`Coeff::to_ratfun`] where the value lies in this ring.
    fn from_ratfun(r: &RatFun) -> Option<Self>;
    /// Text suitable as a multiplier, parenthesised when it is a sum.
    fn factor_text(&self) -> String;
    /// `Some(±1)` when the coefficient is the unit `±1`.
    fn unit_sign(&self) -> Option<i8>;
}

impl Coeff for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn to_ratfun(&self) -> RatFun {
        RatFun::from(MPoly::constant(self.clone()))
    }
    fn from_ratfun(r: &RatFun) -> Option<Self> {
        r.as_constant()
    }
    fn factor_text(&self) -> String {
        self.to_string()
    }
    fn unit_sign(&self) -> Option<i8> {
        if One::is_one(self) {
            Some(1)
        } else if One::is_one(&-self) {
            Some(-1)
        } else {
            None
        }
    }
}

impl Coeff for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        MPoly::add(self, o)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        MPoly::sub(self, o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        MPoly::mul(self, o)
    }
    fn neg_ref(&self) -> Self {
        MPoly::neg(self)
    }
    fn from_rat(r: Rat) -> Self {
        MPoly::constant(r)
    }
    fn scale(&self, r: &Rat) -> Self {
        MPoly::scale(self, r)
    }
    fn to_ratfun(&self) -> RatFun {
        RatFun::from(self.clone())
    }
    fn from_ratfun(r: &RatFun) -> Option<Self> {
        r.as_polynomial()
    }
    fn factor_text(&self) -> String {
        if self.len() > 1 {
            format!("({self})")
        } else {
            self.to_string()
        }
    }
    fn unit_sign(&self) -> Option<i8> {
        self.as_constant().and_then(|c| Coeff::unit_sign(&c))
    }
}

impl Coeff for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        RatFun::add(self, o)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        RatFun::sub(self, o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        RatFun::mul(self, o)
    }
    fn neg_ref(&self) -> Self {
        RatFun::neg(self)
    }
    fn from_rat(r: Rat) -> Self {
        RatFun::from(MPoly::constant(r))
    }
    fn scale(&self, r: &Rat) -> Self {
        RatFun::scale(self, r)
    }
    fn to_ratfun(&self) -> RatFun {
        self.clone()
    }
    fn from_ratfun(r: &RatFun) -> Option<Self> {
        Some(r.clone())
    }
    fn factor_text(&self) -> String {
        if self.den().is_one() {
            self.num().factor_text()
        } else {
            format!("({self})")
        }
    }
    fn unit_sign(&self) -> Option<i8> {
        self.as_polynomial().and_then(|p| p.unit_sign())
    }
}
