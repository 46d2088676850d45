use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::var::Var;
use super::Rat;

/// Exponent vector indexed by variable id, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var, exp: u32) -> Monomial {
        let mut m = Monomial::one();
        m.set(v, exp);
        m
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Monomial {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            let cur = m.exp(v);
            m.set(v, cur + e);
        }
        m
    }

    fn set(&mut self, v: Var, exp: u32) {
        let i = v.id();
        if i >= self.0.len() {
            if exp == 0 {
                return;
            }
            self.0.resize(i + 1, 0);
        }
        self.0[i] = exp;
        self.trim();
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0.get(v.id()).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero `(variable, exponent)` pairs in id order.
    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var::from_id(i), e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.0.clone();
        for (o, s) in out.iter_mut().zip(short.0.iter()) {
            *o += s;
        }
        Monomial(out)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut out = self.0.clone();
        for (o, d) in out.iter_mut().zip(other.0.iter()) {
            if *o < *d {
                return None;
            }
            *o -= d;
        }
        let mut m = Monomial(out);
        m.trim();
        Some(m)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[u32; 4]> = self
            .0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| *a.min(b))
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        Monomial(out)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let mut m = Monomial(self.0.iter().map(|x| x * e).collect());
        m.trim();
        m
    }

    fn fmt_vars(&self, order: &[Var]) -> String {
        let mut parts = Vec::new();
        for &v in order {
            match self.exp(v) {
                0 => {}
                1 => parts.push(v.name().to_string()),
                e => parts.push(format!("{}^{}", v.name(), e)),
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order on variable ids.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let n = self.0.len().max(other.0.len());
        for i in 0..n {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<Var> = self.iter().map(|(v, _)| v).collect();
        let s = self.fmt_vars(&vars);
        if s.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{s}")
        }
    }
}

/// Sparse multivariate polynomial over ℚ.
///
/// Terms are kept sorted in decreasing graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, Rat)>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> MPoly {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> MPoly {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn int(c: i64) -> MPoly {
        MPoly::constant(Rat::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> MPoly {
        MPoly::term(Monomial::var(v, 1), Rat::one())
    }

    pub fn named(name: &str) -> MPoly {
        MPoly::var(Var::new(name))
    }

    pub fn term(m: Monomial, c: Rat) -> MPoly {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(terms: I) -> MPoly {
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rat::zero) += c;
        }
        MPoly::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Rat>) -> MPoly {
        let mut terms: Vec<(Monomial, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MPoly { terms }
    }

    /// Univariate polynomial `Σ coeffs[i]·v^i`.
    pub fn univariate(v: Var, coeffs: &[i64]) -> MPoly {
        MPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (Monomial::var(v, i as u32), Rat::from_integer(BigInt::from(c)))),
        )
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
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

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms
            .binary_search_by(|(tm, _)| m.cmp(tm))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rat::zero())
    }

    pub fn leading(&self) -> Option<&(Monomial, Rat)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    /// Variables with a nonzero exponent somewhere, in display order.
    pub fn variables(&self) -> Vec<Var> {
        let mut seen: Vec<Var> = Vec::new();
        for (m, _) in &self.terms {
            for (v, _) in m.iter() {
                if !seen.contains(&v) {
                    seen.push(v);
                }
            }
        }
        seen.sort_by_key(|v| v.display_key());
        seen
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.terms
            .iter()
            .all(|(_, c)| c.is_integer() && !c.is_negative())
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(tm, x)| (tm.mul(m), x * c))
                .collect(),
        }
    }

    fn merge(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        MPoly { terms: out }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        self.merge(other, false)
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        if other.is_zero() {
            return self.clone();
        }
        self.merge(other, true)
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let (outer, inner) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: HashMap<Monomial, Rat> =
            HashMap::with_capacity(outer.terms.len() * inner.terms.len() / 2 + 1);
        for (m1, c1) in &outer.terms {
            for (m2, c2) in &inner.terms {
                let p = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += p;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(p);
                    }
                }
            }
        }
        MPoly::from_map(acc)
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let inv = dc.recip();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                terms.push((m.div(dm)?, c * &inv));
            }
            return Some(MPoly { terms });
        }
        let (ldm, ldc) = &d.terms[0];
        let inv = ldc.recip();
        let mut rem: BTreeMap<Monomial, Rat> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(ldm)?;
            let qc = &c * &inv;
            for (dm, dc) in &d.terms[1..] {
                let key = qm.mul(dm);
                let delta = &qc * dc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(MPoly { terms: quot })
    }

    /// Positive rational `c` with `self / c` primitive over ℤ.
    pub fn content(&self) -> Rat {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rat::one();
        }
        Rat::new(num, den)
    }

    /// Integer-primitive associate with positive leading coefficient.
    pub fn primitive(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let mut c = self.content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    pub fn monomial_gcd(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for (m, _) in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    /// Substitutes polynomials for variables; unbound variables are kept.
    pub fn substitute(&self, bindings: &HashMap<Var, MPoly>) -> MPoly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut powers: HashMap<(Var, u32), MPoly> = HashMap::new();
        let mut acc = MPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut value = MPoly::constant(c.clone());
            for (v, e) in m.iter() {
                match bindings.get(&v) {
                    Some(b) => {
                        let p = powers.entry((v, e)).or_insert_with(|| b.pow(e));
                        value = value.mul(p);
                    }
                    None => kept.set(v, e),
                }
            }
            acc = acc.add(&value.mul_term(&kept, &Rat::one()));
        }
        acc
    }

    /// Substitutes rational constants.
    pub fn eval(&self, values: &HashMap<Var, Rat>) -> MPoly {
        let bindings: HashMap<Var, MPoly> = values
            .iter()
            .map(|(v, r)| (*v, MPoly::constant(r.clone())))
            .collect();
        self.substitute(&bindings)
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut m2 = m.clone();
            let (ea, eb) = (m.exp(a), m.exp(b));
            m2.set(a, eb);
            m2.set(b, ea);
            (m2, c.clone())
        }))
    }

    /// Coefficients of `self` viewed as a polynomial in `v`.
    pub fn as_univariate(&self, v: Var) -> Vec<MPoly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rat)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut rest = m.clone();
            rest.set(v, 0);
            buckets[e as usize].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                MPoly { terms: ts }
            })
            .collect()
    }

    pub fn from_univariate(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut acc = MPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            acc = acc.add(&c.mul_term(&Monomial::var(v, i as u32), &Rat::one()));
        }
        acc
    }

    /// Greatest common divisor over ℚ, normalised by [`MPoly::primitive`].
    pub fn gcd(&self, other: &MPoly) -> MPoly {
        gcd_rec(self, other)
    }

    /// Canonical text, ordered independently of variable registration.
    pub fn to_canonical(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let order = self.variables();
        let mut keyed: Vec<(u32, Vec<u32>, &Monomial, &Rat)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.degree(), order.iter().map(|&v| m.exp(v)).collect(), m, c))
            .collect();
        keyed.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));
        let mut out = String::new();
        for (i, (_, _, m, c)) in keyed.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            let vars = m.fmt_vars(&order);
            let body = if vars.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                vars
            } else {
                format!("{abs}*{vars}")
            };
            match (i, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

fn gcd_rec(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    let mg = a.monomial_gcd().gcd(&b.monomial_gcd());
    if a.len() == 1 || b.len() == 1 {
        return MPoly::term(mg, Rat::one());
    }
    // main variable: smallest id occurring in either polynomial
    let mut main = None;
    for p in [a, b] {
        for (m, _) in &p.terms {
            if let Some((v, _)) = m.iter().next() {
                main = Some(main.map_or(v, |w: Var| if v.id() < w.id() { v } else { w }));
            }
        }
    }
    let x = main.expect("non-constant polynomials have a variable");
    let ua = a.as_univariate(x);
    let ub = b.as_univariate(x);
    let ca = uni_content(&ua);
    let cb = uni_content(&ub);
    let c = gcd_rec(&ca, &cb);
    let pa = uni_div(&ua, &ca);
    let pb = uni_div(&ub, &cb);
    let g = if pa.len() >= pb.len() {
        uni_prs(pa, pb)
    } else {
        uni_prs(pb, pa)
    };
    let g = uni_div(&g, &uni_content(&g));
    MPoly::from_univariate(x, &g).mul(&c).primitive()
}

fn uni_trim(p: &mut Vec<MPoly>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn uni_content(p: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero();
    for c in p {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.primitive() } else { gcd_rec(&g, c) };
        if g.is_constant() {
            return MPoly::one();
        }
    }
    if g.is_zero() {
        MPoly::one()
    } else {
        g
    }
}

fn uni_div(p: &[MPoly], c: &MPoly) -> Vec<MPoly> {
    p.iter()
        .map(|x| x.div_exact(c).expect("content divides every coefficient"))
        .collect()
}

/// Primitive polynomial remainder sequence; returns the last nonzero member.
fn uni_prs(mut a: Vec<MPoly>, mut b: Vec<MPoly>) -> Vec<MPoly> {
    uni_trim(&mut a);
    uni_trim(&mut b);
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![MPoly::one()];
        }
        let r = uni_prem(&a, &b);
        a = b;
        b = if r.is_empty() {
            r
        } else {
            let c = uni_content(&r);
            uni_div(&r, &c)
        };
    }
    a
}

fn uni_prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x = x.mul(lb);
        }
        for (j, bj) in b.iter().enumerate() {
            let idx = j + dr - db;
            r[idx] = r[idx].sub(&lr.mul(bj));
        }
        uni_trim(&mut r);
    }
    r
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $inner:ident) => {
        impl<'a> $imp<&'a MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &'a MPoly) -> MPoly {
                MPoly::$inner(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly::neg(self)
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> MPoly {
        MPoly::int(c)
    }
}

impl From<Rat> for MPoly {
    fn from(c: Rat) -> MPoly {
        MPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MPoly {
        MPoly::var(Var::q())
    }
    fn u() -> MPoly {
        MPoly::var(Var::u())
    }
    fn t() -> MPoly {
        MPoly::var(Var::t())
    }
    fn c(n: i64) -> MPoly {
        MPoly::int(n)
    }

    #[test]
    fn expand_small_products() {
        let lhs = &(&q() + &u()) * &(&q().pow(2) + &u());
        let rhs: MPoly = "q^3 + q^2*u + q*u + u^2".parse().unwrap();
        assert_eq!(lhs, rhs);
        let p = MPoly::univariate(Var::q(), &[1, 1, 1]);
        assert_eq!(p.add(&MPoly::zero()), p);
    }

    #[test]
    fn triple_product_degree_six() {
        let mut acc = MPoly::one();
        for i in 1..=3 {
            acc = acc.mul(&q().pow(i).add(&u()));
        }
        assert_eq!(acc.total_degree(), Some(6));
        assert_eq!(acc.coeff(&Monomial::var(Var::q(), 6)), Rat::one());
        assert_eq!(acc.coeff(&Monomial::var(Var::u(), 3)), Rat::one());
        assert_eq!(acc.len(), 8);
    }

    #[test]
    fn exact_division() {
        let f = q().sub(&t()).add(&c(3));
        let a = q().add(&t()).mul(&f);
        assert_eq!(a.div_exact(&q().add(&t())).unwrap(), f);
        assert!(a.div_exact(&q().add(&c(1))).is_none());
        assert!(q().div_exact(&t()).is_none());
    }

    #[test]
    fn gcd_bivariate() {
        let g = q().sub(&t());
        let a = g.mul(&q().add(&c(2))).mul(&q().add(&t()));
        let b = g.mul(&t().pow(2).add(&c(1))).mul(&c(6));
        assert_eq!(a.gcd(&b), g.primitive());
        assert_eq!(q().gcd(&t()), MPoly::one());
        assert_eq!(q().mul(&t()).gcd(&q().pow(2)), q());
    }

    #[test]
    fn canonical_text() {
        let p = q().pow(2).mul(&t()).sub(&q().scale(&Rat::new(3.into(), 2.into()))).add(&c(1));
        assert_eq!(p.to_canonical(), "q^2*t - 3/2*q + 1");
        assert_eq!(MPoly::zero().to_canonical(), "0");
        assert_eq!(q().neg().to_canonical(), "-q");
    }

    #[test]
    fn substitution_and_swap() {
        let p = q().mul(&q()).add(&q().mul(&t()));
        let mut b = HashMap::new();
        let t1 = t().add(&c(1));
        b.insert(Var::q(), t1.clone());
        assert_eq!(p.substitute(&b), t1.mul(&t1).add(&t1.mul(&t())));
        assert_eq!(p.swap_vars(Var::q(), Var::t()), t().mul(&t()).add(&q().mul(&t())));
    }
}
