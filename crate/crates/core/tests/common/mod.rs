//! Strategies and properties shared by the property suite and the acceptance run.

#![allow(dead_code)]

use std::collections::HashMap;

use dharmonic::coefficients::Monomial;
use dharmonic::partitions::partitions;
use dharmonic::plethysm::{compose, pleth, skew_generating_check, Alphabet};
use dharmonic::symfun::{e, hall, p, perp, s};
use dharmonic::{Basis, MPoly, Partition, Rat, RatFun, SymFun, TensorExp, Var};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

pub const SEED: u64 = 0x00d1_a905;
pub const MAX_DEGREE: u32 = 5;

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::ALL.to_vec())
}

/// A random element of degree `n` in a random basis with small integer coefficients.
pub fn sym_of_degree(n: u32) -> impl Strategy<Value = SymFun<Rat>> {
    let shapes = partitions(n);
    let count = shapes.len();
    (basis(), prop::collection::vec((0..count, -3i64..=3), 1..=4)).prop_map(move |(b, terms)| {
        SymFun::from_terms(b, terms.into_iter().map(|(i, c)| (shapes[i].clone(), int(c))))
    })
}

pub fn sym() -> impl Strategy<Value = SymFun<Rat>> {
    (0..=MAX_DEGREE).prop_flat_map(sym_of_degree)
}

/// Two elements whose degrees add up to at most `MAX_DEGREE`.
pub fn sym_pair() -> impl Strategy<Value = (SymFun<Rat>, SymFun<Rat>)> {
    (0..=MAX_DEGREE)
        .prop_flat_map(|a| (Just(a), 0..=MAX_DEGREE - a))
        .prop_flat_map(|(a, b)| (sym_of_degree(a), sym_of_degree(b)))
}

pub fn mpoly() -> impl Strategy<Value = MPoly> {
    let vars = [Var::q(), Var::t(), Var::u()];
    prop::collection::vec(((0u32..=4, 0u32..=4, 0u32..=4), -5i64..=5), 0..=5).prop_map(move |terms| {
        MPoly::from_terms(terms.into_iter().map(|((a, b, c), x)| {
            (Monomial::from_pairs(&[(vars[0], a), (vars[1], b), (vars[2], c)]), int(x))
        }))
    })
}

/// Alphabets mixing variables, constants, ε and `Z`.
pub fn alphabet() -> impl Strategy<Value = Alphabet> {
    let leaf = prop_oneof![
        Just(Alphabet::var("q")),
        Just(Alphabet::var("t")),
        (-3i64..=3).prop_map(Alphabet::int),
        Just(Alphabet::epsilon()),
    ];
    let scalar = leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner).prop_map(|(a, b)| a * b),
        ]
    });
    (scalar.clone(), prop::bool::ANY).prop_map(|(a, with_z)| if with_z { a * Alphabet::z() } else { a })
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn pl(f: &SymFun<Rat>, a: &Alphabet) -> Result<SymFun<RatFun>, TestCaseError> {
    pleth(f, a).map(|r| r.to_schur()).map_err(|e| TestCaseError::fail(e.to_string()))
}

pub fn basis_round_trip(f: SymFun<Rat>, b: Basis) -> Result<(), TestCaseError> {
    let back = f.to_basis(b).to_basis(f.basis());
    check(back == f, || format!("{f} -> {b:?} -> back gives {back}"))?;
    let via = f.to_basis(b).to_schur();
    check(via == f.to_schur(), || format!("{f}: Schur expansion depends on the route through {b:?}"))
}

pub fn perp_adjoint(f: SymFun<Rat>, g: SymFun<Rat>, h: SymFun<Rat>) -> Result<(), TestCaseError> {
    let left = hall(&perp(&g, &f), &h);
    let right = hall(&f, &g.mul(&h));
    check(left == right, || format!("<g^perp f, h> = {left} but <f, g h> = {right} for f={f}, g={g}, h={h}"))
}

pub fn pleth_linear(f: SymFun<Rat>, g: SymFun<Rat>, a: Alphabet) -> Result<(), TestCaseError> {
    let sum = pl(&f.add(&g), &a)?;
    let parts = pl(&f, &a)?.add(&pl(&g, &a)?);
    check(sum == parts, || format!("(f+g)[{a}] is not additive for f={f}, g={g}"))
}

pub fn pleth_multiplicative(f: SymFun<Rat>, g: SymFun<Rat>, a: Alphabet) -> Result<(), TestCaseError> {
    let prod = pl(&f.mul(&g), &a)?;
    let parts = pl(&f, &a)?.mul(&pl(&g, &a)?);
    check(prod == parts, || format!("(f g)[{a}] is not multiplicative for f={f}, g={g}"))
}

pub fn power_sum_rules(k: u32, a: Alphabet, b: Alphabet) -> Result<(), TestCaseError> {
    let pk = p(k);
    let sum = pl(&pk, &(a.clone() + b.clone()))?;
    check(sum == pl(&pk, &a)?.add(&pl(&pk, &b)?), || format!("p_{k}[{a} + {b}]"))?;
    let diff = pl(&pk, &(a.clone() - b.clone()))?;
    check(diff == pl(&pk, &a)?.sub(&pl(&pk, &b)?), || format!("p_{k}[{a} - {b}]"))?;
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    check(pl(&pk, &Alphabet::epsilon())? == SymFun::<Rat>::one().scale(&int(sign)).to_ratfun(), || {
        format!("p_{k}[eps]")
    })?;
    let x = RatFun::var(Var::new("x")).pow(k as i32).unwrap();
    check(pl(&pk, &Alphabet::var("x"))? == SymFun::term(Basis::S, Partition::empty(), x), || format!("p_{k}[x]"))?;
    let c = RatFun::var(Var::new("c"));
    check(
        pl(&pk, &Alphabet::symbolic_constant("c"))? == SymFun::term(Basis::S, Partition::empty(), c),
        || format!("p_{k}[c]"),
    )
}

pub fn power_sum_composition(k: u32, j: u32, f: SymFun<Rat>) -> Result<(), TestCaseError> {
    let got = compose(&p(k), &p(j));
    check(got.to_schur() == p(k * j).to_schur(), || format!("p_{k}[p_{j}] = {got}"))?;
    let twice = compose(&compose(&f, &p(j)), &p(k));
    let once = compose(&f, &p(j * k));
    check(twice.to_schur() == once.to_schur(), || format!("f[p_{j}][p_{k}] differs from f[p_{}] for f={f}", j * k))
}

pub fn minus_eps_is_omega(f: SymFun<Rat>) -> Result<(), TestCaseError> {
    let got = pl(&f, &-(Alphabet::epsilon() * Alphabet::z()))?;
    check(got == f.omega().to_schur().to_ratfun(), || format!("f[-eps Z] is not omega f for f={f}"))
}

pub fn skew_generating_identity(f: SymFun<Rat>) -> Result<(), TestCaseError> {
    let ok = skew_generating_check(&f, "q", "u").map_err(|e| TestCaseError::fail(e.to_string()))?;
    check(ok, || format!("sum_k u^k (e_k^perp f)(q) differs from f[q - eps u] for f={f}"))
}

pub fn q_minus_one(f: SymFun<Rat>) -> Result<(), TestCaseError> {
    let got = pl(&f, &(Alphabet::q_alphabet() - Alphabet::int(1)))?;
    let mut want = SymFun::zero(Basis::S);
    for a in 0..=MAX_DEGREE {
        let sign = if a % 2 == 0 { 1 } else { -1 };
        want = want.add(&f.e_perp(a).scale(&int(sign)));
    }
    check(got == want.to_schur().to_ratfun(), || format!("f[Q - 1] differs from sum (-1)^a e_a^perp f for f={f}"))
}

pub fn tensor_adams(k: u32, j: u32, l: u32) -> Result<(), TestCaseError> {
    let outer = |a: &SymFun<Rat>, b: &SymFun<Rat>, n: u32| -> TensorExp {
        let mut t = TensorExp::zero(n);
        for (x, c) in a.to_schur().terms() {
            for (y, d) in b.to_schur().terms() {
                let m = (c * d).to_integer().try_into().unwrap();
                t.add_term(x.clone(), y.clone(), m).unwrap();
            }
        }
        t
    };
    let got = outer(&p(j), &p(l), l).adams(k).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let want = outer(&p(k * j), &p(k * l), k * l);
    check(got == want, || format!("p_{k}[p_{j} (x) p_{l}] = {got}"))
}

pub fn mpoly_ring(a: MPoly, b: MPoly, c: MPoly, x: i64, y: i64) -> Result<(), TestCaseError> {
    check(a.add(&b).mul(&c) == a.mul(&c).add(&b.mul(&c)), || format!("({a} + {b})({c})"))?;
    check(a.mul(&b) == b.mul(&a), || format!("{a} * {b}"))?;
    let at: HashMap<Var, Rat> = [(Var::q(), int(x)), (Var::t(), int(y))].into();
    let prod = a.mul(&b).eval(&at);
    check(prod == a.eval(&at).mul(&b.eval(&at)), || format!("evaluation does not commute with product for {a}, {b}"))?;
    let sum = a.add(&c).eval(&at);
    check(sum == a.eval(&at).add(&c.eval(&at)), || format!("evaluation does not commute with sum for {a}, {c}"))
}

pub fn schur_positivity_of_e() -> Result<(), TestCaseError> {
    for n in 0..=6 {
        for lam in partitions(n) {
            let f: SymFun<Rat> = SymFun::basis_elem(Basis::E, lam.clone());
            check(f.is_schur_positive(), || format!("e[{lam}] is not Schur positive"))?;
        }
    }
    check(e(4).length() == 4 && s(&[4]).length() == 1, || "length of e_4 or h_4".to_string())
}

/// Runs every property with the fixed seed; one `(name, outcome)` per property.
pub fn run_all(cases: u32) -> Vec<(&'static str, Result<(), String>)> {
    let mut out = Vec::new();
    macro_rules! prop {
        ($name:expr, $strategy:expr, $body:expr) => {{
            let mut runner = TestRunner::new(config(cases));
            let r = runner.run(&$strategy, $body).map_err(|e| e.to_string());
            out.push(($name, r));
        }};
    }
    prop!("basis round trips", (sym(), basis()), |(f, b)| basis_round_trip(f, b));
    prop!(
        "perp adjointness",
        sym_pair().prop_flat_map(|(g, h)| {
            let n = g.degrees().first().copied().unwrap_or(0) + h.degrees().first().copied().unwrap_or(0);
            (sym_of_degree(n), Just(g), Just(h))
        }),
        |(f, g, h)| perp_adjoint(f, g, h)
    );
    prop!("plethysm linearity", (sym_pair(), alphabet()), |((f, g), a)| pleth_linear(f, g, a));
    prop!("plethysm multiplicativity", (sym_pair(), alphabet()), |((f, g), a)| {
        pleth_multiplicative(f, g, a)
    });
    prop!("power-sum rules", (1u32..=5, alphabet(), alphabet()), |(k, a, b)| power_sum_rules(k, a, b));
    prop!("power-sum composition", (1u32..=3, 1u32..=2, sym_of_degree(2)), |(k, j, f)| {
        power_sum_composition(k, j, f)
    });
    prop!("f[-eps Z] = omega f", sym(), minus_eps_is_omega);
    prop!("e-skewing generating identity", sym(), skew_generating_identity);
    prop!("f[Q - 1] = sum (-1)^a e_a^perp f", sym(), q_minus_one);
    prop!("tensor plethysm on power sums", (1u32..=2, 1u32..=2, 1u32..=2), |(k, j, l)| tensor_adams(k, j, l));
    prop!(
        "polynomial ring axioms",
        (mpoly(), mpoly(), mpoly(), -3i64..=3, -3i64..=3),
        |(a, b, c, x, y)| mpoly_ring(a, b, c, x, y)
    );
    out.push(("e_lambda Schur positive", schur_positivity_of_e().map_err(|e| e.to_string())));
    out
}
