//! One line per acceptance criterion; the test fails if any criterion fails.

mod common;

use dharmonic::corpus::nabla_e;
use dharmonic::partitions::catalan;
use dharmonic::symfun::{e, hall, p};
use dharmonic::verify::*;
use dharmonic::{MPoly, Rat, Var};
use num_bigint::BigInt;

struct Criterion {
    title: &'static str,
    checks: Vec<Check>,
    extra: Option<Box<dyn Fn() -> Result<String, String>>>,
}

type Body = Box<dyn Fn() -> CheckResult + Send + Sync>;

fn checks(list: Vec<(&'static str, String, Body)>) -> Vec<Check> {
    list.into_iter().map(|(id, scope, f)| Check::new(id, scope, f)).collect()
}

macro_rules! plan {
    ($($id:literal, $scope:expr => $body:expr);* $(;)?) => {
        checks(vec![$(($id, $scope.to_string(), Box::new($body) as Body)),*])
    };
}

fn nabla_values() -> Result<String, String> {
    let ones = std::collections::HashMap::from([(Var::q(), Rat::from_integer(1.into())), (Var::t(), Rat::from_integer(1.into()))]);
    let dims = [(2, 3), (3, 16), (4, 125), (5, 1296), (6, 16807)];
    let mut seen = Vec::new();
    for (n, dim) in dims {
        let f = nabla_e(n).map_err(|e| e.to_string())?;
        let at = f.map_coeffs(|c: &MPoly| c.eval(&ones).as_constant().unwrap());
        let d = hall(&at, &p(1).pow(n));
        let c = hall(&at, &e(n));
        if d != Rat::from_integer(BigInt::from(dim)) {
            return Err(format!("n={n}: dimension {d}, expected {dim}"));
        }
        if c != Rat::from_integer(catalan(n)) {
            return Err(format!("n={n}: alternants {c}, expected {}", catalan(n)));
        }
        seen.push(format!("{d}/{c}"));
    }
    Ok(format!("dimension/alternants {}", seen.join(", ")))
}

fn properties() -> Result<String, String> {
    let results = common::run_all(64);
    let failed: Vec<String> = results
        .iter()
        .filter_map(|(name, r)| r.as_ref().err().map(|e| format!("{name}: {e}")))
        .collect();
    if failed.is_empty() {
        Ok(format!("{} properties, 64 cases each, seed {:#x}", results.len(), common::SEED))
    } else {
        Err(failed.join("; "))
    }
}

fn criteria() -> Vec<Criterion> {
    let mut out = Vec::new();
    let mut c1 = plan!["nabla_display", "n=3" => check_nabla_display];
    c1.extend((1..=5).map(|n| Check::new("nabla_corpus", format!("n={n}"), move || check_nabla_corpus(n))));
    out.push(Criterion {
        title: "nabla(e_3) display; nabla(e_n) = E_n restricted to length <= 2 at (q,t), n <= 5",
        checks: c1,
        extra: None,
    });
    out.push(Criterion {
        title: "<nabla(e_n)(1,1), p_1^n> = (n+1)^(n-1) and <., e_n> = Cat_n, n = 2..6",
        checks: (2..=6)
            .map(|n| Check::new("nabla_dimensions", format!("n={n}"), move || check_nabla_dimensions(n)))
            .collect(),
        extra: Some(Box::new(nabla_values)),
    });
    out.push(Criterion {
        title: "A_n[q - eps u] = (q+u)(q^2+u)...(q^(n-1)+u), n = 2..7",
        checks: (2..=7)
            .map(|n| Check::new("hook_product", format!("n={n}"), move || check_hook_product(n)))
            .collect(),
        extra: None,
    });
    out.push(Criterion {
        title: "hook-hook generating polynomial and hook-restricted expansion of c_(1|3), n = 5",
        checks: plan!["hook_hook_example", "n=5" => check_hook_hook_example],
        extra: None,
    });
    out.push(Criterion {
        title: "e_k^perp A_n = c_(k+1,1^(n-k-1)) for all k, n <= 6",
        checks: (1..=6)
            .map(|n| Check::new("hook_components", format!("n={n}"), move || check_hook_components(n)))
            .collect(),
        extra: None,
    });
    out.push(Criterion {
        title: "length(c_mu) = n - mu_1 for all mu of n <= 6",
        checks: (1..=6)
            .map(|n| Check::new("length_conjecture", format!("n={n}"), move || check_length_conjecture(n)))
            .collect(),
        extra: None,
    });
    out.push(Criterion {
        title: "reconstruct_alternant(6) reproduces A_6 and the <nabla(e_6), e_6> tail",
        checks: plan!["reconstruct_alternant", "n=6" => || reconstruct_alternant(6).1],
        extra: None,
    });
    let mut c8 = Vec::new();
    for n in 1..=6 {
        for b in 0..n {
            c8.push(Check::new("delta_by_skewing", format!("n={n},b={b}"), move || check_delta_by_skewing(n, b)));
        }
    }
    out.push(Criterion {
        title: "Delta'_(e_a) e_n = (e_b^perp E_n)(q,t) in at least one orientation, n <= 6, all b",
        checks: c8,
        extra: None,
    });
    out.push(Criterion {
        title: "F_n tables, Schur positivity of d_nu, d_(n) = A_n, d-hook identity, n <= 6",
        checks: (1..=6)
            .map(|n| Check::new("e_positivity", format!("n={n}"), move || check_e_positivity(n)))
            .collect(),
        extra: None,
    });
    let mut c10: Vec<Check> = (1..=6)
        .map(|n| Check::new("specializations", format!("n={n}"), move || check_specializations(n)))
        .collect();
    c10.extend(plan![
        "dimension_polynomials", "n=2..4" => check_dimension_polynomials;
        "catalan_polynomials", "n=0..8" => || check_catalan_polynomials(8);
    ]);
    out.push(Criterion {
        title: "specializations at k = 0, 1, 2, 3, -1, -2, dimension polynomials, C_n(-1) = Cat_n",
        checks: c10,
        extra: None,
    });
    out.push(Criterion {
        title: "Macdonald sanity (normalization, T_mu, hook coefficients, symmetries, positivity), n <= 6",
        checks: (1..=6)
            .map(|n| Check::new("macdonald_sanity", format!("n={n}"), move || check_macdonald_sanity(n)))
            .collect(),
        extra: None,
    });
    let mut c12 = plan!["oracle", "n=3,k=2" => || check_oracle(3, 2)];
    c12.extend((1..=3).map(|n| Check::new("oracle", format!("n={n},k=1"), move || check_oracle(n, 1))));
    out.push(Criterion {
        title: "brute-force harmonics: (3,2) equals nabla(e_3); Hilbert series [n]_q! for n <= 3",
        checks: c12,
        extra: None,
    });
    out.push(Criterion {
        title: "property suites on random inputs of degree <= 5 with a fixed seed",
        checks: Vec::new(),
        extra: Some(Box::new(properties)),
    });
    out
}

#[test]
fn acceptance() {
    let jobs = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let mut all_passed = true;
    let mut lines = Vec::new();
    for (i, c) in criteria().into_iter().enumerate() {
        let results = run_checks(&c.checks, jobs);
        let mut problems: Vec<String> = results
            .iter()
            .filter(|r| !r.passed())
            .map(|r| format!("{} {} {}: {}", r.id, r.scope, r.status, r.witness))
            .collect();
        let mut summary = format!("{} check{}", results.len(), if results.len() == 1 { "" } else { "s" });
        if let Some(extra) = &c.extra {
            match extra() {
                Ok(s) => summary = if results.is_empty() { s } else { format!("{summary}; {s}") },
                Err(e) => problems.push(e),
            }
        }
        let ok = problems.is_empty();
        all_passed &= ok;
        let line = if ok {
            format!("criterion {:>2} PASS  {} ({summary})", i + 1, c.title)
        } else {
            format!("criterion {:>2} FAIL  {} :: {}", i + 1, c.title, problems.join(" | "))
        };
        println!("{line}");
        lines.push(line);
    }
    assert!(all_passed, "failing criteria:\n{}", lines.iter().filter(|l| l.contains("FAIL")).cloned().collect::<Vec<_>>().join("\n"));
}
