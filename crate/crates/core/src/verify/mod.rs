//! Named checks for the structural identities and conjectures about `E_n`,
//! a suite runner and text/JSON reports.

mod checks;
mod oracle;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::json;

use crate::coefficients::Coeff;
use crate::error::{Error, Result};
use crate::symfun::SymFun;
use crate::tensor::{TensorExp, FORMAT_VERSION};

pub use checks::*;
pub use oracle::{brute_force_harmonics, grading_vars, hilbert_series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "verified-at-scale")]
    Verified,
    #[serde(rename = "refuted-with-witness")]
    Refuted,
    #[serde(rename = "skipped")]
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Verified => "verified-at-scale",
            Status::Refuted => "refuted-with-witness",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub scope: String,
    pub status: Status,
    /// First counterexample on refutation, otherwise a summary.
    pub witness: String,
    pub runtime: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Refuted
    }
}

pub(crate) enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

pub(crate) fn timed(id: &str, scope: impl Into<String>, body: impl FnOnce() -> Result<Verdict>) -> CheckResult {
    let start = Instant::now();
    let (status, witness) = match body() {
        Ok(Verdict::Pass(w)) => (Status::Verified, w),
        Ok(Verdict::Fail(w)) => (Status::Refuted, w),
        Ok(Verdict::Skip(w)) => (Status::Skipped, w),
        Err(e) => (Status::Refuted, format!("error: {e}")),
    };
    CheckResult {
        id: id.to_string(),
        scope: scope.into(),
        status,
        witness,
        runtime: start.elapsed(),
    }
}

/// First Schur coefficient where `got` and `want` differ.
pub(crate) fn sym_diff<C: Coeff>(got: &SymFun<C>, want: &SymFun<C>) -> Option<String> {
    let (g, w) = (got.to_schur(), want.to_schur());
    let d = g.sub(&w);
    let (lam, _) = d.terms().next()?;
    Some(format!("coefficient of s[{lam}] is {} but expected {}", g.coeff(lam), w.coeff(lam)))
}

/// First `s_λ ⊗ s_μ` multiplicity where `got` and `want` differ.
pub(crate) fn tensor_diff(got: &TensorExp, want: &TensorExp) -> Option<String> {
    if got.is_zero() && want.is_zero() {
        return None;
    }
    if got.n() != want.n() && !got.is_zero() && !want.is_zero() {
        return Some(format!("right degree {} but expected {}", got.n(), want.n()));
    }
    let d = if got.is_zero() { want.neg() } else { got.sub(want).ok()? };
    let (lam, mu, _) = d.terms().next()?;
    let m = |t: &TensorExp| t.coefficient_of(mu).coeff(lam);
    Some(format!(
        "multiplicity of s[{lam}] (x) s[{mu}] is {} but expected {}",
        m(got),
        m(want)
    ))
}

/// One planned check of a suite.
pub struct Check {
    pub id: String,
    pub scope: String,
    body: Box<dyn Fn() -> CheckResult + Send + Sync>,
}

impl Check {
    pub fn new(
        id: &str,
        scope: impl Into<String>,
        body: impl Fn() -> CheckResult + Send + Sync + 'static,
    ) -> Check {
        Check {
            id: id.to_string(),
            scope: scope.into(),
            body: Box::new(body),
        }
    }

    pub fn run(&self) -> CheckResult {
        (self.body)()
    }
}

pub const SUITES: &[&str] = &[
    "nabla",
    "hooks",
    "length",
    "delta",
    "reconstruction",
    "e-positivity",
    "specializations",
    "macdonald",
    "oracle",
];

/// Checks of `suite` (or every suite for `"all"`) with `n ≤ max_n`.
pub fn suite_checks(suite: &str, max_n: u32) -> Result<Vec<Check>> {
    if suite == "all" {
        let mut out = Vec::new();
        for s in SUITES {
            out.extend(suite_checks(s, max_n)?);
        }
        return Ok(out);
    }
    let corpus_n = max_n.min(6);
    let mut out = Vec::new();
    match suite {
        "nabla" => {
            if max_n >= 3 {
                out.push(Check::new("nabla_display", "n=3", check_nabla_display));
            }
            for n in 1..=corpus_n {
                out.push(Check::new("nabla_corpus", format!("n={n}"), move || check_nabla_corpus(n)));
            }
            for n in 2..=corpus_n {
                out.push(Check::new("nabla_dimensions", format!("n={n}"), move || check_nabla_dimensions(n)));
            }
        }
        "hooks" => {
            for n in 1..=max_n.min(7) {
                out.push(Check::new("hook_components", format!("n={n}"), move || check_hook_components(n)));
            }
            for n in 1..=max_n.min(7) {
                out.push(Check::new("hook_product", format!("n={n}"), move || check_hook_product(n)));
            }
            for n in 1..=corpus_n {
                out.push(Check::new("hook_hook_conjecture", format!("n={n}"), move || {
                    check_hook_hook_conjecture(n)
                }));
            }
            if max_n >= 5 {
                out.push(Check::new("hook_hook_example", "n=5", check_hook_hook_example));
            }
            for n in 1..=corpus_n {
                out.push(Check::new("hook_specialization", format!("n={n}"), move || {
                    check_hook_specialization(n)
                }));
            }
            if max_n >= 6 {
                out.push(Check::new("hook_reconstruction", "n=6", check_hook_reconstruction));
            }
        }
        "length" => {
            for n in 1..=corpus_n {
                out.push(Check::new("length_conjecture", format!("n={n}"), move || check_length_conjecture(n)));
            }
            for n in 1..=corpus_n {
                out.push(Check::new("length_components", format!("n={n}"), move || check_length_components(n)));
            }
            for n in 2..=corpus_n {
                out.push(Check::new("two_column_mu", format!("n={n}"), move || check_two_column_mu(n)));
            }
            for n in 3..=corpus_n {
                out.push(Check::new("reduced_length_formulas", format!("n={n}"), move || {
                    check_reduced_length_formulas(n)
                }));
            }
            for n in 2..=corpus_n {
                out.push(Check::new("delta_implies_length", format!("n={n}"), move || {
                    check_delta_implies_length(n)
                }));
            }
        }
        "delta" => {
            for n in 1..=corpus_n {
                for b in 0..n {
                    out.push(Check::new("delta_by_skewing", format!("n={n},b={b}"), move || {
                        check_delta_by_skewing(n, b)
                    }));
                }
            }
            for n in 1..=corpus_n {
                out.push(Check::new("delta_e1_formula", format!("n={n}"), move || check_delta_e1_formula(n)));
            }
            for n in 1..=corpus_n {
                out.push(Check::new("delta_positivity", format!("n={n}"), move || check_delta_positivity(n)));
            }
            for n in 1..=corpus_n {
                out.push(Check::new("delta_hooks_symmetry", format!("n={n}"), move || {
                    check_delta_hooks_symmetry(n)
                }));
            }
            for n in 1..=corpus_n {
                out.push(Check::new("qt_inverse_special", format!("n={n}"), move || check_qt_inverse(n)));
            }
        }
        "reconstruction" => {
            for n in 1..=max_n.min(7) {
                out.push(Check::new("reconstruct_alternant", format!("n={n}"), move || {
                    reconstruct_alternant(n).1
                }));
            }
        }
        "e-positivity" => {
            for n in 1..=corpus_n {
                out.push(Check::new("e_positivity", format!("n={n}"), move || check_e_positivity(n)));
            }
        }
        "specializations" => {
            for n in 1..=corpus_n {
                out.push(Check::new("specializations", format!("n={n}"), move || check_specializations(n)));
            }
            out.push(Check::new("dimension_polynomials", "n=2..4", check_dimension_polynomials));
            out.push(Check::new("catalan_polynomials", "n=0..8", || check_catalan_polynomials(8)));
        }
        "macdonald" => {
            for n in 1..=max_n.min(8) {
                out.push(Check::new("macdonald_sanity", format!("n={n}"), move || check_macdonald_sanity(n)));
            }
        }
        "oracle" => {
            for n in 1..=max_n.min(3) {
                out.push(Check::new("oracle", format!("n={n},k=1"), move || check_oracle(n, 1)));
            }
            for n in 2..=max_n.min(3) {
                out.push(Check::new("oracle", format!("n={n},k=2"), move || check_oracle(n, 2)));
            }
        }
        other => {
            return Err(Error::Unsupported(format!(
                "unknown suite {other:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    }
    Ok(out)
}

/// Runs `checks` on up to `jobs` threads; results keep the input order.
pub fn run_checks(checks: &[Check], jobs: usize) -> Vec<CheckResult> {
    let jobs = jobs.clamp(1, checks.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<CheckResult>>> = Mutex::new(vec![None; checks.len()]);
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(c) = checks.get(i) else { break };
                let r = c.run();
                slots.lock().unwrap()[i] = Some(r);
            });
        }
    });
    slots.into_inner().unwrap().into_iter().map(|r| r.expect("every check ran")).collect()
}

pub fn run_suite(suite: &str, max_n: u32, jobs: usize) -> Result<Vec<CheckResult>> {
    Ok(run_checks(&suite_checks(suite, max_n)?, jobs))
}

fn counts(results: &[CheckResult]) -> (usize, usize, usize) {
    let c = |s| results.iter().filter(|r| r.status == s).count();
    (c(Status::Verified), c(Status::Refuted), c(Status::Skipped))
}

/// One line per check and a closing tally; timings only on request so the
/// default output is byte-stable.
pub fn render_text(results: &[CheckResult], timings: bool) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!("{:<21} {:<24} {:<9} {}", r.status.label(), r.id, r.scope, r.witness));
        if timings {
            out.push_str(&format!(" [{} ms]", r.runtime.as_millis()));
        }
        out.push('\n');
    }
    let (v, f, s) = counts(results);
    out.push_str(&format!("{v} verified, {f} refuted, {s} skipped\n"));
    out
}

pub fn render_json(results: &[CheckResult], timings: bool) -> serde_json::Value {
    let (v, f, s) = counts(results);
    let checks: Vec<serde_json::Value> = results
        .iter()
        .map(|r| {
            let mut j = json!({
                "id": r.id,
                "scope": r.scope,
                "status": r.status,
                "witness": r.witness,
            });
            if timings {
                j["runtime_ms"] = json!(r.runtime.as_millis() as u64);
            }
            j
        })
        .collect();
    json!({
        "format_version": FORMAT_VERSION,
        "summary": {"verified": v, "refuted": f, "skipped": s},
        "checks": checks,
    })
}
