use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dharmonic::corpus::{self, alternant, e_table, load_table, nabla_e, render_e, CacheStore};
use dharmonic::macdonald::{delta_e, macdonald_basis};
use dharmonic::plethysm::pleth_q_minus_eps_u;
use dharmonic::symfun::e;
use dharmonic::tensor::FORMAT_VERSION;
use dharmonic::verify::{render_json, render_text, run_checks, suite_checks, SUITES};
use dharmonic::{Coeff, MPoly, SymFun, TensorExp};

#[derive(Parser)]
#[command(name = "dharmonic", version, about = "Exact diagonal harmonics characters, Macdonald operators and plethysm")]
struct Cli {
    /// Cache directory; overrides $DHARMONIC_CACHE.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an expansion.
    Compute {
        target: Target,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include per-check runtimes (output is then no longer byte-stable).
        #[arg(long)]
        timings: bool,
    },
    /// Print a corpus table or `nabla-e<n>`.
    Export {
        id: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Inspect or clear the on-disk cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    NablaEn,
    DeltaEn,
    Macdonald,
    HookGen,
    EpsilonK,
    FTable,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    List,
    Clear,
}

const MAX_OPERATOR_N: u32 = 7;
const MAX_MACDONALD_N: u32 = 8;
const MAX_CORPUS_N: u32 = 6;

fn guard(n: u32, max: u32, what: &str) -> Result<()> {
    if n > max {
        bail!("{what} is limited to n ≤ {max} (got n = {n})");
    }
    Ok(())
}

fn sym_json<C: Coeff>(f: &SymFun<C>) -> Value {
    Value::Array(
        f.to_schur()
            .terms()
            .map(|(mu, c)| json!({"mu": mu, "coefficient": c.to_string()}))
            .collect(),
    )
}

fn envelope(target: &str, n: u32, body: Value) -> Value {
    json!({"format_version": FORMAT_VERSION, "target": target, "n": n, "value": body})
}

fn out(text: &str) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(format: Format, text: String, json: impl FnOnce() -> Result<Value>) -> Result<()> {
    match format {
        Format::Text => out(&format!("{text}\n"))?,
        Format::Json => out(&format!("{}\n", serde_json::to_string_pretty(&json()?)?))?,
    }
    Ok(())
}

fn compute(target: Target, n: u32, k: Option<u32>, format: Format) -> Result<()> {
    match target {
        Target::NablaEn => {
            guard(n, MAX_OPERATOR_N, "nabla-en")?;
            let f = nabla_e(n)?;
            emit(format, f.to_string(), || Ok(envelope("nabla-en", n, sym_json(&f))))
        }
        Target::DeltaEn => {
            guard(n, MAX_OPERATOR_N, "delta-en")?;
            let k = k.context("delta-en needs --k")?;
            let en = e(n).map_coeffs(|c| MPoly::constant(c.clone()));
            let f = delta_e(k, &en, true)?;
            emit(format, f.to_string(), || {
                let mut v = envelope("delta-en", n, sym_json(&f));
                v["k"] = json!(k);
                Ok(v)
            })
        }
        Target::Macdonald => {
            guard(n, MAX_MACDONALD_N, "macdonald")?;
            let basis = macdonald_basis(n)?;
            let text: Vec<String> = basis.iter().map(|(mu, h)| format!("H[{mu}] = {h}")).collect();
            emit(format, text.join("\n"), || {
                let blocks: Vec<Value> = basis.iter().map(|(mu, h)| json!({"mu": mu, "schur": sym_json(h)})).collect();
                Ok(envelope("macdonald", n, Value::Array(blocks)))
            })
        }
        Target::HookGen => {
            guard(n, MAX_OPERATOR_N, "hook-gen")?;
            let g = pleth_q_minus_eps_u(&alternant(n)?);
            emit(format, g.to_string(), || Ok(envelope("hook-gen", n, json!(g.to_string()))))
        }
        Target::EpsilonK => {
            guard(n, MAX_CORPUS_N, "epsilon-k")?;
            let k = k.context("epsilon-k needs --k")?;
            if k >= n.max(1) {
                bail!("epsilon-k needs k < n");
            }
            let eps = e_table(n)?.reduced_length(k);
            emit(format, eps.to_string(), || {
                let mut v = serde_json::to_value(eps.to_json(&format!("eps{n}_{k}")))?;
                v["k"] = json!(k);
                Ok(v)
            })
        }
        Target::FTable => {
            guard(n, MAX_CORPUS_N, "f-table")?;
            let d = e_table(n)?.at_one_plus_q().to_e_format();
            emit(format, render_e(&d), || {
                let blocks: Vec<Value> = d.iter().map(|(nu, f)| json!({"nu": nu, "schur": sym_json(f)})).collect();
                Ok(envelope("f-table", n, Value::Array(blocks)))
            })
        }
    }
}

fn export(id: &str, format: Format) -> Result<()> {
    if let Some(n) = id.strip_prefix("nabla-e").and_then(|s| s.parse::<u32>().ok()) {
        guard(n, MAX_OPERATOR_N, "nabla-e export")?;
        let f = nabla_e(n)?;
        return emit(format, f.to_string(), || {
            let t = TensorExp::lift_two_params(&f)?;
            Ok(serde_json::to_value(t.to_json(id))?)
        });
    }
    let table = load_table(id)?;
    let text = table.render()?;
    emit(format, text, || Ok(table.to_json()?))
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(dir) = &cli.cache_dir {
        corpus::set_default_cache(Some(CacheStore::new(dir)));
    }
    match cli.command {
        Command::Compute { target, n, k, format } => compute(target, n, k, format)?,
        Command::Verify {
            suite,
            max_n,
            json,
            jobs,
            timings,
        } => {
            if suite != "all" && !SUITES.contains(&suite.as_str()) {
                bail!("unknown suite {suite:?}; expected one of {} or all", SUITES.join(", "));
            }
            guard(max_n, MAX_MACDONALD_N, "verify")?;
            let results = run_checks(&suite_checks(&suite, max_n)?, jobs);
            if json {
                out(&format!("{}\n", serde_json::to_string_pretty(&render_json(&results, timings))?))?;
            } else {
                out(&render_text(&results, timings))?;
            }
            return Ok(!results.iter().any(|r| r.failed()));
        }
        Command::Export { id, format } => export(&id, format)?,
        Command::Cache { action } => {
            let store = corpus::default_cache().context("no cache directory: pass --cache-dir or set DHARMONIC_CACHE")?;
            match action {
                CacheAction::List => {
                    for (kind, n) in store.entries()? {
                        println!("{kind} {n} {}", store.path(&kind, n).display());
                    }
                }
                CacheAction::Clear => println!("removed {} entries", store.clear()?),
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
