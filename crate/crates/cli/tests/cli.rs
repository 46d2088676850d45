use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn dharmonic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dharmonic"))
        .args(args)
        .env_remove("DHARMONIC_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dharmonic(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dharmonic-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn nabla_e3_text() {
    assert_eq!(
        stdout(&["compute", "nabla-en", "--n", "3"]).trim(),
        "s[3] + (q^2 + q*t + t^2 + q + t)*s[2,1] + (q^3 + q^2*t + q*t^2 + t^3 + q*t)*s[1,1,1]"
    );
}

#[test]
fn nabla_json_envelope() {
    let v: Value = serde_json::from_str(&stdout(&["compute", "nabla-en", "--n", "2", "--format", "json"])).unwrap();
    assert_eq!(v["format_version"], "dharmonic-1");
    assert_eq!(v["target"], "nabla-en");
    assert_eq!(v["value"][1]["mu"], serde_json::json!([1, 1]));
    assert_eq!(v["value"][1]["coefficient"], "q + t");
}

#[test]
fn hook_generating_polynomial() {
    assert_eq!(
        stdout(&["compute", "hook-gen", "--n", "4"]).trim(),
        "q^6 + q^5*u + q^4*u + q^3*u^2 + q^3*u + q^2*u^2 + q*u^2 + u^3"
    );
}

#[test]
fn macdonald_degree_two() {
    assert_eq!(
        stdout(&["compute", "macdonald", "--n", "2"]),
        "H[2] = s[2] + q*s[1,1]\nH[1,1] = s[2] + t*s[1,1]\n"
    );
}

#[test]
fn delta_en_top_index_is_nabla() {
    assert_eq!(
        stdout(&["compute", "delta-en", "--n", "3", "--k", "2"]),
        stdout(&["compute", "nabla-en", "--n", "3"])
    );
}

#[test]
fn epsilon_and_f_table() {
    let eps = stdout(&["compute", "epsilon-k", "--n", "4", "--k", "3"]);
    assert!(eps.contains("(x)"), "{eps}");
    let f4 = stdout(&["compute", "f-table", "--n", "4"]);
    assert!(f4.trim_end().ends_with("1 (x) e[1,1,1,1]"), "{f4}");
    assert_eq!(stdout(&["export", "F4"]), f4);
}

#[test]
fn export_e5_has_seven_blocks() {
    let v: Value = serde_json::from_str(&stdout(&["export", "E5", "--format", "json"])).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 7);
}

#[test]
fn export_nabla_matches_compute() {
    assert_eq!(stdout(&["export", "nabla-e3"]), stdout(&["compute", "nabla-en", "--n", "3"]));
    let v: Value = serde_json::from_str(&stdout(&["export", "nabla-e2", "--format", "json"])).unwrap();
    assert_eq!(v["id"], "nabla-e2");
    assert_eq!(v["blocks"].as_array().unwrap().len(), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "nabla", "--max-n", "3", "--json"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["compute", "nabla-en", "--n", "4", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn verify_reports_and_exits_zero() {
    let text = stdout(&["verify", "--suite", "hooks", "--max-n", "4", "--jobs", "2"]);
    assert!(text.contains(" 0 refuted"), "{text}");
    let v: Value = serde_json::from_str(&stdout(&["verify", "--suite", "oracle", "--max-n", "2", "--json"])).unwrap();
    assert!(v.to_string().contains("oracle"));
}

#[test]
fn errors_exit_two() {
    for args in [
        &["verify", "--suite", "bogus"][..],
        &["compute", "nabla-en", "--n", "3", "--bogus"],
        &["compute", "nabla-en", "--n", "9"],
        &["compute", "delta-en", "--n", "3"],
        &["export", "E9"],
        &["cache", "list"],
    ] {
        let out = dharmonic(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn cache_list_and_clear() {
    let dir = scratch("cache");
    let d = dir.to_str().unwrap();
    assert_eq!(stdout(&["--cache-dir", d, "cache", "list"]), "");
    let first = stdout(&["--cache-dir", d, "compute", "nabla-en", "--n", "3"]);
    let listed = stdout(&["--cache-dir", d, "cache", "list"]);
    assert!(listed.lines().any(|l| l.starts_with("nabla-e 3 ")), "{listed}");
    assert_eq!(stdout(&["--cache-dir", d, "compute", "nabla-en", "--n", "3"]), first);
    let cleared = stdout(&["--cache-dir", d, "cache", "clear"]);
    assert!(cleared.starts_with("removed ") && !cleared.starts_with("removed 0 "), "{cleared}");
    assert_eq!(stdout(&["--cache-dir", d, "cache", "list"]), "");
    let _ = std::fs::remove_dir_all(&dir);
}
