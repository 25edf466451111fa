//! End-to-end checks of the command-line interface: the documented output
//! shapes for each subcommand and the exit-code contract (0 success, 1 usage,
//! 2 computation gave up).

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wlp"))
}

fn fixture(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn stdout_json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(out));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const LATTE_3SIMPLEX2: &str = "3 3\n3 -1 -1\n0 1 0\n0 0 1\n";
const DELTA2_JSON: &str = r#"{"A": [[1, 1, 1]], "b": [1]}"#;

#[test]
fn count_reports_exact_value() {
    let p = fixture("cli_count.hrep", LATTE_3SIMPLEX2);
    let out = bin().args(["count", p.to_str().unwrap()]).output().unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["count"], 10);
    assert!(v["nodes"].is_u64());
}

#[test]
fn count_runs_with_multiple_jobs() {
    let p = fixture("cli_count_jobs.hrep", LATTE_3SIMPLEX2);
    let out = bin()
        .args(["--jobs", "2", "count", p.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(stdout_json(&out)["count"], 10);
}

#[test]
fn ehrhart_emits_exact_coefficients() {
    let p = fixture("cli_ehrhart.json", DELTA2_JSON);
    let out = bin().args(["ehrhart", p.to_str().unwrap()]).output().unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["period"], 1);
    assert_eq!(v["coeffs"], serde_json::json!([["1"], ["3/2"], ["1/2"]]));
}

#[test]
fn integrate_prints_exact_and_decimal() {
    let p = fixture("cli_integrate.json", DELTA2_JSON);
    let w = fixture(
        "cli_integrand.json",
        r#"{"kind": "polynomial", "vars": 3, "terms": [{"coeff": "1", "exponents": [1, 1, 0]}]}"#,
    );
    let out = bin()
        .args(["integrate", p.to_str().unwrap(), w.to_str().unwrap()])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["integral"], "1/24");
    assert_eq!(v["integral_dec"], "0.0416666667");
}

#[test]
fn lift_round_trips_through_count() {
    let p = fixture("cli_lift_p.json", r#"{"A": [[1, 1]], "b": [2]}"#);
    let w = fixture(
        "cli_lift_w.json",
        r#"{"kind": "family", "C": [[1, 1]], "D": [[1, 0]], "e": [0]}"#,
    );
    let out = bin()
        .args(["lift", p.to_str().unwrap(), w.to_str().unwrap()])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["n_vars"], 2);
    assert_eq!(v["m_vars"], 2);

    // The lifted polytope's plain count is the weighted sum 1 + 2 + 3.
    let lifted = fixture("cli_lifted.json", &v.to_string());
    let out = bin().args(["count", lifted.to_str().unwrap()]).output().unwrap();
    assert_eq!(stdout_json(&out)["count"], 6);
}

#[test]
fn maximize_closes_the_sandwich() {
    let p = fixture("cli_max_p.json", r#"{"A": [[1, 1]], "b": [2]}"#);
    let w = fixture(
        "cli_max_w.json",
        r#"{"kind": "family", "C": [[1, 1]], "D": [[1, 0]], "e": [0]}"#,
    );
    let out = bin()
        .args(["maximize", p.to_str().unwrap(), w.to_str().unwrap()])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["maximum"], 3);
    let steps = v["steps"].as_array().unwrap();
    let last = steps.last().unwrap();
    assert_eq!(last["lower"], last["upper"]);
}

#[test]
fn app_subcommands_report_known_values() {
    let out = bin().args(["app", "cores", "--a", "3", "--b", "4"]).output().unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["count"], 5);
    assert_eq!(v["average"], "2");

    let out = bin()
        .args(["app", "rsk", "--mu", "1,1", "--nu", "1,1"])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["lhs"], 2);
    assert_eq!(v["rhs"], 2);
    assert_eq!(v["lifted"], 2);
    assert_eq!(v["ok"], true);

    let out = bin()
        .args(["app", "semigroups", "--m", "3", "--gmax", "50", "--csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "m,g,count,total_weight,average,average_over_g2,average_dec,average_over_g2_dec"
    );
    assert_eq!(lines.count(), 50);
}

#[test]
fn exit_codes_are_distinct_and_meaningful() {
    // 0: success.
    let p = fixture("cli_exit0.hrep", LATTE_3SIMPLEX2);
    let ok = bin().args(["count", p.to_str().unwrap()]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));

    // 1: usage problems. Missing file, malformed file, arity mismatch.
    let missing = bin().args(["count", "/nonexistent/p.hrep"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(1));

    let bad = fixture("cli_exit_bad.hrep", "2 3\n1 0\n");
    let malformed = bin().args(["count", bad.to_str().unwrap()]).output().unwrap();
    assert_eq!(malformed.status.code(), Some(1));
    assert!(stderr(&malformed).contains("line"), "diagnostic names the line");

    let poly = fixture("cli_exit_p.json", DELTA2_JSON);
    let narrow = fixture(
        "cli_exit_w.json",
        r#"{"kind": "polynomial", "vars": 2, "terms": [{"coeff": "1", "exponents": [1, 0]}]}"#,
    );
    let mismatch = bin()
        .args(["integrate", poly.to_str().unwrap(), narrow.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(mismatch.status.code(), Some(1));

    // 2: the computation itself gave up (node budget exhausted).
    let starved = bin()
        .args(["--budget", "3", "count", p.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(starved.status.code(), Some(2));
    assert!(stderr(&starved).to_lowercase().contains("budget"));

    // Bad flags are usage errors too; --help is not.
    let flags = bin().args(["count"]).output().unwrap();
    assert_eq!(flags.status.code(), Some(1));
    let help = bin().args(["--help"]).output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
