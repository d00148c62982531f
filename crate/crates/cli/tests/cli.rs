//! Behavior tests for the binary: determinism of machine output, file
//! round-trips, and error reporting.

use std::process::{Command, Output};

use antiramsey::format::coloring_from_json;
use antiramsey_core::graph::build_graph;
use antiramsey_core::rainbow::count_rainbow_copies;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antiramsey"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn identical_seeds_give_byte_identical_output() {
    let args = [
        "--json", "search", "--graph", "K3", "--n", "10", "--colors", "3", "--seed", "7",
        "--restarts", "2", "--iters", "500",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let args = [
        "--json", "mc", "--graph", "K3", "--n", "15", "--colors", "3", "--seed", "3",
        "--samples", "20",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn brute_witness_roundtrips_and_recounts() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("witness.json");
    let out = run(&[
        "--json", "brute", "--graph", "K3", "--n", "4", "--colors", "3", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rb = value["rb"].as_u64().unwrap();
    assert_eq!(rb, 4);

    let witness = coloring_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let k3 = build_graph("K3").unwrap();
    assert_eq!(count_rainbow_copies(&k3, &witness).unwrap(), rb);
}

#[test]
fn blowup_output_feeds_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b25.json");
    let out = run(&["blowup", "--base", "fig-k5", "--n", "25", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let counted = run(&[
        "--json", "count", "--graph", "K4-e", "--coloring", path.to_str().unwrap(),
    ]);
    assert!(counted.status.success());
    let value: serde_json::Value = serde_json::from_slice(&counted.stdout).unwrap();
    assert_eq!(value["rainbow"].as_u64().unwrap(), 6300);
}

#[test]
fn table_csv_has_pinned_columns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = run(&[
        "table", "--graph", "K3", "--colors", "3", "--n-min", "3", "--n-max", "4", "--csv",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,r,graph,rb,exact,fraction_decimal,fraction_exact,baseline_exact"
    );
    assert_eq!(lines.next().unwrap(), "3,3,K3,1,true,1.000000000,1,2/9");
    assert_eq!(lines.next().unwrap(), "4,3,K3,4,true,1.000000000,1,2/9");
    // Identical invocations produce byte-identical files.
    let again = dir.path().join("again.csv");
    run(&[
        "table", "--graph", "K3", "--colors", "3", "--n-min", "3", "--n-max", "4", "--csv",
        again.to_str().unwrap(),
    ]);
    assert_eq!(text, std::fs::read_to_string(&again).unwrap());
}

#[test]
fn baseline_matches_spec_shape() {
    let out = run(&["baseline", "--edges", "3", "--colors", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), "2/9 ≈ 0.2222222222");
}

#[test]
fn errors_exit_nonzero_with_diagnostics() {
    // Unknown graph family.
    let out = run(&["count", "--graph", "Q3", "--coloring", "fig-k5"]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());

    // Host smaller than the pattern.
    let out = run(&["count", "--graph", "K9", "--coloring", "fig-k5"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    // Malformed coloring file.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"n":2,"r":1,"colors":[[0,1,1]]}"#).unwrap();
    let out = run(&["count", "--graph", "P1", "--coloring", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("color"));

    // Budget refusal names the budget.
    let out = run(&["brute", "--graph", "K3", "--n", "8", "--colors", "3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));

    // Unknown subcommand is a usage error.
    let out = run(&["frobnicate"]);
    assert!(!out.status.success());
}

#[test]
fn warm_start_accepts_builtins() {
    let out = run(&[
        "--json", "search", "--graph", "K4-e", "--n", "25", "--colors", "5", "--seed", "1",
        "--restarts", "1", "--iters", "0", "--warm", "fig-k5",
    ]);
    assert!(!out.status.success(), "warm start with mismatched n must fail");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b25.json");
    run(&["blowup", "--base", "fig-k5", "--n", "25", "--out", path.to_str().unwrap()]);
    let out = run(&[
        "--json", "search", "--graph", "K4-e", "--n", "25", "--colors", "5", "--seed", "1",
        "--restarts", "1", "--iters", "0", "--warm", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // Zero iterations from the blow-up witness keeps its count.
    assert_eq!(value["rb"].as_u64().unwrap(), 6300);
}
