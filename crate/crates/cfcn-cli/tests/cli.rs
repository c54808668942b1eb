//! End-to-end checks of the `cfcn` binary: formats, options, exit codes.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn cfcn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfcn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("cfcn-cli-{}-{name}", std::process::id()))
}

fn write_tmp(name: &str, content: &str) -> PathBuf {
    let path = tmp(name);
    fs::write(&path, content).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

const K3: &str = "0 1\n0 2\n1 2\n";

#[test]
fn gen_path_five_is_exactly_four_lines() {
    let out = cfcn(&["gen", "path", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0 1\n1 2\n2 3\n3 4\n");
}

#[test]
fn gen_emits_header_for_isolated_vertices() {
    let out = cfcn(&["gen", "complete", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n 1\n");
}

#[test]
fn gen_rejects_bad_specs() {
    for spec in [
        &["gen", "frobnicate", "3"][..],
        &["gen", "cycle", "2"],
        &["gen", "gnp", "10", "1.5", "3"],
        &["gen", "path"],
        &["gen", "path", "5", "7"],
    ] {
        let out = cfcn(spec);
        assert_eq!(code(&out), 2, "{spec:?}: {}", stderr(&out));
    }
}

#[test]
fn color_then_verify_round_trips() {
    let graph = tmp("roundtrip-graph");
    let doc = tmp("roundtrip-doc");
    let out = cfcn(&[
        "gen",
        "gnp",
        "40",
        "0.1",
        "9",
        "--out",
        graph.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = cfcn(&[
        "color",
        graph.to_str().unwrap(),
        "--seed",
        "3",
        "--out",
        doc.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let out = cfcn(&["verify", graph.to_str().unwrap(), doc.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("valid"));
}

#[test]
fn verify_accepts_a_hand_written_valid_coloring() {
    let graph = write_tmp("k3-graph", K3);
    let doc = write_tmp("k3-good", r#"{"n":3,"colors":[0,0,1]}"#);
    let out = cfcn(&["verify", graph.to_str().unwrap(), doc.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
}

#[test]
fn verify_rejects_a_violating_coloring_with_exit_one() {
    let graph = write_tmp("k3-graph-b", K3);
    let doc = write_tmp("k3-bad", r#"{"n":3,"colors":[0,0,0]}"#);
    let out = cfcn(&["verify", graph.to_str().unwrap(), doc.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("vertex 0"), "{}", stderr(&out));
}

#[test]
fn verify_distinguishes_size_mismatch_from_violation() {
    let graph = write_tmp("k3-graph-c", K3);
    let doc = write_tmp("k3-short", r#"{"n":2,"colors":[0,1]}"#);
    let out = cfcn(&["verify", graph.to_str().unwrap(), doc.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_rejects_malformed_documents() {
    let graph = write_tmp("k3-graph-d", K3);
    let doc = write_tmp("not-json", "this is not json");
    let out = cfcn(&["verify", graph.to_str().unwrap(), doc.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let doc = write_tmp("inconsistent", r#"{"n":3,"colors":[0,1]}"#);
    let out = cfcn(&["verify", graph.to_str().unwrap(), doc.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn exact_on_k4_prints_two() {
    let graph = write_tmp("k4", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = cfcn(&["exact", graph.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn exact_reports_exceeding_the_cap() {
    let graph = write_tmp("k4-capped", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = cfcn(&["exact", graph.to_str().unwrap(), "--max-colors", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("exceeds max"));
}

#[test]
fn exact_refuses_large_graphs() {
    let graph = tmp("p13");
    let out = cfcn(&["gen", "path", "13", "--out", graph.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = cfcn(&["exact", graph.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("13"), "{}", stderr(&out));
}

#[test]
fn parse_errors_exit_two_and_name_the_line() {
    let graph = write_tmp("loopy", "0 1\n2 2\n");
    let out = cfcn(&["color", graph.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let out = cfcn(&["color", tmp("does-not-exist").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn bench_with_no_sweep_is_a_bare_header() {
    let out = cfcn(&["bench"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("kind,n,p,seed,delta,k_target"));
    assert_eq!(lines.next(), None);
}

#[test]
fn bench_grid_sweep_emits_one_row_per_cell_and_seed() {
    let out = cfcn(&[
        "bench",
        "--gnp-grid",
        "n=200;p=0.02,0.05,0.1",
        "--seeds",
        "1,2,3",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    for row in rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 13, "{row}");
        assert_eq!(fields[0], "gnp");
        assert_eq!(fields[1], "200");
        assert!(!fields[12].is_empty(), "ratio missing: {row}");
    }
}

#[test]
fn bench_family_rows_tie_ratio_to_total_colors() {
    // Paths have Δ = 2, so (log2 Δ)² = 1 and the ratio equals total_colors.
    let out = cfcn(&["bench", "--family", "path", "--sizes", "50", "--seeds", "1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    let row = text.lines().nth(1).expect("one row");
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields[0], "path");
    assert_eq!(fields[2], "", "paths carry no p");
    let total: f64 = fields[6].parse().unwrap();
    let ratio: f64 = fields[12].parse().unwrap();
    assert_eq!(total, ratio);
}

#[test]
fn bench_rejects_malformed_sweeps() {
    for args in [
        &["bench", "--gnp-grid", "p=0.1"][..],
        &["bench", "--gnp-grid", "n=50;p=1.5"],
        &["bench", "--gnp-grid", "nonsense"],
        &["bench", "--deltas", "4,x"],
        &["bench", "--family", "moebius", "--sizes", "10"],
        &["bench", "--family", "path"],
    ] {
        let out = cfcn(args);
        assert_eq!(code(&out), 2, "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn bench_seeds_default_to_one() {
    let out = cfcn(&["bench", "--family", "star", "--sizes", "5,6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    for row in text.lines().skip(1) {
        assert_eq!(row.split(',').nth(3), Some("1"));
    }
}
