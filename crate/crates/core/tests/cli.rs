//! End-to-end checks of the `amicable` binary: exit codes, wire formats,
//! stdout/stderr separation, and file output.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amicable"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn verify_pair_negative_answer_is_a_successful_run() {
    let out = run(&["verify-pair", "2", "3", "4", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not amicable"));
}

#[test]
fn verify_pair_reports_certificates() {
    let out = run(&["verify-pair", "5", "5", "5", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("s1=15 s2=15"));
    assert!(text.contains("equable-trivial"));

    let out = run(&["verify-pair", "4", "4", "4", "4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["command"], "verify-pair");
    assert_eq!(doc["amicable"], true);
    assert_eq!(doc["hits"][0]["s1"], 0);
    assert_eq!(doc["hits"][0]["rectangle_degenerate"], true);
}

#[test]
fn rhombus_csv_is_exact() {
    let out = run(&["search-rhombus", "--bound", "100", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "x,a,s1,s2\n4,4,0,0\n5,5,15,15\n");
}

#[test]
fn json_reports_carry_the_documented_top_level_fields() {
    let out = run(&["search-rhombus", "--bound", "100", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    for key in ["command", "bound", "complete", "hits", "version"] {
        assert!(doc.get(key).is_some(), "missing top-level key {key}");
    }
    assert_eq!(doc["command"], "search-rhombus");
    assert_eq!(doc["bound"], 100);
    assert_eq!(doc["complete"], false);
    assert_eq!(doc["hits"].as_array().map(Vec::len), Some(2));
}

#[test]
fn rectangle_report_carries_both_totals() {
    let out = run(&["search-rectangles", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["totals"]["nontrivial"], 5);
    assert_eq!(doc["totals"]["with_trivial"], 7);
    assert_eq!(doc["complete"], true);
    assert_eq!(doc["equables"].as_array().map(Vec::len), Some(2));
}

#[test]
fn embed_pair_emits_verified_vertices() {
    let out = run(&["embed-pair", "5", "5", "5", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let hit = &doc["hits"][0];
    let embeddings = hit["embeddings"].as_array().expect("two embeddings");
    assert_eq!(embeddings.len(), 2);
    for e in embeddings {
        assert_eq!(e["verified"], true);
        assert_eq!(e["vertices"].as_array().map(Vec::len), Some(4));
        assert_eq!(e["target_area2"], 40);
    }
}

#[test]
fn elliptic_maps_the_solution_and_reports_non_solutions_gently() {
    let out = run(&["elliptic", "4", "1", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["hits"][0]["x"], 1152);
    assert_eq!(doc["hits"][0]["y"], 41472);
    assert_eq!(doc["hits"][0]["q"], 191102976);
    assert_eq!(doc["hits"][0]["on_curve"], true);

    let out = run(&["elliptic", "3", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("no curve point"));
}

#[test]
fn cross_check_passes_and_bad_bounds_are_usage_errors() {
    let out = run(&["cross-check", "--bound", "100"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("result: PASS"));

    // a bound below the full solution set still passes on the prefix
    let out = run(&["cross-check", "--bound", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("oracle hits: (4,4)\n"));
    assert!(text.contains("result: PASS"));

    let out = run(&["cross-check", "--bound", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn solve_star_json_has_exactly_one_record() {
    let out = run(&["solve-star", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let hits = doc["hits"].as_array().expect("hits array");
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0]["kappa"], 4);
    assert_eq!(hits[0]["m"], 1);
    assert_eq!(hits[0]["n"], 1);
    assert_eq!(hits[0]["x"], 4);

    let out = run(&["solve-starstar", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let hits = doc["hits"].as_array().expect("hits array");
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0]["k"], 5);
    assert_eq!(hits[0]["mu"], 1);
    assert_eq!(hits[0]["s"], 15);
}

#[test]
fn malformed_flags_exit_2_with_usage_on_stderr() {
    let out = run(&["search-rhombus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--bound"));

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["search-rhombus", "--bound", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["solve-star", "--jobs", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn file_output_matches_stdout_bytes() {
    let dir = std::env::temp_dir().join("amicable-cli-test");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("rhombus.csv");

    let direct = run(&["search-rhombus", "--bound", "100", "--format", "csv"]);
    let to_file = run(&[
        "search-rhombus",
        "--bound",
        "100",
        "--format",
        "csv",
        "--output",
        path.to_str().expect("utf-8 path"),
    ]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());

    let written = std::fs::read(&path).expect("file written");
    assert_eq!(written, direct.stdout);
    assert!(written.ends_with(b"\n"));
    assert!(!written.contains(&b'\r'));
    std::fs::remove_file(&path).ok();
}

#[test]
fn timing_goes_to_stderr_not_stdout() {
    let out = run(&["solve-star"]);
    assert!(!stdout(&out).contains("elapsed"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("elapsed"));
}
