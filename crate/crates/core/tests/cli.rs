use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invdecomp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest", "--seed", "42", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 11);
}

#[test]
fn exchange_example_reports_both_factors() {
    let out = run(&["exchange", data("exchange_split.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["first"]["algebra"], "(15, 4)");
    assert_eq!(report["second"]["algebra"], "(5t, 36)");
    assert_eq!(report["first"]["split"], true);
    assert_eq!(report["second"]["split"], true);
}

#[test]
fn malformed_scalar_is_a_usage_error() {
    let out = run(&["exchange", data("bad_scalar.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let report = json(&out);
    let err = report["error"].as_str().unwrap();
    assert!(err.contains("first.a") && err.contains("column 3"), "{err}");
}

#[test]
fn malformed_json_reports_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\n  \"tower\": 1,\n  \"squares\": [\"1\", \n}").unwrap();
    let out = run(&["residue", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].as_str().unwrap().contains("line 4"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["residue"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    let q = data("q_t1t2.json");
    assert_eq!(run(&["gauge-check", q.to_str().unwrap(), "--field", "fp:9"]).status.code(), Some(2));
    assert_eq!(run(&["gauge-check", q.to_str().unwrap(), "--field", "fp:2"]).status.code(), Some(2));
}

#[test]
fn contradiction_branch_is_reported() {
    let out = run(&["normalize", data("contradiction.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["outcome"], "contradiction");
}

#[test]
fn every_command_passes_on_its_example() {
    let s = data("s_adjoint5.json");
    let q = data("q_t1t2.json");
    for args in [
        vec!["gauge-check", q.to_str().unwrap()],
        vec!["gauge-check", q.to_str().unwrap(), "--field", "fp:7"],
        vec!["residue", q.to_str().unwrap()],
        vec!["factorize", s.to_str().unwrap()],
        vec!["descend-t", s.to_str().unwrap()],
        vec!["descend-q", s.to_str().unwrap()],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn reports_are_byte_stable() {
    let s = data("s_adjoint5.json");
    let dir = tempfile::tempdir().unwrap();
    let mut bytes = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("report{k}.json"));
        let out = run(&["descend-q", s.to_str().unwrap(), "--seed", "9", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        bytes.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(bytes[0], bytes[1]);
    let other = run(&["descend-q", s.to_str().unwrap(), "--seed", "10"]);
    assert_eq!(other.status.code(), Some(0));
}

#[test]
fn descended_witness_reads_back() {
    let s = data("s_adjoint5.json");
    let report = json(&run(&["descend-t", s.to_str().unwrap()]));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scrambled.json");
    std::fs::write(&path, report["scrambled"].to_string()).unwrap();
    let again = run(&["descend-t", path.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(json(&again)["descended"]["split_count"], 1);
}
