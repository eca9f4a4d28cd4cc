//! End-to-end checks of the CLI surface: JSON shapes and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn symcov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcov"))
        .args(args)
        .output()
        .expect("failed to spawn symcov")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is not JSON")
}

#[test]
fn analyze_reports_matroid_flags() {
    let path = fixtures().join("triangle.json");
    let out = symcov(&["analyze", path.to_str().unwrap()]);
    let value = stdout_json(&out);
    assert_eq!(value["matroid"], serde_json::json!(true));
    assert_eq!(value["multiplicity"], serde_json::json!(3));
    assert_eq!(value["f_vector"], serde_json::json!([1, 3, 3]));

    let path = fixtures().join("pentagon.json");
    let out = symcov(&["analyze", path.to_str().unwrap()]);
    let value = stdout_json(&out);
    assert_eq!(value["matroid"], serde_json::json!(false));
    assert_eq!(value["exchange_violation"]["i"], serde_json::json!(2));
}

#[test]
fn covers_and_hilbert_shapes() {
    let path = fixtures().join("triangle.json");
    let out = symcov(&["covers", path.to_str().unwrap(), "--k", "2"]);
    let value = stdout_json(&out);
    assert_eq!(value.as_array().unwrap().len(), 4);
    assert_eq!(value[0], serde_json::json!({"k": 2, "values": [0, 2, 2]}));

    let path = fixtures().join("pentagon.json");
    let out = symcov(&["hilbert", path.to_str().unwrap(), "--kmax", "4"]);
    let value = stdout_json(&out);
    assert_eq!(
        value,
        serde_json::json!({"k": [1, 2, 3, 4], "count": [5, 11, 20, 31]})
    );
}

#[test]
fn symbolic_power_and_depth() {
    let path = fixtures().join("triangle.json");
    let out = symcov(&["symbolic-power", path.to_str().unwrap(), "--m", "2"]);
    let value = stdout_json(&out);
    assert_eq!(value["generators"].as_array().unwrap().len(), 4);

    let path = fixtures().join("rp2.json");
    let out = symcov(&[
        "depth",
        path.to_str().unwrap(),
        "--side",
        "sr",
        "--char",
        "2",
    ]);
    let value = stdout_json(&out);
    assert_eq!(value["depth"], serde_json::json!(2));
    assert_eq!(value["cohen_macaulay"], serde_json::json!(false));
}

#[test]
fn betti_accepts_ideal_files() {
    let dir = std::env::temp_dir();
    let path = dir.join("symcov_cli_test_ideal.json");
    std::fs::write(&path, r#"{"n":2,"generators":[[1,0],[0,1]]}"#).unwrap();
    let out = symcov(&["betti", path.to_str().unwrap()]);
    let value = stdout_json(&out);
    assert_eq!(
        value,
        serde_json::json!([
            {"i": 0, "degree": [0, 1], "rank": 1},
            {"i": 0, "degree": [1, 0], "rank": 1},
            {"i": 1, "degree": [1, 1], "rank": 1},
        ])
    );
}

#[test]
fn verify_theorem_exit_codes() {
    let path = fixtures().join("triangle.json");
    let out = symcov(&[
        "verify-theorem",
        path.to_str().unwrap(),
        "--mmax",
        "2",
        "--chars",
        "0",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["theorem_consistent"], serde_json::json!(true));
    assert_eq!(value["matroid"], serde_json::json!(true));
}

#[test]
fn run_corpus_smoke_and_budget_abort() {
    let path = corpus_dir().join("small.json");
    let out = symcov(&["run-corpus", path.to_str().unwrap()]);
    let value = stdout_json(&out);
    assert_eq!(value["inconsistent"], serde_json::json!(0));

    let out = symcov(&["run-corpus", path.to_str().unwrap(), "--budget-secs", "0"]);
    assert_eq!(out.status.code(), Some(3), "budget abort must exit 3");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir();
    let out_path = dir.join("symcov_cli_test_out.json");
    let _ = std::fs::remove_file(&out_path);
    let path = fixtures().join("triangle.json");
    let out = symcov(&[
        "hilbert",
        path.to_str().unwrap(),
        "--kmax",
        "2",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["count"], serde_json::json!([3, 4]));
}
