use std::process::{Command, Output};

use serde_json::Value;

fn daha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_daha"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn eval_worked_example() {
    let out = daha(&[
        "eval",
        "--rep",
        "skein",
        "--kappa",
        "2",
        "--word",
        "s1*y1",
        "--elem",
        "(a1^2*a2^-1,[2 1])",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "c^4*(a1^-1*a2^2,[1 2])");
}

#[test]
fn eval_identity_word() {
    let out = daha(&["eval", "--rep", "poly", "--kappa", "2", "--word", "", "--elem", "X1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "X1");
}

#[test]
fn eval_sigma_on_one() {
    let out = daha(&["eval", "--rep", "poly", "--kappa", "2", "--word", "s1", "--elem", "1"]);
    assert_eq!(stdout(&out).trim(), "s");
}

#[test]
fn eval_d_substitution() {
    let args = [
        "eval",
        "--rep",
        "skein",
        "--kappa",
        "2",
        "--word",
        "s1",
        "--elem",
        "(1,[1 2])",
    ];
    assert_eq!(stdout(&daha(&args)).trim(), "d^-1*(1,[2 1])");
    let mut with = args.to_vec();
    with.push("--d-eq-s");
    assert_eq!(stdout(&daha(&with)).trim(), "s^-1*(1,[2 1])");
}

#[test]
fn eval_errors_exit_2() {
    let out = daha(&[
        "eval", "--rep", "poly", "--kappa", "2", "--word", "s1", "--elem", "X1 +* 2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parse error at byte 4"), "{}", stderr(&out));
    let out = daha(&["eval", "--rep", "poly", "--kappa", "2", "--word", "s2", "--elem", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("out of range"));
    let out = daha(&["eval", "--rep", "nope", "--kappa", "2", "--elem", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn overflow_needs_bigint() {
    let args = [
        "eval",
        "--rep",
        "poly",
        "--kappa",
        "2",
        "--word",
        "",
        "--elem",
        "(X1+X2)^70",
    ];
    let out = daha(&args);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("coefficient overflow"));
    let mut big = vec!["--bigint"];
    big.extend(args);
    let out = daha(&big);
    assert!(out.status.success());
    assert!(stdout(&out).contains("112186277816662845432*X1^35*X2^35"));
}

#[test]
fn eval_file() {
    let dir = std::env::temp_dir().join(format!("daha-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("jobs.txt");
    std::fs::write(&path, "# word ; element\ns1 ; 1\n\n ; X1\nx1*x2 ; X1^-1\n").unwrap();
    let out = daha(&[
        "eval",
        "--rep",
        "poly",
        "--kappa",
        "2",
        "--file",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out), "s\nX1\nX2\n");
    std::fs::write(&path, "s1 1\n").unwrap();
    let out = daha(&[
        "eval",
        "--rep",
        "poly",
        "--kappa",
        "2",
        "--file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn eval_json_lines() {
    let out = daha(&[
        "--format",
        "json-lines",
        "eval",
        "--rep",
        "poly",
        "--kappa",
        "2",
        "--word",
        "s1",
        "--elem",
        "1",
    ]);
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["record"], "eval");
    assert_eq!(v["output"], "s");
    assert_eq!(v["kappa"], 2);
}

#[test]
fn check_relations_passes() {
    let out = daha(&["check", "--suite", "relations", "--kappa", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("# "));
    assert!(text.contains("kappa=2"));
    assert!(text.contains("seed=0"));
    assert!(text.contains("PASS poly relation 9"));
    assert!(text.contains("PASS skein relation 8"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn check_intertwiner_json() {
    let out = daha(&[
        "--format",
        "json-lines",
        "check",
        "--suite",
        "intertwiner",
        "--kappa",
        "3",
        "--seed",
        "42",
        "--words",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let records: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records[0]["record"], "header");
    assert_eq!(records[0]["seed"], 42);
    assert_eq!(records[0]["words"], 10);
    let checks: Vec<_> = records.iter().filter(|r| r["record"] == "check").collect();
    assert_eq!(checks.len(), 2);
    for c in checks {
        assert_eq!(c["failures"], 0);
        assert!(c["counterexample"].is_null());
    }
    assert_eq!(records.last().unwrap()["record"], "summary");
}

#[test]
fn check_output_is_deterministic() {
    let args = [
        "check",
        "--suite",
        "subrep",
        "--kappa",
        "2",
        "--seed",
        "7",
        "--words",
        "5",
        "--threads",
        "3",
    ];
    assert_eq!(stdout(&daha(&args)), stdout(&daha(&args)));
}

#[test]
fn check_large_rank_with_small_sizes() {
    let out = daha(&[
        "check",
        "--suite",
        "all",
        "--kappa",
        "5",
        "--bound",
        "0",
        "--words",
        "1",
        "--word-len",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("PASS skein relation 2 kappa=5 cases=360"));
}

#[test]
fn bench_reports_terms() {
    let out = daha(&["bench", "--kappa", "2", "--word-len", "10", "--seed", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("word_len=10"));
    let poly_lines = text.lines().filter(|l| l.starts_with("poly ")).count();
    assert_eq!(poly_lines, 3);
    let out = daha(&["--format", "json-lines", "bench", "--kappa", "1", "--word-len", "4"]);
    let last: Value = serde_json::from_str(stdout(&out).lines().last().unwrap()).unwrap();
    assert_eq!(last["rep"], "skein");
    assert_eq!(last["terms"].as_array().unwrap().len(), 5);
}
