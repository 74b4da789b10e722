use std::process::{Command, Output};

fn ncdiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncdiff")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_normal_form() {
    let o = ncdiff(&["eval", "u*v"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(q) v^1 u^1");
}

#[test]
fn eval_at_a_rational_q() {
    let o = ncdiff(&["--eval-q", "2", "eval", "u*v - v*u"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "at q = 2: (1) v^1 u^1"), "{out}");
}

#[test]
fn eval_json() {
    let o = ncdiff(&["--format", "json", "eval", "d(u)"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["value"].as_str().unwrap().contains("du"));
}

#[test]
fn printed_values_parse_back() {
    for src in include_str!("../../core/tests/corpus.txt").lines().map(str::trim) {
        if src.is_empty() || src.starts_with('#') {
            continue;
        }
        let first = stdout(&ncdiff(&["eval", src]));
        let again = stdout(&ncdiff(&["eval", first.trim()]));
        assert_eq!(first, again, "{src}");
    }
}

#[test]
fn parse_error_exits_with_two() {
    let o = ncdiff(&["eval", "(u"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(ncdiff(&["eval", "1/(q-q)"]).status.code(), Some(2));
    assert_eq!(ncdiff(&["dim", "torus", "--ruu", "du"]).status.code(), Some(2));
}

#[test]
fn torus_report_is_deterministic_and_passes() {
    let a = ncdiff(&["--format", "json", "verify", "torus"]);
    let b = ncdiff(&["--format", "json", "verify", "torus"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"], "torus");
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert_eq!(c["status"], "pass", "{c}");
        assert_eq!(c["ms"], 0);
        for key in ["name", "expected", "actual"] {
            assert!(c[key].is_string());
        }
    }
}

#[test]
fn torus_with_explicit_parameters() {
    let o = ncdiff(&["verify", "torus", "--ruu", "q^2", "--svu", "1/(1+q)"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn failing_sphere_case_exits_with_one() {
    let o = ncdiff(&["--format", "json", "verify", "sphere", "--case", "d"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["status"] == "fail"));
}

#[test]
fn sphere_case_a_passes() {
    let o = ncdiff(&["verify", "sphere", "--case", "a", "--h111", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn dimensions() {
    assert_eq!(stdout(&ncdiff(&["dim", "torus", "--ruu", "q"])).trim(), "2");
    assert_eq!(stdout(&ncdiff(&["dim", "sphere"])).trim(), "2");
    let o = ncdiff(&["--eval-q", "2", "dim", "sphere", "--h121", "1"]);
    assert_eq!(o.status.code(), Some(0));
}
