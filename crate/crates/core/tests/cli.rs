use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invlfp")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn i1(x_lo: &str, x_hi: &str, target: &str, scenario: &str) -> String {
    format!(
        r#"{{"form": "standard", "A": [["1", "1"]], "B": [["0"]], "b": ["1"],
            "C": [["1"], ["-1"]], "c": ["0", "0"],
            "X": {{"D": [["1"], ["-1"]], "d": ["{x_hi}", "{x_lo_neg}"]}},
            "target": {target}, "scenario": "{scenario}"}}"#,
        x_lo_neg = if let Some(rest) = x_lo.strip_prefix('-') { rest.to_string() } else { format!("-{x_lo}") }
    )
}

const POINT: &str = r#"{"kind": "singleton", "ybar": ["1", "0"]}"#;

#[test]
fn decide_exit_codes() {
    let dir = TempDir::new().unwrap();
    let yes = write(&dir, "i1.json", &i1("-1", "1", POINT, "pessimistic"));
    let out = run(&["decide", s(&yes)]);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["verdict"], "yes");
    let x: invlfp::Rational = report["witness_x"][0].as_str().unwrap().parse().unwrap();
    assert!(x.is_negative());

    // Lower bound 1 above upper bound 0: no parameter at all.
    let empty = write(&dir, "empty.json", &i1("1", "0", POINT, "optimistic"));
    let out = run(&["decide", s(&empty)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["verdict"], "no");

    let bad = write(&dir, "bad.json", "{\"form\": ");
    let out = run(&["decide", s(&bad)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let out = run(&["decide", s(&yes), "--scenario", "opt", "--solver", "exhaustive"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["solver"], "polyhedral-search");
}

#[test]
fn budget_exhaustion_is_an_error() {
    let dir = TempDir::new().unwrap();
    let yes = write(&dir, "i1.json", &i1("-1", "1", POINT, "pessimistic"));
    let out = run(&["decide", s(&yes), "--solver", "exhaustive", "--budget", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn generated_instances_round_trip() {
    let dir = TempDir::new().unwrap();
    let sat = write(&dir, "sat.cnf", "p cnf 1 1\n1 1 1 0\n");
    let unsat = write(&dir, "unsat.cnf", "c two clauses\np cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
    for reduction in ["rhs", "basis", "onevar-rhs", "onevar-of"] {
        for (cnf, expect) in [(&sat, 0), (&unsat, 1)] {
            let out = run(&["generate", reduction, s(cnf)]);
            assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
            let inst = write(&dir, "gen.json", std::str::from_utf8(&out.stdout).unwrap());
            let out = run(&["decide", s(&inst)]);
            assert_eq!(code(&out), expect, "{reduction} on {}", cnf.display());
        }
    }
    let out = run(&["generate", "rhs", "--seed", "7", "--vars", "3", "--clauses", "4"]);
    assert_eq!(code(&out), 0);
    let again = run(&["generate", "rhs", "--seed", "7", "--vars", "3", "--clauses", "4"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_from_files() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "i1.json", &i1("-1", "1", POINT, "optimistic"));
    let good = write(&dir, "good.json", r#"{"kind": "active-set", "active": [1, 2, 4]}"#);
    let out = run(&["verify", s(&inst), s(&good)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["result"], "accept");

    let narrowed = write(&dir, "narrow.json", &i1("-1", "-1/2", POINT, "optimistic"));
    let empty = write(&dir, "empty.json", r#"{"kind": "active-set", "active": []}"#);
    let out = run(&["verify", s(&narrowed), s(&empty)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["result"], "reject");

    let basis = write(&dir, "basis.json", &i1("-1", "1", r#"{"kind": "basis", "basis": [1]}"#, "optimistic"));
    let zero = write(&dir, "zero.json", r#"{"kind": "basis-zero-set", "zero": []}"#);
    let out = run(&["verify", s(&basis), s(&zero)]);
    assert_eq!(code(&out), 1);
    assert!(stdout_json(&out)["reason"].as_str().unwrap().contains("Incompatible"));

    // A run report is accepted as a certificate file.
    let report = run(&["decide", s(&inst)]);
    let report = write(&dir, "report.json", std::str::from_utf8(&report.stdout).unwrap());
    assert_eq!(code(&run(&["verify", s(&inst), s(&report)])), 0);
}

#[test]
fn eval_from_flags() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "i1.json", &i1("-1", "1", POINT, "pessimistic"));
    assert_eq!(code(&run(&["eval", s(&inst), "--x", "-1"])), 0);
    assert_eq!(code(&run(&["eval", s(&inst), "--x", "0"])), 1);
    assert_eq!(code(&run(&["eval", s(&inst), "--x", "0", "--scenario", "opt"])), 0);
    assert_eq!(code(&run(&["eval", s(&inst), "--x", "5"])), 2);
    assert_eq!(code(&run(&["eval", s(&inst), "--x", "1/0"])), 2);
}
