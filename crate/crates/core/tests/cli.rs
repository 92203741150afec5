use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use bfnl::algebra::{AlgebraJson, PartialAlgebra};
use bfnl::decider::{refute_by_frames, restrict_countermodel, Countermodel};
use bfnl::syntax::Sequent;

const TWO_CHAIN: &str = r#"{
  "size": 2,
  "leq": [[1, 1], [0, 1]],
  "otimes": [[0, 0], [0, 1]],
  "lol": [[1, 1], [0, 1]],
  "lolinv": [[1, 0], [1, 1]],
  "join": [[0, 1], [1, 1]],
  "meet": [[0, 0], [0, 1]],
  "neg": [1, 0],
  "one": 1,
  "top": 1,
  "bot": 0
}"#;

fn bfnl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bfnl"))
        .args(args)
        .env_remove("BFNL_JOBS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn algebra_file(dir: &TempDir, name: &str, a: &PartialAlgebra) -> String {
    write(dir, name, &serde_json::to_string_pretty(&AlgebraJson::from(a)).unwrap())
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn decide_identity() {
    let o = bfnl(&["decide", "p => p"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("p => p: provable"));
}

#[test]
fn decide_exchange_gives_a_frame() {
    let o = bfnl(&["decide", "p , q => q * p", "--kmax", "3", "--json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["verdict"], "refuted");
    assert_eq!(v["countermodel"]["model"], "frame");
    assert_eq!(v["entailment_bound"], 16);
}

#[test]
fn decide_unknown_with_small_budget() {
    let o = bfnl(&["decide", "p , q => q * p", "--kmax", "2", "--depth", "3"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("unknown"));
}

#[test]
fn decide_with_assumption_file() {
    let dir = TempDir::new().unwrap();
    let hyp = write(&dir, "hyp.txt", "q | ~q => T\n");
    let o = bfnl(&["decide", "p => q", "--assume", &hyp, "--json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["assumptions"][0], "q | ~q => T");

    let hyp = write(&dir, "chain.txt", "p => q\n\nq => r\n");
    let o = bfnl(&["decide", "p => r", "--assume", &hyp]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn decide_goal_file_reports_worst_code() {
    let dir = TempDir::new().unwrap();
    let goals = write(&dir, "goals.txt", "p => p\np => q\n");
    let o = bfnl(&["decide", "--file", &goals, "--json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["verdict"], "provable");
    assert_eq!(v[1]["verdict"], "refuted");
}

#[test]
fn input_errors_exit_three() {
    assert_eq!(code(&bfnl(&["decide", "p => => q"])), 3);
    assert_eq!(code(&bfnl(&["decide", "p => p", "--assume", "/nonexistent/hyp.txt"])), 3);
    assert_eq!(code(&bfnl(&["decide", "p => p", "--kmax", "9"])), 3);
    assert_eq!(code(&bfnl(&["frobnicate"])), 3);
}

#[test]
fn check_algebra_accepts_the_two_chain() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "chain.json", TWO_CHAIN);
    let o = bfnl(&["check-algebra", &path]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["verdict"]["accepted"], true);
    assert_eq!(v["certificate"]["family"].as_array().unwrap().len(), 1);
}

#[test]
fn check_algebra_rejects_broken_order() {
    let dir = TempDir::new().unwrap();
    let mut a = PartialAlgebra::boolean(2);
    a.set_le(1, 2, true);
    a.set_le(2, 1, true);
    let o = bfnl(&["check-algebra", &algebra_file(&dir, "bad.json", &a)]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["verdict"]["failing_step"], 1);
    assert_eq!(v["verdict"]["witness"]["violation"]["axiom"], "antisymmetry");
    assert!(v.get("certificate").is_none());
}

#[test]
fn check_algebra_accepts_a_restricted_countermodel() {
    let goal: Sequent = "p * q => p".parse().unwrap();
    let cm = refute_by_frames(&[], &goal, 2).unwrap();
    let Countermodel::Algebra { algebra, .. } = restrict_countermodel(&cm, &[], &goal).unwrap() else {
        panic!("not an algebra");
    };
    assert!(!algebra.is_total());
    let dir = TempDir::new().unwrap();
    let o = bfnl(&["check-algebra", &algebra_file(&dir, "restricted.json", &algebra)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(json(&o)["certificate"]["frame"].is_object());
}

#[test]
fn check_algebra_input_errors() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{\"size\": 2}");
    assert_eq!(code(&bfnl(&["check-algebra", &bad])), 3);
    assert_eq!(code(&bfnl(&["check-algebra", "/nonexistent.json"])), 3);
}

fn suite(dir: &Path, name: &str, lines: &[(&str, &str)]) -> String {
    let text: String = lines.iter().map(|(s, e)| format!("{s}\texpect:{e}\n")).collect();
    let p = dir.join(name);
    std::fs::write(&p, format!("# generated\n{text}")).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn bench_suites() {
    let dir = TempDir::new().unwrap();
    let theorems = suite(
        dir.path(),
        "theorems.tsv",
        &[("p => p", "provable"), ("p , (p \\ q) => q", "provable"), ("~~p => p", "provable")],
    );
    let o = bfnl(&["bench", &theorems]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("3 items, 0 mismatches"));

    let non = suite(dir.path(), "non.tsv", &[("p , q => q * p", "refuted"), ("p * q => p", "refuted")]);
    assert_eq!(code(&bfnl(&["bench", &non, "--kmax", "3"])), 0);

    let wrong = suite(dir.path(), "wrong.tsv", &[("p => q", "provable")]);
    assert_eq!(code(&bfnl(&["bench", &wrong])), 5);

    assert_eq!(code(&bfnl(&["bench", "/nonexistent/suite.tsv"])), 3);
    let malformed = write(&TempDir::new_in(dir.path()).unwrap(), "m.tsv", "p => p expect:provable\n");
    assert_eq!(code(&bfnl(&["bench", &malformed])), 3);
}

#[test]
fn bench_json_ignores_worker_count() {
    let dir = TempDir::new().unwrap();
    let s = suite(
        dir.path(),
        "mixed.tsv",
        &[("p => p", "provable"), ("p => q", "refuted"), ("p * (q * r) => (p * q) * r", "refuted"), ("~(p & q) => ~p | ~q", "provable")],
    );
    let one = bfnl(&["bench", &s, "--kmax", "3", "--json", "--jobs", "1"]);
    let many = Command::new(env!("CARGO_BIN_EXE_bfnl"))
        .args(["bench", &s, "--kmax", "3", "--json"])
        .env("BFNL_JOBS", "4")
        .output()
        .unwrap();
    assert_eq!(code(&one), 0);
    assert_eq!(code(&many), 0);
    assert_eq!(stdout(&one), stdout(&many));
    assert!(json(&one).as_array().unwrap().iter().all(|r| r["matches"] == true));
}
