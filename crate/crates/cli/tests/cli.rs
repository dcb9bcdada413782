use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ritt-lab")).args(args).output().expect("binary runs")
}

fn fixture_path(rel: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", rel].iter().collect();
    p.to_string_lossy().into_owned()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("every --json line parses"))
        .collect()
}

#[test]
fn d6_verify_passes() {
    let out = run(&["group", "verify", &fixture_path("groups/d6.ctx"), "--theorems", "ritt1,mon,aut,div", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 4);
    for l in &lines {
        assert_eq!(l["status"], "pass");
        assert_eq!(l["context"], "d6");
        for key in ["context", "theorem", "status", "details"] {
            assert!(l.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn x6_has_two_decompositions() {
    let out = run(&["poly", "decompose", &fixture_path("polys/x6_q.poly"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 2);
    let mut degrees: Vec<String> = lines.iter().map(|l| l["details"]["degrees"].to_string()).collect();
    degrees.sort();
    assert_eq!(degrees, vec!["[2,3]", "[3,2]"]);
}

#[test]
fn human_block_precedes_json() {
    let out = run(&["counterexample", "--prime", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# ritt-lab counterexample --prime 7\n"));
    assert!(text.contains("1 pass, 0 fail, 0 hypothesis-not-met"));
    let last = text.lines().last().unwrap();
    let v: Value = serde_json::from_str(last).unwrap();
    assert_eq!(v["details"]["aut_f"], 6);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["counterexample", "--prime", "5"]).status.code(), Some(2));
    assert_eq!(run(&["group", "verify", "@d6", "--theorems", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "decompose", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "decompose", "@d6"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let bad = run(&["laurent-branch", "--field", "F7", "--poly", "3:x"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn failed_item_exits_one_with_reason() {
    let out = run(&["laurent-branch", "--field", "F7", "--poly", "7:1 1:1", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let lines = json_lines(&out);
    assert_eq!(lines[0]["status"], "fail");
    assert!(lines[0]["details"]["error"].as_str().unwrap().contains("7"));
}

#[test]
fn hypothesis_not_met_is_not_a_failure() {
    let out = run(&["group", "verify", "@s4_s3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json_lines(&out).iter().any(|l| l["status"] == "hypothesis-not-met"));
}

#[test]
fn chains_and_walk() {
    let out = run(&["group", "chains", "@m16_regular", "--walk", "0", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[7]["theorem"], "walk 0 -> 6");
    assert_eq!(lines[7]["status"], "pass");
}

#[test]
fn laurent_table() {
    let out = run(&["laurent-branch", "--field", "F7", "--poly", "3:1 1:1", "--precision", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cycle (1 2 4)"), "{text}");
}

#[test]
fn additive_factor_prints_both_forms() {
    let out = run(&["additive", "factor", "@tau2_tau_f2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines[0]["details"]["skew"], "τ^2 + τ");
    assert_eq!(lines[0]["details"]["additive"], "X^4 + X^2");
    assert_eq!(lines.iter().filter(|l| l["theorem"].as_str().unwrap().starts_with("factorization")).count(), 2);
}

#[test]
fn pair_file_is_scanned() {
    let out = run(&["counterexample", "--pair", &fixture_path("pairs/cubic_reciprocal_f7.pair"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines[0]["details"]["divides"], false);
}
