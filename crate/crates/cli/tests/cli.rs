use std::process::{Command, Output};

use serde_json::Value;

fn polyfaces(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyfaces"))
        .args(args)
        .env_remove("POLYFACES_MAX_N")
        .output()
        .expect("binary runs")
}

fn payload(args: &[&str]) -> Value {
    let out = polyfaces(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn diagnostic(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is a JSON diagnostic")
}

#[test]
fn enumerate_count() {
    assert_eq!(payload(&["enumerate", "--species", "psi", "--n", "2", "--format", "count"]), 11);
    assert_eq!(payload(&["enumerate", "--species", "phi", "--n", "2", "--format", "count"]), 13);
}

#[test]
fn enumerate_dot_is_a_digraph() {
    let out = polyfaces(&["enumerate", "--species", "psi", "--n", "1", "--format", "dot"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("digraph"));
}

#[test]
fn stratum_of_a_path() {
    let v = payload(&["stratum", "--path", "e^2,e,1-e,1-e^2", "--space", "assoc"]);
    assert_eq!(v, "(((0 1) 2) (3 (4 5)))");
}

#[test]
fn cube_embedding_of_a_word() {
    assert_eq!(payload(&["cube-embed", "--word", "ab(ab)bbab"]), "(0, 3/2, 4)");
}

#[test]
fn chart_output() {
    let v = payload(&["chart", "--kind", "alpha", "--config", "1/4,1/2"]);
    assert_eq!(v["kind"], "alpha");
    assert_eq!(v["s"]["0,1,2"], serde_json::json!({ "num": 1, "den": 2 }));
}

#[test]
fn projection_forgets_the_star() {
    assert_eq!(payload(&["project", "--functor", "pi", "--input", "<(3 * 1) 2>"]), "((0 1) 2 (3 4))");
}

#[test]
fn fiber_with_homology() {
    let v = payload(&["fiber", "--over", "((0 1) 2)", "--homology"]);
    assert!(v["homology"].is_object());
}

#[test]
fn cofinality_holds() {
    let v = payload(&["cofinal", "--functor", "pi", "--n", "2"]);
    assert!(v.is_object());
}

#[test]
fn usage_errors_exit_two() {
    let out = polyfaces(&["enumerate", "--species", "nope", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(polyfaces(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn failures_exit_one_with_a_diagnostic() {
    let out = polyfaces(&["stratum", "--path", "e,e", "--space", "assoc"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert_eq!(diagnostic(&out)["error"], "precondition");

    let out = polyfaces(&["project", "--functor", "pi", "--input", "((0 1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(diagnostic(&out)["error"], "parse");
}

#[test]
fn caps_and_their_override() {
    let out = polyfaces(&["cofinal", "--functor", "pi", "--n", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(diagnostic(&out)["error"], "cap-exceeded");

    let out = polyfaces(&["enumerate", "--species", "psi", "--n", "7", "--format", "count"]);
    assert_eq!(diagnostic(&out)["error"], "cap-exceeded");
    let out = polyfaces(&["--max-n", "7", "enumerate", "--species", "psi", "--n", "7", "--format", "count"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--species", "phi", "--n", "3", "--format", "json"];
    assert_eq!(polyfaces(&args).stdout, polyfaces(&args).stdout);
}

#[test]
fn verify_posets_suite() {
    let v = payload(&["verify", "--suite", "posets"]);
    assert_eq!(v["passed"], true);
}
