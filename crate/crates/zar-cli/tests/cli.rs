//! End-to-end tests of the `zar` binary: frozen output shapes, exit codes,
//! and the structured-error contract.

use std::process::{Command, Output};

use serde_json::Value;

fn zar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zar"))
        .args(args)
        .output()
        .expect("binary must spawn")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        !out.stdout.is_empty(),
        "expected JSON on stdout, stderr was: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout must be one JSON document")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr must be one JSON document")
}

#[test]
fn patch_closure_of_a_cofinite_set_gains_the_generic_point() {
    let out = zar(&[
        "closure",
        "--kind",
        "cons",
        "--base",
        "q-z",
        "--set",
        r#"{"mode":"cofinite","places":[],"generic":false}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["mode"], "cofinite");
    assert_eq!(v["generic"], true);
    assert_eq!(v["places"], serde_json::json!([]));
}

#[test]
fn one_half_is_rejected_with_its_witness_place() {
    let out = zar(&["kr-member", "--base", "q-z", "--Y", "all", "--h", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["member"], false);
    assert_eq!(v["witness"], "p:2");
}

#[test]
fn star_eq_ignores_the_generic_point() {
    let out = zar(&["star-eq", "--Y1", "all", "--Y2", "all+K"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), serde_json::json!({"equal": true}));
}

#[test]
fn star_eq_separates_different_place_parts() {
    let out = zar(&[
        "star-eq",
        "--Y1",
        "all",
        "--Y2",
        r#"{"mode":"cofinite","places":["p:2"],"generic":false}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["equal"], false);
    assert!(v["separating_ideal"].is_array());
}

#[test]
fn basic_open_of_one_sixth_excludes_its_poles() {
    let out = zar(&["bx", "--x", "1/6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["mode"], "cofinite");
    assert_eq!(v["generic"], true);
    assert_eq!(v["places"], serde_json::json!(["p:2", "p:3"]));
}

#[test]
fn free_ultrafilters_on_an_infinite_set_converge_to_the_generic_point() {
    let out = zar(&["limit", "--set", "all", "--class", "free"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), serde_json::json!({"limit": "K"}));
}

#[test]
fn principal_ultrafilters_converge_to_their_centers() {
    let out = zar(&[
        "limit",
        "--set",
        r#"{"mode":"finite","places":["p:5"],"generic":false}"#,
        "--class",
        "p:5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), serde_json::json!({"limit": "p:5"}));
}

#[test]
fn poset_closure_walks_up_the_order() {
    let out = zar(&[
        "poset",
        "--op",
        "closure",
        "--poset",
        r#"{"elements":["a","b","c"],"leq":[["a","b"],["a","c"]]}"#,
        "--kind",
        "sp",
        "--set",
        "a",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out),
        serde_json::json!({"set": ["a", "b", "c"]})
    );
}

#[test]
fn poset_dual_reverses_every_relation() {
    let out = zar(&[
        "poset",
        "--op",
        "dual",
        "--poset",
        r#"{"elements":["a","b"],"leq":[["a","b"]]}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out),
        serde_json::json!({"elements": ["a", "b"], "leq": [["b", "a"]]})
    );
}

#[test]
fn the_ultrafilter_prime_of_a_residue_sweep_is_the_center() {
    let out = zar(&[
        "poset", "--op", "uf-prime", "--n", "12", "--members", "2,3", "--center", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), serde_json::json!({"prime": 3}));
}

#[test]
fn a_named_suite_reports_its_counts() {
    let out = zar(&["suite", "--name", "patch-closure", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["suite"], "patch-closure");
    assert_eq!(v["passed"], true);
    assert_eq!(v["violations"], 0);
}

#[test]
fn unknown_subcommands_exit_with_usage() {
    let out = zar(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn empty_subsets_are_domain_errors() {
    let out = zar(&["kr-member", "--Y", "empty", "--h", "1/2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert_eq!(stderr_json(&out)["error"], "empty-subset");
}

#[test]
fn malformed_expressions_are_parse_errors() {
    let out = zar(&["kr-member", "--Y", "all", "--h", "1/+"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], "parse");
}

#[test]
fn composite_characteristics_are_domain_errors() {
    let out = zar(&["closure", "--kind", "cons", "--base", "fpx-fpx:4", "--set", "all"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"], "not-prime");
}

#[test]
fn vacancy_needs_a_principal_ideal_base() {
    let out = zar(&["vacant", "--base", "fpx-fp:2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"], "requires-pid-base");
}
