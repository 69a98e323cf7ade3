use std::process::Command;

use serde_json::Value;
use stabpoly::cli::dispatch;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("stab").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn test_x2_plus_1_is_stable() {
    let v = run_json(&["test", "--field", "3", "--poly", "1,0,1"]);
    assert_eq!(v["verdict"], "Stable");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["depth_verified"], 3);
}

#[test]
fn test_reports_converse_failure() {
    let v = run_json(&["test", "--field", "3^2", "--poly", "0,5,-10,10,-5,1", "--depth", "1"]);
    assert_eq!(v["criterion_verdict"], "CandidateStable");
    assert_eq!(v["verdict"], "NotStable");
    assert_eq!(v["converse_failure"], true);
}

#[test]
fn negative_coefficients_parse() {
    let v = run_json(&["test", "--field", "5", "--poly", "-1,0,1"]);
    assert_eq!(v["verdict"], "NotStable");
    assert_eq!(v["witness"]["n"], 1);
}

#[test]
fn verify_stickelberger_over_f5() {
    let v = run_json(&["verify", "stickelberger", "--field", "5", "--max-degree", "4"]);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_cubic_char3_over_f9() {
    let v = run_json(&["verify", "cubic-char3", "--field", "3^2"]);
    assert_eq!(v["checked"], 648);
    assert_eq!(v["violations"], 0);
}

#[test]
fn verify_counterexample_certificate() {
    let v = run_json(&["verify", "counterexample", "--field", "3^2", "--degree", "5", "--a0", "1"]);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["stats"]["certificate"]["root"], serde_json::json!([0, 0]));
    let (code, _, err) = run(&["verify", "counterexample", "--field", "3", "--degree", "5"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn census_monic_quadratics_over_f3() {
    let v = run_json(&["census", "--field", "3", "--degree", "2", "--monic", "--depth", "5"]);
    assert_eq!(v["population"], 9);
    let c = &v["counts"];
    assert_eq!(c["stable"].as_u64().unwrap() + c["not_stable"].as_u64().unwrap(), 9);
    assert_eq!(c["inapplicable"], 0);
}

#[test]
fn census_output_is_independent_of_jobs() {
    let a = run(&["census", "--field", "5", "--degree", "3", "--jobs", "1"]);
    let b = run(&["census", "--field", "5", "--degree", "3", "--jobs", "3"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
}

#[test]
fn census_tsv_has_header_and_row() {
    let (code, out, _) = run(&["census", "--field", "3", "--degree", "2", "--tsv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].split('\t').count(), 11);
    assert_eq!(lines[1].split('\t').count(), 11);
    assert!(lines[1].starts_with("3\t2\tfalse\t18\t"));
}

#[test]
fn orbit_json_and_tsv() {
    let v = run_json(&["orbit", "--field", "3", "--poly", "1,0,1"]);
    assert_eq!(v["tail_length"], 1);
    assert_eq!(v["cycle_length"], 1);
    assert_eq!(v["records"][0]["value"], 1);
    assert_eq!(v["records"][1]["value"], 2);
    let (code, out, _) = run(&["orbit", "--field", "3", "--poly", "1,0,1", "--tsv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    let (code, _, err) = run(&["orbit", "--field", "3", "--poly", "1,0,0,1"]);
    assert_eq!(code, 1);
    assert!(err.contains("zero"), "{err}");
}

#[test]
fn field_description() {
    let v = run_json(&["field", "--field", "3^2"]);
    assert_eq!(v["order"], 9);
    assert_eq!(v["modulus"], serde_json::json!([1, 0, 1]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["test", "--field", "4", "--poly", "1,0,1"]).0, 1);
    assert_eq!(run(&["test", "--field", "2", "--poly", "1,0,1"]).0, 1);
    assert_eq!(run(&["test", "--field", "3^2:1,1,1", "--poly", "1,0,1"]).0, 1);
    assert_eq!(run(&["test", "--field", "3", "--poly", "0,1"]).0, 1);
    let (code, _, err) = run(&["test", "--field", "3", "--poly", "1,x"]);
    assert_eq!(code, 2);
    assert!(err.contains("--poly"));
    let (code, _, err) = run(&["test", "--field", "three", "--poly", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("--field"));
    assert_eq!(run(&["test", "--field", "3"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["verify", "nonsense", "--field", "3"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn seeded_suites_are_reproducible() {
    let a = run(&["verify", "resultant-identities", "--field", "5", "--samples", "40", "--seed", "11"]);
    let b = run(&["verify", "resultant-identities", "--field", "5", "--samples", "40", "--seed", "11"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_stab"))
        .args(["test", "--field", "3", "--poly", "1,0,1", "--tsv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let line = String::from_utf8(out.stdout).unwrap();
    assert!(line.starts_with("3\t1,0,1\tStable\tStable\t"), "{line}");
    let bad = Command::new(env!("CARGO_BIN_EXE_stab")).arg("census").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
