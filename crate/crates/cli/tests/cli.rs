use std::path::PathBuf;
use std::process::{Command, Output};

use frobquartic::suites::{Report, Status};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobquartic")).args(args).output().expect("the binary runs")
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("a JSON report on stdout")
}

#[test]
fn verify_torsion_passes() {
    let out = run(&["--k", "2", "verify", "--suite", "torsion"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], "report-v1");
    assert_eq!(r["command"], "verify torsion");
    assert_eq!(r["summary"]["fail"], 0);
}

#[test]
fn verify_intersection_passes() {
    let out = run(&["verify", "--suite", "intersection"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let checks = r["checks"].as_array().unwrap();
    assert!(checks.len() >= 6);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = run(&["verify", "--suite", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn field_degree_above_sixteen_is_rejected() {
    assert_eq!(run(&["--k", "17", "count", "0", "1", "1", "1"]).status.code(), Some(2));
}

#[test]
fn unparseable_literal_is_rejected() {
    let out = run(&["count", "0", "q", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse"));
}

#[test]
fn defaults_are_recorded_in_the_header() {
    let r = json(&run(&["count", "0", "w", "1", "1"]));
    assert_eq!(r["k"], 2);
    assert_eq!(r["seed"], 0);
}

#[test]
fn count_genus_one_fibre() {
    let out = run(&["count", "0", "w", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let d = &json(&out)["data"];
    assert_eq!(d["q_points"], d["e_points"]);
    assert_eq!(d["equal"], true);
    assert_eq!(d["label"], "genus-one");
    assert_eq!(d["genus"], 1);
}

#[test]
fn count_nodal_fibre() {
    let d = json(&run(&["count", "0", "w", "1", "0"]))["data"].clone();
    assert_eq!(d["label"], "nodal-rational");
    assert_eq!(d["genus"], 0);
}

#[test]
fn count_double_line_fibre() {
    let out = run(&["count", "1", "w", "0", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["data"]["label"], "reducible-with-double-line");
    assert_eq!(r["checks"][0]["status"], "skip");
}

#[test]
fn count_over_gf8() {
    let d = json(&run(&["--k", "3", "count", "w^2", "w+1", "w", "1"]))["data"].clone();
    assert_eq!(d["equal"], true);
}

#[test]
fn delta_at_the_singular_point() {
    let out = run(&["delta", "0", "w", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn fibre_classify_the_cubic_pencil() {
    let out = run(&["fibre", &data("pencil_Sprime.json"), "classify"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["data"], serde_json::json!(["Ẽ7", "Ã1"]));
}

#[test]
fn fibre_contract_z_is_minimal() {
    let out = run(&["fibre", &data("pencil_S_resolved.json"), "contract", "Z"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["data"]["minimal"], true);
}

#[test]
fn fibre_resolved_is_not_minimal() {
    let d = json(&run(&["fibre", &data("pencil_S_resolved.json"), "minimal"]))["data"].clone();
    assert_eq!(d["minimal"], false);
    assert_eq!(d["exceptional"], serde_json::json!(["Z"]));
}

#[test]
fn fibre_contract_of_a_minus_two_curve_fails() {
    assert_eq!(run(&["fibre", &data("pencil_S_resolved.json"), "contract", "A1"]).status.code(), Some(2));
}

#[test]
fn malformed_fibre_file_is_a_schema_error() {
    let dir = std::env::temp_dir().join(format!("frobquartic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"components": 3}"#).unwrap();
    let out = run(&["fibre", path.to_str().unwrap(), "solve"]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("schema"));
}

#[test]
fn iso_finds_a_witness_for_a_transformed_pair() {
    let d = json(&run(&["iso", "0", "t", "1", "1", "--to", "t^2+t", "t", "1", "1"]))["data"].clone();
    assert_eq!(d["result"], "isomorphic");
    assert!(d["witness"].is_object());
}

#[test]
fn iso_rejects_an_eta_mismatch() {
    let d = json(&run(&["iso", "0", "t", "1", "1", "--to", "0", "t", "1", "t"]))["data"].clone();
    assert_eq!(d["result"], "not isomorphic (eta)");
}

#[test]
fn iso_with_poles_is_undecided() {
    let out = run(&["iso", "1/t", "t", "1", "1", "--to", "0", "t", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["data"]["result"], "undecided: unsupported fragment");
    assert_eq!(r["checks"][0]["status"], "skip");
}

#[test]
fn series_defaults_pass() {
    let out = run(&["series"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["data"].is_object());
}

#[test]
fn text_output_has_one_line_per_check() {
    let out = run(&["--text", "verify", "--suite", "series"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS series.")).count() >= 6);
    assert!(text.contains("0 failed"));
}

#[test]
fn report_round_trips_through_its_schema() {
    let out = run(&["verify", "--suite", "delta"]);
    let raw = String::from_utf8(out.stdout).unwrap();
    let report: Report = serde_json::from_str(&raw).unwrap();
    assert_eq!(report.exit_status, 0);
    assert!(report.checks.iter().all(|c| c.status == Status::Pass));
    let again = report.to_json();
    assert_eq!(serde_json::from_str::<Value>(&again).unwrap(), serde_json::from_str::<Value>(&raw).unwrap());
}

#[test]
fn same_seed_same_bytes() {
    let a = run(&["--seed", "7", "verify", "--suite", "symbolic"]);
    let b = run(&["--seed", "7", "verify", "--suite", "symbolic"]);
    assert_eq!(a.stdout, b.stdout);
}
