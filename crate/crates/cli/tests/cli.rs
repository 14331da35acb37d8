use std::process::{Command, Output};

use girdled::liealg::{basis, BasisDoc, BasisKind};
use serde_json::Value;

fn girdled(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girdled")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (Value, Option<i32>) {
    let out = girdled(args);
    let v: Value = serde_json::from_slice(&out.stdout).expect("json report");
    (v, out.status.code())
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn killing_suite_passes_with_100_entries() {
    let (v, code) = report(&["--suite", "killing", "--json"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["schema"], 1);
    let entries: Vec<&Value> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["id"].as_str().unwrap().starts_with("killing.entry."))
        .collect();
    assert_eq!(entries.len(), 100);
    assert!(entries.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn kernels_suite_reports_dimensions() {
    let (v, code) = report(&["--suite", "kernels", "--json"]);
    let checks = v["checks"].as_array().unwrap();
    let dim = |d: i32| {
        checks
            .iter()
            .find(|c| c["id"] == format!("kernels.dim.{d}"))
            .map(|c| c["witness"]["computed"].as_u64().unwrap())
            .unwrap()
    };
    assert_eq!((dim(1), dim(3)), (0, 6));
    let fails = v["summary"]["fail"].as_u64().unwrap();
    assert_eq!(code, Some(if fails == 0 { 0 } else { 1 }));
}

#[test]
fn unknown_suite_is_an_error() {
    let out = girdled(&["--suite", "nope"]);
    assert_ne!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn reports_are_deterministic() {
    let (a, _) = report(&["--suite", "structure-equations", "--json"]);
    let (b, _) = report(&["--suite", "structure-equations", "--json"]);
    assert_eq!(without_timing(a), without_timing(b));
}

#[test]
fn killing_matrix_emission() {
    let out = girdled(&["--emit", "killing-matrix", "--format", "json"]);
    let m: Vec<Vec<i64>> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(m.len(), 10);
    assert!(m.iter().all(|r| r.len() == 10 && r.iter().all(|x| (-1..=1).contains(x))));
}

#[test]
fn structure_equations_latex() {
    let out = girdled(&["--emit", "structure-equations", "--format", "latex"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("  & d").count(), 10);
    assert!(text.contains("d\\vartheta^{-2}") && text.contains("d\\omega^{2}"));
}

#[test]
fn bases_round_trip_through_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bases.json");
    let out = girdled(&["--emit", "bases", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let docs: Vec<BasisDoc> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    for (doc, kind) in docs.into_iter().zip(BasisKind::ALL) {
        let b = doc.into_basis().unwrap();
        assert_eq!(BasisDoc::from_basis(&b), BasisDoc::from_basis(basis(kind)));
    }
}

#[test]
fn io_errors_name_the_path() {
    let out = girdled(&["--emit", "bases", "--out", "/nonexistent-dir/bases.json"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent-dir/bases.json"));
}

#[test]
fn fixture_override_is_used() {
    let dir = tempfile::tempdir().unwrap();
    let src = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/structure_equations.json");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(src).unwrap()).unwrap();
    v["equations"][1]["rhs"].as_array_mut().unwrap().pop();
    std::fs::write(dir.path().join("structure_equations.json"), v.to_string()).unwrap();
    let (r, code) = report(&["--suite", "structure-equations", "--json", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(code, Some(1));
    let diff = r["checks"].as_array().unwrap().iter().find(|c| c["id"] == "structeq.fixture-diff").unwrap();
    assert_eq!(diff["status"], "fail");
}
