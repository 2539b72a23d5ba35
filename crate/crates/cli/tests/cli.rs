use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_canonical-scrolls")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_reports_invariants() {
    let v = json(&["analyze", "--exponents", "4,5,7,8"]);
    assert_eq!(v["genus"], 4);
    assert_eq!(v["gonality"], 3);
    assert_eq!(v["canonical"], serde_json::json!([0, 3, 4, 5]));
    assert_eq!((v["g_prime"].as_u64(), v["eta"].as_u64(), v["mu"].as_u64()), (Some(2), Some(1), Some(1)));
    assert_eq!(v["flags"]["kunz"], true);
    assert_eq!(v["canonical_sheaf"]["degree"], 6);
    assert_eq!(v["canonical_sheaf"]["h0"], 4);
}

#[test]
fn analyze_markdown() {
    let out = run(&["analyze", "--exponents", "4,6,7,9", "--format", "md"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("| invariant | value |"));
    assert!(text.contains("| class | NG |"), "{text}");
}

#[test]
fn canonical_and_gonality() {
    let v = json(&["canonical", "--exponents", "3,7,8"]);
    assert_eq!(v["canonical"], serde_json::json!([0, 1, 3, 4]));
    let v = json(&["gonality", "--exponents", "3,7,8"]);
    assert_eq!(v["gonality"], 3);
    assert_eq!(v["certified"], true);
}

#[test]
fn scrolls_lists_structures_by_dimension() {
    let v = json(&["scrolls", "--exponents", "4,5,7,8", "--max-dim", "3"]);
    assert_eq!(v["min_dim"], 2);
    let entries = v["structures"].as_array().unwrap();
    assert!(entries.iter().all(|e| e["minors_vanish"] == true));
    assert!(entries.iter().any(|e| e["dim"] == 2 && e["dims"] == serde_json::json!([0, 2])));
    assert!(entries.iter().any(|e| e["dim"] == 3));
}

#[test]
fn formulas() {
    let v = json(&["formula", "chi", "--d", "3", "--e", "3", "--h", "1", "--f", "1"]);
    assert_eq!(v["chi"], 9);
    let v = json(&["formula", "chi", "--d", "2", "--e", "2", "--h", "-1", "--f", "0"]);
    assert_eq!(v["chi"], 0);
    // trigonal canonical curve of genus 6 on the threefold scroll of degree 3
    let v = json(&["formula", "pa-bundle", "--e", "3", "--u", "4", "--v", "-1", "--w", "4", "--z", "-2"]);
    assert_eq!(v["pa"], 6);
}

#[test]
fn catalog_to_file_in_every_format() {
    let dir = tempfile::tempdir().unwrap();
    for (format, check) in [("json", "\"exponents\""), ("csv", "exponents,genus"), ("md", "| C | g | gn |")] {
        let path = dir.path().join(format!("g4.{format}"));
        let out = run(&[
            "catalog",
            "--genus",
            "4..4",
            "--non-gorenstein",
            "--scroll-dim",
            "2",
            "--format",
            format,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.contains(check), "{format}: {text}");
    }
    let rows: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("g4.json")).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 4);
}

#[test]
fn catalog_is_byte_stable() {
    let a = run(&["catalog", "--genus", "4..7", "--format", "csv"]);
    let b = run(&["catalog", "--genus", "4..7", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
    // header plus 7 + 12 + 23 + 39 rows
    assert_eq!(String::from_utf8(a.stdout).unwrap().lines().count(), 82);
}

#[test]
fn audit_exit_codes() {
    let out = run(&["audit", "--fixture", "surface-g4", "--strict"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"matched":4,"flagged":[]}"#);

    let out = run(&["audit", "--fixture", "surface-g5"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["audit", "--fixture", "surface-g5", "--strict"]);
    assert_eq!(out.status.code(), Some(3));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["flagged"][0]["curve"], serde_json::json!([4, 7, 9, 10]));

    let out = run(&["audit", "--fixture", "surface-g9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_and_validation_errors() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["analyze"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--exponents", "4,x"]).status.code(), Some(1));
    assert_eq!(run(&["catalog", "--genus", "8..4"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--exponents", "2,4"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--exponents", "5,4"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "--genus", "4..17"]).status.code(), Some(2));
    assert_eq!(run(&["formula", "chi", "--d", "3", "--e", "2", "--h", "0", "--f", "0"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
