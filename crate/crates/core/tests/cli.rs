use std::process::{Command, Output};

use cayley_core::report::{AlgebraJson, VerificationReport};

fn cayley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn der_dimensions() {
    let o = cayley(&["der", "--algebra", "split", "--field", "gf:5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "der=14 so=28 locder=21\n");
    let o = cayley(&["der", "--algebra", "cd", "--mu", "-1,-1,-1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["der"], 14);
    assert_eq!(doc["so"], 28);
    assert_eq!(doc["locder"], 21);
    assert_eq!(doc["so_c0"], 21);
}

#[test]
fn exit_codes() {
    assert_eq!(cayley(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(cayley(&["der", "--field", "gf:6"]).status.code(), Some(2));
    assert_eq!(cayley(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cayley(&["build", "--algebra", "cd", "--mu", "0,-1,-1"]).status.code(), Some(1));
    assert_eq!(cayley(&["der", "--input", "/nonexistent/algebra.json"]).status.code(), Some(1));
}

#[test]
fn split_only_suite_is_skipped_on_division_algebra() {
    let o = cayley(&["verify", "--algebra", "cd", "--suite", "thm41", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.summary.pass, r.summary.fail, r.summary.skipped), (0, 0, 1));
}

#[test]
fn build_then_der_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split3.json");
    let p = path.to_str().unwrap();
    let o = cayley(&["build", "--algebra", "split", "--field", "gf:3", "-o", p]);
    assert_eq!(o.status.code(), Some(0));
    let o = cayley(&["der", "--input", p]);
    assert_eq!(stdout(&o), "der=14 so=28 locder=21\n");
    let o = cayley(&["verify", "--input", p, "--suite", "lemma44", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn corrupted_table_is_rejected_with_witness() {
    let o = cayley(&["build", "--algebra", "split"]);
    let mut doc: AlgebraJson = serde_json::from_str(&stdout(&o)).unwrap();
    // u1 * u2 := v1 instead of v3
    doc.table[2][3] = ["0", "0", "0", "0", "0", "1", "0", "0"].map(String::from).to_vec();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = cayley(&["der", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("fails at x ="), "{err}");
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--field", "gf:3", "--suite", "thm31", "--seed", "7", "--samples", "30", "--format", "json"];
    let a = cayley(&args);
    let b = cayley(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r: VerificationReport = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(r.seed, 7);
    assert!(r.summary.pass > 0);
}
