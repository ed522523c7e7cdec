use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn zlab(dir: &Path, args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zlab"));
    cmd.current_dir(dir).args(args).env_remove("ZLAB_BUDGET_TERMS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("spawn zlab")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn build(dir: &Path, params: &str, file: &str) {
    let out = zlab(dir, &["catalog", "build", "--family", "1", "--params", params, "--out", file], &[]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn build_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    build(dir.path(), "AffA3,AffA3", "a.json");
    build(dir.path(), "AffA3,AffA3", "b.json");
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    assert_eq!(a, std::fs::read(dir.path().join("b.json")).unwrap());
    let iso = zlab(dir.path(), &["isocheck", "--in", "a.json", "b.json"], &[]);
    assert_eq!(json(&iso)["isomorphic"], Value::Bool(true));
}

#[test]
fn classify_tensor_of_affine_cycles() {
    let dir = tempfile::tempdir().unwrap();
    build(dir.path(), "AffA3,AffA3", "g.json");
    let out = zlab(dir.path(), &["classify", "--in", "g.json"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["recurrent"], Value::Bool(true));
    assert_eq!(v["regime"], "AffineAffine");
}

#[test]
fn numeric_series_feeds_growth() {
    let dir = tempfile::tempdir().unwrap();
    build(dir.path(), "AffA1,AffA1", "g.json");
    let ev = zlab(dir.path(), &["evolve", "--in", "g.json", "--steps", "256", "--out", "s.csv"], &[]);
    assert!(ev.status.success());
    let out = zlab(dir.path(), &["growth", "--in", "s.csv"], &[]);
    let v = json(&out);
    assert_eq!(v["tag"], "QuadraticExponential");
    assert!((v["rate"].as_f64().unwrap() - 2f64.ln() / 2.0).abs() < 1e-6);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let usage = zlab(dir.path(), &["frobnicate"], &[]);
    assert_eq!(usage.status.code(), Some(2));
    assert_eq!(json(&usage)["error"]["kind"], "usage");

    build(dir.path(), "AffA1,AffA1", "g.json");
    let budget = zlab(dir.path(), &["evolve", "--in", "g.json", "--mode", "symbolic", "--steps", "10"], &[("ZLAB_BUDGET_TERMS", "50")]);
    assert_eq!(budget.status.code(), Some(4));

    let failed = zlab(dir.path(), &["twist", "conserved", "--type", "AffA1", "--trials", "3"], &[]);
    assert_eq!(failed.status.code(), Some(3));

    let missing = zlab(dir.path(), &["classify", "--in", "nope.json"], &[]);
    assert_eq!(missing.status.code(), Some(1));
}
