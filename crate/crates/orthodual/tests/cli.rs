use std::path::{Path, PathBuf};
use std::process::Command;

fn corpus(f: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(f);
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orthodual")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    let (code, out, _) = run(&a);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn check_reports_m3_witness_for_o10() {
    let (code, out, _) = run(&["check", &corpus("o10.olat")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("non-distributive (M₃ witness"), "{out}");
}

#[test]
fn roundtrip_finds_isomorphism() {
    let (code, out, _) = run(&["roundtrip", &corpus("mo2.olat")]);
    assert_eq!(code, 0);
    assert!(out.contains("isomorphism found"), "{out}");
    let (code, v) = json(&["roundtrip", "B8"]);
    assert_eq!((code, &v["ok"]), (0, &serde_json::Value::Bool(true)));
}

#[test]
fn bad_ocomp_fails_with_witness() {
    let (code, out, err) = run(&["check", &corpus("bad/m3_bad_ocomp.olat")]);
    assert_eq!(code, 1);
    assert!((out + &err).contains("ComplementLawFails(c)"));
    let (code, v) = json(&["check", &corpus("bad/m3_bad_ocomp.olat")]);
    assert_eq!(code, 1);
    assert_eq!(v["witness"]["law"], "ComplementLawFails");
    assert_eq!(v["witness"]["elements"][0], "c");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["check", "NoSuchLattice"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("broken.olat");
    std::fs::write(&p, "olat v1\nelements: 0 a 1\ncovers: 0 < zz\n").unwrap();
    let (code, out, err) = run(&["check", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!((out + &err).contains("broken.olat:3:13: unknown element `zz`"));
}

#[test]
fn out_flag_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("atoms.json");
    let (code, _, _) = run(&["--format", "json", "--out", p.to_str().unwrap(), "atoms", "B8"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(v["bijection"], true);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 3);
}

#[test]
fn dualize_and_sum() {
    let (code, v) = json(&["dualize", "TwoByTwo"]);
    assert_eq!(code, 0);
    assert_eq!(v["space"]["points"], serde_json::json!(["↑a", "↑a'", "↑1"]));
    let (code, v) = json(&["sum", "O2", "TwoByTwo"]);
    assert_eq!(code, 0, "{v}");
    let (code, _, _) = run(&["sum", "O2", &corpus("xm3.uvo")]);
    assert_eq!(code, 1);
}

#[test]
fn enumerate_counts() {
    let (code, v) = json(&["--max-size", "8", "enumerate"]);
    assert_eq!(code, 0);
    let s = v.to_string();
    for n in ["15", "53", "222"] {
        assert!(s.contains(n), "{s}");
    }
}

#[test]
fn export_dot_is_deterministic() {
    let a = run(&["export-dot", "--dual", "--perp", "MO2"]);
    let b = run(&["export-dot", "--dual", "--perp", "MO2"]);
    assert_eq!(a.0, 0);
    assert!(a.1.starts_with("digraph"));
    assert_eq!(a.1, b.1);
}
