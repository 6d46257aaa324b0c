//! Acceptance criteria 1–8, one PASS/FAIL line each.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};

use orthoduality::io::{parse_olat_document, parse_uvo_document, serialize_olat, serialize_uvo};
use orthoduality::suite;

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn orthodual(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orthodual")).args(args).output().expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout).into_owned() + &String::from_utf8_lossy(&out.stderr);
    (out.status.code().unwrap_or(-1), text)
}

fn files(dir: &Path) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("olat" | "uvo")))
        .collect();
    v.sort();
    v
}

fn criterion_8() -> (bool, Vec<String>) {
    let mut fails = Vec::new();
    let (code, out) = orthodual(&["verify-all", "--max-size", "8"]);
    if code != 0 {
        fails.push(format!("verify-all exited {code}:\n{out}"));
    }
    for f in files(&corpus().join("bad")) {
        let (code, out) = orthodual(&["check", f.to_str().unwrap()]);
        if code != 1 || !out.contains("FAIL") {
            fails.push(format!("{} exited {code}: {out}", f.display()));
        }
        let (code, out) = orthodual(&["check", "--format", "json", f.to_str().unwrap()]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap_or_default();
        let witnessed = !v["witness"].is_null() || v["uvo_axioms"].as_array().map_or(false, |a| {
            a.iter().any(|x| x["passed"] == false && !x["witness"].is_null())
        });
        if code != 1 || !witnessed {
            fails.push(format!("{} json report has no witness: {out}", f.display()));
        }
    }
    let mut all = files(&corpus());
    all.extend(files(&corpus().join("bad")));
    for f in &all {
        let text = std::fs::read_to_string(f).unwrap();
        let again = if f.extension().unwrap() == "olat" {
            parse_olat_document(&text).map(|d| serialize_olat(&d))
        } else {
            parse_uvo_document(&text).map(|d| serialize_uvo(&d))
        };
        if again.as_deref() != Ok(text.as_str()) {
            fails.push(format!("{} does not round-trip", f.display()));
        }
    }
    fails.insert(0, format!("{} corpus files", all.len()));
    (fails.len() == 1, fails)
}

fn main() -> ExitCode {
    let mut ok = true;
    let c = suite::Corpus::new(8).expect("enumeration up to size 8");
    let runs: [fn(&suite::Corpus) -> suite::CriterionOutcome; 7] = [
        suite::criterion_1,
        suite::criterion_2,
        suite::criterion_3,
        suite::criterion_4,
        suite::criterion_5,
        suite::criterion_6,
        suite::criterion_7,
    ];
    for run in runs {
        let o = run(&c);
        let pass = o.passed && o.within_budget();
        ok &= pass;
        let budget = o.budget.map(|b| format!(", budget {:.0}s", b.as_secs_f64())).unwrap_or_default();
        println!(
            "criterion {}: {} {} ({} checks, {:.3}s{budget})",
            o.id,
            if pass { "PASS" } else { "FAIL" },
            o.title,
            o.checks,
            o.elapsed.as_secs_f64()
        );
        for f in &o.failures {
            println!("    {f}");
        }
        if !o.within_budget() {
            println!("    over the time budget");
        }
    }
    let (pass, notes) = criterion_8();
    ok &= pass;
    println!("criterion 8: {} CLI verify-all, corrupted inputs, corpus round-trip ({})", if pass { "PASS" } else { "FAIL" }, notes[0]);
    for n in &notes[1..] {
        println!("    {n}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
