//! The binary's output and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graded-ideals"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// A spec file removed on drop.
struct Spec(PathBuf);

impl Drop for Spec {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

fn spec_file(contents: &str) -> Spec {
    static N: AtomicUsize = AtomicUsize::new(0);
    let path = std::env::temp_dir().join(format!(
        "graded-ideals-{}-{}.json",
        std::process::id(),
        N.fetch_add(1, Ordering::SeqCst)
    ));
    std::fs::write(&path, contents).unwrap();
    Spec(path)
}

fn with_spec(cmd: &str, spec: &str, extra: &[&str]) -> Output {
    let file = spec_file(spec);
    let path = file.0.to_string_lossy().into_owned();
    let mut args = vec![cmd, "--spec", path.as_str()];
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const Z12I: &str = r#"{"ring": {"kind": "poly_quotient", "modulus": 12, "poly": [1, 0, 1], "grade_group": [2], "x_grade": [1]},
  "ideal": [], "set": [[3, 0]]}"#;

#[test]
fn classify_example() {
    let o = with_spec("classify", Z12I, &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("graded_weakly_S_primary: true"), "{out}");
    assert!(out.contains("graded_S_primary: true, s=3"), "{out}");
}

#[test]
fn classify_json_has_every_row() {
    let o = with_spec("classify", Z12I, &["--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    // 11 set-level predicates plus 8 per-grade ones in each of two grades
    assert_eq!(rows.len(), 27);
}

#[test]
fn classify_z30() {
    let o = with_spec("classify", r#"{"ring": {"kind": "cyclic", "modulus": 30}, "ideal": [[6]], "set": []}"#, &[]);
    assert!(stdout(&o).contains("graded_weakly_primary: false, counter=(2,3)"));
}

#[test]
fn exit_codes() {
    let code = |cmd: &str, spec: &str| with_spec(cmd, spec, &[]).status.code();
    assert_eq!(code("classify", r#"{"ring": {"kind": "cyclic", "modulus": 12}, "ideal": [[1]]}"#), Some(3));
    assert_eq!(code("classify", r#"{"ring": {"kind": "cyclic", "modulus": 12}, "ideal": [[4]], "set": [[4]]}"#), Some(3));
    assert_eq!(code("classify", r#"{"ring": {"kind": "cyclic"}}"#), Some(2));
    assert_eq!(code("classify", "not json"), Some(2));
    assert_eq!(code("enumerate", r#"{"ring": {"kind": "cyclic", "modulus": 65537}}"#), Some(4));
    assert_eq!(run(&["classify", "--spec", "/nonexistent/spec.json"]).status.code(), Some(2));
    assert_eq!(run(&["theorems", "--id", "prop99"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn error_message_for_whole_ideal() {
    let o = with_spec("classify", r#"{"ring": {"kind": "cyclic", "modulus": 12}, "ideal": [[1]]}"#, &[]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("ideal not proper"));
}

#[test]
fn radical_localize_enumerate() {
    let spec = r#"{"ring": {"kind": "cyclic", "modulus": 12}, "ideal": [[4]], "set": [[3]]}"#;
    assert!(stdout(&with_spec("radical", spec, &[])).contains("Grad(P) = (2)"));
    let loc = stdout(&with_spec("localize", spec, &[]));
    assert!(loc.contains("kernel = (4)") && loc.contains("S^-1 P = (0)"), "{loc}");
    let v: serde_json::Value = serde_json::from_slice(&with_spec("enumerate", spec, &["--json"]).stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
}

#[test]
fn witness_table() {
    let out = stdout(&run(&["witness"]));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS ")).count(), 8);
}

#[test]
fn single_theorem() {
    let out = stdout(&run(&["theorems", "--id", "prop1", "--no-timestamp"]));
    assert!(out.starts_with("prop1 "), "{out}");
    assert!(out.contains("verified=1 falsified=0 vacuous=0"), "{out}");
}

#[test]
fn group_selection_and_corpus_flag() {
    let out = stdout(&run(&["theorems", "--id", "thm4", "--corpus", "small", "--json", "--no-timestamp"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let ids: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["thm4i", "thm4ii", "thm4iii"]);
    assert_eq!(v["corpus"], "small");
    assert!(v.get("generated_at").is_none());
}
