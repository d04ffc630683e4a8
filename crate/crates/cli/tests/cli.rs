use std::path::Path;
use std::process::{Command, Output};

use reslat::corpus::{builtin, render_spec, KEYS};

fn reslat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reslat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn analyze_rl7q_reports_center_and_max() {
    let o = reslat(&["analyze", "--builtin", "RL7Q"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("B(A) = {0, 1}"), "{s}");
    assert!(s.contains("|Max| = 2"), "{s}");
    assert!(s.contains("Ds(A) = {e, 1}"));
}

#[test]
fn analyze_bool2_is_all_positive() {
    let s = stdout(&reslat(&["analyze", "--builtin", "BOOL2"]));
    let classes: Vec<&str> =
        s.lines().skip_while(|l| *l != "classes:").skip(1).take_while(|l| l.starts_with("  ")).collect();
    assert_eq!(classes.len(), 14);
    assert!(classes.iter().all(|l| l.split_whitespace().nth(1) == Some("yes")), "{s}");
    assert!(!s.contains("fails"));
}

#[test]
fn structured_output_is_stable_json() {
    let a = reslat(&["analyze", "--builtin", "RL6D", "--format", "structured"]);
    let b = reslat(&["analyze", "--builtin", "RL6D", "--format", "structured"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["report"]["dense"], serde_json::json!(["c", "1"]));
    assert_eq!(v["filters"].as_array().unwrap().len(), 5);
}

#[test]
fn missing_and_malformed_files_exit_3() {
    assert_eq!(code(&reslat(&["analyze", "/no/such/file.json"])), 3);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{ \"name\": ").unwrap();
    let o = reslat(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
}

#[test]
fn invalid_algebra_exits_1() {
    let mut spec = builtin("CHAIN3_LUK").unwrap().spec;
    // a product that is not monotone
    spec.prod[1][1] = "1".into();
    spec.imp = None;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, render_spec(&spec)).unwrap();
    assert_eq!(code(&reslat(&["analyze", path.to_str().unwrap()])), 1);
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(code(&reslat(&["frobnicate"])), 3);
    assert_eq!(code(&reslat(&["analyze"])), 3);
    assert_eq!(code(&reslat(&["analyze", "--builtin", "NOPE"])), 3);
    assert_eq!(code(&reslat(&["quotient", "--builtin", "RL6D", "--filter", "zz"])), 3);
    assert_eq!(code(&reslat(&["enum", "--size", "3", "--hunt", "bl=>nonsense"])), 3);
    assert_eq!(code(&reslat(&["enum", "--size", "9"])), 3);
}

#[test]
fn check_claims_rl7q_fails_with_expected_instances() {
    let o = reslat(&["check-claims", "--builtin", "RL7Q"]);
    assert_eq!(code(&o), 2);
    let s = stdout(&o);
    assert!(s.contains("PASS quasi-local-not-reflected"), "{s}");
    assert!(s.contains("PASS lifting-may-fail"));
    assert!(s.contains("FAIL glivenko-star-equation-quasi-local-lifts"));
    assert_eq!(s.matches("documented discrepancy").count(), 4);
}

#[test]
fn check_claims_rl6d_reports_the_dense_quotient_line() {
    let o = reslat(&["check-claims", "--builtin", "RL6D"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    let line = s.lines().find(|l| l.contains("dense-quotient-may-differ")).unwrap();
    assert!(line.contains("F = {d,1}: classes {0,a} {b,c} {d,1}"), "{line}");
    assert!(s.contains("documented discrepancy. published: with F = {d,1}"));
}

#[test]
fn check_claims_corpus_exit_codes() {
    for key in KEYS {
        let expected =
            if builtin(key).unwrap().discrepancies.iter().any(|d| d.claim.starts_with("glivenko")) { 2 } else { 0 };
        let o = reslat(&["check-claims", "--builtin", key]);
        assert_eq!(code(&o), expected, "{key}");
        assert_eq!(stdout(&o).lines().any(|l| l.starts_with("FAIL")), expected == 2, "{key}");
    }
}

#[test]
fn quotient_rl6d_by_d() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q.json");
    let o = reslat(&["quotient", "--builtin", "RL6D", "--filter", "d", "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("F = {d, 1} generated by {d}"));
    assert!(s.contains("classes (3):"));
    assert!(s.contains("b/F = {b, c}"));
    let again = reslat(&["analyze", out.to_str().unwrap()]);
    assert_eq!(code(&again), 0);
    assert!(stdout(&again).contains("algebra RL6D/F (3 elements)"));
}

#[test]
fn dot_export_writes_seven_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.dot");
    let o = reslat(&["dot", "--builtin", "RL7Q", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 7);
    assert_eq!(dot.matches(" -> ").count(), 7);
}

#[test]
fn enum_counts() {
    assert_eq!(stdout(&reslat(&["enum", "--size", "2"])).lines().next(), Some("1 algebra"));
    assert_eq!(stdout(&reslat(&["enum", "--size", "4"])).lines().next(), Some("7 algebras"));
    assert_eq!(stdout(&reslat(&["enum", "--size", "5", "--chains"])).lines().next(), Some("22 algebras"));
    assert_eq!(stdout(&reslat(&["enum", "--size", "4", "--where", "mv"])).lines().next(), Some("2 algebras"));
}

#[test]
fn enum_writes_algebra_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = reslat(&["enum", "--size", "4", "-o", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 7);
    let first = dir.path().join("R4.0.0.json");
    assert!(Path::new(&first).exists());
    assert_eq!(code(&reslat(&["analyze", first.to_str().unwrap()])), 0);
}

#[test]
fn hunts() {
    let o = reslat(&["enum", "--size", "5", "--hunt", "bl=>lifting_boolean_center"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("exhausted through size 5"));

    let o = reslat(&["enum", "--size", "5", "--hunt", "dense_quotient_quasi_local=>quasi_local"]);
    assert_eq!(code(&o), 2);
    let s = stdout(&o);
    assert!(s.starts_with("counterexample R5.3.2 (5 elements)"), "{s}");
    let json_start = s.find("\n{").unwrap() + 1;
    let spec = reslat::corpus::parse_spec(&s[json_start..]).unwrap();
    assert_eq!(spec.elements.len(), 5);
}

#[test]
fn corpus_list_names_every_key() {
    let s = stdout(&reslat(&["corpus-list"]));
    for key in KEYS {
        assert!(s.lines().any(|l| l.starts_with(key)), "{key}");
    }
    let v: serde_json::Value =
        serde_json::from_slice(&reslat(&["corpus-list", "--format", "structured"]).stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), KEYS.len());
}
