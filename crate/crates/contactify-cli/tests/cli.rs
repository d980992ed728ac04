use std::process::{Command, Output};

fn contactify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contactify")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_shows_the_catalog() {
    let out = contactify(&["list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| !l.ends_with("(forms only)")).count(), 9);
    assert!(text.lines().last().unwrap().starts_with("cartan-f4-original"));
}

#[test]
fn describe_prints_the_recipe() {
    let out = contactify(&["describe", "e6-I-25"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("S = R^2 (x) Wedge^2 R^5"));
    let missing = contactify(&["describe", "nonexistent"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn run_reports_and_writes_files() {
    let dir = std::env::temp_dir().join(format!("contactify-cli-{}", std::process::id()));
    let out = contactify(&["run", "so76-21", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("n_-2: 15, n_-1: 6, n_0: 36, n_1: 6, n_2: 15; total 78"));
    assert!(text.ends_with("all checks passed\n"));
    assert_eq!(std::fs::read_to_string(dir.join("report.txt")).unwrap(), text);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(json["classification"]["dim"], 78);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn run_is_byte_identical_across_invocations() {
    let a = contactify(&["run", "qc-pos", "--format", "json"]);
    let b = contactify(&["run", "qc-pos", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn failing_checks_set_the_exit_code() {
    let dir = std::env::temp_dir().join(format!("contactify-empty-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = contactify(&["run", "b3-flat36", "--golden-dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("[FAIL] forms/golden-lambda: missing b3-flat36/lambda.txt"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn export_cartan_forms_as_text() {
    let out = contactify(&["export", "cartan-f4-original", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(text.starts_with("dx^9 + x^1 dx^8 + x^2 dx^5 + x^3 dx^7 + x^4 dx^6\n"));
}

#[test]
fn export_other_items() {
    let out = contactify(&["export", "f4-split", "--item", "rho", "--format", "json"]);
    let rho: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rho["size"], 8);
    assert_eq!(rho["matrices"].as_array().unwrap().len(), 22);
    let latex = contactify(&["export", "qc-neg", "--item", "omega", "--format", "latex"]);
    assert!(stdout(&latex).starts_with("\\omega^{1} = "));
    let bad = contactify(&["export", "cartan-f4-original", "--item", "tau"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn oracle_flags() {
    let out = contactify(&["run", "b3-flat36", "--oracle", "--wmax", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("[pass] oracle/dimension: 21 (Tanaka total 21)"));
    let capped = contactify(&["run", "e6-I-24", "--oracle"]);
    assert_eq!(capped.status.code(), Some(1));
    assert!(stdout(&capped).contains("--allow-huge"));
}
