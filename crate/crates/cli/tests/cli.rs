use std::path::PathBuf;
use std::process::{Command, Output};

use magical_core::magical::{classify_real_form, ClassifiedOrbit};
use magical_core::moduli::SlodowyReport;
use magical_core::verify::VerifyReport;
use magical_core::RealForm;
use serde_json::Value;

fn magical(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_magical"))
        .args(args)
        .env_remove("MAGICAL_DATASET")
        .output()
        .unwrap()
}

fn magical_with_dataset(path: &PathBuf, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_magical"))
        .args(args)
        .env("MAGICAL_DATASET", path)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = magical(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("magical-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn orbit_json() {
    let v = json(&["orbit", "A", "4", "--partition", "2,2,1", "--format", "json"]);
    assert_eq!(v["wdd"], serde_json::json!([0, 1, 1, 0]));
    assert_eq!(v["n"], serde_json::json!({"0": 4, "1": 4, "2": 4}));
    assert_eq!(v["dim_c"], 4);
    assert_eq!(v["dim_g0"], 8);
    let short = json(&["orbit", "A", "4", "--partition", "2^2,1", "--format", "json"]);
    assert_eq!(short, v);
}

#[test]
fn orbit_table_and_wdd_input() {
    let o = magical(&["orbit", "A", "2", "--partition", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("wdd        2,2"), "{text}");
    assert!(text.contains("n4         1"), "{text}");
    let v = json(&["orbit", "E6", "6", "--wdd", "1,0,0,0,0,1", "--format", "json"]);
    assert_eq!(v["n"], serde_json::json!({"0": 22, "1": 16, "2": 8}));
    let d4 = json(&["orbit", "D", "4", "--partition", "2,2,2,2", "--format", "json"]);
    assert_eq!(d4["wdd"], serde_json::json!([0, 0, 0, 2]));
    assert_eq!(d4["wdd_ii"], serde_json::json!([0, 0, 2, 0]));
}

#[test]
fn parity_violation_exits_2() {
    let o = magical(&["orbit", "C", "2", "--partition", "3,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parity rule"));
    assert_eq!(magical(&["orbit", "A", "4", "--partition", "3,1"]).status.code(), Some(2));
    assert_eq!(magical(&["orbit", "Q", "4", "--partition", "3,1"]).status.code(), Some(2));
}

#[test]
fn classify_rows() {
    let v = json(&["classify", "su", "2", "3", "--format", "json"]);
    let rows: Vec<ClassifiedOrbit> = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(rows, classify_real_form(RealForm::Su { p: 2, q: 3 }).unwrap());
    assert_eq!(rows.len(), 1);
    assert_eq!(v[0]["status"]["verdict"], "OddMagical");
    assert_eq!(v[0]["n"], serde_json::json!({"0": 4, "1": 4, "2": 4}));
    assert_eq!(v[0]["s"], 0);

    assert_eq!(json(&["classify", "sp", "1", "1", "--format", "json"]), serde_json::json!([]));

    let v = json(&["classify", "su", "3", "3", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["status"]["verdict"], "EvenMagical");
    assert_eq!(v[0]["label"]["partition"], serde_json::json!([2, 2, 2]));

    let table = stdout(&magical(&["classify", "su", "2", "3"]));
    let first: Vec<&str> = table.lines().map(|l| l.split_whitespace().next().unwrap_or("")).collect();
    assert!(first[1].chars().all(|c| c == '-'), "{table}");
    assert_eq!(first[0], "form");
    assert!(first[2..].starts_with(&["orbit", "verdict", "n0", "n1", "n2", "s"]), "{table}");
}

#[test]
fn classify_family_scan_and_csv() {
    let o = magical(&["classify", "so*", "--up-to", "5", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("form,orbit,verdict,n0"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.iter().any(|r| r.starts_with("so*(10),\"[2^4,1^2]\",odd")), "{text}");
    assert!(rows.iter().any(|r| r.starts_with("so*(8),[2^4]_II,even")), "{text}");
}

#[test]
fn exceptional_classification_uses_the_dataset() {
    let v = json(&["classify", "E6", "-14", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["even"], false);
    assert_eq!(json(&["classify", "E7", "7", "--format", "json"]), serde_json::json!([]));
    assert_eq!(magical(&["classify", "F4", "4"]).status.code(), Some(3));

    let other = temp_file(
        "e7.jsonl",
        r#"{"realform": "E7^7", "wdd": [1,0,0,1,0,1,0], "source_row": "only row"}"#,
    );
    assert_eq!(magical_with_dataset(&other, &["classify", "E6", "-14"]).status.code(), Some(3));
    let missing = std::env::temp_dir().join("magical-cli-does-not-exist.jsonl");
    assert_eq!(magical_with_dataset(&missing, &["classify", "E6", "-14"]).status.code(), Some(3));
}

#[test]
fn slodowy_reports() {
    let v = json(&["slodowy", "su", "2", "2", "--partition", "2,2", "--genus", "2", "--format", "json"]);
    let reports: Vec<SlodowyReport> = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&reports).unwrap(), v);
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.gap == 0 && r.expected_dim == 30));

    let v = json(&["slodowy", "su", "2", "3", "--partition", "2,2,1", "--genus", "2", "--format", "json"]);
    let reports: Vec<SlodowyReport> = serde_json::from_value(v).unwrap();
    assert!(reports.iter().all(|r| r.gap == 8 && r.milnor_wood == Some(4)));

    let v = json(&["slodowy", "sl", "2", "--partition", "2", "--genus", "3", "--format", "json"]);
    let reports: Vec<SlodowyReport> = serde_json::from_value(v).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!((reports[0].slodowy_param_dim, reports[0].expected_dim), (12, 12));

    let all = json(&["slodowy", "su", "2", "3", "--partition", "2,2,1", "--genus", "2", "--all", "--format", "json"]);
    assert_eq!(all.as_array().unwrap().len(), 3);
}

#[test]
fn slodowy_errors() {
    let o = magical(&["slodowy", "su", "2", "2", "--partition", "2,2", "--genus", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(magical(&["slodowy", "su", "2", "2", "--genus", "2"]).status.code(), Some(2));
    assert_eq!(magical(&["slodowy", "E6", "-14", "--genus", "2"]).status.code(), Some(3));
}

#[test]
fn verify_passes_and_round_trips() {
    let o = magical(&["verify", "--max-rank", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).trim_end().ends_with("0 mismatches"));
    let v = json(&["verify", "--max-rank", "5", "--format", "json"]);
    let report: VerifyReport = serde_json::from_value(v.clone()).unwrap();
    assert!(report.passed());
    assert!(report.checks.iter().all(|c| c.passed && c.cases > 0));
    assert_eq!(serde_json::to_value(&report).unwrap(), v);
    assert_eq!(magical(&["verify", "--max-rank", "9"]).status.code(), Some(2));
}

#[test]
fn verify_names_a_corrupted_row() {
    let bad = temp_file(
        "bad.jsonl",
        r#"{"realform": "E6^-14", "wdd": [1,0,0,0,0,1], "dim_c_cap_h": 40, "source_row": "tampered row 7"}"#,
    );
    let o = magical_with_dataset(&bad, &["verify", "--max-rank", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL dataset") && text.contains("tampered row 7"), "{text}");
}

#[test]
fn output_is_deterministic() {
    let args = ["classify", "so", "--up-to", "7", "--format", "json"];
    assert_eq!(magical(&args).stdout, magical(&args).stdout);
    let args = ["verify", "--max-rank", "3", "--format", "csv"];
    assert_eq!(magical(&args).stdout, magical(&args).stdout);
}
