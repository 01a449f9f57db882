//! The binary as a user sees it: exit codes, output files, reproducibility
//! and the committed concordance.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use curvedqm::concordance::{generate_concordance, REGISTRY};

fn curvedqm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvedqm")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    curvedqm(args).status.code().expect("exit code")
}

const OSC: [&str; 10] = ["--kind", "nlho", "--d", "3", "--l", "0", "--beta", "2", "--lambda", "-1"];

fn with<'a>(cmd: &'a str, extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend_from_slice(&OSC);
    v.extend_from_slice(extra);
    v
}

#[test]
fn exit_codes_follow_the_outcome() {
    assert_eq!(code(&with("spectrum", &[])), 0);
    assert_eq!(code(&with("sample", &["--points", "5"])), 0);
    // a coupling this strong is not resolved by the fixed verification grids
    let unresolved =
        ["verify", "--kind", "nlho", "--d", "3", "--l", "0", "--beta", "1e5", "--lambda", "-1", "--group", "dsusy"];
    assert_eq!(code(&unresolved), 1);
    assert_eq!(code(&["spectrum", "--kind", "nlho", "--d", "1", "--l", "0", "--beta", "2", "--lambda", "-1"]), 2);
    assert_eq!(code(&["verify", "-o", "report.csv"]), 2);
    assert_eq!(code(&with("spectrum", &["--ext-type", "III", "--m", "1"])), 2);
    assert_eq!(code(&["spectrum", "--kind", "nlho", "--d", "3", "--l", "0", "--lambda", "-1"]), 2);
    // type II on the sphere needs m < a + 1/2
    let inadmissible = curvedqm(&with("spectrum", &["--ext-type", "II", "--m", "2"]));
    assert_eq!(inadmissible.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&inadmissible.stderr).contains("m < a + 1/2"));
    assert_eq!(code(&with("verify", &["--ext-type", "II", "--m", "2", "--group", "rational"])), 3);
}

#[test]
fn reproducible_reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["csv", "json"] {
        let paths: Vec<_> = ["a", "b"].iter().map(|n| dir.path().join(format!("{n}.{format}"))).collect();
        for p in &paths {
            let args = ["verify", "--group", "pct", "--group", "dsusy", "--reproducible", "--format", format, "--output"];
            let mut args = args.to_vec();
            args.push(p.to_str().unwrap());
            assert_eq!(code(&args), 0);
        }
        let (a, b) = (fs::read(&paths[0]).unwrap(), fs::read(&paths[1]).unwrap());
        assert!(!a.is_empty());
        assert_eq!(a, b, "{format} reruns differ");
    }
    let json: serde_json::Value = serde_json::from_slice(&fs::read(dir.path().join("a.json")).unwrap()).unwrap();
    assert!(json.get("generated_at_unix").map_or(true, |v| v.is_null()));
    assert_eq!(json["summary"]["failed"], 0);
}

#[test]
fn zero_count_writes_only_the_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("levels.csv");
    assert_eq!(code(&with("spectrum", &["--count", "0", "--output", path.to_str().unwrap()])), 0);
    assert_eq!(fs::read_to_string(&path).unwrap(), "n_r,E,E_script,admissible\n");
    let out = curvedqm(&with("spectrum", &["--count", "0", "--format", "json"]));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 0);
}

#[test]
fn spectrum_json_reports_closed_form_levels() {
    let out = curvedqm(&with("spectrum", &["--count", "3", "--format", "json"]));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = json["rows"].as_array().unwrap();
    // β(4n + 2a + 1) − λ(2n + a)² with a = 1, β = 2, λ = −1
    for (n, row) in rows.iter().enumerate() {
        let n = n as f64;
        assert_eq!(row["E"].as_f64().unwrap(), 2.0 * (4.0 * n + 3.0) + (2.0 * n + 1.0).powi(2));
    }
}

#[test]
fn committed_concordance_is_current() {
    let committed = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/concordance.md");
    let generated = generate_concordance(REGISTRY).unwrap();
    assert_eq!(fs::read_to_string(committed).unwrap(), generated, "regenerate with `curvedqm concordance`");
    let out = curvedqm(&["concordance"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), generated);
}
