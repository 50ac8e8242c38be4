use std::process::{Command, Output};

use serde_json::Value;

fn densecode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_densecode"))
        .args(args)
        .env_remove("DENSECODE_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_error(out: &Output) -> Value {
    let v: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    v["error"].clone()
}

#[test]
fn capacity_bell_one_sided_near_one_bit() {
    let out = densecode(&["capacity", "--state", "bell", "--channel", "one-sided-dep", "--d", "2", "--p", "0.252"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let c = v["value_bits"].as_f64().unwrap();
    assert!((c - 1.001_067_243_4).abs() < 1e-9, "{c}");
    for key in ["avg_state_entropy_bits", "channel_output_entropy_bits", "condition_residual"] {
        assert!(v[key].is_number(), "missing {key}");
    }
}

#[test]
fn capacity_noiseless_two_bits() {
    let out = densecode(&["capacity", "--state", "bell", "--channel", "two-sided-dep", "--p", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["value_bits"].as_f64(), Some(2.0));
}

#[test]
fn threshold_reports_both_roots() {
    let out = densecode(&["threshold"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0.344492283"), "{text}");
    assert!(text.contains("0.252386166"), "{text}");
}

#[test]
fn sweep_csv_shape() {
    let out = densecode(&["sweep", "--figure", "figure4", "--points", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,one_sided_bell,two_sided_bell,classical,unit");
    assert_eq!(lines.len(), 12);
    assert!(lines[1].starts_with("0,2,2,1,1"), "{}", lines[1]);
}

#[test]
fn sweep_to_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig3.json");
    let args = ["sweep", "--figure", "figure3", "--points", "21", "--format", "json"];
    let to_file = densecode(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, densecode(&args).stdout);
    let v: Value = serde_json::from_slice(&written).unwrap();
    assert_eq!(v["series"].as_array().unwrap().len(), 4);
}

#[test]
fn identical_config_is_byte_identical() {
    let args = ["optimize", "--p", "0.3", "--restarts", "4", "--seed", "9"];
    let a = densecode(&args);
    let b = densecode(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_falls_back_to_environment() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_densecode"));
        cmd.args(["optimize", "--p", "0.5", "--restarts", "3"]).args(extra);
        match env {
            Some(s) => cmd.env("DENSECODE_SEED", s),
            None => cmd.env_remove("DENSECODE_SEED"),
        };
        cmd.output().unwrap().stdout
    };
    assert_eq!(run(Some("77"), &[]), run(None, &["--seed", "77"]));
    assert_ne!(run(Some("77"), &[]), run(None, &[]));
}

#[test]
fn custom_pauli_spec_and_state_files() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(&spec, r#"{"d": 2, "q": [[0.7, 0.1], [0.1, 0.1]]}"#).unwrap();
    let state = dir.path().join("state.json");
    std::fs::write(
        &state,
        r#"{"dims": [2, 2], "real": [[0.5,0,0,0.5],[0,0,0,0],[0,0,0,0],[0.5,0,0,0.5]]}"#,
    )
    .unwrap();
    let out = densecode(&[
        "capacity",
        "--state",
        "file",
        "--state-path",
        state.to_str().unwrap(),
        "--channel",
        "one-sided-pauli",
        "--spec-path",
        spec.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    // log₂ 4 − H(0.7, 0.1, 0.1, 0.1)
    let expected = 2.0 + 0.7 * 0.7f64.log2() + 0.3 * 0.1f64.log2();
    let c = stdout_json(&out)["value_bits"].as_f64().unwrap();
    assert!((c - expected).abs() < 1e-10, "{c} vs {expected}");
}

#[test]
fn verify_passes_all_properties() {
    let out = densecode(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let props = v["properties"].as_array().expect("property list");
    assert!(props.len() >= 26);
    assert!(props.iter().all(|p| p["passed"] == Value::Bool(true)));
}

#[test]
fn out_of_range_parameter_is_an_error_object() {
    let out = densecode(&["capacity", "--p", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let e = stderr_error(&out);
    assert!(e["kind"].is_string() && e["message"].as_str().unwrap().contains('p'));
}

#[test]
fn unknown_flag_is_invalid_config() {
    let out = densecode(&["capacity", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_error(&out)["kind"], "invalid_config");
}

#[test]
fn condition_violation_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(&spec, r#"{"d": 2, "q": [[0.6, 0.3], [0.1, 0.0]]}"#).unwrap();
    let out = densecode(&[
        "capacity",
        "--state",
        "schmidt",
        "--alpha",
        "0.2",
        "--channel",
        "two-sided-pauli",
        "--spec-path",
        spec.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_error(&out)["kind"], "condition_violated");
}

#[test]
fn missing_spec_file_is_an_error() {
    let out = densecode(&["capacity", "--channel", "one-sided-pauli", "--spec-path", "/nonexistent/spec.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_error(&out)["message"].is_string());
}
