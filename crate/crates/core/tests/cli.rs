mod common;

use std::io::Write;
use std::process::{Command, Output};

use qmin::QuantileInterval;
use serde_json::Value;

fn qmin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    common::data(name).to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn interval_of(line: &Value) -> QuantileInterval {
    serde_json::from_value(serde_json::json!({"lo": line["lo"], "hi": line["hi"], "empty": line["empty"]})).unwrap()
}

#[test]
fn quantile_of_empirical_median() {
    let out = qmin(&["quantile", "--dist", &data("d3.json"), "--tau", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let line: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(line["tau"], 0.5);
    assert_eq!(line["lo"], 2);
    assert_eq!(line["hi"], 3);
}

#[test]
fn quantile_at_extreme_levels_is_unbounded() {
    let out = qmin(&["quantile", "--dist", &data("u.json"), "--tau", "0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(interval_of(&lines[0]), QuantileInterval::new(f64::NEG_INFINITY, 0.0));
    assert_eq!(interval_of(&lines[1]), QuantileInterval::new(1.0, f64::INFINITY));
}

#[test]
fn quantile_verify_reports_agreement() {
    let out = qmin(&["quantile", "--dist", &data("mix.json"), "--tau", "0:1:21", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 21);
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["agree"], true, "{line}");
    }
    let csv = qmin(&[
        "quantile",
        "--dist",
        &data("d2.json"),
        "--tau",
        "0.5",
        "--format",
        "csv",
        "--verify",
    ]);
    assert_eq!(
        stdout(&csv),
        "tau,lo,hi,empty,solver_lo,solver_hi,agree\n0.5,0,1,false,0,1,true\n"
    );
}

#[test]
fn quantile_csv() {
    let out = qmin(&[
        "quantile",
        "--dist",
        &data("d2.json"),
        "--tau",
        "0,0.25,0.5,1",
        "--format",
        "csv",
    ]);
    assert_eq!(
        stdout(&out),
        "tau,lo,hi,empty\n0,-inf,0,false\n0.25,0,0,false\n0.5,0,1,false\n1,1,inf,false\n"
    );
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["quantile", "--dist", &data("bad.json"), "--tau", "0.5"],
        vec!["check", "--dist", &data("bad.json")],
        vec!["quantile", "--dist", &data("d2.json"), "--tau", "1.5"],
        vec!["quantile", "--dist", &data("d2.json"), "--tau", "half"],
        vec!["quantile", "--dist", "/nonexistent/spec.json", "--tau", "0.5"],
        vec!["trace", "--dist", &data("d1.json"), "--tau", "0.3", "--range", "2:-2:5"],
        vec!["trace", "--dist", &data("d1.json"), "--tau", "0.3", "--range", "-2:2:1"],
        vec!["trace", "--dist", &data("d1.json"), "--tau", "1", "--range", "-2:2:5"],
        vec!["trace", "--dist", &data("d1.json"), "--tau", "0.3", "--range", "-2:2"],
        vec!["frobnicate"],
    ] {
        let out = qmin(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_json_exits_2() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{{\"type\":\"atoms\",\"points\":[[0,1]], \"extra\": 1}}").unwrap();
    let out = qmin(&["quantile", "--dist", file.path().to_str().unwrap(), "--tau", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{{\"type\":\"gaussian\"}}").unwrap();
    let out = qmin(&["check", "--dist", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trace_of_point_mass() {
    let out = qmin(&["trace", "--dist", &data("d1.json"), "--tau", "0.3", "--range", "-2:2:5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(text.lines().next(), Some("q,phi,d_plus,d_minus"));
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[2][..2], [0.0, 0.0]);
    assert_eq!(rows[4][..2], [2.0, 1.4]);
    assert!(rows.windows(2).all(|w| w[0][2] <= w[1][2]));
}

#[test]
fn check_passes_on_bundled_specs() {
    for spec in ["d1.json", "d2.json", "d3.json", "u.json", "mix.json"] {
        let out = qmin(&["check", "--dist", &data(spec), "--seed", "1"]);
        assert_eq!(out.status.code(), Some(0), "{spec}: {}", stdout(&out));
        let report: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        let checks = report["checks"].as_array().unwrap();
        assert!(checks.len() >= 15);
        assert!(checks.iter().all(|c| c["pass"] == true));
    }
}

#[test]
fn check_default_seed_is_one() {
    let a = qmin(&["check", "--dist", &data("mix.json")]);
    let b = qmin(&["check", "--dist", &data("mix.json"), "--seed", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let c = qmin(&["check", "--dist", &data("mix.json"), "--seed", "2"]);
    assert_eq!(c.status.code(), Some(0));
}

#[test]
fn runs_in_process() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = qmin::cli::run(
        ["qmin", "quantile", "--dist", &data("d3.json"), "--tau", "0.25"],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    assert_eq!(
        String::from_utf8(out).unwrap(),
        "{\"tau\":0.25,\"lo\":1,\"hi\":2,\"empty\":false}\n"
    );
}
