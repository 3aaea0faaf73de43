use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn desargues(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_desargues"))
        .args(args)
        .env_remove("PLANE_DEFAULT_BUDGET")
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, v.to_string()).unwrap();
    path
}

fn pt(x: impl Into<Value>, y: impl Into<Value>) -> Value {
    json!({ "x": x.into(), "y": y.into() })
}

fn line(bx: i64, by: i64, dx: i64, dy: i64) -> Value {
    json!({ "base": pt(bx, by), "dir": pt(dx, dy) })
}

/// Triangle on three horizontal lines and its translate by (3, 0).
fn translated_d1() -> Value {
    json!({
        "l1": line(0, 0, 1, 0), "l2": line(0, 1, 1, 0), "l3": line(0, 2, 1, 0),
        "P": pt(0, 0), "Pp": pt(3, 0),
        "Q": pt(1, 1), "Qp": pt(4, 1),
        "R": pt(5, 2), "Rp": pt(8, 2),
    })
}

/// Triangle and its image under the scaling by 2 about the origin.
fn scaled_d2() -> Value {
    json!({
        "V": pt(0, 0),
        "l1": line(0, 0, 1, 0), "l2": line(0, 0, 0, 1), "l3": line(0, 0, 1, 1),
        "P": pt(1, 0), "Pp": pt(2, 0),
        "Q": pt(0, 3), "Qp": pt(0, 6),
        "R": pt(1, 1), "Rp": pt(2, 2),
    })
}

fn run_check(kind: &str, config: &Value, extra: &[&str]) -> Run {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "config.json", config);
    let mut args = vec!["check", "--kind", kind, "--config", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    desargues(&args)
}

#[test]
fn gf3_axioms_report_counts() {
    let r = desargues(&["verify", "--field", "gf:3", "--mode", "exhaustive"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("9 points, 12 lines"), "{}", r.stdout);
    assert!(r.stdout.lines().filter(|l| l.starts_with("CHECK ")).all(|l| l.contains(" PASS ")));
    assert!(r.stdout.ends_with("RESULT PASS\n"));
}

#[test]
fn verify_json_is_parseable() {
    let r = desargues(&["--format", "json", "verify", "--field", "gf:2", "--suite", "all"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn oversized_exhaustive_configurations_are_undecided() {
    let r = desargues(&["verify", "--field", "gf:5", "--suite", "configurations"]);
    assert_eq!(r.code, 3, "{}", r.stdout);
    assert!(r.stdout.contains("skipped"));
}

#[test]
fn translated_triangle_passes_d1() {
    let r = run_check("d1", &translated_d1(), &[]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.starts_with("CHECK d1 PASS"));
}

#[test]
fn scaled_triangle_passes_d2_over_gf7() {
    let r = run_check("d2", &scaled_d2(), &["--field", "gf:7"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
}

#[test]
fn failed_hypothesis_is_not_a_violation() {
    let mut c = translated_d1();
    c["Qp"] = pt(9, 1);
    let r = run_check("d1", &c, &[]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("hypothesis"), "{}", r.stdout);
}

#[test]
fn pappus_holds() {
    let c = json!({
        "l": line(0, 0, 1, 0), "m": line(0, 0, 0, 1),
        "P": pt(0, 0),
        "Q": pt(1, 0), "Qp": pt(2, 0), "Qpp": pt(3, 0),
        "R": pt(0, 1), "Rp": pt(0, 2), "Rpp": pt(0, 5),
    });
    let r = run_check("pappus", &c, &[]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
}

#[test]
fn hard_zero_configuration_is_undecided() {
    let mut c = translated_d1();
    c["Rp"] = pt(8, "hard-zero");
    c["l3"] = json!({ "base": pt(0, "hard-zero"), "dir": pt(1, 0) });
    c["R"] = pt(5, "hard-zero");
    let r = run_check("d1", &c, &["--field", "dyadic", "--budget", "20"]);
    assert_eq!(r.code, 3, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("UNDECIDED"));
}

#[test]
fn malformed_configuration_is_a_usage_error() {
    let mut c = scaled_d2();
    c.as_object_mut().unwrap().remove("V");
    let r = run_check("d2", &c, &[]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("V"));
}

#[test]
fn demo_stays_undecided_on_the_hard_stream() {
    let r = desargues(&["demo", "--example", "brouJ", "--budget", "64"]);
    assert_eq!(r.code, 3, "{}", r.stdout);
    assert!(r.stdout.contains("brouJ/hard-zero"));
    assert!(r.stdout.contains("UNDECIDED"));
}

#[test]
fn demo_budget_comes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_desargues"))
        .args(["--format", "json", "demo", "--example", "brouA"])
        .env("PLANE_DEFAULT_BUDGET", "12")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["budget"], 12);
}

#[test]
fn coordinatize_against_a_skew_frame() {
    let dir = TempDir::new().unwrap();
    let frame = write(&dir, "frame.json", &json!({ "O": pt(1, 0), "t1": pt(1, 1), "t2": pt(0, 1) }));
    let points = write(&dir, "points.json", &json!([pt(1, 0), pt(4, 7), pt("1/2", 0)]));
    let r = desargues(&[
        "--format", "json", "coordinatize", "--field", "rational",
        "--frame", frame.to_str().unwrap(), "--points", points.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let coords: Vec<&Value> = v["points"].as_array().unwrap().iter().map(|p| &p["coords"]).collect();
    assert_eq!(*coords[0], json!(["0", "0"]));
    assert_eq!(*coords[1], json!(["3", "4"]));
    assert_eq!(*coords[2], json!(["-1/2", "1/2"]));
}

#[test]
fn degenerate_frame_is_rejected() {
    let dir = TempDir::new().unwrap();
    let frame = write(&dir, "frame.json", &json!({ "O": pt(0, 0), "t1": pt(1, 1), "t2": pt(2, 2) }));
    let points = write(&dir, "points.json", &json!([]));
    let r = desargues(&[
        "coordinatize", "--field", "gf:5",
        "--frame", frame.to_str().unwrap(), "--points", points.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 2);
}

#[test]
fn lines_subcommand() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "in.json", &json!({ "l": line(0, 0, 1, 1), "m": line(0, 4, 1, -1) }));
    let r = desargues(&["lines", "--field", "rational", "--op", "intersect", "--in", input.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("point (2, 2)"), "{}", r.stdout);

    let input = write(&dir, "par.json", &json!({ "l": line(0, 0, 1, 1), "m": line(0, 4, 2, 2) }));
    let r = desargues(&["lines", "--field", "rational", "--op", "intersect", "--in", input.to_str().unwrap()]);
    assert_eq!(r.code, 2);

    let input = write(&dir, "join.json", &json!({ "P": pt(0, 0), "Q": pt(0, "hard-zero") }));
    let r = desargues(&["lines", "--field", "dyadic", "--op", "join", "--in", input.to_str().unwrap(), "--budget", "16"]);
    assert_eq!(r.code, 3, "{}{}", r.stdout, r.stderr);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify"][..],
        &["verify", "--field", "gf:4"],
        &["verify", "--field", "gf:3", "--n", "0"],
        &["demo", "--example", "nope"],
        &["frobnicate"],
    ] {
        let r = desargues(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        assert!(!r.stderr.is_empty());
    }
}

#[test]
fn help_exits_0() {
    let r = desargues(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("verify"));
}
