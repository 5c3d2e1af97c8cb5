//! End-to-end tests of the `geo` binary: exit codes, report formats and
//! byte-determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn geo() -> Command {
    Command::new(env!("CARGO_BIN_EXE_geo"))
}

fn run(args: &[&str]) -> Output {
    geo().args(args).output().expect("binary runs")
}

fn scripts_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../trigon/scripts")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_passes_and_reports_every_registry_entry() {
    let out = run(&["check", "--seed", "42", "--samples", "200"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["gate"], "PASS");
    assert_eq!(json["schema_version"], 1);
    assert!(json["checks"].as_array().unwrap().len() >= 31);
    assert_eq!(json["totals"]["failures"], 0);
}

#[test]
fn check_rejects_zero_samples() {
    let out = run(&["check", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn check_accepts_explicit_triangle() {
    let out = run(&["check", "--triangle", "0,0,4,0,1,3", "--samples", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["triangle_count"], 1);
}

#[test]
fn check_output_is_byte_identical() {
    let a = run(&["check", "--seed", "42", "--samples", "25"]);
    let b = run(&["check", "--seed", "42", "--samples", "25"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn geo_seed_env_sets_the_default() {
    let with_env = geo()
        .env("GEO_SEED", "7")
        .args(["check", "--samples", "10"])
        .output()
        .unwrap();
    let with_flag = run(&["check", "--seed", "7", "--samples", "10"]);
    assert_eq!(with_env.stdout, with_flag.stdout);
    // an explicit flag wins over the environment
    let flag_beats_env = geo()
        .env("GEO_SEED", "99")
        .args(["check", "--seed", "7", "--samples", "10"])
        .output()
        .unwrap();
    assert_eq!(flag_beats_env.stdout, with_flag.stdout);
}

#[test]
fn eval_bundled_scripts() {
    for name in ["problem1.geo", "problem2.geo", "brocard_circle.geo"] {
        let path = scripts_dir().join(name);
        let out = run(&["eval", path.to_str().unwrap(), "--samples", "25"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{name}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn eval_missing_file_is_usage_error() {
    let out = run(&["eval", "/nonexistent/script.geo"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_failing_assertion_exits_one() {
    let dir = std::env::temp_dir().join("geo-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("failing.geo");
    std::fs::write(
        &path,
        "triangle A B C\nassert on(centroid(), circumcircle())\n",
    )
    .unwrap();
    let out = run(&["eval", path.to_str().unwrap(), "--samples", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn eval_malformed_script_diagnoses_position() {
    let path = scripts_dir().join("malformed/undeclared.geo");
    let out = run(&["eval", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("2:11"), "stderr: {err}");
}

#[test]
fn centers_prints_golden_row() {
    let out = run(&["centers", "--triangle", "0,0,4,0,1,3", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let table = stdout(&out);
    assert!(table.contains("A_X      1.647058823529 1.411764705882"), "{table}");
    assert!(table.contains("L        1.272727272727 1.090909090909"), "{table}");
}

#[test]
fn centers_equilateral_fixed_points_coincide_with_o() {
    let out = run(&[
        "centers",
        "--triangle",
        "0,1.7320508075688772,-1,0,1,0",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let table = stdout(&out);
    let row = |name: &str| -> (f64, f64) {
        let line = table
            .lines()
            .find(|l| l.split_whitespace().next() == Some(name))
            .unwrap_or_else(|| panic!("row {name} missing"));
        let mut it = line.split_whitespace().skip(1);
        (
            it.next().unwrap().parse().unwrap(),
            it.next().unwrap().parse().unwrap(),
        )
    };
    let (ox, oy) = row("O");
    let (ax, ay) = row("A_X");
    assert!((ox - ax).abs() < 1e-9 && (oy - ay).abs() < 1e-9);
}

#[test]
fn centers_requires_triangle_and_rejects_degenerate() {
    let out = run(&["centers"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["centers", "--triangle", "0,0,1,1,2,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn figure_renders_labels_and_is_deterministic() {
    let out = run(&["figure", "t_ax_proj", "--triangle", "T0"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = stdout(&out);
    for label in [">A<", ">B<", ">C<", ">O<", ">A_X<"] {
        assert!(svg.contains(label), "missing {label}");
    }
    let again = run(&["figure", "t_ax_proj", "--triangle", "T0"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn figure_unknown_id_is_usage_error() {
    let out = run(&["figure", "no_such_theorem"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn figure_renders_scripts_too() {
    let path = scripts_dir().join("brocard_circle.geo");
    let out = run(&["figure", path.to_str().unwrap(), "--triangle", "T0"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("<svg"));
}
