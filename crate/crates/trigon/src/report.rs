//! Deterministic serialization of reports: JSON with sorted keys (so equal
//! runs diff as equal bytes) and a plain-text table format. Wall-clock data
//! never enters a report.

use serde_json::{json, Value};

use crate::centers::Configuration;
use crate::script::EvalReport;
use crate::theorems::SuiteReport;

pub const SCHEMA_VERSION: u32 = 1;

fn opt_f64(x: Option<f64>) -> Value {
    match x {
        Some(v) => json!(v),
        None => Value::Null,
    }
}

/// JSON for `check`: summary per registry entry plus the failure list.
/// Keys are sorted; identical inputs produce byte-identical output.
pub fn suite_json(report: &SuiteReport) -> String {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "source": c.source,
                "status": c.status().name(),
                "experimental": c.experimental,
                "passes": c.passes,
                "failures": c.failures,
                "skips": c.skips,
                "errors": c.errors,
                "worst_residual": opt_f64(c.worst_residual),
            })
        })
        .collect();
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| {
            json!({
                "id": f.id,
                "triangle_index": f.triangle_index,
                "status": f.status.name(),
                "residual": opt_f64(f.residual),
                "detail": f.detail,
            })
        })
        .collect();
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "suite",
        "seed": report.seed,
        "triangle_count": report.triangle_count,
        "eps": report.eps,
        "gate": if report.gate_passes() { "PASS" } else { "FAIL" },
        "totals": {
            "passes": report.total(|c| c.passes),
            "failures": report.total(|c| c.failures),
            "skips": report.total(|c| c.skips),
            "errors": report.total(|c| c.errors),
        },
        "checks": checks,
        "failures": failures,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("report serialization");
    s.push('\n');
    s
}

pub fn suite_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "suite: seed={} triangles={} eps={:e}\n\n",
        report.seed, report.triangle_count, report.eps
    ));
    out.push_str(&format!(
        "{:<22} {:<22} {:<7} {:>5} {:>5} {:>5} {:>5}  {}\n",
        "CHECK", "SOURCE", "STATUS", "PASS", "FAIL", "SKIP", "ERR", "WORST RESIDUAL"
    ));
    for c in &report.checks {
        let worst = c
            .worst_residual
            .map_or("-".to_string(), |w| format!("{w:.3e}"));
        let mark = if c.experimental { " (experimental)" } else { "" };
        out.push_str(&format!(
            "{:<22} {:<22} {:<7} {:>5} {:>5} {:>5} {:>5}  {}{}\n",
            c.id,
            c.source,
            c.status().name(),
            c.passes,
            c.failures,
            c.skips,
            c.errors,
            worst,
            mark
        ));
    }
    out.push_str(&format!(
        "\ngate: {}\n",
        if report.gate_passes() { "PASS" } else { "FAIL" }
    ));
    out
}

pub fn eval_json(report: &EvalReport, script_name: &str) -> String {
    let assertions: Vec<Value> = report
        .assertions
        .iter()
        .map(|a| {
            json!({
                "line": a.line,
                "col": a.col,
                "text": a.text,
                "samples": a.samples,
                "max_residual": opt_f64(a.max_residual),
                "status": a.status.name(),
            })
        })
        .collect();
    let errors: Vec<Value> = report
        .diagnostics
        .iter()
        .map(|d| {
            json!({
                "line": d.line,
                "col": d.col,
                "message": d.message,
            })
        })
        .collect();
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "eval",
        "script": script_name,
        "seed": report.seed,
        "eps": report.eps,
        "triangle_count": report.triangle_count,
        "gate": if report.passed() { "PASS" } else { "FAIL" },
        "labels": report.labels,
        "assertions": assertions,
        "errors": errors,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("report serialization");
    s.push('\n');
    s
}

pub fn eval_text(report: &EvalReport, script_name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "eval: {script_name} seed={} triangles={} eps={:e}\n\n",
        report.seed, report.triangle_count, report.eps
    ));
    for a in &report.assertions {
        let worst = a
            .max_residual
            .map_or("-".to_string(), |w| format!("{w:.3e}"));
        out.push_str(&format!(
            "{:<5} {:>4}:{:<4} {:<60} max_residual={} ({} samples)\n",
            a.status.name(),
            a.line,
            a.col,
            a.text,
            worst,
            a.samples
        ));
    }
    if !report.assertions.is_empty() {
        out.push('\n');
    }
    out.push_str(&format!(
        "result: {}\n",
        if report.passed() { "PASS" } else { "FAIL" }
    ));
    out
}

/// Fixed-order table of every named point, 12 decimal places.
pub fn centers_text(config: &Configuration) -> String {
    let mut out = String::new();
    for (name, p) in config.named_points() {
        out.push_str(&format!("{name:<8} {:.12} {:.12}\n", p.x, p.y));
    }
    out
}

pub fn centers_json(config: &Configuration) -> String {
    let points: serde_json::Map<String, Value> = config
        .named_points()
        .into_iter()
        .map(|(name, p)| (name, json!([p.x, p.y])))
        .collect();
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "centers",
        "points": points,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("report serialization");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol::Tolerance;

    #[test]
    fn suite_json_is_byte_identical_across_runs() {
        let tol = Tolerance::new(1e-7, 1e-12).unwrap();
        let a = crate::theorems::run_suite(7, 3, &tol).unwrap();
        let b = crate::theorems::run_suite(7, 3, &tol).unwrap();
        assert_eq!(suite_json(&a), suite_json(&b));
    }

    #[test]
    fn json_keys_are_sorted() {
        let tol = Tolerance::new(1e-7, 1e-12).unwrap();
        let r = crate::theorems::run_suite(7, 1, &tol).unwrap();
        let s = suite_json(&r);
        let checks_pos = s.find("\"checks\"").unwrap();
        let eps_pos = s.find("\"eps\"").unwrap();
        let seed_pos = s.find("\"seed\"").unwrap();
        assert!(checks_pos < eps_pos && eps_pos < seed_pos);
    }

    #[test]
    fn centers_table_reference_row() {
        let t = crate::reference_triangle();
        let cfg = crate::centers::configuration(&t, &Tolerance::default()).unwrap();
        let table = centers_text(&cfg);
        assert!(
            table.contains("A_X      1.647058823529 1.411764705882"),
            "table row missing:\n{table}"
        );
    }
}
