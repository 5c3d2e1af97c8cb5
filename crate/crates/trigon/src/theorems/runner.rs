//! Executes registry checks over triangles and aggregates deterministic
//! suite reports.

use std::time::{Duration, Instant};

use crate::centers::{configuration, Configuration};
use crate::kernel::{GeomError, Triangle};
use crate::tol::Tolerance;

use super::checks::{CheckCtx, Outcome};
use super::registry::{registry, TheoremCheck};
use super::rng::{cell_seed, SplitMix64};
use super::sampler::sample_triangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    SkippedDegenerate,
    ConstructionError,
}

impl CheckStatus {
    pub fn name(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::SkippedDegenerate => "SKIPPED_DEGENERATE",
            CheckStatus::ConstructionError => "CONSTRUCTION_ERROR",
        }
    }
}

/// Result of one check on one triangle.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub id: &'static str,
    pub triangle: Triangle,
    pub sampled_parameters: Vec<f64>,
    pub residual: Option<f64>,
    pub status: CheckStatus,
    /// Skip reason or construction-error description, when applicable.
    pub detail: Option<String>,
    pub elapsed: Duration,
}

/// Runs one check on one triangle. Never panics for a valid triangle:
/// construction failures become `ConstructionError` status.
pub fn run_check(
    check: &TheoremCheck,
    triangle: &Triangle,
    rng: SplitMix64,
    tol: &Tolerance,
) -> CheckReport {
    let start = Instant::now();
    match configuration(triangle, tol) {
        Ok(config) => run_check_with(check, triangle, &config, rng, tol),
        Err(e) => CheckReport {
            id: check.id,
            triangle: *triangle,
            sampled_parameters: Vec::new(),
            residual: None,
            status: CheckStatus::ConstructionError,
            detail: Some(e.to_string()),
            elapsed: start.elapsed(),
        },
    }
}

/// Runs one check against an already-built (possibly perturbed)
/// configuration; this is the entry point the mutation tests drive.
pub fn run_check_with(
    check: &TheoremCheck,
    triangle: &Triangle,
    config: &Configuration,
    rng: SplitMix64,
    tol: &Tolerance,
) -> CheckReport {
    let start = Instant::now();
    let mut ctx = CheckCtx::new(triangle, config, rng, *tol);
    let (residual, status, detail) = match (check.eval)(&mut ctx) {
        Ok(Outcome::Residual(r)) => {
            let status = if r < tol.eps_rel {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            (Some(r), status, None)
        }
        Ok(Outcome::Skipped(reason)) => {
            (None, CheckStatus::SkippedDegenerate, Some(reason.to_string()))
        }
        Err(e) => (None, CheckStatus::ConstructionError, Some(e.to_string())),
    };
    CheckReport {
        id: check.id,
        triangle: *triangle,
        sampled_parameters: ctx.sampled,
        residual,
        status,
        detail,
        elapsed: start.elapsed(),
    }
}

/// Aggregate of one check across every suite triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckSummary {
    pub id: String,
    pub source: String,
    pub experimental: bool,
    pub passes: u32,
    pub failures: u32,
    pub skips: u32,
    pub errors: u32,
    pub worst_residual: Option<f64>,
}

impl CheckSummary {
    pub fn status(&self) -> CheckStatus {
        if self.failures > 0 {
            CheckStatus::Fail
        } else if self.errors > 0 {
            CheckStatus::ConstructionError
        } else if self.passes > 0 {
            CheckStatus::Pass
        } else {
            CheckStatus::SkippedDegenerate
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FailureRecord {
    pub id: String,
    pub triangle_index: u32,
    pub status: CheckStatus,
    pub residual: Option<f64>,
    pub detail: Option<String>,
}

/// Deterministic result of a whole suite run: identical (seed, count,
/// tolerance) inputs produce identical reports, byte for byte once
/// serialized. Wall-clock time is deliberately kept out.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub seed: u64,
    pub triangle_count: u32,
    pub eps: f64,
    pub checks: Vec<CheckSummary>,
    pub failures: Vec<FailureRecord>,
}

impl SuiteReport {
    /// Gate verdict: no FAIL among non-experimental checks.
    pub fn gate_passes(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| !c.experimental)
            .all(|c| c.failures == 0)
    }

    pub fn total(&self, f: impl Fn(&CheckSummary) -> u32) -> u32 {
        self.checks.iter().map(f).sum()
    }
}

/// Runs the registry over `n_triangles` seeded random triangles.
pub fn run_suite(seed: u64, n_triangles: u32, tol: &Tolerance) -> Result<SuiteReport, GeomError> {
    if n_triangles == 0 {
        return Err(GeomError::InvalidSampleCount);
    }
    let mut tri_rng = SplitMix64::new(seed);
    let triangles: Vec<Triangle> = (0..n_triangles)
        .map(|_| sample_triangle(&mut tri_rng, tol))
        .collect();
    Ok(run_suite_on(&triangles, seed, tol))
}

/// Runs the registry over explicit triangles (used by `check --triangle`).
pub fn run_suite_on(triangles: &[Triangle], seed: u64, tol: &Tolerance) -> SuiteReport {
    let reg = registry();
    let mut summaries: Vec<CheckSummary> = reg
        .iter()
        .map(|c| CheckSummary {
            id: c.id.to_string(),
            source: c.source.to_string(),
            experimental: c.experimental,
            passes: 0,
            failures: 0,
            skips: 0,
            errors: 0,
            worst_residual: None,
        })
        .collect();
    let mut failures = Vec::new();

    for (ti, triangle) in triangles.iter().enumerate() {
        let config = match configuration(triangle, tol) {
            Ok(c) => c,
            Err(e) => {
                for (ci, summary) in summaries.iter_mut().enumerate() {
                    summary.errors += 1;
                    failures.push(FailureRecord {
                        id: reg[ci].id.to_string(),
                        triangle_index: ti as u32,
                        status: CheckStatus::ConstructionError,
                        residual: None,
                        detail: Some(e.to_string()),
                    });
                }
                continue;
            }
        };
        for (ci, check) in reg.iter().enumerate() {
            let rng = SplitMix64::new(cell_seed(seed, ti as u64, ci as u64));
            let report = run_check_with(check, triangle, &config, rng, tol);
            let summary = &mut summaries[ci];
            if let Some(r) = report.residual {
                summary.worst_residual =
                    Some(summary.worst_residual.map_or(r, |w: f64| w.max(r)));
            }
            match report.status {
                CheckStatus::Pass => summary.passes += 1,
                CheckStatus::Fail => {
                    summary.failures += 1;
                    failures.push(FailureRecord {
                        id: check.id.to_string(),
                        triangle_index: ti as u32,
                        status: CheckStatus::Fail,
                        residual: report.residual,
                        detail: report.detail,
                    });
                }
                CheckStatus::SkippedDegenerate => summary.skips += 1,
                CheckStatus::ConstructionError => {
                    summary.errors += 1;
                    failures.push(FailureRecord {
                        id: check.id.to_string(),
                        triangle_index: ti as u32,
                        status: CheckStatus::ConstructionError,
                        residual: None,
                        detail: report.detail,
                    });
                }
            }
        }
    }

    SuiteReport {
        seed,
        triangle_count: triangles.len() as u32,
        eps: tol.eps_rel,
        checks: summaries,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Point;
    use crate::theorems::registry::find_check;

    fn reference() -> Triangle {
        Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(1.0, 3.0),
        )
        .unwrap()
    }

    fn equilateral() -> Triangle {
        Triangle::new(
            Point::new(0.0, 3f64.sqrt()),
            Point::new(-1.0, 0.0),
            Point::new(1.0, 0.0),
        )
        .unwrap()
    }

    #[test]
    fn isogonal_check_passes_on_reference() {
        let tol = Tolerance::default();
        let check = find_check("t_isogonal").unwrap();
        let report = run_check(check, &reference(), SplitMix64::new(1), &tol);
        assert_eq!(report.status, CheckStatus::Pass);
        assert!(report.residual.unwrap() < 1e-9);
    }

    #[test]
    fn brocard_circle_check_skips_on_equilateral() {
        let tol = Tolerance::default();
        let check = find_check("t_brocard_circle").unwrap();
        let report = run_check(check, &equilateral(), SplitMix64::new(1), &tol);
        assert_eq!(report.status, CheckStatus::SkippedDegenerate);
    }

    #[test]
    fn p1_fixed_passes_with_sampled_parameters() {
        let tol = Tolerance::default();
        let check = find_check("p1_fixed").unwrap();
        let report = run_check(check, &reference(), SplitMix64::new(9), &tol);
        assert_eq!(report.status, CheckStatus::Pass);
        assert_eq!(report.sampled_parameters.len(), 2);
    }

    #[test]
    fn zero_samples_rejected() {
        let r = run_suite(42, 0, &Tolerance::default());
        assert_eq!(r.unwrap_err(), GeomError::InvalidSampleCount);
    }

    #[test]
    fn suite_is_deterministic() {
        let tol = Tolerance::new(1e-7, 1e-12).unwrap();
        let a = run_suite(123, 5, &tol).unwrap();
        let b = run_suite(123, 5, &tol).unwrap();
        assert_eq!(a, b);
    }
}
