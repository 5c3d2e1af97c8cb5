//! The theorem registry and the seeded suite runner: every statement of the
//! development bound to an executable residual check.
//!
//! Checks are pure given their cell RNG; the suite derives one RNG per
//! (triangle, check) cell from the suite seed, so reports are independent
//! of evaluation order and identical across runs.

mod checks;
mod registry;
mod rng;
mod runner;
mod sampler;

pub use checks::{CheckCtx, Outcome};
pub use registry::{find_check, registry, InputSpec, TheoremCheck};
pub use rng::{cell_seed, SplitMix64};
pub use runner::{
    run_check, run_check_with, run_suite, run_suite_on, CheckReport, CheckStatus, CheckSummary,
    FailureRecord, SuiteReport,
};
pub use sampler::{interior_point, sample_triangle, side_param};
