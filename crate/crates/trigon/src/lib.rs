//! A plane-geometry kernel and verification harness for the family of
//! triangle theorems around two classical fixed-point problems: the
//! tangent-circle fixed points on the symmedians and medians, the Brocard
//! configuration, Hagge circles and the orthocentroidal circle.
//!
//! The crate has four layers:
//!
//! - [`kernel`]: points, lines, circles, directed angles (mod π),
//!   constructions and residual-based predicates;
//! - [`centers`]: the named points of the configuration, per vertex and in
//!   bulk;
//! - [`theorems`]: a registry that binds every statement to an executable
//!   residual check, plus a seeded suite runner;
//! - [`script`]: a small declarative construction-and-assertion language
//!   (`.geo` files) with a parser, evaluator and pretty-printer.
//!
//! [`figure`] renders configurations to standalone SVG and [`report`]
//! serializes suite results to deterministic JSON. The `geo` binary in the
//! companion CLI crate fronts all of this; the `examples/` directory shows
//! each capability as a runnable program.

pub mod centers;
pub mod figure;
pub mod kernel;
pub mod report;
pub mod script;
pub mod theorems;
pub mod tol;

pub use centers::{
    basic_centers, brocard, configuration, configuration_with, fixed_point_antiparallel,
    fixed_point_parallel, hagge, orthocentroidal, BasicCenters, BrocardData, BrocardPairing,
    CentersOptions, Configuration, HaggeData, OrthocentroidalData, VertexConfig,
};
pub use kernel::{
    anticomplement, complement, complete_parallelogram, directed_angle, isogonal_conjugate,
    ray_second_intersection, residual, second_intersection, Circle, DirectedAngle, GeomError,
    Intersections, Line, Object, Point, Predicate, Triangle, VertexId,
};
pub use theorems::{
    registry, run_check, run_check_with, run_suite, run_suite_on, sample_triangle, CheckReport,
    CheckStatus, SplitMix64, SuiteReport, TheoremCheck,
};
pub use tol::Tolerance;

/// The reference triangle used throughout the documentation and tests:
/// A = (0,0), B = (4,0), C = (1,3).
pub fn reference_triangle() -> Triangle {
    Triangle::new(
        Point::new(0.0, 0.0),
        Point::new(4.0, 0.0),
        Point::new(1.0, 3.0),
    )
    .expect("reference triangle is non-degenerate")
}
