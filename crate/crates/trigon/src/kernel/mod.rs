//! Numeric 2D primitives, constructions, transformations and residual-based
//! predicates. Everything downstream (centers, theorem checks, the script
//! evaluator) is built from these.
//!
//! All operations are pure functions of their inputs; values are immutable
//! after construction and freely shareable across threads.

mod angle;
mod circle;
mod error;
mod line;
mod ops;
mod point;
mod predicates;
mod triangle;

pub use angle::{directed_angle, DirectedAngle};
pub use circle::{Circle, Intersections};
pub use error::GeomError;
pub use line::Line;
pub use ops::{
    anticomplement, complement, isogonal_conjugate, ray_second_intersection, second_intersection,
};
pub use point::{complete_parallelogram, Point};
pub use predicates::{residual, Object, Predicate};
pub use triangle::{Triangle, VertexId};
