use thiserror::Error;

/// Failure modes of the geometric constructions.
///
/// Constructions are total functions apart from these cases; callers that
/// drive many constructions in sequence (the theorem runner, the script
/// evaluator) surface them as reported statuses instead of panics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("coincident points: cannot construct a line")]
    CoincidentPoints,
    #[error("collinear points: no finite circle through them")]
    CollinearPoints,
    #[error("point does not lie on the tangent line")]
    PointNotOnTangent,
    #[error("second point lies on the tangent line: no finite tangent circle")]
    QOnTangent,
    #[error("identical circles")]
    IdenticalCircles,
    #[error("no intersection point distinct from the anchor")]
    NoSecondIntersection,
    #[error("parallel lines do not intersect")]
    ParallelLines,
    #[error("concentric circles have no radical axis")]
    ConcentricCircles,
    #[error("point lies on a sideline of the triangle")]
    OnSideline,
    #[error("isogonal conjugate is at infinity")]
    ConjugateAtInfinity,
    #[error("degenerate triangle")]
    DegenerateTriangle,
    #[error("pivot lies outside the circumcircle")]
    PivotOutsideCircumcircle,
    #[error("pivot coincides with a triangle vertex")]
    PivotIsVertex,
    #[error("equilateral triangle: requested structure is degenerate")]
    EquilateralDegenerate,
    #[error("line coefficients (a, b) must not both be zero")]
    ZeroLine,
    #[error("squared radius must be non-negative")]
    NegativeRadius,
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("tolerance must satisfy 0 < degeneracy_eps < eps_rel < 1")]
    InvalidTolerance,
    #[error("sample count must be at least 1")]
    InvalidSampleCount,
    #[error("predicate {pred}: {detail}")]
    ArityMismatch { pred: &'static str, detail: String },
}
