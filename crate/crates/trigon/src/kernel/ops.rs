//! Constructions that combine the primitive types: the "second point"
//! selection used by every "cuts ... at the second point" step, ray-filtered
//! intersections, isogonal conjugation and the centroid homotheties.

use super::circle::Circle;
use super::error::GeomError;
use super::line::Line;
use super::point::Point;
use super::triangle::{Triangle, VertexId};
use crate::tol::Tolerance;

/// Picks the candidate farthest from `anchor`. Errors if every candidate is
/// within `min_dist` of the anchor (tangency at the anchor, or no points).
pub fn second_intersection(
    candidates: &[Point],
    anchor: Point,
    min_dist: f64,
) -> Result<Point, GeomError> {
    let mut best: Option<(f64, Point)> = None;
    for &p in candidates {
        let d = p.dist(anchor);
        if best.is_none_or(|(bd, _)| d > bd) {
            best = Some((d, p));
        }
    }
    match best {
        Some((d, p)) if d > min_dist => Ok(p),
        _ => Err(GeomError::NoSecondIntersection),
    }
}

/// Second point where the ray from `origin` through `through` meets the
/// circle. Candidates behind the origin are discarded before the
/// farthest-from-anchor rule is applied.
pub fn ray_second_intersection(
    circle: &Circle,
    origin: Point,
    through: Point,
    tol: &Tolerance,
) -> Result<Point, GeomError> {
    let line = Line::through_with(origin, through, tol)?;
    let dir = through - origin;
    let scale = circle.radius().max(1.0);
    let forward: Vec<Point> = circle
        .intersect_line_with(&line, tol)
        .to_vec()
        .into_iter()
        .filter(|p| (*p - origin).dot(dir) >= -tol.eps_rel * scale * dir.norm())
        .collect();
    second_intersection(&forward, origin, tol.eps_rel * scale)
}

/// Isogonal conjugate of `p` with respect to the triangle, by reflecting two
/// cevians in the interior angle bisectors and intersecting the images.
pub fn isogonal_conjugate(p: Point, t: &Triangle, tol: &Tolerance) -> Result<Point, GeomError> {
    let scale = t.diameter();
    for v in VertexId::ALL {
        if t.sideline_opposite(v).distance(p) <= tol.eps_rel * scale {
            return Err(GeomError::OnSideline);
        }
    }
    let reflected_cevian = |v: VertexId| -> Result<Line, GeomError> {
        let image = t.bisector_line(v).reflect(p);
        Line::through_with(t.vertex(v), image, tol)
    };
    let l1 = reflected_cevian(VertexId::A)?;
    let l2 = reflected_cevian(VertexId::B)?;
    l1.intersect(&l2).map_err(|_| GeomError::ConjugateAtInfinity)
}

/// Image of `p` under the homothety centered at the centroid with ratio −2.
pub fn anticomplement(p: Point, t: &Triangle) -> Point {
    let g = centroid(t);
    3.0 * g - 2.0 * p
}

/// Image of `p` under the homothety centered at the centroid with ratio −1/2;
/// inverse of [`anticomplement`].
pub fn complement(p: Point, t: &Triangle) -> Point {
    let g = centroid(t);
    (3.0 * g - p) * 0.5
}

pub(crate) fn centroid(t: &Triangle) -> Point {
    (t.a() + t.b() + t.c()) * (1.0 / 3.0)
}
