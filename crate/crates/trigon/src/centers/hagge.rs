//! The Hagge circle of a pivot point: reflect the circumcircle traces of
//! the pivot's cevians across the sides; the resulting circle always passes
//! through the orthocenter.

use crate::kernel::{ray_second_intersection, Circle, GeomError, Point, Triangle, VertexId};
use crate::tol::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HaggeData {
    pub pivot: Point,
    /// The Hagge circle through the three reflected points (and H).
    pub circle: Circle,
    /// A₁, B₁, C₁: second intersections of rays AP, BP, CP with the
    /// circumcircle.
    pub circumcircle_points: [Point; 3],
    /// A₂, B₂, C₂: reflections of A₁, B₁, C₁ across the sides BC, CA, AB.
    pub reflected: [Point; 3],
    /// A₃, B₃, C₃: second intersections of the Hagge circle with the
    /// altitude lines, anchored at H.
    pub altitude_points: [Point; 3],
    /// H′, the antipode of H on the Hagge circle; it is the anticomplement
    /// of the isogonal conjugate of the pivot.
    pub h_antipode: Point,
}

pub fn hagge(t: &Triangle, pivot: Point, tol: &Tolerance) -> Result<HaggeData, GeomError> {
    let basic = super::basic::basic_centers(t, tol)?;
    hagge_with(t, &basic, pivot, tol)
}

pub(crate) fn hagge_with(
    t: &Triangle,
    basic: &super::basic::BasicCenters,
    pivot: Point,
    tol: &Tolerance,
) -> Result<HaggeData, GeomError> {
    let diam = t.diameter();
    for v in VertexId::ALL {
        if pivot.dist(t.vertex(v)) <= tol.degeneracy_eps * diam {
            return Err(GeomError::PivotIsVertex);
        }
    }
    let circ = &basic.circumcircle;
    if circ.power(pivot) >= -tol.degeneracy_eps * diam * diam {
        return Err(GeomError::PivotOutsideCircumcircle);
    }

    let mut on_circle = [Point::default(); 3];
    let mut reflected = [Point::default(); 3];
    for v in VertexId::ALL {
        let hit = ray_second_intersection(circ, t.vertex(v), pivot, tol)?;
        on_circle[v.index()] = hit;
        reflected[v.index()] = t.sideline_opposite(v).reflect(hit);
    }
    let circle = Circle::through_with(reflected[0], reflected[1], reflected[2], tol)?;

    let h = basic.orthocenter;
    let mut altitude_points = [Point::default(); 3];
    for v in VertexId::ALL {
        // H lies on both the altitude and the circle; the re-intersection is
        // the candidate away from H. When the altitude is tangent at H the
        // chord degenerates and H itself is the continuous limit.
        let pts = circle.intersect_line_with(&t.altitude_line(v), tol).to_vec();
        altitude_points[v.index()] = pts
            .into_iter()
            .max_by(|p, q| p.dist(h).total_cmp(&q.dist(h)))
            .unwrap_or(h);
    }

    Ok(HaggeData {
        pivot,
        circle,
        circumcircle_points: on_circle,
        reflected,
        altitude_points,
        h_antipode: h.reflect_through(circle.center),
    })
}
