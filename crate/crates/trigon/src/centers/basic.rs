use crate::kernel::{Circle, GeomError, Point, Triangle, VertexId};
use crate::tol::Tolerance;

/// The classical centers every construction hangs off: centroid G,
/// circumcenter O, orthocenter H, nine-point center N, Lemoine point L,
/// plus the circumcircle and the Euler (nine-point) circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasicCenters {
    pub centroid: Point,
    pub circumcenter: Point,
    pub orthocenter: Point,
    pub nine_point_center: Point,
    pub lemoine: Point,
    pub circumcircle: Circle,
    pub euler_circle: Circle,
}

/// Constructs the basic centers. G uses barycentric weights (1 : 1 : 1) and
/// L uses (a² : b² : c²); O comes from perpendicular bisectors, H from two
/// altitude lines, so the Euler-line collinearity is an emergent property
/// rather than an identity baked into the construction.
pub fn basic_centers(t: &Triangle, tol: &Tolerance) -> Result<BasicCenters, GeomError> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let centroid = (a + b + c) * (1.0 / 3.0);
    let circumcircle = Circle::through_with(a, b, c, tol)?;
    let circumcenter = circumcircle.center;
    let orthocenter = t
        .altitude_line(VertexId::A)
        .intersect(&t.altitude_line(VertexId::B))?;
    let nine_point_center = circumcenter.midpoint(orthocenter);
    let [la, lb, lc] = t.side_lengths();
    let (a2, b2, c2) = (la * la, lb * lb, lc * lc);
    let lemoine = (a2 * a + b2 * b + c2 * c) * (1.0 / (a2 + b2 + c2));
    let euler_circle = Circle::through_with(
        t.side_midpoint_opposite(VertexId::A),
        t.side_midpoint_opposite(VertexId::B),
        t.side_midpoint_opposite(VertexId::C),
        tol,
    )?;
    Ok(BasicCenters {
        centroid,
        circumcenter,
        orthocenter,
        nine_point_center,
        lemoine,
        circumcircle,
        euler_circle,
    })
}

impl BasicCenters {
    /// Cevian through the vertex and the centroid (the median line).
    pub fn median_line(&self, t: &Triangle, v: VertexId) -> crate::kernel::Line {
        crate::kernel::Line::through(t.vertex(v), t.side_midpoint_opposite(v))
            .expect("vertex and opposite midpoint are distinct")
    }

    /// Cevian through the vertex and the Lemoine point (the symmedian line).
    pub fn symmedian_line(&self, t: &Triangle, v: VertexId) -> crate::kernel::Line {
        crate::kernel::Line::through(t.vertex(v), self.lemoine)
            .expect("the Lemoine point is interior, never a vertex")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn reference() -> Triangle {
        Triangle::new(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0)).unwrap()
    }

    #[test]
    fn reference_centers() {
        let b = basic_centers(&reference(), &Tolerance::default()).unwrap();
        assert!(b.circumcenter.dist(pt(2.0, 1.0)) < 1e-13);
        assert!(b.orthocenter.dist(pt(1.0, 1.0)) < 1e-13);
        assert!(b.centroid.dist(pt(5.0 / 3.0, 1.0)) < 1e-14);
        // L = (a²A + b²B + c²C)/(a²+b²+c²), a²=18, b²=10, c²=16
        assert!(b.lemoine.dist(pt(14.0 / 11.0, 12.0 / 11.0)) < 1e-13);
    }

    #[test]
    fn equilateral_centers_coincide() {
        let t = Triangle::new(pt(0.0, 3f64.sqrt()), pt(-1.0, 0.0), pt(1.0, 0.0)).unwrap();
        let b = basic_centers(&t, &Tolerance::default()).unwrap();
        let o = pt(0.0, 1.0 / 3f64.sqrt());
        for p in [b.centroid, b.circumcenter, b.orthocenter, b.lemoine] {
            assert!(p.dist(o) < 1e-14);
        }
    }

    #[test]
    fn euler_line_and_nine_point_invariants() {
        let b = basic_centers(&reference(), &Tolerance::default()).unwrap();
        // N = midpoint(O, H)
        assert!(b.nine_point_center.dist(b.circumcenter.midpoint(b.orthocenter)) < 1e-14);
        // G on the line OH
        let euler = crate::kernel::Line::through(b.circumcenter, b.orthocenter).unwrap();
        assert!(euler.distance(b.centroid) < 1e-13);
        // nine-point radius is half the circumradius
        assert!((b.euler_circle.r2 - b.circumcircle.r2 / 4.0).abs() < 1e-12);
        assert!(b.euler_circle.center.dist(b.nine_point_center) < 1e-13);
    }
}
