//! The orthocentroidal circle (diameter GH) and the two triangles the
//! corollary inscribes in it.

use crate::kernel::{Circle, GeomError, Point, Triangle, VertexId};
use crate::tol::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthocentroidalData {
    /// Circle with diameter G–H.
    pub circle: Circle,
    /// H_A, H_B, H_C: projections of G on the altitude lines through A, B, C.
    pub projections: [Point; 3],
    /// A_Y, B_Y, C_Y.
    pub y_triangle: [Point; 3],
}

pub fn orthocentroidal(t: &Triangle, tol: &Tolerance) -> Result<OrthocentroidalData, GeomError> {
    let basic = super::basic::basic_centers(t, tol)?;
    let ys = [
        super::vertex::fixed_point_antiparallel(t, VertexId::A, tol)?,
        super::vertex::fixed_point_antiparallel(t, VertexId::B, tol)?,
        super::vertex::fixed_point_antiparallel(t, VertexId::C, tol)?,
    ];
    orthocentroidal_with(t, &basic, ys, tol)
}

pub(crate) fn orthocentroidal_with(
    t: &Triangle,
    basic: &super::basic::BasicCenters,
    y_triangle: [Point; 3],
    tol: &Tolerance,
) -> Result<OrthocentroidalData, GeomError> {
    let (g, h) = (basic.centroid, basic.orthocenter);
    if g.dist(h) <= tol.degeneracy_eps * t.diameter() {
        return Err(GeomError::EquilateralDegenerate);
    }
    let circle = Circle::from_diameter(g, h);
    let mut projections = [Point::default(); 3];
    for v in VertexId::ALL {
        projections[v.index()] = t.altitude_line(v).project(g);
    }
    Ok(OrthocentroidalData {
        circle,
        projections,
        y_triangle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn reference_circle() {
        let t = Triangle::new(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0)).unwrap();
        let data = orthocentroidal(&t, &Tolerance::default()).unwrap();
        assert!(data.circle.center.dist(pt(4.0 / 3.0, 1.0)) < 1e-13);
        assert!((data.circle.r2 - 1.0 / 9.0).abs() < 1e-13);
        // A_Y = (20/17, 12/17) lies on it: |(20/17-4/3, 12/17-1)|² = 1/9
        assert!(data.circle.power(pt(20.0 / 17.0, 12.0 / 17.0)).abs() < 1e-12);
    }

    #[test]
    fn all_six_points_inscribed() {
        let t = Triangle::new(pt(-0.3, 0.1), pt(4.0, 0.4), pt(1.2, 3.3)).unwrap();
        let data = orthocentroidal(&t, &Tolerance::default()).unwrap();
        for p in data.projections.iter().chain(data.y_triangle.iter()) {
            assert!(data.circle.power(*p).abs() < 1e-10);
        }
    }

    #[test]
    fn isosceles_projection_on_symmetry_axis() {
        // AB = AC: H_A stays on the axis through G and H
        let t = Triangle::new(pt(0.0, 2.0), pt(-1.0, 0.0), pt(1.0, 0.0)).unwrap();
        let data = orthocentroidal(&t, &Tolerance::default()).unwrap();
        assert!(data.projections[0].x.abs() < 1e-14);
    }

    #[test]
    fn equilateral_rejected() {
        let t = Triangle::new(pt(0.0, 3f64.sqrt()), pt(-1.0, 0.0), pt(1.0, 0.0)).unwrap();
        assert_eq!(
            orthocentroidal(&t, &Tolerance::default()),
            Err(GeomError::EquilateralDegenerate)
        );
    }
}
