//! Brocard points, Brocard circle and the two Brocard triangles.
//!
//! The Brocard points are constructed from tangent circles (the same
//! toolkit as the fixed-point problems) rather than from closed-form
//! barycentrics; the cot-sum identity cot ω = cot A + cot B + cot C serves
//! as the independent oracle in the tests.

use crate::kernel::{
    directed_angle, second_intersection, Circle, GeomError, Line, Point, Triangle, VertexId,
};
use crate::tol::Tolerance;

use super::basic::BasicCenters;

/// Which cevian pairing builds the first Brocard triangle. The statements
/// list six lines without pairing them; `Standard` (Z_A = BZ₁ ∩ CZ₂,
/// cyclically) is the reading validated against the inscribed-circle claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BrocardPairing {
    #[default]
    Standard,
    /// Z_A = BZ₂ ∩ CZ₁, kept for comparison.
    Swapped,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BrocardData {
    pub z1: Point,
    pub z2: Point,
    /// The Brocard angle ω, as the acute representative in (0, π/6].
    pub angle: f64,
    /// Circle on diameter O–L.
    pub circle: Circle,
    /// True when O ≈ L and the circle collapses (near-equilateral input).
    pub degenerate: bool,
    /// Second Brocard triangle A_X B_X C_X.
    pub second_triangle: [Point; 3],
    /// First Brocard triangle Z_A Z_B Z_C.
    pub first_triangle: [Point; 3],
    /// X(39), the midpoint of the two Brocard points.
    pub midpoint: Point,
}

/// First Brocard point: common point of the circles through two vertices
/// tangent to the next side, chasing A → B → C.
fn first_brocard_point(t: &Triangle, tol: &Tolerance) -> Result<Point, GeomError> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let c1 = Circle::through_tangent_with(b, a, &Line::through_with(b, c, tol)?, tol)?;
    let c2 = Circle::through_tangent_with(c, b, &Line::through_with(c, a, tol)?, tol)?;
    second_intersection(&c1.intersect_with(&c2, tol)?.to_vec(), b, tol.eps_rel * t.diameter())
}

/// Second Brocard point: the mirrored construction, chasing A → C → B.
fn second_brocard_point(t: &Triangle, tol: &Tolerance) -> Result<Point, GeomError> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let c1 = Circle::through_tangent_with(c, a, &Line::through_with(c, b, tol)?, tol)?;
    let c2 = Circle::through_tangent_with(b, c, &Line::through_with(b, a, tol)?, tol)?;
    second_intersection(&c1.intersect_with(&c2, tol)?.to_vec(), c, tol.eps_rel * t.diameter())
}

pub fn brocard(t: &Triangle, tol: &Tolerance) -> Result<BrocardData, GeomError> {
    let basic = super::basic::basic_centers(t, tol)?;
    let xs = [
        super::vertex::fixed_point_parallel(t, VertexId::A, tol)?,
        super::vertex::fixed_point_parallel(t, VertexId::B, tol)?,
        super::vertex::fixed_point_parallel(t, VertexId::C, tol)?,
    ];
    brocard_with(t, &basic, xs, tol, BrocardPairing::Standard)
}

pub(crate) fn brocard_with(
    t: &Triangle,
    basic: &BasicCenters,
    second_triangle: [Point; 3],
    tol: &Tolerance,
    pairing: BrocardPairing,
) -> Result<BrocardData, GeomError> {
    let z1 = first_brocard_point(t, tol)?;
    let z2 = second_brocard_point(t, tol)?;
    let circle = Circle::from_diameter(basic.circumcenter, basic.lemoine);
    let degenerate = circle.is_degenerate(tol, t.diameter());

    let (u, w) = match pairing {
        BrocardPairing::Standard => (z1, z2),
        BrocardPairing::Swapped => (z2, z1),
    };
    let mut first_triangle = [Point::default(); 3];
    for v in VertexId::ALL {
        let l1 = Line::through_with(t.vertex(v.next()), u, tol)?;
        let l2 = Line::through_with(t.vertex(v.prev()), w, tol)?;
        first_triangle[v.index()] = l1.intersect(&l2)?;
    }

    let side_ab = Line::through_with(t.a(), t.b(), tol)?;
    let cevian = Line::through_with(t.a(), z1, tol)?;
    let angle = directed_angle(&side_ab, &cevian).acute();

    Ok(BrocardData {
        z1,
        z2,
        angle,
        circle,
        degenerate,
        second_triangle,
        first_triangle,
        midpoint: z1.midpoint(z2),
    })
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
    fn cot_identity_oracle() {
        let t = reference();
        let data = brocard(&t, &Tolerance::default()).unwrap();
        let cot_sum: f64 = VertexId::ALL.iter().map(|&v| 1.0 / t.angle_at(v).tan()).sum();
        assert!((1.0 / data.angle.tan() - cot_sum).abs() < 1e-10);
    }

    #[test]
    fn brocard_points_on_brocard_circle() {
        // power-of-point oracle: both Z₁ and Z₂ lie on the circle with
        // diameter O=(2,1), L=(14/11,12/11)
        let data = brocard(&reference(), &Tolerance::default()).unwrap();
        assert!(data.circle.power(data.z1).abs() < 1e-9);
        assert!(data.circle.power(data.z2).abs() < 1e-9);
        assert!(!data.degenerate);
    }

    #[test]
    fn defining_angles_are_equal() {
        let t = reference();
        let tol = Tolerance::default();
        let data = brocard(&t, &tol).unwrap();
        let ang = |p: Point, q: Point, r: Point| {
            directed_angle(
                &Line::through(p, q).unwrap(),
                &Line::through(p, r).unwrap(),
            )
        };
        // Z₁ chases (AB, AZ₁) = (BC, BZ₁) = (CA, CZ₁)
        let a1 = ang(t.a(), t.b(), data.z1);
        let a2 = ang(t.b(), t.c(), data.z1);
        let a3 = ang(t.c(), t.a(), data.z1);
        assert!(a1.distance(a2) < 1e-12);
        assert!(a2.distance(a3) < 1e-12);
    }

    #[test]
    fn equilateral_collapses() {
        let t = Triangle::new(pt(0.0, 3f64.sqrt()), pt(-1.0, 0.0), pt(1.0, 0.0)).unwrap();
        let data = brocard(&t, &Tolerance::default()).unwrap();
        let o = pt(0.0, 1.0 / 3f64.sqrt());
        assert!(data.z1.dist(o) < 1e-12);
        assert!(data.z2.dist(o) < 1e-12);
        assert!((data.angle - std::f64::consts::PI / 6.0).abs() < 1e-12);
        assert!(data.degenerate);
    }
}
