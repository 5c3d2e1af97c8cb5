use super::error::GeomError;
use super::line::Line;
use super::point::{coord_scale, Point};
use crate::tol::Tolerance;

/// A circle stored as center plus squared radius. r2 = 0 is permitted and
/// flagged degenerate: the Brocard circle of a (near-)equilateral triangle
/// collapses to its center, and predicates then run against the point-circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub r2: f64,
}

/// Intersection of a circle with a line or another circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Intersections {
    None,
    One(Point),
    Two(Point, Point),
}

impl Intersections {
    pub fn count(&self) -> usize {
        match self {
            Intersections::None => 0,
            Intersections::One(_) => 1,
            Intersections::Two(_, _) => 2,
        }
    }

    pub fn to_vec(self) -> Vec<Point> {
        match self {
            Intersections::None => vec![],
            Intersections::One(p) => vec![p],
            Intersections::Two(p, q) => vec![p, q],
        }
    }

    pub fn iter(self) -> impl Iterator<Item = Point> {
        self.to_vec().into_iter()
    }
}

fn lex_pair(p: Point, q: Point) -> (Point, Point) {
    if (p.x, p.y) <= (q.x, q.y) {
        (p, q)
    } else {
        (q, p)
    }
}

impl Circle {
    pub fn new(center: Point, r2: f64) -> Result<Circle, GeomError> {
        if !center.is_finite() || !r2.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if r2 < 0.0 {
            return Err(GeomError::NegativeRadius);
        }
        Ok(Circle { center, r2 })
    }

    /// Circumcircle of three non-collinear points.
    pub fn through(p: Point, q: Point, r: Point) -> Result<Circle, GeomError> {
        Self::through_with(p, q, r, &Tolerance::default())
    }

    pub fn through_with(p: Point, q: Point, r: Point, tol: &Tolerance) -> Result<Circle, GeomError> {
        let scale = coord_scale(&[p, q, r]);
        let u = q - p;
        let v = r - p;
        let det = 2.0 * u.cross(v);
        if det.abs() <= tol.degeneracy_eps * scale * scale {
            return Err(GeomError::CollinearPoints);
        }
        // center solves 2(q-p)·c = |q|²-|p|² and 2(r-p)·c = |r|²-|p|²
        let bu = q.norm2() - p.norm2();
        let bv = r.norm2() - p.norm2();
        let cx = (bu * 2.0 * v.y - bv * 2.0 * u.y) / (2.0 * det);
        let cy = (bv * 2.0 * u.x - bu * 2.0 * v.x) / (2.0 * det);
        let center = Point::new(cx, cy);
        let r2 = (center.dist2(p) + center.dist2(q) + center.dist2(r)) / 3.0;
        Ok(Circle { center, r2 })
    }

    /// Circle through `p` and `q` tangent to `tangent` at `p`.
    ///
    /// `p` must lie on the tangent line; `q` must not, or no finite circle
    /// exists. The center is p + t·n with n the unit normal of the tangent
    /// and t = |q−p|² / (2·d(q)), d(q) the signed distance of q.
    pub fn through_tangent(p: Point, q: Point, tangent: &Line) -> Result<Circle, GeomError> {
        Self::through_tangent_with(p, q, tangent, &Tolerance::default())
    }

    pub fn through_tangent_with(
        p: Point,
        q: Point,
        tangent: &Line,
        tol: &Tolerance,
    ) -> Result<Circle, GeomError> {
        let scale = coord_scale(&[p, q]);
        if tangent.distance(p) > tol.eps_rel * scale {
            return Err(GeomError::PointNotOnTangent);
        }
        let dq = tangent.signed_distance(q);
        if dq.abs() <= tol.degeneracy_eps * scale {
            return Err(GeomError::QOnTangent);
        }
        let t = p.dist2(q) / (2.0 * dq);
        let center = p + t * tangent.normal();
        Ok(Circle {
            center,
            r2: t * t,
        })
    }

    /// Circle with the segment pq as a diameter.
    pub fn from_diameter(p: Point, q: Point) -> Circle {
        Circle {
            center: p.midpoint(q),
            r2: p.dist2(q) / 4.0,
        }
    }

    pub fn radius(&self) -> f64 {
        self.r2.sqrt()
    }

    /// Power of the point with respect to the circle: |p−center|² − r².
    pub fn power(&self, p: Point) -> f64 {
        self.center.dist2(p) - self.r2
    }

    /// Whether the circle has collapsed to (numerically) a point.
    pub fn is_degenerate(&self, tol: &Tolerance, scale: f64) -> bool {
        self.r2 <= tol.degeneracy_eps * scale * scale
    }

    pub fn intersect(&self, other: &Circle) -> Result<Intersections, GeomError> {
        self.intersect_with(other, &Tolerance::default())
    }

    pub fn intersect_with(
        &self,
        other: &Circle,
        tol: &Tolerance,
    ) -> Result<Intersections, GeomError> {
        let scale = coord_scale(&[self.center, other.center]).max(self.radius()).max(other.radius());
        let d = self.center.dist(other.center);
        if d <= tol.degeneracy_eps * scale {
            if (self.r2 - other.r2).abs() <= tol.degeneracy_eps * scale * scale {
                return Err(GeomError::IdenticalCircles);
            }
            return Ok(Intersections::None);
        }
        let a = (self.r2 - other.r2 + d * d) / (2.0 * d);
        let mut h2 = self.r2 - a * a;
        let tangency = tol.degeneracy_eps * scale * scale;
        if h2 < -tangency {
            return Ok(Intersections::None);
        }
        if h2 < 0.0 {
            h2 = 0.0;
        }
        let u = (other.center - self.center) * (1.0 / d);
        let base = self.center + a * u;
        let h = h2.sqrt();
        if h <= tol.degeneracy_eps * scale {
            return Ok(Intersections::One(base));
        }
        let off = h * u.perp();
        let (p, q) = lex_pair(base + off, base - off);
        Ok(Intersections::Two(p, q))
    }

    pub fn intersect_line(&self, l: &Line) -> Intersections {
        self.intersect_line_with(l, &Tolerance::default())
    }

    pub fn intersect_line_with(&self, l: &Line, tol: &Tolerance) -> Intersections {
        let scale = coord_scale(&[self.center]).max(self.radius());
        let foot = l.project(self.center);
        let mut h2 = self.r2 - self.center.dist2(foot);
        let tangency = tol.degeneracy_eps * scale * scale;
        if h2 < -tangency {
            return Intersections::None;
        }
        if h2 < 0.0 {
            h2 = 0.0;
        }
        let h = h2.sqrt();
        if h <= tol.degeneracy_eps * scale {
            return Intersections::One(foot);
        }
        let off = h * l.direction();
        let (p, q) = lex_pair(foot + off, foot - off);
        Intersections::Two(p, q)
    }

    /// Radical axis of two circles with distinct centers: the locus of
    /// points with equal power with respect to both.
    pub fn radical_axis(&self, other: &Circle) -> Result<Line, GeomError> {
        self.radical_axis_with(other, &Tolerance::default())
    }

    pub fn radical_axis_with(&self, other: &Circle, tol: &Tolerance) -> Result<Line, GeomError> {
        let scale = coord_scale(&[self.center, other.center]).max(self.radius()).max(other.radius());
        if self.center.dist(other.center) <= tol.degeneracy_eps * scale {
            return Err(GeomError::ConcentricCircles);
        }
        let a = 2.0 * (other.center.x - self.center.x);
        let b = 2.0 * (other.center.y - self.center.y);
        let c = (self.center.norm2() - self.r2) - (other.center.norm2() - other.r2);
        Line::new(a, b, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn unit_circle_through() {
        let c = Circle::through(pt(1.0, 0.0), pt(-1.0, 0.0), pt(0.0, 1.0)).unwrap();
        assert!(c.center.dist(pt(0.0, 0.0)) < 1e-15);
        assert!((c.r2 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn reference_circumcircle() {
        // T0 = (0,0),(4,0),(1,3): center (2,1), r2 = 5
        let c = Circle::through(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0)).unwrap();
        assert!(c.center.dist(pt(2.0, 1.0)) < 1e-14);
        assert!((c.r2 - 5.0).abs() < 1e-13);
    }

    #[test]
    fn collinear_rejected() {
        let r = Circle::through(pt(0.0, 0.0), pt(2.0, 0.0), pt(1.0, 1e-15));
        assert_eq!(r, Err(GeomError::CollinearPoints));
    }

    #[test]
    fn tangent_circle_omega1_of_reference() {
        // passes A=(0,0), B=(4,0), tangent to line AC at A: center (2, -2/3), r2 = 40/9
        let ac = Line::through(pt(0.0, 0.0), pt(1.0, 3.0)).unwrap();
        let c = Circle::through_tangent(pt(0.0, 0.0), pt(4.0, 0.0), &ac).unwrap();
        assert!(c.center.dist(pt(2.0, -2.0 / 3.0)) < 1e-14);
        assert!((c.r2 - 40.0 / 9.0).abs() < 1e-13);
    }

    #[test]
    fn tangent_circle_omega2_of_reference() {
        let ab = Line::through(pt(0.0, 0.0), pt(4.0, 0.0)).unwrap();
        let c = Circle::through_tangent(pt(0.0, 0.0), pt(1.0, 3.0), &ab).unwrap();
        assert!(c.center.dist(pt(0.0, 5.0 / 3.0)) < 1e-14);
        assert!((c.r2 - 25.0 / 9.0).abs() < 1e-13);
    }

    #[test]
    fn tangent_circle_symmetric_case() {
        let x_axis = Line::through(pt(0.0, 0.0), pt(1.0, 0.0)).unwrap();
        let c = Circle::through_tangent(pt(0.0, 0.0), pt(0.0, 2.0), &x_axis).unwrap();
        assert!(c.center.dist(pt(0.0, 1.0)) < 1e-15);
        assert!((c.r2 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn tangent_circle_errors() {
        let x_axis = Line::through(pt(0.0, 0.0), pt(1.0, 0.0)).unwrap();
        assert_eq!(
            Circle::through_tangent(pt(0.0, 1.0), pt(2.0, 2.0), &x_axis),
            Err(GeomError::PointNotOnTangent)
        );
        assert_eq!(
            Circle::through_tangent(pt(0.0, 0.0), pt(3.0, 0.0), &x_axis),
            Err(GeomError::QOnTangent)
        );
    }

    #[test]
    fn circle_circle_external_tangency() {
        let c1 = Circle::new(pt(0.0, 0.0), 1.0).unwrap();
        let c2 = Circle::new(pt(2.0, 0.0), 1.0).unwrap();
        assert_eq!(c1.intersect(&c2).unwrap(), Intersections::One(pt(1.0, 0.0)));
    }

    #[test]
    fn circle_circle_disjoint_and_identical() {
        let c1 = Circle::new(pt(0.0, 0.0), 1.0).unwrap();
        let c2 = Circle::new(pt(10.0, 0.0), 1.0).unwrap();
        assert_eq!(c1.intersect(&c2).unwrap(), Intersections::None);
        assert_eq!(c1.intersect(&c1), Err(GeomError::IdenticalCircles));
    }

    #[test]
    fn omega_intersection_gives_fixed_point() {
        // ω₁ ∩ ω₂ of T0 = {A, (28/17, 24/17)} in lexicographic order
        let ac = Line::through(pt(0.0, 0.0), pt(1.0, 3.0)).unwrap();
        let ab = Line::through(pt(0.0, 0.0), pt(4.0, 0.0)).unwrap();
        let w1 = Circle::through_tangent(pt(0.0, 0.0), pt(4.0, 0.0), &ac).unwrap();
        let w2 = Circle::through_tangent(pt(0.0, 0.0), pt(1.0, 3.0), &ab).unwrap();
        match w1.intersect(&w2).unwrap() {
            Intersections::Two(p, q) => {
                assert!(p.dist(pt(0.0, 0.0)) < 1e-12);
                assert!(q.dist(pt(28.0 / 17.0, 24.0 / 17.0)) < 1e-12);
            }
            other => panic!("expected two points, got {other:?}"),
        }
    }

    #[test]
    fn line_circle_cases() {
        let unit = Circle::new(pt(0.0, 0.0), 1.0).unwrap();
        let x_axis = Line::through(pt(0.0, 0.0), pt(1.0, 0.0)).unwrap();
        assert_eq!(
            unit.intersect_line(&x_axis),
            Intersections::Two(pt(-1.0, 0.0), pt(1.0, 0.0))
        );
        let y1 = Line::through(pt(0.0, 1.0), pt(1.0, 1.0)).unwrap();
        assert_eq!(unit.intersect_line(&y1), Intersections::One(pt(0.0, 1.0)));
        let y2 = Line::through(pt(0.0, 2.0), pt(1.0, 2.0)).unwrap();
        assert_eq!(unit.intersect_line(&y2), Intersections::None);
    }

    #[test]
    fn radical_axis_of_unit_circles() {
        let c1 = Circle::new(pt(0.0, 0.0), 1.0).unwrap();
        let c2 = Circle::new(pt(2.0, 0.0), 1.0).unwrap();
        let l = c1.radical_axis(&c2).unwrap();
        // x = 1
        assert!(l.distance(pt(1.0, 5.0)) < 1e-15);
        assert!(l.distance(pt(1.0, -3.0)) < 1e-15);
        assert_eq!(c1.radical_axis(&c1), Err(GeomError::ConcentricCircles));
    }

    #[test]
    fn radical_axis_of_reference_tangent_circles() {
        // ω₁, ω₂ of T0 -> y = (6/7)x, through A and A_X
        let ac = Line::through(pt(0.0, 0.0), pt(1.0, 3.0)).unwrap();
        let ab = Line::through(pt(0.0, 0.0), pt(4.0, 0.0)).unwrap();
        let w1 = Circle::through_tangent(pt(0.0, 0.0), pt(4.0, 0.0), &ac).unwrap();
        let w2 = Circle::through_tangent(pt(0.0, 0.0), pt(1.0, 3.0), &ab).unwrap();
        let l = w1.radical_axis(&w2).unwrap();
        assert!(l.distance(pt(0.0, 0.0)) < 1e-14);
        assert!(l.distance(pt(7.0, 6.0)) < 1e-13);
    }

    #[test]
    fn gamma_radical_axis_passes_side_midpoint() {
        // γ₁, γ₂ of T0 -> y = (3/5)x, through the midpoint (2.5, 1.5) of BC
        let a = pt(0.0, 0.0);
        let b = pt(4.0, 0.0);
        let c = pt(1.0, 3.0);
        let bc = Line::through(b, c).unwrap();
        let g1 = Circle::through_tangent(b, a, &bc).unwrap();
        let g2 = Circle::through_tangent(c, a, &bc).unwrap();
        let l = g1.radical_axis(&g2).unwrap();
        assert!(l.distance(pt(2.5, 1.5)) < 1e-13);
        assert!(l.distance(a) < 1e-13);
    }
}
