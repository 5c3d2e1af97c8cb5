use super::error::GeomError;
use super::point::{coord_scale, Point};
use crate::tol::Tolerance;

/// A line a·x + b·y + c = 0, stored normalized with a² + b² = 1 and the
/// first nonzero of (a, b) positive, so equal lines compare bitwise equal
/// after rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    a: f64,
    b: f64,
    c: f64,
}

impl Line {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Line, GeomError> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let n = a.hypot(b);
        if n == 0.0 {
            return Err(GeomError::ZeroLine);
        }
        let (mut a, mut b, mut c) = (a / n, b / n, c / n);
        if a == 0.0 {
            a = 0.0; // collapse -0.0
        }
        if a < 0.0 || (a == 0.0 && b < 0.0) {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    /// Line through two distinct points.
    pub fn through(p: Point, q: Point) -> Result<Line, GeomError> {
        Self::through_with(p, q, &Tolerance::default())
    }

    pub fn through_with(p: Point, q: Point, tol: &Tolerance) -> Result<Line, GeomError> {
        let d = q - p;
        if d.norm() <= tol.degeneracy_eps * coord_scale(&[p, q]) {
            return Err(GeomError::CoincidentPoints);
        }
        let n = d.perp();
        Line::new(n.x, n.y, -(n.x * p.x + n.y * p.y))
    }

    /// Line through `p` with direction vector `dir`.
    pub fn from_point_dir(p: Point, dir: Point) -> Result<Line, GeomError> {
        let n = dir.perp();
        Line::new(n.x, n.y, -(n.x * p.x + n.y * p.y))
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Signed distance from `p` to the line (exact distance, since the
    /// normal is unit length).
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }

    pub fn distance(&self, p: Point) -> f64 {
        self.signed_distance(p).abs()
    }

    /// Unit direction vector of the line.
    pub fn direction(&self) -> Point {
        Point::new(self.b, -self.a)
    }

    /// Unit normal vector of the line.
    pub fn normal(&self) -> Point {
        Point::new(self.a, self.b)
    }

    /// Angle of the direction in [0, π).
    pub fn angle(&self) -> f64 {
        let th = (-self.a).atan2(self.b).rem_euclid(std::f64::consts::PI);
        if th >= std::f64::consts::PI {
            0.0
        } else {
            th
        }
    }

    /// Orthogonal projection of `p` onto the line.
    pub fn project(&self, p: Point) -> Point {
        let d = self.signed_distance(p);
        Point::new(p.x - d * self.a, p.y - d * self.b)
    }

    /// Mirror image of `p` across the line.
    pub fn reflect(&self, p: Point) -> Point {
        let d = self.signed_distance(p);
        Point::new(p.x - 2.0 * d * self.a, p.y - 2.0 * d * self.b)
    }

    pub fn parallel_through(&self, p: Point) -> Line {
        Line::new(self.a, self.b, -(self.a * p.x + self.b * p.y))
            .expect("parallel of a valid line is valid")
    }

    pub fn perpendicular_through(&self, p: Point) -> Line {
        Line::new(-self.b, self.a, self.b * p.x - self.a * p.y)
            .expect("perpendicular of a valid line is valid")
    }

    /// Perpendicular bisector of the segment pq.
    pub fn perpendicular_bisector(p: Point, q: Point, tol: &Tolerance) -> Result<Line, GeomError> {
        let side = Line::through_with(p, q, tol)?;
        Ok(side.perpendicular_through(p.midpoint(q)))
    }

    /// Intersection point of two lines.
    pub fn intersect(&self, other: &Line) -> Result<Point, GeomError> {
        let det = self.a * other.b - self.b * other.a;
        // both normals are unit, so det is the sine of the angle between them
        if det.abs() <= 1e-14 {
            return Err(GeomError::ParallelLines);
        }
        let x = (self.b * other.c - self.c * other.b) / det;
        let y = (self.c * other.a - self.a * other.c) / det;
        Ok(Point::new(x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_cases() {
        // (0,0),(1,0) -> y = 0, normalized as (0, 1, 0)
        let l = Line::through(Point::new(0.0, 0.0), Point::new(1.0, 0.0)).unwrap();
        assert_eq!((l.a(), l.b(), l.c()), (0.0, 1.0, 0.0));
        // (0,0),(0,1) -> x = 0
        let l = Line::through(Point::new(0.0, 0.0), Point::new(0.0, 1.0)).unwrap();
        assert_eq!((l.a(), l.b(), l.c()), (1.0, 0.0, 0.0));
    }

    #[test]
    fn membership_residual() {
        // line AC of the reference triangle; (2, 6) lies on it
        let l = Line::through(Point::new(0.0, 0.0), Point::new(1.0, 3.0)).unwrap();
        assert!(l.distance(Point::new(2.0, 6.0)) < 1e-15);
    }

    #[test]
    fn coincident_points_rejected() {
        let p = Point::new(1.0, 2.0);
        assert_eq!(Line::through(p, p), Err(GeomError::CoincidentPoints));
    }

    #[test]
    fn normalization_is_canonical() {
        let l1 = Line::through(Point::new(0.0, 0.0), Point::new(1.0, 1.0)).unwrap();
        let l2 = Line::through(Point::new(1.0, 1.0), Point::new(0.0, 0.0)).unwrap();
        assert_eq!(l1, l2);
    }

    #[test]
    fn project_and_reflect() {
        let x_axis = Line::through(Point::new(0.0, 0.0), Point::new(1.0, 0.0)).unwrap();
        assert_eq!(x_axis.project(Point::new(0.0, 1.0)), Point::new(0.0, 0.0));
        assert_eq!(x_axis.reflect(Point::new(0.0, 1.0)), Point::new(0.0, -1.0));
    }
}
