use super::error::GeomError;
use super::line::Line;
use super::point::Point;
use crate::tol::Tolerance;

/// Names for the vertices of a triangle; all per-vertex constructions are
/// cyclic in A → B → C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexId {
    A,
    B,
    C,
}

impl VertexId {
    pub const ALL: [VertexId; 3] = [VertexId::A, VertexId::B, VertexId::C];

    pub fn next(self) -> VertexId {
        match self {
            VertexId::A => VertexId::B,
            VertexId::B => VertexId::C,
            VertexId::C => VertexId::A,
        }
    }

    pub fn prev(self) -> VertexId {
        self.next().next()
    }

    pub fn index(self) -> usize {
        match self {
            VertexId::A => 0,
            VertexId::B => 1,
            VertexId::C => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexId::A => "A",
            VertexId::B => "B",
            VertexId::C => "C",
        }
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A non-degenerate triangle. Conditioning data (minimum angle, diameter)
/// is derived on demand; the constructor rejects collinear vertex triples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    a: Point,
    b: Point,
    c: Point,
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Triangle, GeomError> {
        Self::new_with(a, b, c, &Tolerance::default())
    }

    pub fn new_with(a: Point, b: Point, c: Point, tol: &Tolerance) -> Result<Triangle, GeomError> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let t = Triangle { a, b, c };
        let d = t.diameter();
        if d <= 0.0 || (b - a).cross(c - a).abs() <= tol.degeneracy_eps * d * d {
            return Err(GeomError::DegenerateTriangle);
        }
        Ok(t)
    }

    pub fn a(&self) -> Point {
        self.a
    }

    pub fn b(&self) -> Point {
        self.b
    }

    pub fn c(&self) -> Point {
        self.c
    }

    pub fn vertices(&self) -> [Point; 3] {
        [self.a, self.b, self.c]
    }

    pub fn vertex(&self, v: VertexId) -> Point {
        match v {
            VertexId::A => self.a,
            VertexId::B => self.b,
            VertexId::C => self.c,
        }
    }

    /// Side lengths [|BC|, |CA|, |AB|], opposite A, B, C respectively.
    pub fn side_lengths(&self) -> [f64; 3] {
        [
            self.b.dist(self.c),
            self.c.dist(self.a),
            self.a.dist(self.b),
        ]
    }

    /// Longest side length; the scale by which residuals are normalized.
    pub fn diameter(&self) -> f64 {
        let [l1, l2, l3] = self.side_lengths();
        l1.max(l2).max(l3)
    }

    pub fn angle_at(&self, v: VertexId) -> f64 {
        let p = self.vertex(v);
        let u = self.vertex(v.next()) - p;
        let w = self.vertex(v.prev()) - p;
        u.cross(w).abs().atan2(u.dot(w))
    }

    pub fn min_angle(&self) -> f64 {
        VertexId::ALL
            .iter()
            .map(|&v| self.angle_at(v))
            .fold(f64::INFINITY, f64::min)
    }

    /// Twice the signed area; positive for counterclockwise vertex order.
    pub fn orientation(&self) -> f64 {
        (self.b - self.a).cross(self.c - self.a)
    }

    /// The sideline opposite `v` (for A this is line BC).
    pub fn sideline_opposite(&self, v: VertexId) -> Line {
        Line::through(self.vertex(v.next()), self.vertex(v.prev()))
            .expect("non-degenerate triangle has distinct vertices")
    }

    /// Midpoint of the side opposite `v` (for A: the midpoint of BC).
    pub fn side_midpoint_opposite(&self, v: VertexId) -> Point {
        self.vertex(v.next()).midpoint(self.vertex(v.prev()))
    }

    /// Altitude line from `v`: through the vertex, perpendicular to the
    /// opposite side. Built from the side direction, not from the
    /// orthocenter, so it stays exact even for near-right triangles.
    pub fn altitude_line(&self, v: VertexId) -> Line {
        self.sideline_opposite(v).perpendicular_through(self.vertex(v))
    }

    /// Interior angle bisector line at `v`.
    pub fn bisector_line(&self, v: VertexId) -> Line {
        let p = self.vertex(v);
        let u = self.vertex(v.next()) - p;
        let w = self.vertex(v.prev()) - p;
        let dir = u * (1.0 / u.norm()) + w * (1.0 / w.norm());
        Line::from_point_dir(p, dir).expect("bisector direction of a valid triangle is nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_collinear() {
        let r = Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(2.0, 2.0),
        );
        assert_eq!(r, Err(GeomError::DegenerateTriangle));
    }

    #[test]
    fn reference_triangle_conditioning() {
        let t = Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(1.0, 3.0),
        )
        .unwrap();
        assert!((t.diameter() - 18f64.sqrt()).abs() < 1e-15);
        assert!(t.min_angle() > 15f64.to_radians());
        assert_eq!(t.side_midpoint_opposite(VertexId::A), Point::new(2.5, 1.5));
    }

    #[test]
    fn vertex_cycle() {
        assert_eq!(VertexId::A.next(), VertexId::B);
        assert_eq!(VertexId::A.prev(), VertexId::C);
        assert_eq!(VertexId::C.next(), VertexId::A);
    }
}
