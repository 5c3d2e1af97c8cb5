//! Seeded sampling of test triangles and auxiliary construction data.

use crate::kernel::{Circle, Point, Triangle};
use crate::theorems::rng::SplitMix64;
use crate::tol::Tolerance;

/// Draws a random triangle: vertices uniform in [−1,1]², rejection-sampled
/// for minimum angle ≥ 15° and diameter ≥ 0.5, then normalized so the
/// circumcenter sits at the origin with circumradius 1.
pub fn sample_triangle(rng: &mut SplitMix64, tol: &Tolerance) -> Triangle {
    loop {
        let mut v = [Point::default(); 3];
        for p in v.iter_mut() {
            *p = Point::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        }
        let Ok(t) = Triangle::new_with(v[0], v[1], v[2], tol) else {
            continue;
        };
        if t.min_angle() < 15f64.to_radians() || t.diameter() < 0.5 {
            continue;
        }
        let Ok(circ) = Circle::through_with(v[0], v[1], v[2], tol) else {
            continue;
        };
        let inv_r = 1.0 / circ.radius();
        let norm = |p: Point| (p - circ.center) * inv_r;
        if let Ok(t) = Triangle::new_with(norm(v[0]), norm(v[1]), norm(v[2]), tol) {
            return t;
        }
    }
}

/// A side parameter in the interior 10–90% band, keeping sampled cevian
/// feet away from the vertices.
pub fn side_param(rng: &mut SplitMix64) -> f64 {
    rng.uniform(0.1, 0.9)
}

/// An interior point with barycentric weights drawn from the 10–90% band,
/// so auxiliary pivots avoid incidental degeneracies at vertices and sides.
pub fn interior_point(rng: &mut SplitMix64, t: &Triangle) -> Point {
    let w1 = rng.uniform(0.1, 0.9);
    let w2 = rng.uniform(0.1, 0.9);
    let w3 = rng.uniform(0.1, 0.9);
    let s = w1 + w2 + w3;
    (w1 * t.a() + w2 * t.b() + w3 * t.c()) * (1.0 / s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_triangles_are_normalized_and_conditioned() {
        let tol = Tolerance::default();
        let mut rng = SplitMix64::new(42);
        for _ in 0..50 {
            let t = sample_triangle(&mut rng, &tol);
            let circ = Circle::through(t.a(), t.b(), t.c()).unwrap();
            assert!(circ.center.norm() < 1e-12);
            assert!((circ.radius() - 1.0).abs() < 1e-12);
            assert!(t.min_angle() >= 15f64.to_radians() - 1e-12);
        }
    }

    #[test]
    fn interior_points_are_strictly_inside() {
        let tol = Tolerance::default();
        let mut rng = SplitMix64::new(1);
        let t = sample_triangle(&mut rng, &tol);
        for _ in 0..100 {
            let p = interior_point(&mut rng, &t);
            // inside <=> same orientation sign against all three sides
            let s1 = (t.b() - t.a()).cross(p - t.a());
            let s2 = (t.c() - t.b()).cross(p - t.b());
            let s3 = (t.a() - t.c()).cross(p - t.c());
            assert!(s1 * s2 > 0.0 && s2 * s3 > 0.0);
        }
    }
}
