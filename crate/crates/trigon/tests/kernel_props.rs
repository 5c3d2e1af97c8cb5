//! Property tests for the kernel invariants: construction round-trips,
//! the directed-angle calculus, involution and normalization properties,
//! and invariance of residuals under similarity transforms.

use proptest::prelude::*;

use trigon::{
    anticomplement, complement, directed_angle, isogonal_conjugate, residual, Circle, Line,
    Object, Point, Predicate, Tolerance, Triangle,
};

fn coord() -> impl Strategy<Value = f64> {
    (-10.0..10.0f64).prop_filter("finite", |x| x.is_finite())
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

fn triangle() -> impl Strategy<Value = Triangle> {
    (point(), point(), point())
        .prop_filter_map("non-degenerate, conditioned", |(a, b, c)| {
            let t = Triangle::new(a, b, c).ok()?;
            (t.min_angle() > 0.2 && t.diameter() > 0.5).then_some(t)
        })
}

proptest! {
    #[test]
    fn circle_through_round_trip(t in triangle()) {
        // conditioned triples: residual within 1e-12 of the diameter scale
        let (a, b, c) = (t.a(), t.b(), t.c());
        let circ = Circle::through(a, b, c).unwrap();
        for p in [a, b, c] {
            let r = (p.dist(circ.center) - circ.radius()).abs();
            prop_assert!(r < 1e-12 * t.diameter().max(1.0), "residual {r}");
        }
    }

    #[test]
    fn circle_through_round_trip_thin_triples(a in point(), b in point(), c in point()) {
        // arbitrary triples may be nearly collinear; the bisector solve then
        // loses accuracy like R / sin(min angle), so the bound scales with
        // the conditioning
        let Ok(t) = Triangle::new(a, b, c) else { return Ok(()); };
        if let Ok(circ) = Circle::through(a, b, c) {
            let scale = circ.radius().max(1.0) / t.min_angle().sin().max(1e-15);
            for p in [a, b, c] {
                let r = (p.dist(circ.center) - circ.radius()).abs();
                prop_assert!(r < 1e-12 * scale, "residual {r} at radius {}", circ.radius());
            }
        }
    }

    #[test]
    fn directed_angle_additivity(p in point(), q in point(), r in point(), s in point(), u in point(), v in point()) {
        let l1 = Line::through(p, q);
        let l2 = Line::through(r, s);
        let l3 = Line::through(u, v);
        let (Ok(l1), Ok(l2), Ok(l3)) = (l1, l2, l3) else { return Ok(()); };
        let lhs = directed_angle(&l1, &l3);
        let rhs = directed_angle(&l1, &l2) + directed_angle(&l2, &l3);
        prop_assert!(lhs.distance(rhs) < 1e-12);
    }

    #[test]
    fn isogonal_conjugate_is_an_involution(t in triangle(), w1 in 0.1..0.9f64, w2 in 0.1..0.9f64, w3 in 0.1..0.9f64) {
        let tol = Tolerance::default();
        let s = w1 + w2 + w3;
        let p = (w1 * t.a() + w2 * t.b() + w3 * t.c()) * (1.0 / s);
        let Ok(conj) = isogonal_conjugate(p, &t, &tol) else { return Ok(()); };
        let Ok(back) = isogonal_conjugate(conj, &t, &tol) else { return Ok(()); };
        prop_assert!(back.dist(p) < 1e-9 * t.diameter().max(1.0), "drift {}", back.dist(p));
    }

    #[test]
    fn radical_axis_perpendicular_to_center_line(c1 in point(), r1 in 0.1..5.0f64, c2 in point(), r2 in 0.1..5.0f64) {
        prop_assume!(c1.dist(c2) > 1e-3);
        let a = Circle::new(c1, r1 * r1).unwrap();
        let b = Circle::new(c2, r2 * r2).unwrap();
        let axis = a.radical_axis(&b).unwrap();
        let centers = Line::through(c1, c2).unwrap();
        let angle = directed_angle(&axis, &centers);
        prop_assert!((angle.radians() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        // every axis point has equal power
        let probe = axis.project(Point::new(0.0, 0.0));
        prop_assert!((a.power(probe) - b.power(probe)).abs() < 1e-9 * (1.0 + probe.norm2()));
    }

    #[test]
    fn line_normalization_is_canonical(p in point(), q in point()) {
        prop_assume!(p.dist(q) > 1e-6);
        let l1 = Line::through(p, q).unwrap();
        let l2 = Line::through(q, p).unwrap();
        prop_assert!((l1.a() - l2.a()).abs() < 1e-15);
        prop_assert!((l1.b() - l2.b()).abs() < 1e-15);
        prop_assert!((l1.c() - l2.c()).abs() < 1e-12);
        prop_assert!(l1.a() > 0.0 || (l1.a() == 0.0 && l1.b() > 0.0));
        prop_assert!((l1.a() * l1.a() + l1.b() * l1.b() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn intersections_are_lexicographically_ordered(c1 in point(), r1 in 0.5..5.0f64, c2 in point(), r2 in 0.5..5.0f64) {
        prop_assume!(c1.dist(c2) > 1e-3);
        let a = Circle::new(c1, r1 * r1).unwrap();
        let b = Circle::new(c2, r2 * r2).unwrap();
        if let Ok(trigon::Intersections::Two(p, q)) = a.intersect(&b) {
            prop_assert!((p.x, p.y) <= (q.x, q.y));
            for pt in [p, q] {
                prop_assert!(a.power(pt).abs() < 1e-9 * (r1 * r1).max(1.0));
                prop_assert!(b.power(pt).abs() < 1e-9 * (r2 * r2).max(1.0));
            }
        }
    }

    #[test]
    fn anticomplement_inverts_complement(t in triangle(), p in point()) {
        let round = anticomplement(complement(p, &t), &t);
        prop_assert!(round.dist(p) < 1e-12 * (1.0 + p.norm()));
    }
}

/// Residuals are similarity-invariant: applying one rigid motion plus a
/// uniform scaling to every input moves the normalized residual by < 1e-9.
#[test]
fn residuals_invariant_under_similarity() {
    let mut rng = trigon::SplitMix64::new(2024);
    let tol = Tolerance::default();
    for _ in 0..200 {
        let t = trigon::sample_triangle(&mut rng, &tol);
        let theta = rng.uniform(0.0, std::f64::consts::TAU);
        let scale = rng.uniform(0.2, 5.0);
        let shift = Point::new(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
        let map = |p: Point| {
            let rotated = Point::new(
                p.x * theta.cos() - p.y * theta.sin(),
                p.x * theta.sin() + p.y * theta.cos(),
            );
            rotated * scale + shift
        };
        let (a, b, c) = (t.a(), t.b(), t.c());
        let p = (0.5 * a + 0.3 * b + 0.2 * c) * 1.0;
        let args = [
            Object::Point(a),
            Object::Point(b),
            Object::Point(c),
            Object::Point(p),
        ];
        let args2 = [
            Object::Point(map(a)),
            Object::Point(map(b)),
            Object::Point(map(c)),
            Object::Point(map(p)),
        ];
        let r1 = residual(Predicate::Concyclic, &args, t.diameter()).unwrap();
        let r2 = residual(Predicate::Concyclic, &args2, t.diameter() * scale).unwrap();
        assert!((r1 - r2).abs() < 1e-9, "similarity drift {}", (r1 - r2).abs());
    }
}

/// The tangent-circle constructions and everything derived from them keep
/// their residuals under a common similarity transform (the whole-check
/// version of the invariance property).
#[test]
fn check_statuses_invariant_under_similarity() {
    let tol = Tolerance::new(1e-7, 1e-12).unwrap();
    let mut rng = trigon::SplitMix64::new(77);
    for round in 0..10 {
        let t = trigon::sample_triangle(&mut rng, &tol);
        let theta = rng.uniform(0.0, std::f64::consts::TAU);
        let scale = rng.uniform(0.3, 4.0);
        let shift = Point::new(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        let map = |p: Point| {
            let rotated = Point::new(
                p.x * theta.cos() - p.y * theta.sin(),
                p.x * theta.sin() + p.y * theta.cos(),
            );
            rotated * scale + shift
        };
        let moved = Triangle::new(map(t.a()), map(t.b()), map(t.c())).unwrap();
        let r1 = trigon::run_suite_on(&[t], 42, &tol);
        let r2 = trigon::run_suite_on(&[moved], 42, &tol);
        for (c1, c2) in r1.checks.iter().zip(r2.checks.iter()) {
            assert_eq!(c1.status().name(), c2.status().name(), "round {round}, {}", c1.id);
            if let (Some(w1), Some(w2)) = (c1.worst_residual, c2.worst_residual) {
                assert!(
                    (w1 - w2).abs() < 1e-9,
                    "round {round}, {}: drift {}",
                    c1.id,
                    (w1 - w2).abs()
                );
            }
        }
    }
}
