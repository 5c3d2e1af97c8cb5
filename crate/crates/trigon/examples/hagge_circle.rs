//! Hagge circles: for any pivot inside the circumcircle, the reflections of
//! the cevian traces across the sides are concyclic with the orthocenter,
//! and the chords toward the altitude re-intersections concur at the pivot.

use trigon::{basic_centers, hagge, reference_triangle, Line, Point, Tolerance, VertexId};

fn main() {
    let t = reference_triangle();
    let tol = Tolerance::default();
    let basic = basic_centers(&t, &tol).unwrap();

    for pivot in [
        basic.circumcenter,
        basic.lemoine,
        Point::new(1.8, 0.9),
        Point::new(1.2, 1.4),
    ] {
        let data = hagge(&t, pivot, &tol).unwrap();
        let h_residual =
            (basic.orthocenter.dist(data.circle.center) - data.circle.radius()).abs();
        println!(
            "pivot ({:.3}, {:.3}): Hagge circle center ({:.6}, {:.6}) r={:.6}, H residual {:.2e}",
            pivot.x,
            pivot.y,
            data.circle.center.x,
            data.circle.center.y,
            data.circle.radius(),
            h_residual
        );
        let mut worst = 0.0f64;
        for v in VertexId::ALL {
            let i = v.index();
            let chord = Line::through(data.reflected[i], data.altitude_points[i]).unwrap();
            worst = worst.max(chord.distance(pivot));
        }
        println!("  concurrence of the three chords at the pivot: residual {worst:.2e}");
    }
}
