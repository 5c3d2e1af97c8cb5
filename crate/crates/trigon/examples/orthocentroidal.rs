//! The orthocentroidal circle (diameter GH) carries the three antiparallel
//! fixed points and the projections of G on the altitudes; it coincides
//! with the Hagge circle of the Lemoine point.

use trigon::{hagge, orthocentroidal, reference_triangle, basic_centers, Tolerance, VertexId};

fn main() {
    let t = reference_triangle();
    let tol = Tolerance::default();
    let basic = basic_centers(&t, &tol).unwrap();
    let oc = orthocentroidal(&t, &tol).unwrap();

    println!(
        "orthocentroidal circle: center ({:.12}, {:.12}), r² = {:.12}",
        oc.circle.center.x, oc.circle.center.y, oc.circle.r2
    );
    for (v, p) in VertexId::ALL.iter().zip(oc.y_triangle.iter()) {
        println!("  {v}_Y on it: residual {:.3e}", oc.circle.power(*p).abs());
    }
    for (v, p) in VertexId::ALL.iter().zip(oc.projections.iter()) {
        println!("  H_{v} on it: residual {:.3e}", oc.circle.power(*p).abs());
    }

    let hl = hagge(&t, basic.lemoine, &tol).unwrap();
    println!(
        "Hagge circle of L:      center ({:.12}, {:.12}), r² = {:.12}",
        hl.circle.center.x, hl.circle.center.y, hl.circle.r2
    );
    println!(
        "center distance {:.3e}, radius difference {:.3e}",
        hl.circle.center.dist(oc.circle.center),
        (hl.circle.radius() - oc.circle.radius()).abs()
    );
}
