//! The Brocard configuration: both Brocard points from tangent circles,
//! the Brocard angle against its cotangent identity, and the two Brocard
//! triangles on the circle with diameter OL.

use trigon::{brocard, reference_triangle, Tolerance, VertexId};

fn main() {
    let t = reference_triangle();
    let tol = Tolerance::default();
    let data = brocard(&t, &tol).unwrap();

    println!("Z1 = ({:.12}, {:.12})", data.z1.x, data.z1.y);
    println!("Z2 = ({:.12}, {:.12})", data.z2.x, data.z2.y);
    println!("X(39) = midpoint(Z1, Z2) = ({:.12}, {:.12})", data.midpoint.x, data.midpoint.y);
    println!("Brocard angle ω = {:.12} rad", data.angle);

    let cot_sum: f64 = VertexId::ALL.iter().map(|&v| 1.0 / t.angle_at(v).tan()).sum();
    println!("cot ω           = {:.12}", 1.0 / data.angle.tan());
    println!("cot A+cot B+cot C = {:.12}", cot_sum);

    println!(
        "Brocard circle: center ({:.6}, {:.6}), r = {:.6}{}",
        data.circle.center.x,
        data.circle.center.y,
        data.circle.radius(),
        if data.degenerate { " (degenerate)" } else { "" }
    );
    for (label, pts) in [
        ("second Brocard triangle", data.second_triangle),
        ("first Brocard triangle", data.first_triangle),
    ] {
        println!("{label}:");
        for (v, p) in VertexId::ALL.iter().zip(pts.iter()) {
            println!(
                "  {v}: ({:.9}, {:.9})  on-circle residual {:.3e}",
                p.x,
                p.y,
                (p.dist(data.circle.center) - data.circle.radius()).abs()
            );
        }
    }
}
