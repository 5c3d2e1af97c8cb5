//! The two fixed points of the opening problems, built from tangent
//! circles, and their pedal characterizations: A_X is the projection of the
//! circumcenter on the A-symmedian, A_Y the projection of the orthocenter
//! on the A-median.

use trigon::centers::{gamma_circles, omega_circles};
use trigon::{
    basic_centers, fixed_point_antiparallel, fixed_point_parallel, reference_triangle, Tolerance,
    VertexId,
};

fn main() {
    let t = reference_triangle();
    let tol = Tolerance::default();
    let basic = basic_centers(&t, &tol).unwrap();

    for v in VertexId::ALL {
        let (omega1, omega2) = omega_circles(&t, v, &tol).unwrap();
        let (gamma1, gamma2) = gamma_circles(&t, v, &tol).unwrap();
        let x = fixed_point_parallel(&t, v, &tol).unwrap();
        let y = fixed_point_antiparallel(&t, v, &tol).unwrap();
        println!("vertex {v}:");
        println!("  ω₁ center ({:.6}, {:.6}) r²={:.6}", omega1.center.x, omega1.center.y, omega1.r2);
        println!("  ω₂ center ({:.6}, {:.6}) r²={:.6}", omega2.center.x, omega2.center.y, omega2.r2);
        println!("  γ₁ center ({:.6}, {:.6}) r²={:.6}", gamma1.center.x, gamma1.center.y, gamma1.r2);
        println!("  γ₂ center ({:.6}, {:.6}) r²={:.6}", gamma2.center.x, gamma2.center.y, gamma2.r2);
        println!("  {v}_X = ({:.12}, {:.12})", x.x, x.y);
        println!("  {v}_Y = ({:.12}, {:.12})", y.x, y.y);

        let proj_o = basic.symmedian_line(&t, v).project(basic.circumcenter);
        let proj_h = basic.median_line(&t, v).project(basic.orthocenter);
        println!("  |{v}_X - proj(O, symmedian)| = {:.3e}", x.dist(proj_o));
        println!("  |{v}_Y - proj(H, median)|    = {:.3e}", y.dist(proj_h));
    }
}
