//! Isogonal conjugation: the classical O ↔ H pair, the incenter as a fixed
//! point, the involution property, and the conjugacy of the two fixed
//! points at each vertex.

use trigon::{
    configuration, isogonal_conjugate, reference_triangle, Point, Tolerance, VertexId,
};

fn main() {
    let t = reference_triangle();
    let tol = Tolerance::default();
    let cfg = configuration(&t, &tol).unwrap();

    let conj_o = isogonal_conjugate(cfg.basic.circumcenter, &t, &tol).unwrap();
    println!(
        "conjugate of O = ({:.12}, {:.12});  |· - H| = {:.3e}",
        conj_o.x,
        conj_o.y,
        conj_o.dist(cfg.basic.orthocenter)
    );

    let [la, lb, lc] = t.side_lengths();
    let incenter = (la * t.a() + lb * t.b() + lc * t.c()) * (1.0 / (la + lb + lc));
    let conj_i = isogonal_conjugate(incenter, &t, &tol).unwrap();
    println!("incenter moves by {:.3e} (fixed point)", conj_i.dist(incenter));

    for v in VertexId::ALL {
        let vc = cfg.vertex(v);
        let conj_y = isogonal_conjugate(vc.y, &t, &tol).unwrap();
        println!("|conjugate({v}_Y) - {v}_X| = {:.3e}", conj_y.dist(vc.x));
    }

    let p = Point::new(1.7, 0.8);
    let twice = isogonal_conjugate(isogonal_conjugate(p, &t, &tol).unwrap(), &t, &tol).unwrap();
    println!("involution drift for an interior point: {:.3e}", twice.dist(p));
}
