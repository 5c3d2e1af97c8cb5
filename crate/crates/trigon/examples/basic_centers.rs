//! Classic centers of the reference triangle A=(0,0), B=(4,0), C=(1,3):
//! centroid, circumcenter, orthocenter, nine-point center and Lemoine point,
//! plus the Euler-line collinearity that ties them together.

use trigon::{basic_centers, reference_triangle, Line, Object, Predicate, Tolerance};

fn main() {
    let t = reference_triangle();
    let tol = Tolerance::default();
    let b = basic_centers(&t, &tol).expect("reference triangle is non-degenerate");

    println!("reference triangle: A={:?} B={:?} C={:?}", t.a(), t.b(), t.c());
    println!("centroid G          = ({:.12}, {:.12})", b.centroid.x, b.centroid.y);
    println!("circumcenter O      = ({:.12}, {:.12})", b.circumcenter.x, b.circumcenter.y);
    println!("orthocenter H       = ({:.12}, {:.12})", b.orthocenter.x, b.orthocenter.y);
    println!("nine-point center N = ({:.12}, {:.12})", b.nine_point_center.x, b.nine_point_center.y);
    println!("Lemoine point L     = ({:.12}, {:.12})", b.lemoine.x, b.lemoine.y);
    println!("circumradius²       = {:.12}", b.circumcircle.r2);
    println!("nine-point radius²  = {:.12}", b.euler_circle.r2);

    let euler = Line::through(b.circumcenter, b.orthocenter).unwrap();
    let residual = trigon::residual(
        Predicate::OnLine,
        &[Object::Point(b.centroid), Object::Line(euler)],
        t.diameter(),
    )
    .unwrap();
    println!("Euler line residual of G: {residual:.3e}");
}
