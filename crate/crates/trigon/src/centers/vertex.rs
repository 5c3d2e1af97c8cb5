//! The per-vertex cast of the two fixed-point problems and everything
//! derived from them in the later statements.

use crate::kernel::{
    complete_parallelogram, second_intersection, Circle, GeomError, Line, Point, Triangle,
    VertexId,
};
use crate::tol::Tolerance;

use super::basic::BasicCenters;

/// All named points and circles attached to one vertex V (shown here for
/// V = A; B and C are the cyclic rotations).
///
/// - `x`: the Problem-1 fixed point A_X = ω₁ ∩ ω₂ away from A; it lies on
///   the A-symmedian, at the projection of O.
/// - `y`: the Problem-2 fixed point A_Y = γ₁ ∩ γ₂ away from A; it lies on
///   the A-median, at the projection of H.
/// - `s`, `m`: second intersections of the symmedian resp. the ray A–A_Y
///   with the circumcircle (A_S, A_M).
/// - `gy`: fourth vertex of the parallelogram M_AB, A_G, M_CA, A_GY; equals
///   the midpoint of A A_M.
/// - `l_n`: intersection of the perpendicular bisector of A_X A_GY with the
///   symmedian; undefined (None) when A_X and A_GY coincide, which happens
///   exactly for AB = AC.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VertexConfig {
    pub vertex: VertexId,
    pub x: Point,
    pub y: Point,
    pub s: Point,
    pub m: Point,
    pub antipode: Point,
    pub g: Point,
    pub gy: Point,
    pub n: Point,
    pub l_n: Option<Point>,
    pub lx: Point,
    pub l_bc: Point,
    pub by: Point,
    pub cy: Point,
    pub by_reflected: Point,
    pub cy_reflected: Point,
    pub omega1: Circle,
    pub omega2: Circle,
    pub gamma1: Circle,
    pub gamma2: Circle,
}

/// The Problem-1 circles of vertex `v`: ω₁ through V and the next vertex,
/// tangent at V to the side toward the previous vertex; ω₂ with the roles
/// swapped.
pub fn omega_circles(t: &Triangle, v: VertexId, tol: &Tolerance) -> Result<(Circle, Circle), GeomError> {
    let (p, nx, pv) = (t.vertex(v), t.vertex(v.next()), t.vertex(v.prev()));
    let toward_prev = Line::through_with(p, pv, tol)?;
    let toward_next = Line::through_with(p, nx, tol)?;
    let omega1 = Circle::through_tangent_with(p, nx, &toward_prev, tol)?;
    let omega2 = Circle::through_tangent_with(p, pv, &toward_next, tol)?;
    Ok((omega1, omega2))
}

/// The Problem-2 circles of vertex `v`: γ₁ through V and the next vertex,
/// tangent to the opposite side at that vertex; γ₂ through V and the
/// previous vertex, tangent at that one.
pub fn gamma_circles(t: &Triangle, v: VertexId, tol: &Tolerance) -> Result<(Circle, Circle), GeomError> {
    let (p, nx, pv) = (t.vertex(v), t.vertex(v.next()), t.vertex(v.prev()));
    let opposite = t.sideline_opposite(v);
    let gamma1 = Circle::through_tangent_with(nx, p, &opposite, tol)?;
    let gamma2 = Circle::through_tangent_with(pv, p, &opposite, tol)?;
    Ok((gamma1, gamma2))
}

/// The fixed point of the parallel construction (A_X for vertex A): second
/// intersection of ω₁ and ω₂, anchored at the vertex.
pub fn fixed_point_parallel(t: &Triangle, v: VertexId, tol: &Tolerance) -> Result<Point, GeomError> {
    let (omega1, omega2) = omega_circles(t, v, tol)?;
    let pts = omega1.intersect_with(&omega2, tol)?.to_vec();
    second_intersection(&pts, t.vertex(v), tol.eps_rel * t.diameter())
}

/// The fixed point of the antiparallel construction (A_Y for vertex A):
/// second intersection of γ₁ and γ₂, anchored at the vertex.
pub fn fixed_point_antiparallel(t: &Triangle, v: VertexId, tol: &Tolerance) -> Result<Point, GeomError> {
    let (gamma1, gamma2) = gamma_circles(t, v, tol)?;
    let pts = gamma1.intersect_with(&gamma2, tol)?.to_vec();
    second_intersection(&pts, t.vertex(v), tol.eps_rel * t.diameter())
}

/// Builds the full per-vertex configuration.
pub fn vertex_fixed_points(t: &Triangle, v: VertexId, tol: &Tolerance) -> Result<VertexConfig, GeomError> {
    let basic = super::basic::basic_centers(t, tol)?;
    vertex_config_with(t, v, &basic, tol)
}

pub(crate) fn vertex_config_with(
    t: &Triangle,
    v: VertexId,
    basic: &BasicCenters,
    tol: &Tolerance,
) -> Result<VertexConfig, GeomError> {
    let (p, nx, pv) = (t.vertex(v), t.vertex(v.next()), t.vertex(v.prev()));
    let diam = t.diameter();
    let eps_len = tol.eps_rel * diam;

    let (omega1, omega2) = omega_circles(t, v, tol)?;
    let x = second_intersection(&omega1.intersect_with(&omega2, tol)?.to_vec(), p, eps_len)?;
    let (gamma1, gamma2) = gamma_circles(t, v, tol)?;
    let y = second_intersection(&gamma1.intersect_with(&gamma2, tol)?.to_vec(), p, eps_len)?;

    let circ = &basic.circumcircle;
    let chord_second = |through: Point| -> Result<Point, GeomError> {
        let pts = circ
            .intersect_line_with(&Line::through_with(p, through, tol)?, tol)
            .to_vec();
        second_intersection(&pts, p, eps_len)
    };
    let s = chord_second(x)?;
    let m = chord_second(y)?;

    let antipode = p.reflect_through(basic.circumcenter);
    let g = p.midpoint(y);
    let mid_next = p.midpoint(nx);
    let mid_prev = pv.midpoint(p);
    let gy = complete_parallelogram(mid_next, g, mid_prev);
    let n = mid_next.midpoint(mid_prev);

    let symmedian = basic.symmedian_line(t, v);
    let l_n = if x.dist(gy) <= tol.degeneracy_eps * diam {
        None
    } else {
        let bisector = Line::through_with(x, gy, tol)?.perpendicular_through(x.midpoint(gy));
        bisector.intersect(&symmedian).ok()
    };
    let lx = symmedian.project(basic.orthocenter);
    let l_bc = symmedian.intersect(&t.sideline_opposite(v))?;

    // anchored full-line cuts: for obtuse triangles A_Y leaves the
    // circumcircle and the literal rays from B, C no longer reach it, but
    // the statements stay true of the lines
    let by = second_intersection(
        &circ.intersect_line_with(&Line::through_with(nx, y, tol)?, tol).to_vec(),
        nx,
        eps_len,
    )?;
    let cy = second_intersection(
        &circ.intersect_line_with(&Line::through_with(pv, y, tol)?, tol).to_vec(),
        pv,
        eps_len,
    )?;
    let by_reflected = Line::through_with(pv, p, tol)?.reflect(by);
    let cy_reflected = Line::through_with(p, nx, tol)?.reflect(cy);

    Ok(VertexConfig {
        vertex: v,
        x,
        y,
        s,
        m,
        antipode,
        g,
        gy,
        n,
        l_n,
        lx,
        l_bc,
        by,
        cy,
        by_reflected,
        cy_reflected,
        omega1,
        omega2,
        gamma1,
        gamma2,
    })
}
