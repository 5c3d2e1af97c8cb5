//! The executable body of every registry entry: a construction over the
//! configuration followed by a residual assertion. Each function returns the
//! worst residual over its vertices/samples, or a skip when the structure it
//! depends on is degenerate for the input triangle.

use crate::centers::{basic_centers, hagge, Configuration};
use crate::kernel::{
    anticomplement, directed_angle, isogonal_conjugate, ray_second_intersection,
    second_intersection, Circle, GeomError, Line, Object, Point, Predicate, Triangle, VertexId,
};
use crate::theorems::rng::SplitMix64;
use crate::theorems::sampler::{interior_point, side_param};
use crate::tol::Tolerance;

/// Result of evaluating one check on one triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Outcome {
    Residual(f64),
    Skipped(&'static str),
}

pub struct CheckCtx<'a> {
    pub triangle: &'a Triangle,
    pub config: &'a Configuration,
    pub rng: SplitMix64,
    pub tol: Tolerance,
    /// Auxiliary draws consumed by the check, in order.
    pub sampled: Vec<f64>,
}

pub type EvalFn = fn(&mut CheckCtx) -> Result<Outcome, GeomError>;

impl<'a> CheckCtx<'a> {
    pub fn new(
        triangle: &'a Triangle,
        config: &'a Configuration,
        rng: SplitMix64,
        tol: Tolerance,
    ) -> Self {
        CheckCtx {
            triangle,
            config,
            rng,
            tol,
            sampled: Vec::new(),
        }
    }

    fn diam(&self) -> f64 {
        self.triangle.diameter()
    }

    fn deglen(&self) -> f64 {
        self.tol.degeneracy_eps * self.diam()
    }

    fn draw_side_param(&mut self) -> f64 {
        let t = side_param(&mut self.rng);
        self.sampled.push(t);
        t
    }

    fn draw_interior(&mut self) -> Point {
        let p = interior_point(&mut self.rng, self.triangle);
        self.sampled.push(p.x);
        self.sampled.push(p.y);
        p
    }

    fn draw_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let x = self.rng.uniform(lo, hi);
        self.sampled.push(x);
        x
    }

    fn res(&self, pred: Predicate, args: &[Object]) -> Result<f64, GeomError> {
        crate::kernel::residual(pred, args, self.diam())
    }

    fn on_circle(&self, p: Point, c: &Circle) -> f64 {
        (p.dist(c.center) - c.radius()).abs() / self.diam()
    }

    fn on_line(&self, p: Point, l: &Line) -> f64 {
        l.distance(p) / self.diam()
    }

    fn line(&self, p: Point, q: Point) -> Result<Line, GeomError> {
        Line::through_with(p, q, &self.tol)
    }

    fn parallel(&self, l1: &Line, l2: &Line) -> f64 {
        directed_angle(l1, l2).distance(crate::kernel::DirectedAngle::new(0.0))
    }

    /// Second point of `line` on `circle` away from `anchor`.
    fn chord_second(&self, circle: &Circle, line: &Line, anchor: Point) -> Result<Point, GeomError> {
        let pts = circle.intersect_line_with(line, &self.tol).to_vec();
        second_intersection(&pts, anchor, self.tol.eps_rel * self.diam())
    }
}

type R = Result<Outcome, GeomError>;

fn resid(x: f64) -> R {
    Ok(Outcome::Residual(x))
}

fn skipped(reason: &'static str) -> R {
    Ok(Outcome::Skipped(reason))
}

const BROCARD_DEGENERATE: &str = "Brocard circle degenerate (near-equilateral)";
const ORTHOCENTROIDAL_DEGENERATE: &str = "orthocentroidal circle degenerate (near-equilateral)";
const VERTEX_DEGENERATE: &str = "construction degenerate at every vertex (isosceles/equilateral)";

/// Folds per-vertex residuals, skipping degenerate vertices; the check is
/// skipped only when no vertex is evaluable.
fn fold_vertices(mut f: impl FnMut(VertexId) -> Result<Option<f64>, GeomError>) -> R {
    let mut worst: Option<f64> = None;
    for v in VertexId::ALL {
        if let Some(r) = f(v)? {
            worst = Some(worst.map_or(r, |w: f64| w.max(r)));
        }
    }
    match worst {
        Some(w) => resid(w),
        None => skipped(VERTEX_DEGENERATE),
    }
}

fn t_grid(ctx: &mut CheckCtx) -> [f64; 5] {
    [0.2, 0.5, 0.8, ctx.draw_side_param(), ctx.draw_side_param()]
}

// ---- Problems 1 and 2 ------------------------------------------------------

pub fn p1_fixed(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    let ts = t_grid(ctx);
    let mut worst = 0.0f64;
    for v in VertexId::ALL {
        let (p, nx, pv) = (t.vertex(v), t.vertex(v.next()), t.vertex(v.prev()));
        let x = ctx.config.vertex(v).x;
        for &tv in &ts {
            // P = lerp(B,C,t); then PQ ∥ AB forces Q = lerp(A,C,t) and
            // PR ∥ AC forces R = lerp(B,A,t)
            let q = p.lerp(pv, tv);
            let r = nx.lerp(p, tv);
            let c = Circle::through_with(p, q, r, &ctx.tol)?;
            worst = worst.max(ctx.on_circle(x, &c));
        }
    }
    resid(worst)
}

pub fn p1_symmedian(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    let g = ctx.config.basic.centroid;
    fold_vertices(|v| {
        let (p, nx, pv) = (t.vertex(v), t.vertex(v.next()), t.vertex(v.prev()));
        let x = ctx.config.vertex(v).x;
        let lhs = directed_angle(&ctx.line(p, nx)?, &ctx.line(p, g)?);
        let rhs = directed_angle(&ctx.line(p, x)?, &ctx.line(p, pv)?);
        Ok(Some(lhs.distance(rhs)))
    })
}

pub fn p2_fixed(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    let ts = t_grid(ctx);
    let mut worst = 0.0f64;
    for v in VertexId::ALL {
        let (p, nx, pv) = (t.vertex(v), t.vertex(v.next()), t.vertex(v.prev()));
        let y = ctx.config.vertex(v).y;
        for &tv in &ts {
            let pp = nx.lerp(pv, tv);
            // Q on the circle (V, next, P): makes PQ antiparallel to the
            // side V-next; R mirrored
            let c1 = Circle::through_with(p, nx, pp, &ctx.tol)?;
            let q = ctx.chord_second(&c1, &ctx.line(p, pv)?, p)?;
            let c2 = Circle::through_with(p, pv, pp, &ctx.tol)?;
            let r = ctx.chord_second(&c2, &ctx.line(p, nx)?, p)?;
            let c = Circle::through_with(p, q, r, &ctx.tol)?;
            worst = worst.max(ctx.on_circle(y, &c));
        }
    }
    resid(worst)
}

pub fn p2_median(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        let l = ctx.line(t.vertex(v), vc.y)?;
        Ok(Some(ctx.on_line(t.side_midpoint_opposite(v), &l)))
    })
}

// ---- Theorems 2.x ----------------------------------------------------------

pub fn t_ax_proj(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let sym = ctx.config.basic.symmedian_line(t, v);
        let proj = sym.project(ctx.config.basic.circumcenter);
        Ok(Some(ctx.config.vertex(v).x.dist(proj) / ctx.diam()))
    })
}

pub fn t_brocard_circle(ctx: &mut CheckCtx) -> R {
    let br = &ctx.config.brocard;
    if br.degenerate {
        return skipped(BROCARD_DEGENERATE);
    }
    let worst = br
        .second_triangle
        .iter()
        .map(|p| ctx.on_circle(*p, &br.circle))
        .fold(0.0, f64::max);
    resid(worst)
}

pub fn lem_mannheim(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    let (u1, u2, u3) = (
        ctx.draw_side_param(),
        ctx.draw_side_param(),
        ctx.draw_side_param(),
    );
    let k = ctx.draw_interior();
    let (a, b, c) = (t.a(), t.b(), t.c());
    let l = b.lerp(c, u1);
    let m = c.lerp(a, u2);
    let n = a.lerp(b, u3);
    let hit = |v: Point, c1: Point, c2: Point| -> Result<Point, GeomError> {
        let circ = Circle::through_with(v, c1, c2, &ctx.tol)?;
        ctx.chord_second(&circ, &ctx.line(v, k)?, v)
    };
    let ap = hit(a, m, n)?;
    let bp = hit(b, n, l)?;
    let cp = hit(c, l, m)?;
    resid(ctx.res(
        Predicate::Concyclic,
        &[
            Object::Point(ap),
            Object::Point(bp),
            Object::Point(cp),
            Object::Point(k),
        ],
    )?)
}

pub fn lem_chord_mid(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    let p = ctx.draw_interior();
    let circ = &ctx.config.basic.circumcircle;
    let on_diameter = Circle::from_diameter(ctx.config.basic.circumcenter, p);
    let mut worst = 0.0f64;
    for v in VertexId::ALL {
        let s = ray_second_intersection(circ, t.vertex(v), p, &ctx.tol)?;
        worst = worst.max(ctx.on_circle(t.vertex(v).midpoint(s), &on_diameter));
    }
    resid(worst)
}

pub fn t_parallelogram_aycm(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        let r = ctx.res(
            Predicate::Parallelogram,
            &[
                Object::Point(t.vertex(v.next())),
                Object::Point(vc.y),
                Object::Point(t.vertex(v.prev())),
                Object::Point(vc.m),
            ],
        )?;
        Ok(Some(r))
    })
}

pub fn cor_ay_reflect(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        let img = t.sideline_opposite(v).reflect(vc.s);
        Ok(Some(img.dist(vc.y) / ctx.diam()))
    })
}

pub fn t_isogonal(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        let conj = isogonal_conjugate(vc.y, t, &ctx.tol)?;
        Ok(Some(conj.dist(vc.x) / ctx.diam()))
    })
}

pub fn t_ag_ninepoint(ctx: &mut CheckCtx) -> R {
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        Ok(Some(ctx.on_circle(vc.g, &ctx.config.basic.euler_circle)))
    })
}

pub fn t_agy_mid(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        Ok(Some(vc.gy.dist(t.vertex(v).midpoint(vc.m)) / ctx.diam()))
    })
}

pub fn cor_agy_parallel(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        if vc.x.dist(vc.gy) <= ctx.deglen() {
            return Ok(None); // A_X = A_GY exactly when the triangle is isosceles at V
        }
        let l = ctx.line(vc.x, vc.gy)?;
        Ok(Some(ctx.parallel(&l, &t.sideline_opposite(v))))
    })
}

pub fn cor_ax_reflect(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        let p = t.vertex(v);
        let midline = ctx.line(p.midpoint(t.vertex(v.next())), t.vertex(v.prev()).midpoint(p))?;
        Ok(Some(midline.reflect(vc.g).dist(vc.x) / ctx.diam()))
    })
}

pub fn t_anticomplement(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        Ok(Some(anticomplement(vc.gy, t).dist(vc.y) / ctx.diam()))
    })
}

pub fn t_first_brocard(ctx: &mut CheckCtx) -> R {
    let br = &ctx.config.brocard;
    if br.degenerate {
        return skipped(BROCARD_DEGENERATE);
    }
    let worst = br
        .first_triangle
        .iter()
        .map(|p| ctx.on_circle(*p, &br.circle))
        .fold(0.0, f64::max);
    resid(worst)
}

pub fn cor_z_sym(ctx: &mut CheckCtx) -> R {
    let br = &ctx.config.brocard;
    if br.degenerate {
        return skipped(BROCARD_DEGENERATE);
    }
    let t = ctx.triangle;
    let (o, l) = (ctx.config.basic.circumcenter, ctx.config.basic.lemoine);
    let axis = ctx.line(o, l)?;
    let reflect_res = axis.reflect(br.z1).dist(br.z2) / ctx.diam();
    // (OZ1, OZ2) = 2·(AZ1, AB), both as directed angles mod π
    let lhs = directed_angle(&ctx.line(o, br.z1)?, &ctx.line(o, br.z2)?);
    let alpha = directed_angle(&ctx.line(t.a(), br.z1)?, &ctx.line(t.a(), t.b())?);
    let angle_res = lhs.distance(alpha.double());
    resid(reflect_res.max(angle_res))
}

/// Shared construction for the ω-circle chords of Theorem 2.9 / Lemma 2.3:
/// (O_W, C_W, B_W) for one vertex.
fn omega_chord_points(
    ctx: &CheckCtx,
    v: VertexId,
) -> Result<Option<(Point, Point, Point)>, GeomError> {
    let t = ctx.triangle;
    let vc = ctx.config.vertex(v);
    let br = &ctx.config.brocard;
    let o = ctx.config.basic.circumcenter;
    if o.dist(vc.x) <= ctx.deglen() {
        return Ok(None); // O on the symmedian: isosceles at V
    }
    let o_w = ctx.chord_second(&vc.omega1, &ctx.line(o, vc.x)?, vc.x)?;
    let c_w = ctx.chord_second(&vc.omega1, &ctx.line(t.vertex(v.prev()), br.z2)?, br.z2)?;
    let b_w = ctx.chord_second(&vc.omega2, &ctx.line(t.vertex(v.next()), br.z1)?, br.z1)?;
    Ok(Some((o_w, c_w, b_w)))
}

pub fn t_owcw(ctx: &mut CheckCtx) -> R {
    if ctx.config.brocard.degenerate {
        return skipped(BROCARD_DEGENERATE);
    }
    let o = ctx.config.basic.circumcenter;
    fold_vertices(|v| {
        let Some((o_w, c_w, _)) = omega_chord_points(ctx, v)? else {
            return Ok(None);
        };
        let z_v = ctx.config.brocard.first_triangle[v.index()];
        if o.dist(z_v) <= ctx.deglen() {
            return Ok(None);
        }
        let l1 = ctx.line(o_w, c_w)?;
        let l2 = ctx.line(o, z_v)?;
        Ok(Some(ctx.parallel(&l1, &l2)))
    })
}

pub fn lem_bwcw(ctx: &mut CheckCtx) -> R {
    if ctx.config.brocard.degenerate {
        return skipped(BROCARD_DEGENERATE);
    }
    let t = ctx.triangle;
    fold_vertices(|v| {
        let Some((_, c_w, b_w)) = omega_chord_points(ctx, v)? else {
            return Ok(None);
        };
        let l = ctx.line(b_w, c_w)?;
        Ok(Some(ctx.parallel(&l, &t.sideline_opposite(v))))
    })
}

pub fn t_concur_g(ctx: &mut CheckCtx) -> R {
    let br = &ctx.config.brocard;
    if br.degenerate {
        return skipped(BROCARD_DEGENERATE);
    }
    let g = ctx.config.basic.centroid;
    fold_vertices(|v| {
        let x = ctx.config.vertex(v).x;
        let z = br.first_triangle[v.index()];
        let l = ctx.line(x, z)?;
        Ok(Some(ctx.on_line(g, &l)))
    })
}

pub fn lem_parallelogram(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    // one complex multiplier makes the three apex triangles directly similar
    let re = ctx.draw_uniform(-1.0, 1.0);
    let im = ctx.draw_uniform(0.2, 1.5);
    let apex = |p: Point, q: Point| {
        let d = q - p;
        p + Point::new(re * d.x - im * d.y, re * d.y + im * d.x)
    };
    let a_apex = apex(t.c(), t.b());
    let b_apex = apex(t.a(), t.c());
    let c_apex = apex(t.b(), t.a());
    let d = t.b() - a_apex + t.c();
    resid(((t.a() + d) - (b_apex + c_apex)).norm() / ctx.diam())
}

pub fn lem_centroid_first(ctx: &mut CheckCtx) -> R {
    let br = &ctx.config.brocard;
    if br.degenerate {
        return skipped(BROCARD_DEGENERATE);
    }
    let centroid = (br.first_triangle[0] + br.first_triangle[1] + br.first_triangle[2]) * (1.0 / 3.0);
    resid(centroid.dist(ctx.config.basic.centroid) / ctx.diam())
}

pub fn lem_proj_concur(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    let p = ctx.draw_interior();
    let q = ctx.draw_interior();
    let mut feet = Vec::with_capacity(3);
    for v in VertexId::ALL {
        let through_q = t.sideline_opposite(v).perpendicular_through(q);
        let x = through_q.project(p);
        let x_prime = ctx.line(t.vertex(v), p)?.project(q);
        feet.push((x, x_prime));
    }
    let lines: Vec<Line> = feet
        .iter()
        .map(|(x, xp)| ctx.line(*x, *xp))
        .collect::<Result<_, _>>()?;
    resid(ctx.res(
        Predicate::Concurrent,
        &[
            Object::Line(lines[0]),
            Object::Line(lines[1]),
            Object::Line(lines[2]),
        ],
    )?)
}

pub fn lem_hagge(ctx: &mut CheckCtx) -> R {
    let p = ctx.draw_interior();
    let data = hagge(ctx.triangle, p, &ctx.tol)?;
    resid(ctx.on_circle(ctx.config.basic.orthocenter, &data.circle))
}

pub fn lem_ratio(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    let s = ctx.draw_interior();
    let s_conj = isogonal_conjugate(s, t, &ctx.tol)?;
    let circ = &ctx.config.basic.circumcircle;
    let diam2 = ctx.diam() * ctx.diam();
    fold_vertices(|v| {
        let p = t.vertex(v);
        let x = ctx.chord_second(circ, &ctx.line(p, s)?, p)?;
        let x_conj = ctx.chord_second(circ, &ctx.line(p, s_conj)?, p)?;
        let cut = ctx.line(p, s_conj)?.intersect(&t.sideline_opposite(v))?;
        // signed lengths along each cevian; the overline ratios compare as
        // cross products to avoid dividing by short segments
        let d1 = (x - p) * (1.0 / (x - p).norm());
        let d2 = (x_conj - p) * (1.0 / (x_conj - p).norm());
        let a_s = (s - p).dot(d1);
        let s_x = (x - s).dot(d1);
        let sp_v = (cut - s_conj).dot(d2);
        let v_xp = (x_conj - cut).dot(d2);
        Ok(Some((a_s * v_xp - sp_v * s_x).abs() / diam2))
    })
}

pub fn lem_hagge_concur(ctx: &mut CheckCtx) -> R {
    let p = ctx.draw_interior();
    let data = hagge(ctx.triangle, p, &ctx.tol)?;
    let mut worst = 0.0f64;
    for i in 0..3 {
        let l = ctx.line(data.reflected[i], data.altitude_points[i])?;
        worst = worst.max(ctx.on_line(p, &l));
    }
    resid(worst)
}

// ---- Theorems 3.x ----------------------------------------------------------

pub fn t_ay_proj(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    let h = ctx.config.basic.orthocenter;
    fold_vertices(|v| {
        let median = ctx.config.basic.median_line(t, v);
        Ok(Some(ctx.config.vertex(v).y.dist(median.project(h)) / ctx.diam()))
    })
}

pub fn cor_orthocentroidal(ctx: &mut CheckCtx) -> R {
    let Some(oc) = &ctx.config.orthocentroidal else {
        return skipped(ORTHOCENTROIDAL_DEGENERATE);
    };
    let worst = oc
        .y_triangle
        .iter()
        .chain(oc.projections.iter())
        .map(|p| ctx.on_circle(*p, &oc.circle))
        .fold(0.0, f64::max);
    resid(worst)
}

pub fn cor_hagge_l(ctx: &mut CheckCtx) -> R {
    let Some(oc) = &ctx.config.orthocentroidal else {
        return skipped(ORTHOCENTROIDAL_DEGENERATE);
    };
    let data = hagge(ctx.triangle, ctx.config.basic.lemoine, &ctx.tol)?;
    let center_res = data.circle.center.dist(oc.circle.center) / ctx.diam();
    let radius_res = (data.circle.radius() - oc.circle.radius()).abs() / ctx.diam();
    resid(center_res.max(radius_res))
}

pub fn t_x39(ctx: &mut CheckCtx) -> R {
    let br = &ctx.config.brocard;
    if br.degenerate || ctx.config.orthocentroidal.is_none() {
        return skipped(BROCARD_DEGENERATE);
    }
    let [xa, xb, xc] = br.second_triangle;
    let x_circle = Circle::through_with(xa, xb, xc, &ctx.tol)?;
    let [ya, yb, yc] = [
        ctx.config.vertices[0].y,
        ctx.config.vertices[1].y,
        ctx.config.vertices[2].y,
    ];
    let y_circle = Circle::through_with(ya, yb, yc, &ctx.tol)?;
    let axis = x_circle.radical_axis_with(&y_circle, &ctx.tol)?;
    resid(ctx.on_line(br.midpoint, &axis))
}

pub fn t_l_concur(ctx: &mut CheckCtx) -> R {
    let Some(oc) = &ctx.config.orthocentroidal else {
        return skipped(ORTHOCENTROIDAL_DEGENERATE);
    };
    let l = ctx.config.basic.lemoine;
    fold_vertices(|v| {
        let y = ctx.config.vertex(v).y;
        let h_v = oc.projections[v.index()];
        if y.dist(h_v) <= ctx.deglen() {
            return Ok(None);
        }
        Ok(Some(ctx.on_line(l, &ctx.line(y, h_v)?)))
    })
}

pub fn lem_lemoine_sub(ctx: &mut CheckCtx) -> R {
    let Some(oc) = &ctx.config.orthocentroidal else {
        return skipped(ORTHOCENTROIDAL_DEGENERATE);
    };
    let [ha, hb, hc] = oc.projections;
    let sub = match Triangle::new_with(ha, hb, hc, &ctx.tol) {
        Ok(t) => t,
        Err(GeomError::DegenerateTriangle) => return skipped(ORTHOCENTROIDAL_DEGENERATE),
        Err(e) => return Err(e),
    };
    let sub_lemoine = basic_centers(&sub, &ctx.tol)?.lemoine;
    resid(sub_lemoine.dist(ctx.config.basic.lemoine) / ctx.diam())
}

pub fn t_ln_parallel(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        let Some(l_n) = vc.l_n else {
            return Ok(None);
        };
        let fixed = ctx.line(vc.x, vc.y)?;
        let other = ctx.line(l_n, t.side_midpoint_opposite(v))?;
        Ok(Some(ctx.parallel(&fixed, &other)))
    })
}

pub fn t_tangent_boc(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    let o = ctx.config.basic.circumcenter;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        let Some(l_n) = vc.l_n else {
            return Ok(None);
        };
        let c1 = Circle::through_with(vc.x, vc.gy, l_n, &ctx.tol)?;
        let boc = Circle::through_with(t.vertex(v.next()), o, t.vertex(v.prev()), &ctx.tol)?;
        Ok(Some(ctx.res(
            Predicate::TangentCircles,
            &[Object::Circle(c1), Object::Circle(boc)],
        )?))
    })
}

pub fn t_mbc_equal(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        let m = t.side_midpoint_opposite(v);
        Ok(Some((m.dist(vc.y) - m.dist(vc.lx)).abs() / ctx.diam()))
    })
}

fn y_m_lx_circle(ctx: &CheckCtx, v: VertexId) -> Result<Option<Circle>, GeomError> {
    let vc = ctx.config.vertex(v);
    if vc.y.dist(vc.lx) <= ctx.deglen() {
        return Ok(None); // A_Y = A_LX exactly when the triangle is isosceles at V
    }
    let m = ctx.triangle.side_midpoint_opposite(v);
    Ok(Some(Circle::through_with(vc.y, m, vc.lx, &ctx.tol)?))
}

pub fn cor_tangent_euler(ctx: &mut CheckCtx) -> R {
    let euler = ctx.config.basic.euler_circle;
    fold_vertices(|v| {
        let Some(c) = y_m_lx_circle(ctx, v)? else {
            return Ok(None);
        };
        Ok(Some(ctx.res(
            Predicate::TangentCircles,
            &[Object::Circle(c), Object::Circle(euler)],
        )?))
    })
}

pub fn t_symmedian_ay(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        let (nx, pv) = (t.vertex(v.next()), t.vertex(v.prev()));
        let dir = (pv - nx) * (1.0 / pv.dist(nx));
        let rho = (nx - vc.l_bc).dot(dir) / (pv - vc.l_bc).dot(dir);
        let k = (vc.y.dist(nx) / vc.y.dist(pv)).powi(2);
        // signed cevian-foot ratio of a symmedian: rho = -k
        Ok(Some((rho + k).abs() / (1.0 + k)))
    })
}

pub fn t_tangent_bhc(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    let h = ctx.config.basic.orthocenter;
    fold_vertices(|v| {
        let Some(c) = y_m_lx_circle(ctx, v)? else {
            return Ok(None);
        };
        let bhc = Circle::through_with(t.vertex(v.next()), h, t.vertex(v.prev()), &ctx.tol)?;
        Ok(Some(ctx.res(
            Predicate::TangentCircles,
            &[Object::Circle(c), Object::Circle(bhc)],
        )?))
    })
}

pub fn lem_isogonal_tangent(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    let circ = ctx.config.basic.circumcircle;
    let params: Vec<f64> = (0..3).map(|_| ctx.draw_side_param()).collect();
    fold_vertices(|v| {
        let p = t.vertex(v);
        let d = t.vertex(v.next()).lerp(t.vertex(v.prev()), params[v.index()]);
        let mirrored = t.bisector_line(v).reflect(d);
        let e = ctx.line(p, mirrored)?.intersect(&t.sideline_opposite(v))?;
        if d.dist(e) <= ctx.deglen() {
            return Ok(None); // the sampled cevian is the bisector itself
        }
        let ade = Circle::through_with(p, d, e, &ctx.tol)?;
        Ok(Some(ctx.res(
            Predicate::TangentCircles,
            &[Object::Circle(circ), Object::Circle(ade)],
        )?))
    })
}

pub fn t_primes_on_al(ctx: &mut CheckCtx) -> R {
    let t = ctx.triangle;
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        let symmedian = ctx.config.basic.symmedian_line(t, v);
        let r = ctx
            .on_line(vc.by_reflected, &symmedian)
            .max(ctx.on_line(vc.cy_reflected, &symmedian));
        Ok(Some(r))
    })
}

pub fn t_alx_mid(ctx: &mut CheckCtx) -> R {
    fold_vertices(|v| {
        let vc = ctx.config.vertex(v);
        let mid = vc.by_reflected.midpoint(vc.cy_reflected);
        Ok(Some(vc.lx.dist(mid) / ctx.diam()))
    })
}
