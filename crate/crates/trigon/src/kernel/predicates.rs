//! One numeric residual per assertion form used in the statements:
//! a residual is zero (within tolerance) exactly when the relation holds,
//! and lengths are divided by the supplied scale (the triangle diameter)
//! so thresholds are dimensionless.

use std::f64::consts::FRAC_PI_2;

use super::angle::DirectedAngle;
use super::circle::Circle;
use super::error::GeomError;
use super::line::Line;
use super::point::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    Concyclic,
    Collinear,
    Parallel,
    Perpendicular,
    Concurrent,
    TangentCircles,
    TangentLineCircle,
    OnCircle,
    OnLine,
    EqualLength,
    MidpointOf,
    Parallelogram,
}

impl Predicate {
    pub fn name(&self) -> &'static str {
        match self {
            Predicate::Concyclic => "concyclic",
            Predicate::Collinear => "collinear",
            Predicate::Parallel => "parallel",
            Predicate::Perpendicular => "perpendicular",
            Predicate::Concurrent => "concurrent",
            Predicate::TangentCircles => "tangent_circles",
            Predicate::TangentLineCircle => "tangent_line_circle",
            Predicate::OnCircle => "on_circle",
            Predicate::OnLine => "on_line",
            Predicate::EqualLength => "equal_length",
            Predicate::MidpointOf => "midpoint_of",
            Predicate::Parallelogram => "parallelogram",
        }
    }
}

/// A geometric argument to [`residual`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Object {
    Point(Point),
    Line(Line),
    Circle(Circle),
}

fn arity_err(pred: &'static str, detail: impl Into<String>) -> GeomError {
    GeomError::ArityMismatch {
        pred,
        detail: detail.into(),
    }
}

fn points(pred: &'static str, args: &[Object], n: usize) -> Result<Vec<Point>, GeomError> {
    if args.len() != n {
        return Err(arity_err(pred, format!("expected {n} points, got {} arguments", args.len())));
    }
    args.iter()
        .map(|o| match o {
            Object::Point(p) => Ok(*p),
            other => Err(arity_err(pred, format!("expected a point, got {other:?}"))),
        })
        .collect()
}

fn lines(pred: &'static str, args: &[Object], n: usize) -> Result<Vec<Line>, GeomError> {
    if args.len() != n {
        return Err(arity_err(pred, format!("expected {n} lines, got {} arguments", args.len())));
    }
    args.iter()
        .map(|o| match o {
            Object::Line(l) => Ok(*l),
            other => Err(arity_err(pred, format!("expected a line, got {other:?}"))),
        })
        .collect()
}

/// Distance from a point to a circle, treating a degenerate circle as its
/// center point.
fn circle_distance(p: Point, c: &Circle) -> f64 {
    (p.dist(c.center) - c.radius()).abs()
}

fn tangency_circles(c1: &Circle, c2: &Circle) -> f64 {
    let d = c1.center.dist(c2.center);
    let (r1, r2) = (c1.radius(), c2.radius());
    // internal and external tangency both count as touching
    (d - (r1 + r2)).abs().min((d - (r1 - r2).abs()).abs())
}

fn collinear_residual(pts: &[Point], scale: f64) -> f64 {
    // baseline through the two farthest-apart points; residual is the worst
    // distance of the remaining points to it
    let mut best = (0.0f64, 0usize, 1usize);
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let d = pts[i].dist(pts[j]);
            if d > best.0 {
                best = (d, i, j);
            }
        }
    }
    if best.0 <= f64::EPSILON * scale {
        return 0.0; // all points coincide
    }
    let base = Line::through(pts[best.1], pts[best.2]).expect("distinct by construction");
    pts.iter()
        .map(|p| base.distance(*p))
        .fold(0.0, f64::max)
        / scale
}

/// Evaluates the residual of `pred` over `args`, normalized by `scale`
/// (lengths divided by scale, angles already dimensionless in radians).
pub fn residual(pred: Predicate, args: &[Object], scale: f64) -> Result<f64, GeomError> {
    let scale = scale.max(f64::MIN_POSITIVE);
    match pred {
        Predicate::Concyclic => {
            let p = points("concyclic", args, 4)?;
            match Circle::through(p[0], p[1], p[2]) {
                Ok(c) => Ok(circle_distance(p[3], &c) / scale),
                // a line is the degenerate circle through three collinear points
                Err(GeomError::CollinearPoints) => Ok(collinear_residual(&p, scale)),
                Err(e) => Err(e),
            }
        }
        Predicate::Collinear => {
            if args.len() < 3 {
                return Err(arity_err("collinear", "expected at least 3 points"));
            }
            let p = points("collinear", args, args.len())?;
            Ok(collinear_residual(&p, scale))
        }
        Predicate::Parallel => {
            let l = lines("parallel", args, 2)?;
            Ok(DirectedAngle::between(&l[0], &l[1]).distance(DirectedAngle::new(0.0)))
        }
        Predicate::Perpendicular => {
            let l = lines("perpendicular", args, 2)?;
            Ok(DirectedAngle::between(&l[0], &l[1]).distance(DirectedAngle::new(FRAC_PI_2)))
        }
        Predicate::Concurrent => {
            let l = lines("concurrent", args, 3)?;
            let p = l[0].intersect(&l[1])?;
            Ok(l[2].distance(p) / scale)
        }
        Predicate::TangentCircles => match args {
            [Object::Circle(c1), Object::Circle(c2)] => Ok(tangency_circles(c1, c2) / scale),
            _ => Err(arity_err("tangent_circles", "expected two circles")),
        },
        Predicate::TangentLineCircle => match args {
            [Object::Line(l), Object::Circle(c)] | [Object::Circle(c), Object::Line(l)] => {
                Ok((l.distance(c.center) - c.radius()).abs() / scale)
            }
            _ => Err(arity_err("tangent_line_circle", "expected a line and a circle")),
        },
        Predicate::OnCircle => match args {
            [Object::Point(p), Object::Circle(c)] => Ok(circle_distance(*p, c) / scale),
            _ => Err(arity_err("on_circle", "expected a point and a circle")),
        },
        Predicate::OnLine => match args {
            [Object::Point(p), Object::Line(l)] => Ok(l.distance(*p) / scale),
            _ => Err(arity_err("on_line", "expected a point and a line")),
        },
        Predicate::EqualLength => {
            let p = points("equal_length", args, 4)?;
            Ok((p[0].dist(p[1]) - p[2].dist(p[3])).abs() / scale)
        }
        Predicate::MidpointOf => {
            let p = points("midpoint_of", args, 3)?;
            Ok(p[0].dist(p[1].midpoint(p[2])) / scale)
        }
        Predicate::Parallelogram => {
            let p = points("parallelogram", args, 4)?;
            // vertices in cyclic order: the diagonals share their midpoint
            Ok(((p[0] + p[2]) - (p[1] + p[3])).norm() / scale)
        }
    }
}
