//! Evaluator for parsed scripts: runs the declarations and assertions over
//! one fixed triangle or a stream of seeded random triangles, reporting the
//! worst residual per assertion. Construction failures are positioned
//! diagnostics, never panics.

use std::collections::{HashMap, HashSet};

use crate::centers::{configuration, Configuration};
use crate::kernel::{
    isogonal_conjugate, second_intersection, Circle, Intersections, Line, Object, Point,
    Predicate, Triangle, VertexId,
};
use crate::theorems::{cell_seed, sample_triangle, SplitMix64};
use crate::tol::Tolerance;

use super::ast::{Assertion, Expr, ExprKind, PredName, Script, Span, StmtKind};
use super::parser::{Diagnostic, Severity};
use super::pretty::fmt_assertion;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TriangleSource {
    Fixed(Triangle),
    Seeded { samples: u32 },
}

#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    pub source: TriangleSource,
    pub seed: u64,
    /// Dimensionless pass bound for assertion residuals.
    pub eps: f64,
    pub tol: Tolerance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssertionStatus {
    Pass,
    Fail,
    /// The assertion (or a declaration it depends on) failed to construct
    /// on at least one triangle.
    Error,
}

impl AssertionStatus {
    pub fn name(&self) -> &'static str {
        match self {
            AssertionStatus::Pass => "PASS",
            AssertionStatus::Fail => "FAIL",
            AssertionStatus::Error => "ERROR",
        }
    }
}

#[derive(Debug, Clone)]
pub struct AssertionReport {
    pub line: u32,
    pub col: u32,
    /// Canonical text of the assertion.
    pub text: String,
    /// Residual samples evaluated (triangles × forall samples).
    pub samples: u32,
    pub max_residual: Option<f64>,
    pub status: AssertionStatus,
}

#[derive(Debug, Clone)]
pub struct EvalReport {
    pub seed: u64,
    pub eps: f64,
    pub triangle_count: u32,
    pub assertions: Vec<AssertionReport>,
    /// Construction failures, deduplicated, with source positions.
    pub diagnostics: Vec<Diagnostic>,
    /// Labels from `emit` statements, in order.
    pub labels: Vec<String>,
}

impl EvalReport {
    pub fn passed(&self) -> bool {
        self.diagnostics.is_empty()
            && self
                .assertions
                .iter()
                .all(|a| a.status == AssertionStatus::Pass)
    }
}

#[derive(Debug, Clone, Copy)]
enum Value {
    Point(Point),
    Line(Line),
    Circle(Circle),
    Num(f64),
}

impl Value {
    fn type_name(&self) -> &'static str {
        match self {
            Value::Point(_) => "point",
            Value::Line(_) => "line",
            Value::Circle(_) => "circle",
            Value::Num(_) => "number",
        }
    }

    fn as_point(&self) -> Result<Point, String> {
        match self {
            Value::Point(p) => Ok(*p),
            other => Err(format!("expected a point, got a {}", other.type_name())),
        }
    }

    fn as_line(&self) -> Result<Line, String> {
        match self {
            Value::Line(l) => Ok(*l),
            other => Err(format!("expected a line, got a {}", other.type_name())),
        }
    }

    fn as_circle(&self) -> Result<Circle, String> {
        match self {
            Value::Circle(c) => Ok(*c),
            other => Err(format!("expected a circle, got a {}", other.type_name())),
        }
    }

    fn as_num(&self) -> Result<f64, String> {
        match self {
            Value::Num(n) => Ok(*n),
            other => Err(format!("expected a number, got a {}", other.type_name())),
        }
    }
}

struct TriangleEnv {
    triangle: Triangle,
    config: Configuration,
    vertex_names: [String; 3],
}

struct Evaluator<'a> {
    opts: &'a EvalOptions,
    env: HashMap<String, Value>,
    ambient: Option<TriangleEnv>,
    source_lines: &'a [String],
}

impl<'a> Evaluator<'a> {
    fn scale(&self) -> f64 {
        self.ambient
            .as_ref()
            .map_or(1.0, |t| t.triangle.diameter())
    }

    fn ambient(&self) -> Result<&TriangleEnv, String> {
        self.ambient
            .as_ref()
            .ok_or_else(|| "no triangle declared".to_string())
    }

    fn eval_expr(&self, expr: &Expr) -> Result<Value, String> {
        match &expr.kind {
            ExprKind::Number(n) => Ok(Value::Num(*n)),
            ExprKind::Pair(x, y) => Ok(Value::Point(Point::new(*x, *y))),
            ExprKind::Ident(name) => self
                .env
                .get(name)
                .copied()
                .ok_or_else(|| format!("`{name}` is not bound")),
            ExprKind::Call { func, args } => self.eval_call(func, args),
        }
    }

    fn eval_call(&self, func: &str, args: &[Expr]) -> Result<Value, String> {
        let tol = &self.opts.tol;
        // the two vertex-argument builtins dispatch on the NAME of their
        // argument, not its value
        if func == "fixed_point_parallel" || func == "fixed_point_antiparallel" {
            let ExprKind::Ident(name) = &args[0].kind else {
                return Err(format!("the argument of `{func}` must be a vertex name"));
            };
            let ambient = self.ambient()?;
            let idx = ambient
                .vertex_names
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| format!("`{name}` is not a vertex of the triangle"))?;
            let v = VertexId::ALL[idx];
            let vc = ambient.config.vertex(v);
            return Ok(Value::Point(if func == "fixed_point_parallel" {
                vc.x
            } else {
                vc.y
            }));
        }

        let vals: Vec<Value> = args
            .iter()
            .map(|a| self.eval_expr(a))
            .collect::<Result<_, _>>()?;
        let ge = |e: crate::kernel::GeomError| e.to_string();
        match func {
            "line" => Ok(Value::Line(
                Line::through_with(vals[0].as_point()?, vals[1].as_point()?, tol).map_err(ge)?,
            )),
            "circle" => Ok(Value::Circle(
                Circle::through_with(
                    vals[0].as_point()?,
                    vals[1].as_point()?,
                    vals[2].as_point()?,
                    tol,
                )
                .map_err(ge)?,
            )),
            "circle_tangent" => Ok(Value::Circle(
                Circle::through_tangent_with(
                    vals[0].as_point()?,
                    vals[1].as_point()?,
                    &vals[2].as_line()?,
                    tol,
                )
                .map_err(ge)?,
            )),
            "intersect" => {
                let pts = self.intersections(&vals[0], &vals[1])?;
                match pts {
                    Intersections::One(p) => Ok(Value::Point(p)),
                    Intersections::None => Err("the objects do not intersect".to_string()),
                    Intersections::Two(_, _) => Err(
                        "two intersection points; use second_intersect with an anchor".to_string(),
                    ),
                }
            }
            "second_intersect" => {
                let pts = self.intersections(&vals[0], &vals[1])?.to_vec();
                let anchor = vals[2].as_point()?;
                second_intersection(&pts, anchor, tol.eps_rel * self.scale())
                    .map(Value::Point)
                    .map_err(ge)
            }
            "project" => Ok(Value::Point(
                vals[1].as_line()?.project(vals[0].as_point()?),
            )),
            "reflect_line" => Ok(Value::Point(
                vals[1].as_line()?.reflect(vals[0].as_point()?),
            )),
            "reflect_point" => Ok(Value::Point(
                vals[0].as_point()?.reflect_through(vals[1].as_point()?),
            )),
            "midpoint" => Ok(Value::Point(
                vals[0].as_point()?.midpoint(vals[1].as_point()?),
            )),
            "lerp" => Ok(Value::Point(
                vals[0]
                    .as_point()?
                    .lerp(vals[1].as_point()?, vals[2].as_num()?),
            )),
            "isogonal" => {
                let ambient = self.ambient()?;
                isogonal_conjugate(vals[0].as_point()?, &ambient.triangle, tol)
                    .map(Value::Point)
                    .map_err(ge)
            }
            "anticomplement" => {
                let ambient = self.ambient()?;
                Ok(Value::Point(crate::kernel::anticomplement(
                    vals[0].as_point()?,
                    &ambient.triangle,
                )))
            }
            "centroid" => Ok(Value::Point(self.ambient()?.config.basic.centroid)),
            "circumcenter" => Ok(Value::Point(self.ambient()?.config.basic.circumcenter)),
            "orthocenter" => Ok(Value::Point(self.ambient()?.config.basic.orthocenter)),
            "lemoine" => Ok(Value::Point(self.ambient()?.config.basic.lemoine)),
            "circumcircle" => Ok(Value::Circle(self.ambient()?.config.basic.circumcircle)),
            "ninepoint" => Ok(Value::Circle(self.ambient()?.config.basic.euler_circle)),
            "brocard1" => Ok(Value::Point(self.ambient()?.config.brocard.z1)),
            "brocard2" => Ok(Value::Point(self.ambient()?.config.brocard.z2)),
            "brocard_circle" => Ok(Value::Circle(self.ambient()?.config.brocard.circle)),
            "hagge_circle" => {
                let ambient = self.ambient()?;
                crate::centers::hagge(&ambient.triangle, vals[0].as_point()?, tol)
                    .map(|d| Value::Circle(d.circle))
                    .map_err(ge)
            }
            "orthocentroidal_circle" => {
                let ambient = self.ambient()?;
                ambient
                    .config
                    .orthocentroidal
                    .as_ref()
                    .map(|d| Value::Circle(d.circle))
                    .ok_or_else(|| {
                        "the orthocentroidal circle is degenerate (G = H)".to_string()
                    })
            }
            "radical_axis" => vals[0]
                .as_circle()?
                .radical_axis_with(&vals[1].as_circle()?, tol)
                .map(Value::Line)
                .map_err(ge),
            other => Err(format!("unknown function `{other}`")),
        }
    }

    fn intersections(&self, a: &Value, b: &Value) -> Result<Intersections, String> {
        let tol = &self.opts.tol;
        match (a, b) {
            (Value::Line(l1), Value::Line(l2)) => l1
                .intersect(l2)
                .map(Intersections::One)
                .map_err(|e| e.to_string()),
            (Value::Line(l), Value::Circle(c)) | (Value::Circle(c), Value::Line(l)) => {
                Ok(c.intersect_line_with(l, tol))
            }
            (Value::Circle(c1), Value::Circle(c2)) => {
                c1.intersect_with(c2, tol).map_err(|e| e.to_string())
            }
            _ => Err("intersection arguments must be lines or circles".to_string()),
        }
    }

    fn assertion_residual(&self, assertion: &Assertion) -> Result<f64, String> {
        let vals: Vec<Value> = assertion
            .args
            .iter()
            .map(|a| self.eval_expr(a))
            .collect::<Result<_, _>>()?;
        let objs: Vec<Object> = vals
            .iter()
            .map(|v| match v {
                Value::Point(p) => Ok(Object::Point(*p)),
                Value::Line(l) => Ok(Object::Line(*l)),
                Value::Circle(c) => Ok(Object::Circle(*c)),
                Value::Num(_) => Err("a number is not a geometric object".to_string()),
            })
            .collect::<Result<_, _>>()?;
        let pred = match assertion.pred {
            PredName::Concyclic => Predicate::Concyclic,
            PredName::Collinear => Predicate::Collinear,
            PredName::Parallel => Predicate::Parallel,
            PredName::Perpendicular => Predicate::Perpendicular,
            PredName::Concurrent => Predicate::Concurrent,
            PredName::EqualLength => Predicate::EqualLength,
            PredName::IsMidpoint => Predicate::MidpointOf,
            PredName::Parallelogram => Predicate::Parallelogram,
            PredName::Tangent => match objs.as_slice() {
                [Object::Circle(_), Object::Circle(_)] => Predicate::TangentCircles,
                _ => Predicate::TangentLineCircle,
            },
            PredName::On => match objs.as_slice() {
                [Object::Point(_), Object::Circle(_)] => Predicate::OnCircle,
                _ => Predicate::OnLine,
            },
        };
        crate::kernel::residual(pred, &objs, self.scale()).map_err(|e| e.to_string())
    }
}

/// The sampling plan of a `forall` assertion: a fixed grid plus seeded draws.
fn forall_samples(rng: &mut SplitMix64) -> Vec<f64> {
    let mut ts: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
    for _ in 0..3 {
        ts.push(rng.uniform(0.1, 0.9));
    }
    ts
}

/// Evaluates a parsed script. Deterministic given the options; construction
/// failures are reported with their source spans, not thrown.
pub fn evaluate(script: &Script, opts: &EvalOptions) -> EvalReport {
    let triangles: Vec<Triangle> = match opts.source {
        TriangleSource::Fixed(t) => vec![t],
        TriangleSource::Seeded { samples } => {
            let mut rng = SplitMix64::new(opts.seed);
            (0..samples.max(1))
                .map(|_| sample_triangle(&mut rng, &opts.tol))
                .collect()
        }
    };

    // one report slot per assert/forall statement, in script order
    let mut slots: Vec<(usize, AssertionReport)> = Vec::new();
    for (si, stmt) in script.statements.iter().enumerate() {
        let assertion = match &stmt.kind {
            StmtKind::Assert { assertion } => Some(assertion),
            StmtKind::Forall { assertion, .. } => Some(assertion),
            _ => None,
        };
        if let Some(a) = assertion {
            slots.push((
                si,
                AssertionReport {
                    line: a.span.line,
                    col: a.span.col,
                    text: fmt_assertion(a),
                    samples: 0,
                    max_residual: None,
                    status: AssertionStatus::Pass,
                },
            ));
        }
    }

    let mut diagnostics: Vec<Diagnostic> = Vec::new();
    let mut seen: HashSet<(u32, u32, String)> = HashSet::new();
    let mut labels: Vec<String> = Vec::new();
    let record = |diags: &mut Vec<Diagnostic>,
                      seen: &mut HashSet<(u32, u32, String)>,
                      span: Span,
                      message: String,
                      lines: &[String]| {
        if seen.insert((span.line, span.col, message.clone())) {
            diags.push(Diagnostic {
                severity: Severity::Error,
                message,
                line: span.line,
                col: span.col,
                excerpt: lines
                    .get(span.line.saturating_sub(1) as usize)
                    .cloned()
                    .unwrap_or_default(),
            });
        }
    };

    for (ti, triangle) in triangles.iter().enumerate() {
        let mut ev = Evaluator {
            opts,
            env: HashMap::new(),
            ambient: None,
            source_lines: &script.source_lines,
        };
        let mut slot_iter = 0usize;
        let mut poisoned = false;
        for (si, stmt) in script.statements.iter().enumerate() {
            match &stmt.kind {
                StmtKind::Triangle { names } => {
                    if poisoned {
                        continue;
                    }
                    match configuration(triangle, &opts.tol) {
                        Ok(config) => {
                            for (name, v) in names.iter().zip(VertexId::ALL) {
                                ev.env
                                    .insert(name.clone(), Value::Point(triangle.vertex(v)));
                            }
                            ev.ambient = Some(TriangleEnv {
                                triangle: *triangle,
                                config,
                                vertex_names: names.clone(),
                            });
                        }
                        Err(e) => {
                            record(
                                &mut diagnostics,
                                &mut seen,
                                stmt.span,
                                e.to_string(),
                                ev.source_lines,
                            );
                            poisoned = true;
                        }
                    }
                }
                StmtKind::Decl { name, expr, .. } => {
                    if poisoned {
                        continue;
                    }
                    match ev.eval_expr(expr) {
                        Ok(v) => {
                            ev.env.insert(name.clone(), v);
                        }
                        Err(msg) => {
                            record(&mut diagnostics, &mut seen, expr.span, msg, ev.source_lines);
                            poisoned = true;
                        }
                    }
                }
                StmtKind::Assert { assertion } | StmtKind::Forall { assertion, .. } => {
                    let slot = &mut slots[slot_iter].1;
                    slot_iter += 1;
                    if poisoned {
                        slot.status = AssertionStatus::Error;
                        continue;
                    }
                    let samples: Vec<Option<f64>> = match &stmt.kind {
                        StmtKind::Forall { var, .. } => {
                            let mut rng =
                                SplitMix64::new(cell_seed(opts.seed, ti as u64, si as u64));
                            forall_samples(&mut rng)
                                .into_iter()
                                .map(|tval| {
                                    ev.env.insert(var.clone(), Value::Num(tval));
                                    let r = ev.assertion_residual(assertion);
                                    ev.env.remove(var);
                                    match r {
                                        Ok(r) => Some(r),
                                        Err(msg) => {
                                            record(
                                                &mut diagnostics,
                                                &mut seen,
                                                assertion.span,
                                                msg,
                                                ev.source_lines,
                                            );
                                            None
                                        }
                                    }
                                })
                                .collect()
                        }
                        _ => match ev.assertion_residual(assertion) {
                            Ok(r) => vec![Some(r)],
                            Err(msg) => {
                                record(
                                    &mut diagnostics,
                                    &mut seen,
                                    assertion.span,
                                    msg,
                                    ev.source_lines,
                                );
                                vec![None]
                            }
                        },
                    };
                    for s in samples {
                        match s {
                            Some(r) => {
                                slot.samples += 1;
                                slot.max_residual =
                                    Some(slot.max_residual.map_or(r, |w: f64| w.max(r)));
                                if r >= opts.eps && slot.status == AssertionStatus::Pass {
                                    slot.status = AssertionStatus::Fail;
                                }
                            }
                            None => slot.status = AssertionStatus::Error,
                        }
                    }
                }
                StmtKind::Emit { label } => {
                    if ti == 0 {
                        labels.push(label.clone());
                    }
                }
            }
        }
    }

    EvalReport {
        seed: opts.seed,
        eps: opts.eps,
        triangle_count: triangles.len() as u32,
        assertions: slots.into_iter().map(|(_, r)| r).collect(),
        diagnostics,
        labels,
    }
}

/// A declared object with its value, for figure rendering.
#[derive(Debug, Clone, Copy)]
pub enum DeclaredValue {
    Point(Point),
    Line(Line),
    Circle(Circle),
}

/// Evaluates just the declarations of a script on one triangle, returning
/// (name, value) pairs in declaration order.
pub fn declared_values(
    script: &Script,
    triangle: &Triangle,
    config: &Configuration,
    tol: &Tolerance,
) -> Result<Vec<(String, DeclaredValue)>, String> {
    let opts = EvalOptions {
        source: TriangleSource::Fixed(*triangle),
        seed: 0,
        eps: 1e-7,
        tol: *tol,
    };
    let mut ev = Evaluator {
        opts: &opts,
        env: HashMap::new(),
        ambient: None,
        source_lines: &script.source_lines,
    };
    let mut out = Vec::new();
    for stmt in &script.statements {
        match &stmt.kind {
            StmtKind::Triangle { names } => {
                for (name, v) in names.iter().zip(VertexId::ALL) {
                    ev.env
                        .insert(name.clone(), Value::Point(triangle.vertex(v)));
                }
                ev.ambient = Some(TriangleEnv {
                    triangle: *triangle,
                    config: config.clone(),
                    vertex_names: names.clone(),
                });
            }
            StmtKind::Decl { name, expr, .. } => {
                let v = ev.eval_expr(expr).map_err(|msg| {
                    format!("{}:{}: {}", expr.span.line, expr.span.col, msg)
                })?;
                ev.env.insert(name.clone(), v);
                let dv = match v {
                    Value::Point(p) => DeclaredValue::Point(p),
                    Value::Line(l) => DeclaredValue::Line(l),
                    Value::Circle(c) => DeclaredValue::Circle(c),
                    Value::Num(_) => continue,
                };
                out.push((name.clone(), dv));
            }
            _ => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::parser::parse;

    fn opts_fixed() -> EvalOptions {
        EvalOptions {
            source: TriangleSource::Fixed(crate::reference_triangle()),
            seed: 42,
            eps: 1e-7,
            tol: Tolerance::default(),
        }
    }

    #[test]
    fn simple_script_passes() {
        let script = parse(
            "triangle A B C\npoint P = lerp(B, C, 0.5)\nassert on(P, line(B, C))",
        )
        .unwrap();
        let report = evaluate(&script, &opts_fixed());
        assert!(report.passed());
        assert_eq!(report.assertions.len(), 1);
    }

    #[test]
    fn false_claim_fails_with_meaningful_residual() {
        // G is not on the circumcircle; the residual is |OG - R| / diameter
        let script = parse("triangle A B C\nassert on(centroid(), circumcircle())").unwrap();
        let report = evaluate(&script, &opts_fixed());
        assert!(!report.passed());
        let a = &report.assertions[0];
        assert_eq!(a.status, AssertionStatus::Fail);
        let d = 18f64.sqrt();
        let expected = (5f64.sqrt() - (2f64 - 5.0 / 3.0)) / d; // R - |OG|, normalized
        assert!((a.max_residual.unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn construction_error_reports_span() {
        // tangent circle with Q on the tangent line has no finite radius
        let script = parse(
            "triangle A B C\ncircle w = circle_tangent(A, B, line(A, B))\nassert on(A, w)",
        )
        .unwrap();
        let report = evaluate(&script, &opts_fixed());
        assert!(!report.passed());
        assert_eq!(report.diagnostics.len(), 1);
        assert_eq!(report.diagnostics[0].line, 2);
        assert_eq!(report.assertions[0].status, AssertionStatus::Error);
    }

    #[test]
    fn eval_diagnostics_quote_the_original_line() {
        let src = "triangle A B C\n# a comment shifts the layout\ncircle w = circle_tangent(A, B, line(A, B))\nassert on(A, w)";
        let script = parse(src).unwrap();
        let report = evaluate(&script, &opts_fixed());
        let d = &report.diagnostics[0];
        assert_eq!(d.line, 3);
        assert_eq!(d.excerpt, "circle w = circle_tangent(A, B, line(A, B))");
    }

    #[test]
    fn forall_samples_grid_plus_draws() {
        let script = parse(
            "triangle A B C\nforall t in (0,1): assert on(lerp(B, C, t), line(B, C))",
        )
        .unwrap();
        let report = evaluate(&script, &opts_fixed());
        assert!(report.passed());
        assert_eq!(report.assertions[0].samples, 12); // 9 grid + 3 draws
    }

    #[test]
    fn deterministic_over_seeded_triangles() {
        let script = parse(
            "triangle A B C\npoint X = fixed_point_parallel(A)\nassert on(X, line(A, lemoine()))",
        )
        .unwrap();
        let opts = EvalOptions {
            source: TriangleSource::Seeded { samples: 7 },
            seed: 5,
            eps: 1e-7,
            tol: Tolerance::default(),
        };
        let a = evaluate(&script, &opts);
        let b = evaluate(&script, &opts);
        assert!(a.passed());
        assert_eq!(a.assertions[0].max_residual, b.assertions[0].max_residual);
    }
}
