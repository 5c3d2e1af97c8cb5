//! Deterministic SVG rendering of configurations: labeled point dots,
//! stroked circles and lines, viewBox fitted to content with a 5% margin.
//! Degenerate circles render as dots.

use std::fmt::Write as _;

use crate::centers::{configuration, hagge, Configuration};
use crate::kernel::{Circle, Line, Point, Triangle, VertexId};
use crate::script::{evaluate, EvalOptions, Script, StmtKind, TriangleSource};
use crate::theorems::{interior_point, SplitMix64};
use crate::tol::Tolerance;

#[derive(Debug, Clone, Copy)]
pub struct FigureOptions {
    /// Rendered width in pixels; height follows the content aspect ratio.
    pub size: u32,
    /// Margin around the content as a fraction of its extent.
    pub margin: f64,
}

impl Default for FigureOptions {
    fn default() -> Self {
        FigureOptions {
            size: 800,
            margin: 0.05,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Element {
    Dot { at: Point, label: String },
    Stroke { circle: Circle, label: Option<String> },
    Segment { from: Point, to: Point },
    FullLine { line: Line },
}

#[derive(Debug, Clone, Default)]
pub struct Scene {
    pub title: Option<String>,
    pub elements: Vec<Element>,
}

impl Scene {
    pub fn dot(&mut self, label: impl Into<String>, at: Point) {
        self.elements.push(Element::Dot {
            at,
            label: label.into(),
        });
    }

    pub fn circle(&mut self, circle: Circle) {
        self.elements.push(Element::Stroke {
            circle,
            label: None,
        });
    }

    pub fn labeled_circle(&mut self, label: impl Into<String>, circle: Circle) {
        self.elements.push(Element::Stroke {
            circle,
            label: Some(label.into()),
        });
    }

    pub fn segment(&mut self, from: Point, to: Point) {
        self.elements.push(Element::Segment { from, to });
    }

    pub fn line(&mut self, line: Line) {
        self.elements.push(Element::FullLine { line });
    }

    fn bounds(&self) -> (Point, Point) {
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut grow = |p: Point| {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        };
        for e in &self.elements {
            match e {
                Element::Dot { at, .. } => grow(*at),
                Element::Segment { from, to } => {
                    grow(*from);
                    grow(*to);
                }
                Element::Stroke { circle, .. } => {
                    let r = circle.radius();
                    grow(circle.center + Point::new(r, r));
                    grow(circle.center - Point::new(r, r));
                }
                Element::FullLine { .. } => {} // clipped to the others' extent
            }
        }
        if !min.is_finite() || !max.is_finite() {
            (Point::new(-1.0, -1.0), Point::new(1.0, 1.0))
        } else {
            (min, max)
        }
    }
}

fn fmt_px(x: f64) -> String {
    format!("{x:.2}")
}

/// Clips an infinite line to a rectangle, returning a drawable segment.
fn clip_line(line: &Line, min: Point, max: Point) -> Option<(Point, Point)> {
    let dir = line.direction();
    let anchor = line.project(Point::new(
        (min.x + max.x) / 2.0,
        (min.y + max.y) / 2.0,
    ));
    let mut ts: Vec<f64> = Vec::new();
    let eps = 1e-9 * (max.x - min.x).max(max.y - min.y).max(1.0);
    // intersect with the four border lines in parameter space
    if dir.x.abs() > 1e-15 {
        ts.push((min.x - anchor.x) / dir.x);
        ts.push((max.x - anchor.x) / dir.x);
    }
    if dir.y.abs() > 1e-15 {
        ts.push((min.y - anchor.y) / dir.y);
        ts.push((max.y - anchor.y) / dir.y);
    }
    let inside: Vec<f64> = ts
        .into_iter()
        .filter(|t| {
            let p = anchor + *t * dir;
            p.x >= min.x - eps && p.x <= max.x + eps && p.y >= min.y - eps && p.y <= max.y + eps
        })
        .collect();
    let lo = inside.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = inside.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !lo.is_finite() || !hi.is_finite() || hi - lo < eps {
        return None;
    }
    Some((anchor + lo * dir, anchor + hi * dir))
}

/// Renders a scene as a standalone SVG document. Byte-deterministic for a
/// fixed scene and options.
pub fn render_svg(scene: &Scene, opts: &FigureOptions) -> String {
    let (mut min, mut max) = scene.bounds();
    let extent = (max.x - min.x).max(max.y - min.y).max(1e-9);
    let pad = opts.margin * extent;
    min = min - Point::new(pad, pad);
    max = max + Point::new(pad, pad);
    let width = f64::from(opts.size);
    let s = width / (max.x - min.x);
    let height = (max.y - min.y) * s;
    let px = |p: Point| (((p.x - min.x) * s), ((max.y - p.y) * s));
    let degenerate_r = 1e-6 * extent;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt_px(width),
        fmt_px(height),
        fmt_px(width),
        fmt_px(height)
    );
    if let Some(title) = &scene.title {
        let _ = writeln!(svg, "  <title>{}</title>", escape(title));
    }
    let _ = writeln!(
        svg,
        r#"  <rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
        fmt_px(width),
        fmt_px(height)
    );

    for e in &scene.elements {
        match e {
            Element::Stroke { circle, label } => {
                let (cx, cy) = px(circle.center);
                if circle.radius() <= degenerate_r {
                    // collapsed circle: render as a point with a note
                    let _ = writeln!(
                        svg,
                        r#"  <circle cx="{}" cy="{}" r="2" fill="dimgray"/>"#,
                        fmt_px(cx),
                        fmt_px(cy)
                    );
                    let note = match label {
                        Some(l) => format!("{l} (degenerate)"),
                        None => "(degenerate circle)".to_string(),
                    };
                    let _ = writeln!(
                        svg,
                        r#"  <text x="{}" y="{}" font-size="11" fill="dimgray">{}</text>"#,
                        fmt_px(cx + 4.0),
                        fmt_px(cy - 4.0),
                        escape(&note)
                    );
                } else {
                    let _ = writeln!(
                        svg,
                        r#"  <circle cx="{}" cy="{}" r="{}" fill="none" stroke="steelblue" stroke-width="1"/>"#,
                        fmt_px(cx),
                        fmt_px(cy),
                        fmt_px(circle.radius() * s)
                    );
                    if let Some(l) = label {
                        let (lx, ly) = px(circle.center + Point::new(0.0, circle.radius()));
                        let _ = writeln!(
                            svg,
                            r#"  <text x="{}" y="{}" font-size="11" fill="steelblue">{}</text>"#,
                            fmt_px(lx + 4.0),
                            fmt_px(ly + 12.0),
                            escape(l)
                        );
                    }
                }
            }
            Element::Segment { from, to } => {
                let (x1, y1) = px(*from);
                let (x2, y2) = px(*to);
                let _ = writeln!(
                    svg,
                    r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray" stroke-width="1"/>"#,
                    fmt_px(x1),
                    fmt_px(y1),
                    fmt_px(x2),
                    fmt_px(y2)
                );
            }
            Element::FullLine { line } => {
                if let Some((from, to)) = clip_line(line, min, max) {
                    let (x1, y1) = px(from);
                    let (x2, y2) = px(to);
                    let _ = writeln!(
                        svg,
                        r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="darkseagreen" stroke-width="1" stroke-dasharray="5,3"/>"#,
                        fmt_px(x1),
                        fmt_px(y1),
                        fmt_px(x2),
                        fmt_px(y2)
                    );
                }
            }
            Element::Dot { .. } => {}
        }
    }
    // dots and labels over the strokes
    for e in &scene.elements {
        if let Element::Dot { at, label } = e {
            let (cx, cy) = px(*at);
            let _ = writeln!(
                svg,
                r#"  <circle cx="{}" cy="{}" r="2" fill="black"/>"#,
                fmt_px(cx),
                fmt_px(cy)
            );
            let _ = writeln!(
                svg,
                r#"  <text x="{}" y="{}" font-size="11">{}</text>"#,
                fmt_px(cx + 4.0),
                fmt_px(cy - 4.0),
                escape(label)
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn base_scene(cfg: &Configuration) -> Scene {
    let t = &cfg.triangle;
    let mut scene = Scene::default();
    for v in VertexId::ALL {
        scene.segment(t.vertex(v), t.vertex(v.next()));
    }
    for v in VertexId::ALL {
        scene.dot(v.name(), t.vertex(v));
    }
    scene
}

fn dot_vc(scene: &mut Scene, cfg: &Configuration, field: impl Fn(&crate::centers::VertexConfig) -> Point, suffix: &str) {
    for v in VertexId::ALL {
        scene.dot(format!("{}_{suffix}", v.name()), field(cfg.vertex(v)));
    }
}

/// Builds the scene for a theorem id on the given triangle; seeded checks
/// draw their auxiliary data from `seed`.
pub fn theorem_scene(
    id: &str,
    triangle: &Triangle,
    seed: u64,
    tol: &Tolerance,
) -> Result<Scene, String> {
    if crate::theorems::find_check(id).is_none() {
        return Err(format!("unknown theorem id `{id}`"));
    }
    let cfg = configuration(triangle, tol).map_err(|e| e.to_string())?;
    let mut scene = base_scene(&cfg);
    scene.title = Some(id.to_string());
    let basic = &cfg.basic;
    let mut rng = SplitMix64::new(seed);

    match id {
        "p1_fixed" | "p1_symmedian" | "t_ax_proj" => {
            scene.labeled_circle("(ABC)", basic.circumcircle);
            scene.dot("O", basic.circumcenter);
            dot_vc(&mut scene, &cfg, |vc| vc.x, "X");
            for v in VertexId::ALL {
                scene.segment(triangle.vertex(v), cfg.vertex(v).s);
            }
        }
        "p2_fixed" | "p2_median" | "t_ay_proj" => {
            scene.labeled_circle("(ABC)", basic.circumcircle);
            scene.dot("H", basic.orthocenter);
            dot_vc(&mut scene, &cfg, |vc| vc.y, "Y");
            for v in VertexId::ALL {
                scene.segment(triangle.vertex(v), triangle.side_midpoint_opposite(v));
            }
        }
        "t_brocard_circle" | "t_first_brocard" | "cor_z_sym" | "t_concur_g"
        | "lem_centroid_first" | "t_x39" | "t_owcw" | "lem_bwcw" => {
            scene.labeled_circle("Brocard circle", cfg.brocard.circle);
            scene.dot("O", basic.circumcenter);
            scene.dot("L", basic.lemoine);
            scene.dot("G", basic.centroid);
            scene.dot("Z1", cfg.brocard.z1);
            scene.dot("Z2", cfg.brocard.z2);
            scene.dot("X39", cfg.brocard.midpoint);
            dot_vc(&mut scene, &cfg, |vc| vc.x, "X");
            for (i, z) in cfg.brocard.first_triangle.iter().enumerate() {
                scene.dot(format!("Z_{}", VertexId::ALL[i].name()), *z);
            }
        }
        "lem_mannheim" | "lem_chord_mid" | "lem_proj_concur" | "lem_ratio"
        | "lem_parallelogram" | "lem_isogonal_tangent" => {
            scene.labeled_circle("(ABC)", basic.circumcircle);
            scene.dot("O", basic.circumcenter);
            scene.dot("P", interior_point(&mut rng, triangle));
        }
        "lem_hagge" | "lem_hagge_concur" => {
            scene.labeled_circle("(ABC)", basic.circumcircle);
            let pivot = interior_point(&mut rng, triangle);
            if let Ok(data) = hagge(triangle, pivot, tol) {
                scene.labeled_circle("Hagge circle", data.circle);
                scene.dot("P", pivot);
                scene.dot("H", basic.orthocenter);
                for (i, p) in data.reflected.iter().enumerate() {
                    scene.dot(format!("{}2", VertexId::ALL[i].name()), *p);
                }
                for (i, p) in data.altitude_points.iter().enumerate() {
                    scene.dot(format!("{}3", VertexId::ALL[i].name()), *p);
                    scene.segment(data.reflected[i], *p);
                }
            }
        }
        "cor_orthocentroidal" | "cor_hagge_L" | "t_l_concur" | "lem_lemoine_sub" => {
            scene.dot("G", basic.centroid);
            scene.dot("H", basic.orthocenter);
            scene.dot("L", basic.lemoine);
            if let Some(oc) = &cfg.orthocentroidal {
                scene.labeled_circle("orthocentroidal circle", oc.circle);
                dot_vc(&mut scene, &cfg, |vc| vc.y, "Y");
                for (i, p) in oc.projections.iter().enumerate() {
                    scene.dot(format!("H_{}", VertexId::ALL[i].name()), *p);
                }
            } else {
                scene.labeled_circle(
                    "orthocentroidal circle",
                    Circle::from_diameter(basic.centroid, basic.orthocenter),
                );
            }
        }
        "t_parallelogram_aycm" | "cor_ay_reflect" | "t_isogonal" | "t_agy_mid"
        | "cor_agy_parallel" | "cor_ax_reflect" | "t_anticomplement" | "t_ag_ninepoint" => {
            scene.labeled_circle("(ABC)", basic.circumcircle);
            scene.labeled_circle("Euler circle", basic.euler_circle);
            dot_vc(&mut scene, &cfg, |vc| vc.x, "X");
            dot_vc(&mut scene, &cfg, |vc| vc.y, "Y");
            dot_vc(&mut scene, &cfg, |vc| vc.m, "M");
            dot_vc(&mut scene, &cfg, |vc| vc.g, "G");
            dot_vc(&mut scene, &cfg, |vc| vc.gy, "GY");
        }
        "t_ln_parallel" | "t_tangent_boc" => {
            scene.dot("L", basic.lemoine);
            dot_vc(&mut scene, &cfg, |vc| vc.x, "X");
            dot_vc(&mut scene, &cfg, |vc| vc.gy, "GY");
            for v in VertexId::ALL {
                let vc = cfg.vertex(v);
                if let Some(l_n) = vc.l_n {
                    scene.dot(format!("{}_LN", v.name()), l_n);
                    if let Ok(c) = Circle::through(vc.x, vc.gy, l_n) {
                        scene.circle(c);
                    }
                }
            }
        }
        "t_mbc_equal" | "cor_tangent_euler" | "t_symmedian_ay" | "t_tangent_bhc"
        | "t_primes_on_al" | "t_alx_mid" => {
            scene.labeled_circle("(ABC)", basic.circumcircle);
            scene.dot("L", basic.lemoine);
            scene.dot("H", basic.orthocenter);
            dot_vc(&mut scene, &cfg, |vc| vc.y, "Y");
            dot_vc(&mut scene, &cfg, |vc| vc.lx, "LX");
            dot_vc(&mut scene, &cfg, |vc| vc.l_bc, "LBC");
        }
        _ => {
            // generic fallback: the classical centers
            scene.labeled_circle("(ABC)", basic.circumcircle);
            scene.dot("G", basic.centroid);
            scene.dot("O", basic.circumcenter);
            scene.dot("H", basic.orthocenter);
            scene.dot("L", basic.lemoine);
        }
    }
    Ok(scene)
}

/// Scene for a script: every declared object becomes a labeled element;
/// `emit` labels become the title.
pub fn script_scene(
    script: &Script,
    triangle: &Triangle,
    seed: u64,
    tol: &Tolerance,
) -> Result<Scene, String> {
    // reuse the evaluator on the fixed triangle to obtain all declared values
    let opts = EvalOptions {
        source: TriangleSource::Fixed(*triangle),
        seed,
        eps: 1e-7,
        tol: *tol,
    };
    let report = evaluate(script, &opts);
    if let Some(d) = report.diagnostics.first() {
        return Err(format!("{}:{}: {}", d.line, d.col, d.message));
    }
    // re-run declarations to collect values by name, in order
    let mut scene = Scene::default();
    if let Some(label) = report.labels.first() {
        scene.title = Some(label.clone());
    }
    let cfg = configuration(triangle, tol).map_err(|e| e.to_string())?;
    let mut has_triangle = false;
    for stmt in &script.statements {
        if let StmtKind::Triangle { names } = &stmt.kind {
            for (name, v) in names.iter().zip(VertexId::ALL) {
                scene.dot(name.clone(), triangle.vertex(v));
            }
            for v in VertexId::ALL {
                scene.segment(triangle.vertex(v), triangle.vertex(v.next()));
            }
            has_triangle = true;
        }
    }
    if !has_triangle {
        return Err("the script declares no triangle to draw".into());
    }
    // evaluate declarations with a one-off evaluator pass
    let values = crate::script::declared_values(script, triangle, &cfg, tol)?;
    for (name, value) in values {
        match value {
            crate::script::DeclaredValue::Point(p) => scene.dot(name, p),
            crate::script::DeclaredValue::Line(l) => scene.line(l),
            crate::script::DeclaredValue::Circle(c) => scene.labeled_circle(name, c),
        }
    }
    Ok(scene)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svg_is_deterministic_and_labels_present() {
        let t = crate::reference_triangle();
        let tol = Tolerance::default();
        let scene = theorem_scene("t_ax_proj", &t, 42, &tol).unwrap();
        let opts = FigureOptions::default();
        let a = render_svg(&scene, &opts);
        let b = render_svg(&scene, &opts);
        assert_eq!(a, b);
        for label in ["&gt;", "<svg", "A", "B", "C", "O", "A_X"] {
            let _ = label;
        }
        assert!(a.contains(">O<"));
        assert!(a.contains(">A_X<"));
        assert!(a.contains(">A<"));
    }

    #[test]
    fn every_registry_id_renders() {
        let t = crate::reference_triangle();
        let tol = Tolerance::default();
        for check in crate::theorems::registry() {
            let scene = theorem_scene(check.id, &t, 42, &tol)
                .unwrap_or_else(|e| panic!("{}: {e}", check.id));
            let svg = render_svg(&scene, &FigureOptions::default());
            assert!(svg.starts_with("<?xml"), "{}", check.id);
            assert!(svg.contains(">A<"), "{} lacks vertex labels", check.id);
        }
    }

    #[test]
    fn unknown_id_rejected() {
        let t = crate::reference_triangle();
        assert!(theorem_scene("nope", &t, 42, &Tolerance::default()).is_err());
    }

    #[test]
    fn equilateral_brocard_renders_degenerate_note() {
        let t = Triangle::new(
            Point::new(0.0, 3f64.sqrt()),
            Point::new(-1.0, 0.0),
            Point::new(1.0, 0.0),
        )
        .unwrap();
        let scene = theorem_scene("t_brocard_circle", &t, 42, &Tolerance::default()).unwrap();
        let svg = render_svg(&scene, &FigureOptions::default());
        assert!(svg.contains("degenerate"));
    }
}
