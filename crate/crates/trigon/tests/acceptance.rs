//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use std::time::Instant;

use trigon::figure::{render_svg, theorem_scene, FigureOptions};
use trigon::script::{evaluate, parse, pretty, EvalOptions, TriangleSource};
use trigon::theorems::find_check;
use trigon::{
    configuration, hagge, orthocentroidal, reference_triangle, report, run_check_with, run_suite,
    run_suite_on, CheckStatus, Circle, Point, SplitMix64, Tolerance, Triangle, VertexId,
};

fn equilateral() -> Triangle {
    Triangle::new(
        Point::new(0.0, 3f64.sqrt()),
        Point::new(-1.0, 0.0),
        Point::new(1.0, 0.0),
    )
    .unwrap()
}

fn seeded_triangles(seed: u64, n: usize) -> Vec<Triangle> {
    let tol = Tolerance::default();
    let mut rng = SplitMix64::new(seed);
    (0..n)
        .map(|_| trigon::sample_triangle(&mut rng, &tol))
        .collect()
}

#[test]
fn criterion_1_reference_triangle_golden_values() {
    let tol = Tolerance::default();
    let t = reference_triangle();
    let cfg = configuration(&t, &tol).unwrap();
    let golden = [
        ("O", cfg.basic.circumcenter, Point::new(2.0, 1.0)),
        ("H", cfg.basic.orthocenter, Point::new(1.0, 1.0)),
        ("G", cfg.basic.centroid, Point::new(5.0 / 3.0, 1.0)),
        ("L", cfg.basic.lemoine, Point::new(14.0 / 11.0, 12.0 / 11.0)),
        (
            "A_X",
            cfg.vertex(VertexId::A).x,
            Point::new(28.0 / 17.0, 24.0 / 17.0),
        ),
        (
            "A_Y",
            cfg.vertex(VertexId::A).y,
            Point::new(20.0 / 17.0, 12.0 / 17.0),
        ),
    ];
    for (name, got, want) in golden {
        assert!(
            (got.x - want.x).abs() < 1e-12 && (got.y - want.y).abs() < 1e-12,
            "{name}: got ({}, {}), want ({}, {})",
            got.x,
            got.y,
            want.x,
            want.y
        );
    }
    let oc = orthocentroidal(&t, &tol).unwrap();
    assert!((oc.circle.center.x - 4.0 / 3.0).abs() < 1e-12);
    assert!((oc.circle.center.y - 1.0).abs() < 1e-12);
    assert!((oc.circle.r2 - 1.0 / 9.0).abs() < 1e-12);
    println!("criterion 1 (reference-triangle golden values to 1e-12): PASS");
}

#[test]
fn criterion_2_full_suite_gate() {
    let tol = Tolerance::new(1e-7, 1e-12).unwrap();
    let start = Instant::now();
    let suite = run_suite(42, 200, &tol).unwrap();
    let elapsed = start.elapsed();

    let mut evaluated = 0;
    for c in &suite.checks {
        if c.experimental {
            continue;
        }
        assert_eq!(c.failures, 0, "{} failed {} times", c.id, c.failures);
        assert_eq!(c.errors, 0, "{} errored {} times", c.id, c.errors);
        if c.passes > 0 {
            evaluated += 1;
        }
    }
    assert!(
        evaluated >= 30,
        "only {evaluated} non-experimental checks evaluated"
    );
    assert!(suite.gate_passes());
    assert!(
        elapsed.as_secs() < 60,
        "suite took {elapsed:?}, budget is 60s"
    );
    println!(
        "criterion 2 (seed 42, 200 triangles, eps 1e-7, {evaluated} checks, {elapsed:?}): PASS"
    );
}

#[test]
fn criterion_3_fixed_point_equivalence_oracles() {
    let tol = Tolerance::default();
    let mut worst = 0.0f64;
    for t in seeded_triangles(42, 1000) {
        let cfg = configuration(&t, &tol).unwrap();
        for v in VertexId::ALL {
            let vc = cfg.vertex(v);
            // A_X via tangent circles vs projection of O on the symmedian
            let proj_o = cfg.basic.symmedian_line(&t, v).project(cfg.basic.circumcenter);
            worst = worst.max(vc.x.dist(proj_o));
            // A_Y: tangent circles vs projection of H on the median vs the
            // reflection of A_S across the opposite side
            let proj_h = cfg.basic.median_line(&t, v).project(cfg.basic.orthocenter);
            let refl = t.sideline_opposite(v).reflect(vc.s);
            worst = worst.max(vc.y.dist(proj_h));
            worst = worst.max(vc.y.dist(refl));
            worst = worst.max(proj_h.dist(refl));
        }
    }
    assert!(worst < 1e-9, "worst pairwise distance {worst}");
    println!("criterion 3 (three-route fixed-point equivalence over 1000 triangles, worst {worst:.3e}): PASS");
}

#[test]
fn criterion_4_hagge_of_lemoine_is_orthocentroidal() {
    let tol = Tolerance::default();
    let mut worst = 0.0f64;
    for t in seeded_triangles(7, 1000) {
        let h = hagge(&t, trigon::basic_centers(&t, &tol).unwrap().lemoine, &tol).unwrap();
        let oc = orthocentroidal(&t, &tol).unwrap();
        worst = worst.max(h.circle.center.dist(oc.circle.center));
        worst = worst.max((h.circle.radius() - oc.circle.radius()).abs());
    }
    assert!(worst < 1e-9, "worst center/radius deviation {worst}");
    println!("criterion 4 (Hagge circle of L vs orthocentroidal circle over 1000 triangles, worst {worst:.3e}): PASS");
}

#[test]
fn criterion_5_x39_radical_axis() {
    let tol = Tolerance::default();
    let mut worst = 0.0f64;
    for t in seeded_triangles(11, 1000) {
        let cfg = configuration(&t, &tol).unwrap();
        let [xa, xb, xc] = cfg.brocard.second_triangle;
        let x_circle = Circle::through(xa, xb, xc).unwrap();
        let y_circle = Circle::through(
            cfg.vertices[0].y,
            cfg.vertices[1].y,
            cfg.vertices[2].y,
        )
        .unwrap();
        let axis = x_circle.radical_axis(&y_circle).unwrap();
        worst = worst.max(axis.distance(cfg.brocard.midpoint) / t.diameter());
    }
    assert!(worst < 1e-8, "worst X(39) residual {worst}");
    println!("criterion 5 (X(39) on the radical axis over 1000 triangles, worst {worst:.3e}): PASS");
}

#[test]
fn criterion_6_mutation_falsifiability() {
    let tol = Tolerance::new(1e-7, 1e-12).unwrap();
    let t = reference_triangle();
    let pristine = configuration(&t, &tol).unwrap();
    let delta = Point::new(1e-3 * t.diameter(), 0.0);

    // the designated mutations: a perturbed constructed point must flip the
    // named dependent check to FAIL
    type Mutation = fn(&mut trigon::Configuration, Point);
    let mutations: [(&str, &str, Mutation); 5] = [
        ("A_X", "t_isogonal", |cfg, d| {
            cfg.vertices[0].x = cfg.vertices[0].x + d;
            cfg.brocard.second_triangle[0] = cfg.brocard.second_triangle[0] + d;
        }),
        ("A_X", "t_brocard_circle", |cfg, d| {
            cfg.vertices[0].x = cfg.vertices[0].x + d;
            cfg.brocard.second_triangle[0] = cfg.brocard.second_triangle[0] + d;
        }),
        ("A_X", "cor_agy_parallel", |cfg, d| {
            cfg.vertices[0].x = cfg.vertices[0].x + d;
            cfg.brocard.second_triangle[0] = cfg.brocard.second_triangle[0] + d;
        }),
        ("A_Y", "t_parallelogram_aycm", |cfg, d| {
            cfg.vertices[0].y = cfg.vertices[0].y + d;
        }),
        ("Z1", "cor_z_sym", |cfg, d| {
            cfg.brocard.z1 = cfg.brocard.z1 + d;
        }),
    ];

    for (point_name, check_id, mutate) in mutations {
        let check = find_check(check_id).unwrap();
        let clean = run_check_with(check, &t, &pristine, SplitMix64::new(1), &tol);
        assert_eq!(
            clean.status,
            CheckStatus::Pass,
            "{check_id} must pass before mutation"
        );
        let mut mutated = pristine.clone();
        mutate(&mut mutated, delta);
        let dirty = run_check_with(check, &t, &mutated, SplitMix64::new(1), &tol);
        assert_eq!(
            dirty.status,
            CheckStatus::Fail,
            "perturbing {point_name} by 1e-3·diameter must flip {check_id} to FAIL, got {:?} (residual {:?})",
            dirty.status,
            dirty.residual
        );
    }
    println!("criterion 6 (5 designated mutations each flip their dependent check): PASS");
}

#[test]
fn criterion_7_equilateral_degeneracy() {
    let tol = Tolerance::new(1e-7, 1e-12).unwrap();
    let t = equilateral();
    let cfg = configuration(&t, &tol).unwrap();
    let o = cfg.basic.circumcenter;
    for v in VertexId::ALL {
        assert!(cfg.vertex(v).x.dist(o) < 1e-12, "{v}_X away from O");
        assert!(cfg.vertex(v).y.dist(o) < 1e-12, "{v}_Y away from O");
    }
    assert!(cfg.brocard.degenerate, "Brocard circle must be flagged degenerate");
    assert!(cfg.orthocentroidal.is_none());

    let suite = run_suite_on(&[t], 42, &tol);
    let failures = suite.total(|c| c.failures);
    let errors = suite.total(|c| c.errors);
    let skips = suite.total(|c| c.skips);
    assert_eq!(failures, 0, "equilateral input must not FAIL any check");
    assert_eq!(errors, 0, "equilateral input must not error any check");
    assert!(skips > 0, "degenerate structures must be skipped");
    println!(
        "criterion 7 (equilateral: fixed points at O to 1e-12, degeneracy flagged, 0 FAIL / {skips} skips): PASS"
    );
}

#[test]
fn criterion_8_parser_corpus() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/scripts");
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "geo"))
        .collect();
    paths.sort();
    assert!(
        paths.len() >= 12,
        "need at least 12 bundled scripts, found {}",
        paths.len()
    );

    let opts = EvalOptions {
        source: TriangleSource::Seeded { samples: 50 },
        seed: 42,
        eps: 1e-7,
        tol: Tolerance::default(),
    };
    for path in &paths {
        let text = std::fs::read_to_string(path).unwrap();
        let script = parse(&text)
            .unwrap_or_else(|d| panic!("{} fails to parse: {}", path.display(), d[0]));
        // round-trip stability: pretty ∘ parse is a fixed point
        let once = pretty(&script);
        let twice = pretty(&parse(&once).expect("pretty output reparses"));
        assert_eq!(once, twice, "round-trip drift in {}", path.display());

        let result = evaluate(&script, &opts);
        assert!(
            result.passed(),
            "{} does not pass: {:?} / {:?}",
            path.display(),
            result
                .assertions
                .iter()
                .map(|a| (a.text.clone(), a.status.name(), a.max_residual))
                .collect::<Vec<_>>(),
            result.diagnostics
        );
    }

    // each malformed script produces a diagnostic at the expected position
    let expected: &[(&str, u32, u32)] = &[
        ("arity.geo", 2, 8),
        ("redeclared.geo", 3, 7),
        ("type_mismatch.geo", 2, 12),
        ("unclosed_args.geo", 2, 21),
        ("undeclared.geo", 2, 11),
        ("unknown_function.geo", 2, 11),
    ];
    for (name, line, col) in expected {
        let text = std::fs::read_to_string(format!("{dir}/malformed/{name}")).unwrap();
        let diags = parse(&text).expect_err("malformed script must not parse");
        assert_eq!(
            (diags[0].line, diags[0].col),
            (*line, *col),
            "{name}: diagnostic at {}:{} ({})",
            diags[0].line,
            diags[0].col,
            diags[0].message
        );
    }
    println!(
        "criterion 8 ({} scripts pass, 6 malformed diagnose at the expected positions, round-trip stable): PASS",
        paths.len()
    );
}

#[test]
fn criterion_9_byte_identical_outputs() {
    let tol = Tolerance::new(1e-7, 1e-12).unwrap();
    let a = report::suite_json(&run_suite(42, 20, &tol).unwrap());
    let b = report::suite_json(&run_suite(42, 20, &tol).unwrap());
    assert_eq!(a, b, "suite JSON must be byte-identical");

    let t = reference_triangle();
    let svg1 = render_svg(
        &theorem_scene("t_brocard_circle", &t, 42, &Tolerance::default()).unwrap(),
        &FigureOptions::default(),
    );
    let svg2 = render_svg(
        &theorem_scene("t_brocard_circle", &t, 42, &Tolerance::default()).unwrap(),
        &FigureOptions::default(),
    );
    assert_eq!(svg1, svg2, "SVG must be byte-identical");

    let script = parse("triangle A B C\nassert on(fixed_point_parallel(A), line(A, lemoine()))")
        .unwrap();
    let opts = EvalOptions {
        source: TriangleSource::Seeded { samples: 10 },
        seed: 3,
        eps: 1e-7,
        tol: Tolerance::default(),
    };
    let e1 = report::eval_json(&evaluate(&script, &opts), "inline");
    let e2 = report::eval_json(&evaluate(&script, &opts), "inline");
    assert_eq!(e1, e2, "eval JSON must be byte-identical");
    println!("criterion 9 (byte-identical JSON and SVG across runs): PASS");
}
