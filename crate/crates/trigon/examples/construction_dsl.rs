//! Builds a script from source text in-process: parse, pretty-print (the
//! canonical form), evaluate on the reference triangle, and show the
//! assertion residuals.

use trigon::script::{evaluate, parse, pretty, EvalOptions, TriangleSource};
use trigon::{reference_triangle, Tolerance};

const SOURCE: &str = r#"
# distance from a false claim: the centroid is not on the circumcircle
triangle A B C
point X = fixed_point_parallel(A)
point Y = fixed_point_antiparallel(A)
assert on(X, line(A, lemoine()))         # true
assert on(Y, line(A, midpoint(B, C)))    # true
assert on(centroid(), circumcircle())    # false, residual = (R - |OG|)/diameter
"#;

fn main() {
    let script = parse(SOURCE).expect("valid script");
    println!("canonical form:\n{}", pretty(&script));
    let opts = EvalOptions {
        source: TriangleSource::Fixed(reference_triangle()),
        seed: 42,
        eps: 1e-7,
        tol: Tolerance::default(),
    };
    let report = evaluate(&script, &opts);
    for a in &report.assertions {
        println!(
            "{:<5} {:<42} residual {:.6e}",
            a.status.name(),
            a.text,
            a.max_residual.unwrap_or(f64::NAN)
        );
    }
}
