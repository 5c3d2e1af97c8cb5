//! Parses and evaluates a `.geo` script over seeded random triangles.
//! Argument: a script path (defaults to the bundled problem1.geo).

use trigon::report;
use trigon::script::{evaluate, parse, EvalOptions, TriangleSource};
use trigon::Tolerance;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/scripts/problem1.geo").into());
    let text = std::fs::read_to_string(&path).expect("readable script");
    let script = match parse(&text) {
        Ok(s) => s,
        Err(diags) => {
            for d in diags {
                eprintln!("{d}");
            }
            std::process::exit(2);
        }
    };
    let opts = EvalOptions {
        source: TriangleSource::Seeded { samples: 50 },
        seed: 42,
        eps: 1e-7,
        tol: Tolerance::default(),
    };
    let result = evaluate(&script, &opts);
    print!("{}", report::eval_text(&result, &path));
}
