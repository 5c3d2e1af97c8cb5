//! Runs the whole theorem registry over seeded random triangles and prints
//! the aggregated table. Arguments: [seed] [samples].

use trigon::{report, run_suite, Tolerance};

fn main() {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let samples: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let tol = Tolerance::new(1e-7, 1e-12).unwrap();
    let suite = run_suite(seed, samples, &tol).expect("samples >= 1");
    print!("{}", report::suite_text(&suite));
}
