//! Prints every named point of the configuration for the reference
//! triangle, in the same fixed order the `geo centers` command uses.

use trigon::{configuration, reference_triangle, report, Tolerance};

fn main() {
    let t = reference_triangle();
    let cfg = configuration(&t, &Tolerance::default()).unwrap();
    print!("{}", report::centers_text(&cfg));
}
