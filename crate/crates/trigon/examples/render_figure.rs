//! Renders one theorem configuration to a standalone SVG file.
//! Arguments: [theorem id] [output path].

use trigon::figure::{render_svg, theorem_scene, FigureOptions};
use trigon::{reference_triangle, Tolerance};

fn main() {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "t_ax_proj".into());
    let out = args.next().unwrap_or_else(|| format!("{id}.svg"));
    let t = reference_triangle();
    let scene = theorem_scene(&id, &t, 42, &Tolerance::default()).expect("known theorem id");
    let svg = render_svg(&scene, &FigureOptions::default());
    std::fs::write(&out, svg).expect("writable output");
    println!("wrote {out}");
}
