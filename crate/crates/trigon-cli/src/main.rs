//! `geo`: run the theorem suite, evaluate `.geo` scripts, print center
//! coordinates, and emit SVG figures.
//!
//! Exit codes: 0 all checks/assertions pass, 1 at least one failure,
//! 2 usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use trigon::figure::{render_svg, script_scene, theorem_scene, FigureOptions};
use trigon::report;
use trigon::script::{evaluate, parse, EvalOptions, TriangleSource};
use trigon::{configuration, run_suite, run_suite_on, Point, Tolerance, Triangle};

fn default_seed() -> u64 {
    std::env::var("GEO_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(42)
}

#[derive(Parser)]
#[command(
    name = "geo",
    about = "Plane-geometry theorem harness: seeded residual checks, construction scripts, center tables and SVG figures",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Seed for triangle sampling and auxiliary draws (env: GEO_SEED).
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random triangles.
    #[arg(long, default_value_t = 200)]
    samples: u32,
    /// Pass threshold for normalized residuals.
    #[arg(long, default_value_t = 1e-7)]
    eps: f64,
    /// Explicit triangle "x1,y1,x2,y2,x3,y3" (or the shorthand "T0" for the
    /// reference triangle (0,0),(4,0),(1,3)); overrides random sampling.
    #[arg(long)]
    triangle: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format.
    #[arg(long, default_value = "json", value_parser = ["json", "text"])]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Run every registry check over seeded random triangles.
    Check(CommonOpts),
    /// Parse and evaluate a .geo construction script.
    Eval {
        /// Path to the script.
        script: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print every named point of the configuration for an explicit triangle.
    Centers(CommonOpts),
    /// Render a theorem id or a .geo script as a standalone SVG.
    Figure {
        /// A registry check id (see `check` output) or a path to a .geo file.
        what: String,
        #[command(flatten)]
        common: CommonOpts,
        /// Figure width in pixels.
        #[arg(long, default_value_t = 800)]
        size: u32,
    },
}

fn parse_triangle(spec: &str) -> Result<Triangle, String> {
    if spec == "T0" {
        return Ok(trigon::reference_triangle());
    }
    let nums: Vec<f64> = spec
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("invalid --triangle value: {e}"))?;
    if nums.len() != 6 {
        return Err(format!(
            "--triangle needs 6 comma-separated coordinates, got {}",
            nums.len()
        ));
    }
    Triangle::new(
        Point::new(nums[0], nums[1]),
        Point::new(nums[2], nums[3]),
        Point::new(nums[4], nums[5]),
    )
    .map_err(|e| format!("invalid --triangle value: {e}"))
}

fn tolerance_for(eps: f64) -> Result<Tolerance, String> {
    Tolerance::new(eps, 1e-12).map_err(|e| format!("invalid --eps value: {e}"))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn cmd_check(opts: &CommonOpts) -> Result<u8, String> {
    if opts.samples == 0 && opts.triangle.is_none() {
        return Err("--samples must be at least 1".into());
    }
    let tol = tolerance_for(opts.eps)?;
    let seed = opts.seed.unwrap_or_else(default_seed);
    let report = match &opts.triangle {
        Some(spec) => {
            let t = parse_triangle(spec)?;
            run_suite_on(&[t], seed, &tol)
        }
        None => run_suite(seed, opts.samples, &tol).map_err(|e| e.to_string())?,
    };
    let content = match opts.format.as_str() {
        "json" => report::suite_json(&report),
        _ => report::suite_text(&report),
    };
    emit(&opts.out, &content)?;
    Ok(if report.gate_passes() { 0 } else { EXIT_FAIL })
}

fn cmd_eval(script_path: &PathBuf, opts: &CommonOpts) -> Result<u8, String> {
    let text = std::fs::read_to_string(script_path)
        .map_err(|e| format!("cannot read {}: {e}", script_path.display()))?;
    let script = match parse(&text) {
        Ok(s) => s,
        Err(diags) => {
            for d in diags {
                eprintln!("{d}");
            }
            return Ok(EXIT_USAGE);
        }
    };
    if opts.samples == 0 && opts.triangle.is_none() {
        return Err("--samples must be at least 1".into());
    }
    let tol = tolerance_for(opts.eps)?;
    let seed = opts.seed.unwrap_or_else(default_seed);
    let source = match &opts.triangle {
        Some(spec) => TriangleSource::Fixed(parse_triangle(spec)?),
        None => TriangleSource::Seeded {
            samples: opts.samples,
        },
    };
    let eval_opts = EvalOptions {
        source,
        seed,
        eps: opts.eps,
        tol,
    };
    let report = evaluate(&script, &eval_opts);
    for d in &report.diagnostics {
        eprintln!("{d}");
    }
    let name = script_path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| script_path.display().to_string());
    let content = match opts.format.as_str() {
        "json" => report::eval_json(&report, &name),
        _ => report::eval_text(&report, &name),
    };
    emit(&opts.out, &content)?;
    Ok(if report.passed() { 0 } else { EXIT_FAIL })
}

fn cmd_centers(opts: &CommonOpts) -> Result<u8, String> {
    let Some(spec) = &opts.triangle else {
        return Err("centers needs an explicit --triangle".into());
    };
    let t = parse_triangle(spec)?;
    let tol = Tolerance::default();
    let config = configuration(&t, &tol).map_err(|e| e.to_string())?;
    let content = match opts.format.as_str() {
        "json" => report::centers_json(&config),
        _ => report::centers_text(&config),
    };
    emit(&opts.out, &content)?;
    Ok(0)
}

fn cmd_figure(what: &str, opts: &CommonOpts, size: u32) -> Result<u8, String> {
    let tol = Tolerance::default();
    let seed = opts.seed.unwrap_or_else(default_seed);
    let triangle = match &opts.triangle {
        Some(spec) => parse_triangle(spec)?,
        None => trigon::reference_triangle(),
    };
    let scene = if what.ends_with(".geo") || std::path::Path::new(what).exists() {
        let text = std::fs::read_to_string(what).map_err(|e| format!("cannot read {what}: {e}"))?;
        let script = match parse(&text) {
            Ok(s) => s,
            Err(diags) => {
                for d in diags {
                    eprintln!("{d}");
                }
                return Ok(EXIT_USAGE);
            }
        };
        script_scene(&script, &triangle, seed, &tol)?
    } else {
        theorem_scene(what, &triangle, seed, &tol)?
    };
    let svg = render_svg(
        &scene,
        &FigureOptions {
            size,
            ..FigureOptions::default()
        },
    );
    emit(&opts.out, &svg)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(opts) => cmd_check(opts),
        Command::Eval { script, common } => cmd_eval(script, common),
        Command::Centers(opts) => cmd_centers(opts),
        Command::Figure { what, common, size } => cmd_figure(what, common, *size),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
