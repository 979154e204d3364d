//! Command-line front end: render Mandelbrot and Julia grids, classify
//! parameters, dump orbits, and run the built-in consistency checks.
//!
//! Exit codes: 0 success, 1 runtime or check failure, 2 usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperfract::render::{self, Colormap, Region, SampleMode};
use hyperfract::{dynamics, BoundednessVariant, EscapeGrid, Hyper, HyperParam, JuliaClass};
use serde::Serialize;

mod verify;

#[derive(Parser)]
#[command(
    name = "hyperfract",
    version,
    about = "Escape-time dynamics of z^2 + c over the hyperbolic number plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render the Mandelbrot set to a PPM image or CSV table.
    Mandelbrot(MandelbrotArgs),
    /// Render the filled Julia set of c = a + j*b.
    Julia(JuliaArgs),
    /// Print membership verdicts and the Julia class of c = a + j*b as JSON.
    Classify(ParamArgs),
    /// Print the orbit of a point as CSV lines: step, x, y, X, Y.
    Orbit(OrbitArgs),
    /// Run the built-in consistency checks and report pass/fail per check.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GridArgs {
    /// Window in the (x, y) plane.
    #[arg(
        long,
        num_args = 4,
        value_names = ["XMIN", "XMAX", "YMIN", "YMAX"],
        allow_negative_numbers = true,
        default_values_t = [-2.5, 2.5, -2.5, 2.5]
    )]
    region: Vec<f64>,

    /// Grid dimensions in pixels.
    #[arg(long, num_args = 2, value_names = ["WIDTH", "HEIGHT"], default_values_t = [512u32, 512])]
    size: Vec<u32>,

    /// Iteration budget for the iterative mode.
    #[arg(long, default_value_t = 1000)]
    depth: u32,

    /// Sampling mode.
    #[arg(long, value_enum, default_value_t = ModeArg::Iterative)]
    mode: ModeArg,

    /// Output file (required; format ppm and csv both write to disk).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Ppm)]
    format: FormatArg,
}

#[derive(Args)]
struct MandelbrotArgs {
    #[command(flatten)]
    grid: GridArgs,

    /// Boundedness variant.
    #[arg(long, value_enum, default_value_t = VariantArg::Component)]
    variant: VariantArg,
}

#[derive(Args)]
struct JuliaArgs {
    #[command(flatten)]
    grid: GridArgs,

    /// Real part of c.
    #[arg(long, allow_negative_numbers = true)]
    a: f64,

    /// Hyperbolic part of c.
    #[arg(long, allow_negative_numbers = true)]
    b: f64,
}

#[derive(Args)]
struct ParamArgs {
    /// Real part of c.
    #[arg(long, allow_negative_numbers = true)]
    a: f64,

    /// Hyperbolic part of c.
    #[arg(long, allow_negative_numbers = true)]
    b: f64,
}

#[derive(Args)]
struct OrbitArgs {
    /// Real part of the starting point.
    #[arg(long, allow_negative_numbers = true)]
    x: f64,

    /// Hyperbolic part of the starting point.
    #[arg(long, allow_negative_numbers = true)]
    y: f64,

    /// Real part of c.
    #[arg(long, allow_negative_numbers = true)]
    a: f64,

    /// Hyperbolic part of c.
    #[arg(long, allow_negative_numbers = true)]
    b: f64,

    /// Number of iterations; prints n + 1 lines including the start.
    #[arg(long)]
    n: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// Iteration budget for the agreement and determinism checks.
    #[arg(long, default_value_t = 1000)]
    depth: u32,

    /// Grid dimensions for the rendered checks.
    #[arg(long, num_args = 2, value_names = ["WIDTH", "HEIGHT"], default_values_t = [512u32, 512])]
    size: Vec<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Component,
    Modulus,
}

impl From<VariantArg> for BoundednessVariant {
    fn from(v: VariantArg) -> BoundednessVariant {
        match v {
            VariantArg::Component => BoundednessVariant::Component,
            VariantArg::Modulus => BoundednessVariant::Modulus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Iterative,
    Analytic,
}

impl From<ModeArg> for SampleMode {
    fn from(m: ModeArg) -> SampleMode {
        match m {
            ModeArg::Iterative => SampleMode::Iterative,
            ModeArg::Analytic => SampleMode::Analytic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Ppm,
    Csv,
    Json,
}

enum Failure {
    /// Invalid flags or flag combinations; exit 2.
    Usage(String),
    /// I/O or check failure after validation; exit 1.
    Runtime(String),
}

type CmdResult = Result<(), Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Mandelbrot(args) => cmd_mandelbrot(&args),
        Command::Julia(args) => cmd_julia(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Orbit(args) => cmd_orbit(&args),
        Command::Verify(args) => cmd_verify(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Validate the shared grid flags and resolve the output target.
fn grid_setup(args: &GridArgs) -> Result<(Region, u32, u32, PathBuf), Failure> {
    if args.format == FormatArg::Json {
        return usage("--format json applies to the classify command; use ppm or csv");
    }
    let out = match &args.out {
        Some(path) => path.clone(),
        None => return usage("--out is required when rendering to ppm or csv"),
    };
    let region = Region::new(args.region[0], args.region[1], args.region[2], args.region[3])
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let (width, height) = (args.size[0], args.size[1]);
    if width == 0 || height == 0 {
        return usage("--size dimensions must be positive");
    }
    Ok((region, width, height, out))
}

fn write_grid(grid: &EscapeGrid, format: FormatArg, out: &Path) -> CmdResult {
    match format {
        FormatArg::Ppm => render::write_ppm(grid, &Colormap::default(), out),
        FormatArg::Csv => render::write_csv(grid, out),
        FormatArg::Json => unreachable!("rejected during validation"),
    }
    .map_err(|e| Failure::Runtime(e.to_string()))
}

fn cmd_mandelbrot(args: &MandelbrotArgs) -> CmdResult {
    let (region, width, height, out) = grid_setup(&args.grid)?;
    let variant = BoundednessVariant::from(args.variant);
    let grid = render::render_mandelbrot(
        region,
        width,
        height,
        args.grid.depth,
        variant,
        args.grid.mode.into(),
    )
    .map_err(|e| Failure::Usage(e.to_string()))?;
    write_grid(&grid, args.grid.format, &out)?;
    println!(
        "bounded_fraction={} depth={} variant={variant}",
        grid.bounded_fraction(),
        args.grid.depth
    );
    Ok(())
}

fn cmd_julia(args: &JuliaArgs) -> CmdResult {
    let (region, width, height, out) = grid_setup(&args.grid)?;
    let c = HyperParam::new(args.a, args.b).map_err(|e| Failure::Usage(e.to_string()))?;
    let grid = render::render_julia(c, region, width, height, args.grid.depth, args.grid.mode.into())
        .map_err(|e| Failure::Usage(e.to_string()))?;
    write_grid(&grid, args.grid.format, &out)?;
    let class = dynamics::classify_julia(c);
    let mut summary = format!(
        "bounded_fraction={} depth={} variant={} class={class}",
        grid.bounded_fraction(),
        args.grid.depth,
        BoundednessVariant::Component
    );
    match class {
        JuliaClass::ConnectedRectangle { half_u, half_v } => {
            summary.push_str(&format!(" half_u={half_u} half_v={half_v}"));
        }
        JuliaClass::DisconnectedMixed { connected } => {
            summary.push_str(&format!(" connected_axis={connected}"));
        }
        JuliaClass::CantorDust | JuliaClass::Empty => {}
    }
    println!("{summary}");
    Ok(())
}

#[derive(Serialize)]
struct ClassifyOutput {
    a: f64,
    b: f64,
    c1: f64,
    c2: f64,
    in_mandelbrot_component: bool,
    in_mandelbrot_modulus: bool,
    julia_class: String,
    half_widths: Option<[f64; 2]>,
}

fn cmd_classify(args: &ParamArgs) -> CmdResult {
    let c = HyperParam::new(args.a, args.b).map_err(|e| Failure::Usage(e.to_string()))?;
    let class = dynamics::classify_julia(c);
    let half_widths = match class {
        JuliaClass::ConnectedRectangle { half_u, half_v } => Some([half_u, half_v]),
        _ => None,
    };
    let output = ClassifyOutput {
        a: args.a,
        b: args.b,
        c1: c.c1(),
        c2: c.c2(),
        in_mandelbrot_component: dynamics::mandelbrot_analytic(c, BoundednessVariant::Component),
        in_mandelbrot_modulus: dynamics::mandelbrot_analytic(c, BoundednessVariant::Modulus),
        julia_class: class.to_string(),
        half_widths,
    };
    println!(
        "{}",
        serde_json::to_string(&output).expect("finite floats serialize")
    );
    Ok(())
}

fn cmd_orbit(args: &OrbitArgs) -> CmdResult {
    let start = Hyper::new(args.x, args.y).map_err(|e| Failure::Usage(e.to_string()))?;
    let c = HyperParam::new(args.a, args.b).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut z = start;
    for step in 0..=args.n {
        let cc = z.to_characteristic();
        println!("{step},{},{},{},{}", z.x(), z.y(), cc.u, cc.v);
        if step < args.n {
            z = dynamics::step(z, c);
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let (width, height) = (args.size[0], args.size[1]);
    if width == 0 || height == 0 {
        return usage("--size dimensions must be positive");
    }
    let config = verify::Config {
        depth: args.depth,
        width,
        height,
    };
    let failed = verify::run(&config);
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Runtime(format!("{failed} check(s) failed")))
    }
}
