use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tri_inscribe::rotation::SweepConfig;
use tri_inscribe::Polygon;
use tri_inscribe_cli::bench::{generate_polygon, BenchPlan, Fixture, Suite};
use tri_inscribe_cli::{
    format_polygon, read_vertices, render_svg, run_solver_on_input, CliError, JsonReport, SolveRequest, VariantName,
};

#[derive(Parser)]
#[command(name = "inscribe-tri", version, about = "Largest triangles with prescribed angles inside polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one variant on a polygon file.
    Solve(SolveArgs),
    /// Time solvers on generated polygons; CSV on stdout.
    Bench(BenchArgs),
    /// Write a generated polygon in the input file format.
    Gen(GenArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, value_enum, default_value = "arc-cluster")]
    fixture: Fixture,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    variant: VariantName,
    /// Angle at p.
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    /// Angle at q; (α,β) variants only.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// Approximation parameter; FPTAS variants only.
    #[arg(long)]
    eps: Option<f64>,
    /// Read --alpha, --beta and --orientation in degrees.
    #[arg(long)]
    degrees: bool,
    /// Base inclination for convex-ab-fixed.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    orientation: f64,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    json_out: Option<PathBuf>,
    #[arg(long)]
    svg_out: Option<PathBuf>,
    /// Orientation samples for sampled variants.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    refine_iters: Option<usize>,
    /// Radians, regardless of --degrees.
    #[arg(long)]
    refine_tol: Option<f64>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Fixture family for the fixtures suite.
    #[arg(long, value_enum, default_value = "arc-cluster")]
    fixture: Fixture,
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    seeds: Vec<u64>,
    #[arg(long, value_enum, value_delimiter = ',')]
    variants: Vec<VariantName>,
    /// Degrees.
    #[arg(long, default_value_t = 60.0)]
    alpha: f64,
    /// Degrees.
    #[arg(long, default_value_t = 60.0)]
    beta: f64,
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("INSCRIBE_TRI_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Validation(format!("INSCRIBE_TRI_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Io(e.to_string()))
}

fn write_out(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn solve(a: SolveArgs) -> Result<(), CliError> {
    let unit = |x: f64| if a.degrees { x.to_radians() } else { x };
    let sweep = if a.samples.is_some() || a.refine_iters.is_some() || a.refine_tol.is_some() {
        let d = SweepConfig::default();
        let cfg = SweepConfig {
            samples: a.samples.unwrap_or(d.samples),
            refine_iters: a.refine_iters.unwrap_or(d.refine_iters),
            refine_tol: a.refine_tol.unwrap_or(d.refine_tol),
        };
        cfg.validate()?;
        Some(cfg)
    } else {
        None
    };
    let req = SolveRequest {
        variant: a.variant,
        alpha: unit(a.alpha),
        beta: a.beta.map(unit),
        eps: a.eps,
        orientation: unit(a.orientation),
        sweep,
    };
    req.validate()?;
    let text = std::fs::read_to_string(&a.input)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", a.input.display())))?;
    let input = read_vertices(&text)?;
    let poly = Polygon::new(input.clone())?;
    let report = run_solver_on_input(&input, &poly, &req)?;
    let json = JsonReport::new(&req, &report);
    let text = serde_json::to_string_pretty(&json).map_err(|e| CliError::Io(e.to_string()))?;
    match &a.json_out {
        Some(path) => write_out(path, &text)?,
        None => println!("{text}"),
    }
    if let Some(path) = &a.svg_out {
        write_out(path, &render_svg(&poly, &json))?;
    }
    Ok(())
}

fn bench(a: BenchArgs) -> Result<(), CliError> {
    let plan = BenchPlan {
        suite: a.suite,
        fixture: a.fixture,
        sizes: a.sizes,
        seeds: a.seeds,
        variants: a.variants,
        alpha: a.alpha.to_radians(),
        beta: a.beta.to_radians(),
        eps: a.eps,
    };
    plan.write_csv(std::io::stdout().lock())
}

fn generate(a: GenArgs) -> Result<(), CliError> {
    let min = if a.suite == Suite::Fixtures { 2 } else { 3 };
    if a.n < min {
        return Err(CliError::Validation(format!("--n must be at least {min}")));
    }
    print!("{}", format_polygon(&generate_polygon(a.suite, a.fixture, a.n, a.seed)));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Solve(a) => solve(a),
        Command::Bench(a) => bench(a),
        Command::Gen(a) => generate(a),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
