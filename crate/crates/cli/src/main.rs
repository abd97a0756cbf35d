use std::io::{self, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use harmap_core::{DiskGrid, Error, HarmonicMap};

mod commands;
mod input;
mod report;

use commands::Ctx;
use report::Report;

#[derive(Debug)]
pub enum Failure {
    /// Unreadable or malformed input; exit code 2.
    Input(String),
    /// Out-of-range parameter; exit code 3.
    Parameter(String),
    /// Mapping outside the class a theorem needs; exit code 3.
    Hypothesis(String),
    /// Numerical failure; exit code 1.
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Input(e.to_string()),
            Error::Domain(m) | Error::Precondition(m) => Failure::Parameter(m),
            Error::Hypothesis(m) => Failure::Hypothesis(m),
            Error::NoConvergence { .. } => Failure::Numeric(e.to_string()),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Numeric(_) => 1,
            Failure::Input(_) => 2,
            Failure::Parameter(_) | Failure::Hypothesis(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) => format!("input error: {m}"),
            Failure::Parameter(m) => format!("parameter error: {m}"),
            Failure::Hypothesis(m) => format!("hypothesis not satisfied: {m}"),
            Failure::Numeric(m) => format!("numerical failure: {m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GridPreset {
    /// 32 x 128
    Fast,
    /// 64 x 256
    Default,
    /// 128 x 1024
    Precise,
}

impl GridPreset {
    fn grid(self) -> DiskGrid {
        match self {
            GridPreset::Fast => DiskGrid::FAST,
            GridPreset::Default => DiskGrid::DEFAULT,
            GridPreset::Precise => DiskGrid::PRECISE,
        }
    }

    fn name(self) -> &'static str {
        match self {
            GridPreset::Fast => "fast",
            GridPreset::Default => "default",
            GridPreset::Precise => "precise",
        }
    }
}

/// Numerical checks for harmonic mappings of the unit disk.
#[derive(Debug, Parser)]
#[command(name = "harmap", version)]
struct Cli {
    /// Sampling grid for sup/inf searches.
    #[arg(long, global = true, value_enum, default_value_t = GridPreset::Default)]
    grid: GridPreset,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = harmap_core::sampling::DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for grid evaluation.
    #[arg(long, global = true, env = "HARMAP_THREADS")]
    threads: Option<NonZeroUsize>,
    /// Emit CSV blocks instead of text.
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Class constants, Bloch norm by both routes and coefficient bounds.
    Analyze {
        file: PathBuf,
        /// Radius for the area and dilatation constants.
        #[arg(long, default_value_t = 1.0)]
        r: f64,
    },
    /// Landau radii, and univalence and covering checks when a file is given.
    #[command(allow_negative_numbers = true)]
    Landau {
        #[arg(long = "C")]
        c: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        file: Option<PathBuf>,
    },
    /// Table of coefficient bounds.
    #[command(allow_negative_numbers = true)]
    Bounds {
        #[arg(long = "C")]
        c: f64,
        #[arg(long = "K")]
        k: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
    /// Bloch norm and BMO norms of boundary traces.
    Norms {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = [0.5])]
        r: Vec<f64>,
    },
    /// BMO norm of one trace against the majorant bound.
    Bmo {
        file: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        r: f64,
        /// Exponent beta of omega(t) = t^beta.
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
    },
    /// Convexity of circle images and the sandwich inequalities.
    Convex {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = [0.25, 0.5, 0.75, 0.9])]
        r: Vec<f64>,
        #[arg(long, default_value_t = 4096)]
        n_boundary: usize,
    },
    /// Lipschitz estimates and the interior gradient chain.
    Lipschitz {
        file: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        r: f64,
        /// Exponent beta of omega(t) = t^beta.
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
    },
    /// Every analysis on each file, or on built-in maps when none is given.
    VerifyAll { files: Vec<PathBuf> },
}

fn builtin_maps() -> Vec<HarmonicMap> {
    vec![
        HarmonicMap::identity(),
        HarmonicMap::from_real(&[0.0, 1.0], &[0.0, 0.0, 0.1], "z + conj(z)^2/10"),
        HarmonicMap::extremal(),
    ]
}

fn with_file<F>(path: &Path, head: &mut Report, f: F) -> Result<Report, Failure>
where
    F: FnOnce(&input::Input) -> Result<Report, Failure>,
{
    let inp = input::load(path)?;
    head.meta("input", path.display().to_string());
    head.meta("sha256", inp.digest.clone());
    head.meta("label", inp.spec.label.clone());
    f(&inp)
}

/// Runs one step of `verify-all`, turning hypothesis and parameter failures
/// into skipped entries.
fn step(all: &mut Report, prefix: &str, result: Result<Report, Failure>) -> Result<(), Failure> {
    match result {
        Ok(rep) => all.absorb(prefix, rep),
        Err(e @ (Failure::Hypothesis(_) | Failure::Parameter(_))) => all.skip(prefix, e.message()),
        Err(e) => return Err(e),
    }
    Ok(())
}

fn verify_map(ctx: &Ctx, all: &mut Report, tag: &str, map: &HarmonicMap, expected: Option<harmap_core::mapfile::Expected>) -> Result<(), Failure> {
    step(all, &format!("{tag}/analyze"), commands::analyze(ctx, map, 1.0, expected))?;
    step(all, &format!("{tag}/landau"), commands::landau(ctx, None, None, Some(map)))?;
    step(all, &format!("{tag}/norms"), commands::norms(ctx, map, &[0.5]))?;
    step(all, &format!("{tag}/bmo"), commands::bmo(ctx, map, 0.5, 1.0))?;
    step(all, &format!("{tag}/convex"), commands::convex(ctx, map, &[0.25, 0.5, 0.75, 0.9], 4096, false))?;
    step(all, &format!("{tag}/lipschitz"), commands::lipschitz(ctx, map, 0.5, 1.0))
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let ctx = Ctx {
        grid: cli.grid.grid(),
        seed: cli.seed,
    };
    let mut header = Report::default();
    let echo: Vec<String> = std::iter::once("harmap".to_string()).chain(std::env::args().skip(1)).collect();
    header.meta("command", echo.join(" "));
    header.meta("seed", cli.seed);
    header.meta(
        "grid",
        format!("{} ({}x{})", cli.grid.name(), ctx.grid.n_radial, ctx.grid.n_angular),
    );
    let mut rep = match &cli.command {
        Command::Analyze { file, r } => with_file(file, &mut header, |i| {
            commands::analyze(&ctx, &i.map, *r, i.spec.expected)
        })?,
        Command::Landau { c, alpha, file } => match file {
            Some(path) => with_file(path, &mut header, |i| commands::landau(&ctx, *c, *alpha, Some(&i.map)))?,
            None => commands::landau(&ctx, *c, *alpha, None)?,
        },
        Command::Bounds { c, k, alpha, n_max } => commands::bounds(*c, *k, *alpha, *n_max)?,
        Command::Norms { file, r } => with_file(file, &mut header, |i| commands::norms(&ctx, &i.map, r))?,
        Command::Bmo { file, r, omega } => with_file(file, &mut header, |i| commands::bmo(&ctx, &i.map, *r, *omega))?,
        Command::Convex { file, r, n_boundary } => with_file(file, &mut header, |i| {
            commands::convex(&ctx, &i.map, r, *n_boundary, true)
        })?,
        Command::Lipschitz { file, r, omega } => with_file(file, &mut header, |i| {
            commands::lipschitz(&ctx, &i.map, *r, *omega)
        })?,
        Command::VerifyAll { files } => {
            let mut all = Report::default();
            if files.is_empty() {
                for map in builtin_maps() {
                    verify_map(&ctx, &mut all, map.label(), &map, None)?;
                }
            } else {
                for path in files {
                    let inp = input::load(path)?;
                    header.meta(&format!("sha256 {}", path.display()), inp.digest.clone());
                    verify_map(&ctx, &mut all, &inp.spec.label, &inp.map, inp.spec.expected)?;
                }
            }
            all
        }
    };
    header.header.append(&mut rep.header);
    rep.header = header.header;
    Ok(rep)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.get()).build_global() {
            eprintln!("harmap: could not configure {n} threads: {e}");
            return ExitCode::from(3);
        }
    }
    let start = Instant::now();
    let result = run(&cli);
    let elapsed = start.elapsed().as_secs_f64();
    match result {
        Ok(rep) => {
            let mut out = io::stdout().lock();
            let written = if cli.csv { rep.write_csv(&mut out) } else { rep.write_text(&mut out) };
            if let Err(e) = written.and_then(|_| out.flush()) {
                eprintln!("harmap: {e}");
                return ExitCode::from(1);
            }
            eprintln!("harmap: finished in {elapsed:.3} s");
            ExitCode::from(u8::from(rep.failed()))
        }
        Err(f) => {
            eprintln!("harmap: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
