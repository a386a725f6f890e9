//! `twopath` command-line front end.
//!
//! Exit codes: 0 success, 1 validation or I/O error, 2 oracle failure.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twopath_core::config::{self, PRESET_NAMES};
use twopath_core::emit::{self, PlotKind};
use twopath_core::verify::{self, DEFAULT_TOLERANCE};
use twopath_core::{series, Error, Grid, SetupConfig};

#[derive(Parser)]
#[command(name = "twopath", version, about = "Unified two-path interferometry toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample the pattern and write a CSV table (stdout by default) and optional SVG plot.
    Profile {
        #[command(flatten)]
        setup: SetupArgs,
        #[arg(long, env = "TWOPATH_OUT_CSV")]
        out_csv: Option<PathBuf>,
        #[arg(long, env = "TWOPATH_OUT_SVG")]
        out_svg: Option<PathBuf>,
        /// Which figure to draw into the SVG.
        #[arg(long, value_enum, default_value_t = Plot::Fringes, env = "TWOPATH_PLOT")]
        plot: Plot,
    },
    /// Print the duality summary as JSON.
    Report {
        #[command(flatten)]
        setup: SetupArgs,
    },
    /// Run the independent oracles and print their results as JSON.
    Verify {
        #[command(flatten)]
        setup: SetupArgs,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE, env = "TWOPATH_TOLERANCE")]
        tolerance: f64,
    },
    /// List the built-in presets.
    Presets,
}

#[derive(Args)]
struct SetupArgs {
    /// JSON configuration file.
    #[arg(long, env = "TWOPATH_CONFIG", conflicts_with = "preset", required_unless_present = "preset")]
    config: Option<PathBuf>,
    /// Named preset (see `twopath presets`).
    #[arg(long, env = "TWOPATH_PRESET")]
    preset: Option<String>,
    /// Sampling grid `min:max:points` in the set-up's native abscissa
    /// (metres, time, or scattering angle in radians).
    #[arg(long, env = "TWOPATH_GRID", allow_hyphen_values = true)]
    grid: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Plot {
    Fringes,
    Duality,
}

enum Failure {
    ClosedPipe,
    Invalid(String),
    Oracle(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvergent { .. } => Failure::Oracle(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::ClosedPipe;
        }
        Failure::Invalid(e.to_string())
    }
}

fn load(args: &SetupArgs) -> Result<SetupConfig, Failure> {
    let mut cfg = match (&args.config, &args.preset) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
            config::parse_config(&text)?
        }
        (None, Some(name)) => SetupConfig::from_preset(name)?,
        (None, None) => return Err(Failure::Invalid("either --config or --preset is required".into())),
    };
    if let Some(spec) = &args.grid {
        cfg.grid = Some(Grid::parse(spec)?);
        cfg.validate()?;
    }
    Ok(cfg)
}

fn write_file(path: &PathBuf, contents: &[u8]) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    match cli.command {
        Command::Profile {
            setup,
            out_csv,
            out_svg,
            plot,
        } => {
            let cfg = load(&setup)?;
            let pattern = series::profile(&cfg)?;
            let csv = emit::csv_string(&pattern);
            match &out_csv {
                Some(path) => write_file(path, csv.as_bytes())?,
                None => stdout.lock().write_all(csv.as_bytes())?,
            }
            if let Some(path) = &out_svg {
                let kind = match plot {
                    Plot::Fringes => PlotKind::Fringes,
                    Plot::Duality => PlotKind::Duality,
                };
                write_file(path, emit::render_svg(&pattern, kind).as_bytes())?;
            }
        }
        Command::Report { setup } => {
            let cfg = load(&setup)?;
            writeln!(stdout.lock(), "{}", emit::to_json(&series::report(&cfg)?))?;
        }
        Command::Verify { setup, tolerance } => {
            let cfg = load(&setup)?;
            let outcome = verify::verify(&cfg, tolerance)?;
            writeln!(stdout.lock(), "{}", emit::to_json(&outcome))?;
            if !outcome.passed {
                return Err(Failure::Oracle("one or more oracle checks failed".into()));
            }
        }
        Command::Presets => {
            let mut out = stdout.lock();
            for name in PRESET_NAMES {
                let kind = config::preset(name).map(|p| p.kind().to_string()).unwrap_or_default();
                writeln!(out, "{name}\t{kind}")?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) | Err(Failure::ClosedPipe) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Oracle(msg)) => {
            eprintln!("oracle failure: {msg}");
            ExitCode::from(2)
        }
    }
}
