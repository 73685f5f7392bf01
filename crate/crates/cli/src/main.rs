//! `coboson`: composite-boson statistics from the command line.
//!
//! Every subcommand writes CSV with a header row. Exit status: 0 success,
//! 1 usage, 2 numeric-domain error, 3 validation failure.

mod commands;
mod dist;
mod failure;
mod gnuplot;
mod table;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dist::DistSpec;
use crate::failure::Failure;

#[derive(Debug, Parser)]
#[command(
    name = "coboson",
    version,
    about = "Composite-boson beam-splitter statistics"
)]
struct Cli {
    /// Write CSV here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normalization factors chi_N and ratios chi_{N+1}/chi_N.
    Chi {
        #[arg(long)]
        dist: DistSpec,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
    },
    /// Commutator expectation, its deviation from one and the orthogonal-remainder norm.
    Ladder {
        #[arg(long)]
        dist: DistSpec,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
    },
    /// One balanced beam-splitter acting on |N, 0>.
    Split {
        #[arg(long)]
        dist: DistSpec,
        #[arg(long)]
        n: usize,
        /// 1-based modes occupied in the first output; adds p_bif on the matching row.
        #[arg(long, value_delimiter = ',')]
        sites: Option<Vec<usize>>,
    },
    /// Interference of |N1, N2> at a balanced beam-splitter.
    Interfere {
        #[arg(long)]
        dist: DistSpec,
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        /// Emit the fermion/boson superposition weights instead.
        #[arg(long)]
        weights: bool,
    },
    /// The double beam-splitter on |N, 0, 1>.
    Cascade {
        #[arg(long)]
        dist: DistSpec,
        #[arg(long)]
        n: usize,
        /// Condition on M bifermions in the first output.
        #[arg(long)]
        postselect: Option<usize>,
        /// Add the widely quoted (1 + 3r)/4 next to the bunching outcomes.
        #[arg(long)]
        show_published_values: bool,
    },
    /// Purity sweeps behind figures 3 to 6.
    Figure(FigureArgs),
    /// Analytic formulas against the exact hardcore-boson simulator.
    OracleValidate {
        /// Validate one distribution instead of the built-in matrix.
        #[arg(long)]
        dist: Option<DistSpec>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "3")]
    Three,
    #[value(name = "4")]
    Four,
    #[value(name = "5")]
    Five,
    #[value(name = "6")]
    Six,
}

#[derive(Debug, Args)]
struct FigureArgs {
    which: Which,
    /// Particle number(s); defaults are 6, 2, 4 and 2,6,50,1000.
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    #[arg(long, default_value_t = 100)]
    points: usize,
    #[arg(long)]
    p_start: Option<f64>,
    #[arg(long)]
    p_stop: Option<f64>,
    /// Logarithmic purity spacing (start defaults to 1e-12).
    #[arg(long)]
    log: bool,
    /// Also write a gnuplot script reading the CSV.
    #[arg(long)]
    gnuplot: Option<PathBuf>,
    #[arg(long)]
    show_published_values: bool,
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("COBOSON_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            Failure::Usage(format!(
                "COBOSON_THREADS must be a positive integer, got '{value}'"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn emit(bytes: &[u8], output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, bytes)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    let output = cli.output.as_ref();
    let outcome = match cli.command {
        Command::Chi { dist, nmax } => commands::chi(&dist, nmax)?,
        Command::Ladder { dist, nmax } => commands::ladder(&dist, nmax)?,
        Command::Split { dist, n, sites } => commands::split(&dist, n, sites.as_deref())?,
        Command::Interfere {
            dist,
            n1,
            n2,
            weights,
        } => commands::interfere(&dist, n1, n2, weights)?,
        Command::Cascade {
            dist,
            n,
            postselect,
            show_published_values,
        } => commands::cascade(&dist, n, postselect, show_published_values)?,
        Command::Figure(args) => commands::figure(&args, output)?,
        Command::OracleValidate { dist } => commands::oracle_validate(dist.as_ref())?,
    };
    emit(&outcome.table.render()?, output)?;
    for note in &outcome.notes {
        eprintln!("{note}");
    }
    match outcome.failure {
        Some(f) => Err(f),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("coboson: {f}");
            f.exit_code()
        }
    }
}
