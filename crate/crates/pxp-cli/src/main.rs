use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pxp::search::Filter;
use pxp_cli::commands::{self, CliError, OutputFormat, Session};
use pxp_cli::fixtures::FixtureSet;

#[derive(Parser)]
#[command(name = "pxp", version, about = "Calabi-Yau 3-folds in weighted P2xP2 format")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: OutputFormat,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    None,
    IsolatedOrbifold,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate candidates and group them by Hilbert series.
    Search {
        #[arg(long)]
        max_weight_sum: u32,
        #[arg(long, value_enum, default_value = "isolated-orbifold")]
        filter: FilterArg,
        /// Compare against the fixture rows.
        #[arg(long)]
        check_fixtures: bool,
        /// Also write the JSON result here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Numerical data of one candidate: a fixture row number, a candidate
    /// JSON file, or `a11;r2,r3;c2,c3;cones;ci`.
    Analyze { candidate: String },
    /// Gorenstein projection from an orbifold point of index K.
    Project {
        candidate: String,
        #[arg(long)]
        center: Option<u32>,
    },
    /// Node counts, classes and Euler numbers of the Tom/Jerry formats.
    Tomjerry {
        candidate: String,
        #[arg(long)]
        center: Option<u32>,
        /// Euler number of Y, or of a known family when --ref-nodes is given.
        #[arg(long, allow_hyphen_values = true)]
        euler_ref: Option<i64>,
        #[arg(long)]
        ref_nodes: Option<u64>,
    },
    /// Summary table of all fixture rows.
    Report,
    /// Hilbert series coefficients of a weighted P2xP2 by direct counting.
    Oracle {
        /// `a11;r2,r3;c2,c3`
        weights: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fixtures = match FixtureSet::load() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(commands::EXIT_USAGE as u8);
        }
    };
    let session = Session::new(fixtures);
    let fmt = cli.format;
    let result = match &cli.cmd {
        Cmd::Search {
            max_weight_sum,
            filter,
            check_fixtures,
            out,
        } => {
            let filter = match filter {
                FilterArg::None => Filter::None,
                FilterArg::IsolatedOrbifold => Filter::IsolatedOrbifold,
            };
            commands::run_search(&session, *max_weight_sum, filter, *check_fixtures, out.as_deref(), fmt)
        }
        Cmd::Analyze { candidate } => commands::run_analyze(&session, candidate, fmt),
        Cmd::Project { candidate, center } => commands::run_project(&session, candidate, *center, fmt),
        Cmd::Tomjerry {
            candidate,
            center,
            euler_ref,
            ref_nodes,
        } => commands::run_tomjerry(&session, candidate, *center, *euler_ref, *ref_nodes, fmt),
        Cmd::Report => commands::run_report(&session, fmt),
        Cmd::Oracle { weights, order } => commands::run_oracle(weights, *order, fmt),
    };
    match result {
        Ok(o) => {
            print!("{}", o.stdout);
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(CliError::code(&e) as u8)
        }
    }
}
