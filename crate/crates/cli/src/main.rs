use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pstat::commands::{self, CliError, Direction, Family, Format, Route};
use pstat::verify::Suite;
use pstat_core::Limits;

/// Crossings, nestings and alignments of set partitions.
#[derive(Parser)]
#[command(name = "pstat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Type, statistics and per-endpoint table of a partition.
    Stats { partition: String },
    /// Apply the crossing/nesting involution.
    Involute {
        partition: String,
        /// Also verify the involution and the statistic exchange.
        #[arg(long)]
        check: bool,
    },
    /// Encode a partition as Charlier diagrams or decode a diagram.
    Charlier {
        #[arg(value_enum)]
        direction: Direction,
        input: String,
    },
    /// Print a generating polynomial.
    Poly {
        #[arg(value_enum)]
        family: Family,
        n: usize,
        #[arg(long, value_enum, default_value_t = Route::Cf)]
        route: Route,
    },
    /// Run an exhaustive identity check for every n up to n-max.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(value_name = "N_MAX")]
        n_max_pos: Option<usize>,
        #[arg(long = "n-max", conflicts_with = "n_max_pos")]
        n_max: Option<usize>,
    },
    /// Draw the arc diagram, or a trace of it, as SVG.
    Render {
        partition: String,
        #[arg(long)]
        traces: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let limits = Limits::from_env();
    match cli.command {
        Command::Stats { partition } => commands::stats(&partition, cli.format),
        Command::Involute { partition, check } => commands::involute(&partition, check, cli.format),
        Command::Charlier { direction, input } => commands::charlier(direction, &input, cli.format),
        Command::Poly { family, n, route } => commands::poly(family, n, route, cli.format, limits),
        Command::Verify { suite, n_max_pos, n_max } => {
            let n_max = n_max.or(n_max_pos).unwrap_or(8);
            commands::verify(suite, n_max, cli.format, limits)
        }
        Command::Render { partition, traces } => match cli.format {
            Format::Text | Format::Svg => commands::render(&partition, traces),
            Format::Json => Err(CliError::Usage("`render` only produces svg".into())),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            match &e {
                CliError::Usage(msg) => eprintln!("pstat: {msg}"),
                CliError::Violation(report) => {
                    print!("{report}");
                    if !report.ends_with('\n') {
                        println!();
                    }
                    eprintln!("pstat: identity violated");
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
