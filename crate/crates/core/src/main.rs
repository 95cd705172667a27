use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use partition_bounds::cli::{self, Counter, Format, UsageError};

/// Exact counts around the number of graphical partitions.
#[derive(Debug, Parser)]
#[command(name = "partition-bounds", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print n, f'(n), g(n), f(n), p(n) for n = step, 2*step, ... <= max-n.
    Bounds {
        #[arg(long, default_value_t = 40)]
        max_n: u32,
        #[arg(long, default_value_t = 2)]
        step: u32,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Inspect one partition given as comma-separated parts.
    Check {
        #[arg(allow_hyphen_values = true)]
        parts: String,
    },
    /// Print a single count.
    Count {
        #[arg(value_enum)]
        which: Counter,
        n: u32,
        #[arg(long)]
        modulus: Option<u32>,
        #[arg(long)]
        residue: Option<u32>,
    },
    /// Print the edges of a simple graph realizing the degree sequence.
    Witness {
        #[arg(allow_hyphen_values = true)]
        parts: String,
    },
}

fn run(command: Command) -> Result<(String, u8), UsageError> {
    match command {
        Command::Bounds {
            max_n,
            step,
            format,
        } => {
            let rows = cli::bounds_rows(max_n, step)?;
            Ok((cli::render_table(&rows, format), cli::EXIT_OK))
        }
        Command::Check { parts } => Ok(cli::check_report(&cli::parse_parts(&parts)?)),
        Command::Count {
            which,
            n,
            modulus,
            residue,
        } => {
            let count = cli::run_count(which, n, modulus, residue)?;
            Ok((format!("{count}\n"), cli::EXIT_OK))
        }
        Command::Witness { parts } => Ok(cli::witness_report(&cli::parse_parts(&parts)?)),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(cli::EXIT_USAGE);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::EXIT_USAGE)
        }
    }
}
