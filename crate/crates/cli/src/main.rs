use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qcorr::MeasurementOrder;
use qcorr_cli::{parse_state_file, run_report, write_fixtures, CliError, Format};

/// Correlation report for a bipartite state under local projective measurements.
#[derive(Parser)]
#[command(name = "qcorr", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    AFirst,
    BFirst,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a JSON state file.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Which party measures first.
        #[arg(long, value_enum, default_value_t = Order::AFirst)]
        order: Order,
    },
    /// Write the qubit and qutrit reference states as JSON files.
    Fixtures {
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Weight of |00> in the qubit state.
        #[arg(long, default_value_t = 0.3)]
        alpha: f64,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze {
            file,
            format,
            order,
        } => {
            let order = match order {
                Order::AFirst => MeasurementOrder::AFirst,
                Order::BFirst => MeasurementOrder::BFirst,
            };
            let spec = parse_state_file(&file)?;
            let mut report = run_report(&spec, format, order)?;
            if !report.ends_with('\n') {
                report.push('\n');
            }
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(report.as_bytes());
        }
        Command::Fixtures { out_dir, alpha } => {
            for path in write_fixtures(&out_dir, alpha)? {
                eprintln!("wrote {}", path.display());
            }
        }
    }
    Ok(())
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
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
