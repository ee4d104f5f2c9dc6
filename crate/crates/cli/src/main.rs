use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use zigzag_cli::{run, Cli, CliError, RunConfig};

fn main() -> ExitCode {
    let config = match RunConfig::from_cli(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let report = match run(&config) {
        Ok(r) => r,
        Err(e @ CliError::Usage(_)) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let written = match &config.output_path {
        Some(path) => std::fs::write(path, &report.output),
        None => std::io::stdout().write_all(report.output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    if report.violations > 0 {
        eprintln!("{} identity violation(s)", report.violations);
    }
    ExitCode::from(report.exit_code() as u8)
}
