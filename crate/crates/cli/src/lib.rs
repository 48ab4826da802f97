//! Command-line front end for `bwma-core`: relation suites, negativity
//! sweeps, topological basis reports and the singlet check.

pub mod args;
pub mod commands;
pub mod error;
pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::Parser;

pub use args::{Cli, Command};
pub use commands::Outcome;
pub use error::CliError;

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Verify(a) => commands::verify(a),
        Command::ExactVerify(a) => commands::exact_verify(a),
        Command::Negativity(a) => commands::negativity(a),
        Command::Basis(a) => {
            json_only("basis", a.format)?;
            commands::basis(a)
        }
        Command::Singlet(a) => {
            json_only("singlet", a.format)?;
            commands::singlet(a)
        }
    }
}

fn json_only(command: &str, format: Option<args::Format>) -> Result<(), CliError> {
    match format {
        Some(args::Format::Csv) => Err(CliError::Usage(format!(
            "{command} only supports --format json"
        ))),
        _ => Ok(()),
    }
}

fn output_path(cli: &Cli) -> Option<&Path> {
    match &cli.command {
        Command::Verify(a) => a.out.output.as_deref(),
        Command::ExactVerify(a) => a.output.as_deref(),
        Command::Negativity(a) => a.out.output.as_deref(),
        Command::Basis(a) => a.out.output.as_deref(),
        Command::Singlet(a) => a.out.output.as_deref(),
    }
}

fn emit(body: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, body).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

/// Parses arguments, runs the command and returns the process exit code:
/// 0 when every check passes, 1 on a verification failure, 2 on invalid
/// input.
pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = execute(&cli).and_then(|o| emit(&o.body, output_path(&cli)).map(|_| o.pass));
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
