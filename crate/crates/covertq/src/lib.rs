//! Command-line front end for the covert-communication planning toolkit.
//!
//! Each subcommand maps one-to-one onto a planner or simulator operation
//! from the `covertq-core` and `covertq-fock` crates and emits a single
//! deterministic table as CSV or JSON. No numeric logic lives here: this
//! crate only parses parameters, applies configuration precedence
//! (flags override config-file values override built-in defaults), and
//! renders results.

pub mod table;

mod cli;
mod commands;
mod config;
mod presets;

/// Errors surfaced to the user, split by exit code: parameter/usage
/// problems exit 2, internal numerical or I/O failures exit 1.
#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Internal(String),
}

/// Parses the command line, runs the requested command, and returns the
/// process exit code: 0 on success (including `--help`/`--version`),
/// 2 on usage or validation errors, 1 on internal failures.
pub fn run_main() -> i32 {
    use clap::Parser;

    let parsed = match cli::Cli::try_parse() {
        Ok(parsed) => parsed,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match commands::run(parsed) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}
