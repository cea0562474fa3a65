//! Command-line front end for `qeuler-core`.

pub mod args;
pub mod commands;
pub mod error;
pub mod oeis;
pub mod render;
pub mod report;
pub mod suites;

use std::ffi::OsString;

use clap::Parser;

use args::{Cli, Command};
pub use error::CliError;

/// Everything a run produces; `main` only forwards it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    /// 0 pass, 1 verification failure, 2 usage error.
    pub code: u8,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: 2 }
            } else {
                Outcome::ok(text)
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(|e| Outcome {
        stdout: String::new(),
        stderr: format!("qeuler: {e}\n"),
        code: e.exit_code(),
    })
}

fn dispatch(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Table { family, max_n, q1, format } => commands::table(family, max_n as usize, q1, format),
        Command::Poly { name, n, format } => commands::poly(name, n as usize, format),
        Command::Verify { suite, max_n, points, force, format } => {
            commands::verify(suite, max_n.map(|n| n as usize), points, force, format)
        }
        Command::Conjecture { max_n, format } => commands::conjecture(max_n as usize, format),
        Command::OeisCheck { sequence, max_n, fixture, format } => {
            commands::oeis_check(sequence, max_n as usize, fixture.as_deref(), format)
        }
    }
}
