//! Command layer for the `edgebetti` binary.

pub mod args;
pub mod commands;
mod error;
pub mod render;

use std::ffi::OsString;

use clap::Parser;

pub use args::Cli;
pub use commands::{conjecture_report, resolve_graph, ConjectureReport, Verdict};
pub use error::{CliError, Exit};

/// What one invocation printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit: Exit,
}

fn dispatch(cli: &Cli) -> Result<(String, Exit), CliError> {
    match &cli.command {
        args::Command::Betti(a) => commands::cmd_betti(a, cli.format),
        args::Command::Conjecture(a) => commands::cmd_conjecture(a, cli.format),
        args::Command::VerifyGb(a) => commands::cmd_verify_gb(a, cli.format),
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    exit: Exit::Usage,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    exit: Exit::Success,
                }
            };
        }
    };
    let result = match cli.threads {
        Some(0) => Err(CliError::Usage("--threads must be at least 1".into())),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(CliError::Usage(format!("cannot start {t} threads: {e}"))),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok((stdout, exit)) => Outcome {
            stdout,
            stderr: String::new(),
            exit,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            exit: e.exit(),
        },
    }
}
