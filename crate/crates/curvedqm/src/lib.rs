//! Command-line front end, output formats, verification engine and
//! formula-to-code concordance for `curvedqm-core`.

pub mod commands;
pub mod concordance;
pub mod config;
pub mod output;
pub mod verify;

use clap::Parser;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_BAD_CONFIG: i32 = 2;
pub const EXIT_INADMISSIBLE: i32 = 3;

/// Failures that end a command early.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("inadmissible: {0}")]
    Inadmissible(String),
    #[error("output error: {0}")]
    Io(String),
    #[error("concordance has gaps: {0}")]
    Concordance(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Inadmissible(_) => EXIT_INADMISSIBLE,
            AppError::Concordance(_) => EXIT_CHECK_FAILED,
            AppError::Config(_) | AppError::Io(_) => EXIT_BAD_CONFIG,
        }
    }
}

/// Parses the arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match config::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_CONFIG } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match config::JobConfig::from_cli(cli).and_then(commands::dispatch) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
