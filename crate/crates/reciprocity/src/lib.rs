//! Command-line front end for `reciprocity-core`: expression parsing,
//! field and ring specifications, reports and seeded sweeps.

pub mod cli;
pub mod factored;
pub mod local_data;
pub mod parse;
pub mod report;
pub mod series_json;
pub mod spec;
pub mod sweep;
pub mod targets;

use parse::{caret, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("syntax error in {what} at {err}")]
    Parse { what: String, text: String, err: ParseError },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] reciprocity_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// The message, with the offending input line and a caret for syntax
    /// errors.
    pub fn render(&self) -> String {
        match self {
            CliError::Parse { text, err, .. } => format!("{self}\n{}", caret(text, err.position)),
            _ => self.to_string(),
        }
    }
}

/// Exit status: 0 verified or computed, 1 identity violated, 2 bad input.
pub fn exit_code(result: &Result<cli::Output, CliError>) -> i32 {
    match result {
        Ok(out) if out.verified => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}
