use std::fmt;

use unruh_fluid::Error;

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PHYSICAL: u8 = 3;

/// A run that ends with a nonzero exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Printed instead of `message` by commands with JSON output.
    pub json: Option<String>,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
            json: None,
        }
    }

    pub fn verify(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_VERIFY,
            message: message.into(),
            json: None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain { .. } => EXIT_USAGE,
            Error::Physical { .. } | Error::Instability { .. } => EXIT_PHYSICAL,
            _ => EXIT_VERIFY,
        };
        Self {
            code,
            message: e.to_string(),
            json: None,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Short machine-readable tag for a per-row error.
pub fn error_tag(e: &Error) -> &'static str {
    match e {
        Error::Domain { .. } => "domain",
        Error::Instability { .. } => "instability",
        Error::Truncation { .. } => "truncation",
        Error::Bracket { .. } => "bracket",
        Error::Cutoff { .. } => "cutoff",
        Error::Physical { .. } => "physical",
        Error::NonConvergence { .. } => "nonconvergence",
    }
}
