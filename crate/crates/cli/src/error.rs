use std::fmt;

use hidden_ties::Error;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or references to things the input does not contain.
    Usage(String),
    /// Unreadable, malformed or unsuitable input.
    Input(String),
    /// A library invariant failed; always a bug.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Internal(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownVertex(_) | Error::InvalidArgument(_) => CliError::Usage(e.to_string()),
            Error::Invariant(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
