//! Failures mapped onto process exit codes.

use std::fmt;

use centra_core::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Bad files, ids, parameters or flags; exit code 1.
    Input,
    /// A metric or simulation failed on valid input; exit code 2.
    Compute,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self { kind: Kind::Input, message: message.into() }
    }

    pub fn compute(message: impl Into<String>) -> Self {
        Self { kind: Kind::Compute, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            Kind::Input => 1,
            Kind::Compute => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

/// Whether a core error stems from the caller's input rather than the computation.
pub fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidNode { .. }
            | Error::InvalidEdge { .. }
            | Error::InvalidParameter { .. }
            | Error::KatzAlphaTooLarge { .. }
            | Error::UnknownId { .. }
            | Error::EmptySeedSet
    )
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = if is_input_error(&e) { Kind::Input } else { Kind::Compute };
        Self { kind, message: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;
