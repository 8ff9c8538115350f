//! Errors of the command-line front end and their exit codes.

use thiserror::Error;

/// A failed command.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or malformed input; exit code 1.
    #[error("usage error: {0}")]
    Usage(String),

    /// A mathematical invariant or precondition failed; exit code 2. The
    /// optional rendering shows the offending diagram.
    #[error("invariant violation: {message}")]
    Invariant {
        /// What went wrong.
        message: String,
        /// Rendering of the diagram involved, if any.
        rendering: Option<String>,
    },
}

impl CliError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Invariant { .. } => 2,
        }
    }

    /// Attaches a rendering to an invariant violation.
    pub fn with_rendering(self, r: String) -> Self {
        match self {
            CliError::Invariant { message, rendering: None } => CliError::Invariant { message, rendering: Some(r) },
            other => other,
        }
    }
}

impl From<khovanov_p::Error> for CliError {
    fn from(e: khovanov_p::Error) -> Self {
        use khovanov_p::Error as E;
        match e {
            E::NotStrictlyDecreasing(_) | E::InvalidArcs(_) | E::NotRealizable(_) => CliError::Usage(e.to_string()),
            _ => CliError::Invariant { message: e.to_string(), rendering: None },
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("malformed JSON: {e}"))
    }
}

/// Convenience alias for command results.
pub type CliResult<T> = std::result::Result<T, CliError>;
