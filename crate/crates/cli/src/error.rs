use std::fmt;

/// What went wrong, and so which exit code to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Validation,
    Computation,
}

#[derive(Clone, Debug)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Usage, message: message.into() }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Validation, message: message.into() }
    }

    /// A core error raised while validating the entry at `at`.
    pub fn at(at: &str, e: descent_core::Error) -> Self {
        CliError::validation(format!("{}: {}", at, e))
    }
}

impl From<descent_core::Error> for CliError {
    fn from(e: descent_core::Error) -> Self {
        CliError { kind: ErrorKind::Computation, message: e.to_string() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind {
            ErrorKind::Usage => "usage error",
            ErrorKind::Validation => "invalid workspace",
            ErrorKind::Computation => "computation failed",
        };
        write!(f, "{}: {}", prefix, self.message)
    }
}

impl std::error::Error for CliError {}
