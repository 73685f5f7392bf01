use std::fmt;
use std::process::ExitCode;

/// Everything that ends a run early, tagged with its exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Numeric(coboson::Error),
    Validation(String),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Usage(_) | Failure::Io(_) => 1,
            Failure::Numeric(_) => 2,
            Failure::Validation(_) => 3,
        })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "usage error: {msg}"),
            Failure::Numeric(e) => write!(f, "numeric error: {e}"),
            Failure::Validation(msg) => write!(f, "validation failed: {msg}"),
            Failure::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl From<coboson::Error> for Failure {
    fn from(e: coboson::Error) -> Self {
        match e {
            coboson::Error::Format(msg) => Failure::Usage(msg),
            e => Failure::Numeric(e),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}
