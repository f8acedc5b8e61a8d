use std::fmt;

/// Failure classes, one per nonzero exit code.
#[derive(Debug)]
pub enum CliError {
    /// A checked statement or witness failed: exit 1.
    Violation(String),
    /// Unparseable or out-of-scope input: exit 2.
    Input(String),
    /// A size cap or the time budget was hit: exit 3.
    Resource(String),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Violation(m) => write!(f, "invariant violated: {m}"),
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Resource(m) => write!(f, "resource limit: {m}"),
        }
    }
}

impl From<symbreak::Error> for CliError {
    fn from(e: symbreak::Error) -> Self {
        if e.is_resource_limit() {
            CliError::Resource(e.to_string())
        } else if matches!(e, symbreak::Error::ConstructionFailed(_)) {
            CliError::Violation(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
