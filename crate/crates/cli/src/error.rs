use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input; exit 2.
    #[error("{0}")]
    Input(String),
    /// Enumeration budget exceeded; exit 3.
    #[error("{0}")]
    Budget(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<paraq::semantics::SemanticsError> for CliError {
    fn from(e: paraq::semantics::SemanticsError) -> Self {
        match e {
            paraq::semantics::SemanticsError::BudgetExceeded { .. } => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<paraq::quantum::QuantumError> for CliError {
    fn from(e: paraq::quantum::QuantumError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}
