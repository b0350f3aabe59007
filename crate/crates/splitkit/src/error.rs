use splitkit_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{context}: parse error at line {line}, column {column}: {message}")]
    Parse { context: String, line: usize, column: usize, message: String },
    #[error("{context}: {message}")]
    Invalid { context: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn parse(context: impl Into<String>, e: &serde_json::Error) -> Self {
        let message = e.to_string();
        let message = match message.rfind(" at line ") {
            Some(cut) => message[..cut].to_string(),
            None => message,
        };
        CliError::Parse { context: context.into(), line: e.line(), column: e.column(), message }
    }

    pub fn invalid(context: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Invalid { context: context.into(), message: message.into() }
    }

    /// 1 when the input was fine and the mathematics said no, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if is_mathematical(e) => 1,
            _ => 2,
        }
    }
}

fn is_mathematical(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::SingularMatrix
            | CoreError::GenericityFailure { .. }
            | CoreError::NegativeDimension { .. }
            | CoreError::NonzeroRemainder { .. }
            | CoreError::DegreeMismatch { .. }
            | CoreError::NegativeDiscrepancy { .. }
            | CoreError::HypothesisViolation(_)
            | CoreError::NonUnitConstantTerm
    )
}

pub type Result<T> = std::result::Result<T, CliError>;
