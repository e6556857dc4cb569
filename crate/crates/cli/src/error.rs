use serde::Serialize;

/// Machine-readable failure class, serialized in kebab-case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorCode {
    SchemaViolation,
    UnknownSpecKind,
    InvalidSpec,
    WindowTooSmall,
    UnsupportedForKind,
    BadArgument,
    ComputationFailed,
    Io,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: ErrorCode,
    pub message: String,
}

impl CliError {
    pub fn new(code: ErrorCode, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }

    /// `{"error": {"code": …, "message": …}}`.
    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self }).to_string()
    }
}

/// Errors from building a spec.
pub fn spec_error(e: monocone::Error) -> CliError {
    match e {
        monocone::Error::WindowTooSmall(_) => CliError::new(ErrorCode::WindowTooSmall, e.to_string()),
        _ => CliError::new(ErrorCode::InvalidSpec, e.to_string()),
    }
}

/// Errors from running a command.
pub fn run_error(e: monocone::Error) -> CliError {
    match e {
        monocone::Error::WindowTooSmall(_) => CliError::new(ErrorCode::WindowTooSmall, e.to_string()),
        monocone::Error::NotAMember(_) | monocone::Error::Parse(_) => {
            CliError::new(ErrorCode::BadArgument, e.to_string())
        }
        _ => CliError::new(ErrorCode::ComputationFailed, e.to_string()),
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
