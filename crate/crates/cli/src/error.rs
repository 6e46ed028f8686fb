use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("label `{0}` is not among the elements")]
    DanglingLabel(String),
    #[error("invalid complement table: {0}")]
    InvalidComplement(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("format `{0}` is not supported for this output")]
    UnsupportedFormat(&'static str),
    #[error("{what} exceeds the cap of {cap}")]
    SizeCap { what: &'static str, cap: usize },
    #[error(transparent)]
    Core(#[from] duality_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        let mut message = e.to_string();
        if let Some(at) = message.rfind(" at line ") {
            message.truncate(at);
        }
        CliError::Syntax {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}
