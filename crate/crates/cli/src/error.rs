use thiserror::Error;

pub type Result<T, E = FormatError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed {format} data: {reason}")]
    Malformed { format: &'static str, reason: String },

    #[error("unsupported {format} data: {reason}")]
    Unsupported { format: &'static str, reason: String },

    #[error(transparent)]
    Transform(#[from] fht_core::FhtError),
}

pub(crate) fn malformed(format: &'static str, reason: impl Into<String>) -> FormatError {
    FormatError::Malformed { format, reason: reason.into() }
}

pub(crate) fn unsupported(format: &'static str, reason: impl Into<String>) -> FormatError {
    FormatError::Unsupported { format, reason: reason.into() }
}
