use thiserror::Error;

pub type Result<T, E = FhtError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FhtError {
    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid image shape: {width}x{height} with {len} values")]
    Shape { width: usize, height: usize, len: usize },

    /// Sums along a pattern could leave the 62-bit budget.
    #[error("overflow budget exceeded: width {width} times max |value| {max_abs} is not below 2^62")]
    Overflow { width: usize, max_abs: u64 },
}

pub(crate) fn contract(msg: impl Into<String>) -> FhtError {
    FhtError::Contract(msg.into())
}
