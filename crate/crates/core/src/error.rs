use thiserror::Error;

/// Crate-wide error type.
///
/// `Internal` marks consistency checks that are supposed to be unreachable
/// (certificate mismatches, square-zero failures on constructed complexes);
/// hitting one is a bug, not a user error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
