//! Error type shared across the crate.

use alloc::string::String;

/// Errors reported by fallible operations.
///
/// Contract violations (malformed partitions, mismatched ranks, invalid
/// quantum characteristic) are all reported through [`Error::Invalid`] with a
/// human-readable description; search-specific failures get their own
/// variants so callers can distinguish a budget problem from a mathematical
/// impossibility.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input violates a documented precondition.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// An enumeration exceeded its configured cap.
    #[error("enumeration overflow: {0} exceeded cap {1}")]
    Overflow(String, usize),
}

impl Error {
    pub fn invalid(msg: impl core::fmt::Display) -> Self {
        Error::Invalid(alloc::format!("{msg}"))
    }
}
