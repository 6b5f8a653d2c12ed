//! Error type shared across the crate.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// Parse failure with a byte offset into the input and a message.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Division by zero in the coefficient field (including integer
    /// literals that reduce to zero modulo the field characteristic).
    #[error("division by zero in the coefficient field")]
    DivisionByZero,

    /// A `FieldSpec` that does not describe a field.
    #[error("invalid field: {0}")]
    InvalidField(String),

    /// Structural misuse: wrong variable counts, mixed fields, empty input.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Hypothesis of an operation violated by the data (e.g. a hypersurface
    /// that is singular where smoothness is required).
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// An internal degree cap was exceeded; the computation aborts rather
    /// than silently truncating.
    #[error("degree cap {cap} exceeded while computing {context}")]
    DegreeOverflow { cap: u32, context: String },

    /// A randomized construction stayed degenerate after bounded retries.
    #[error("degenerate sample after {retries} retries: {context}")]
    Degenerate { retries: u32, context: String },

    /// Problem size outside the supported envelope.
    #[error("scale limit: {0}")]
    Scale(String),
}
