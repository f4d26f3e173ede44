use num_complex::Complex64;
use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A quadratic form was identically zero where a nonzero form is required.
    #[error("quadratic form is identically zero")]
    ZeroForm,

    /// A form failed the degeneracy test; carries the determinant witness.
    #[error("form is not degenerate (det = {det})")]
    NotDegenerate { det: Complex64 },

    /// The two pencil generators are proportional.
    #[error("pencil generators are linearly dependent")]
    DependentGenerators,

    /// The determinant cubic vanished but neither structural witness was
    /// found. Indicates a tolerance fault, not a mathematical possibility.
    #[error("internal inconsistency: vanishing determinant cubic without a structural witness")]
    InternalInconsistency,

    /// A theorem-check hypothesis was not satisfied by the supplied data.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// A bivariate generator does not have true degree 2.
    #[error("generator has degree below 2")]
    DegreeTooLow,

    /// Malformed input expression; `offset` is the byte position.
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    /// The expanded expression violates the degree constraints of the mode.
    #[error("degree error: {0}")]
    Degree(String),

    /// A variable not admitted by the parse mode; `offset` is the byte position.
    #[error("variable '{var}' not allowed in this mode (byte {offset})")]
    Variable { offset: usize, var: char },
}

pub type Result<T> = std::result::Result<T, Error>;
