use thiserror::Error;

/// Errors produced by parsing, normalization and the rewriting engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("variable x{index} out of range 1..={n}")]
    VarOutOfRange { index: u64, n: usize },

    #[error("atom y{index} out of range 0..{m}")]
    AtomOutOfRange { index: u64, m: usize },

    #[error("variable count {n} outside supported range {min}..={max}")]
    VariableCount { n: usize, min: usize, max: usize },

    #[error("mismatched variable counts: {0} vs {1}")]
    Mismatch(usize, usize),

    #[error("rewriting step budget of {0} exhausted")]
    BudgetExhausted(usize),

    #[error("invalid constraint: {0}")]
    Constraint(String),

    #[error("invalid distribution: {0}")]
    Distribution(String),

    #[error("presentation line {line}: {message}")]
    Presentation { line: usize, message: String },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
