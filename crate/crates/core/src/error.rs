use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed caller input: out-of-range vertices, self-loops, bad partitions.
    #[error("input error: {0}")]
    Input(String),

    /// Exact searches refuse instances above a hard vertex cap.
    #[error("size limit: {what} supports at most {cap} vertices, got {n}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    /// An operation was called outside its documented precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The input graph is not a member of the class the operation requires.
    #[error("class error: {0}")]
    Class(String),

    #[error("graph is disconnected")]
    Disconnected,

    /// A backward lifting step needed more repair than the correctness argument allows.
    #[error("claim violation: {0}")]
    ClaimViolation(String),

    /// A pluggable procedure returned output that failed verification.
    #[error("dependency error: {0}")]
    Dependency(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
