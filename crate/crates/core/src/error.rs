use thiserror::Error;

/// Errors shared across the crate. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid line: both coefficients are zero")]
    InvalidLine,
    #[error("empty arrangement")]
    EmptyArrangement,
    #[error("not generic: lines {0} and {1} are parallel")]
    ParallelLines(usize, usize),
    #[error("not generic: lines {0}, {1} and {2} are concurrent")]
    ConcurrentLines(usize, usize, usize),
    #[error("line passes through the reference point")]
    DegenerateOrientation,
    #[error("malformed traversal: {0}")]
    MalformedCycle(String),
    #[error("lines do not bound a triangular region")]
    NotATriangle,
    #[error("intercept leaves the admissible parallel strip")]
    StripViolation,
    #[error("cycle has no 2-standard consecutive structure")]
    NotInTn,
    #[error("arrangement has no global cyclicity")]
    NoGon,
    #[error("invalid line subset")]
    BadSubset,
    #[error("arrangements have different sizes")]
    SizeMismatch,
    #[error("polygon realization failed")]
    RealizationFailed,
}

pub type Result<T> = std::result::Result<T, Error>;
