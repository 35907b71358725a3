use thiserror::Error;

/// Errors raised while building or validating graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid graph family parameters: {0}")]
    InvalidFamily(String),
    #[error("vertex count must be positive")]
    EmptyVertexSet,
    #[error("edge {{{0},{1}}} has an endpoint outside 1..={2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("edge {{{0},{0}}} is a loop")]
    Loop(usize),
    #[error("edge {{{0},{1}}} is listed twice")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Errors raised by polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ambient dimension mismatch: {0} vs {1} variables")]
    Dimension(usize, usize),
    #[error("binomial lead must be strictly greater than its trail")]
    NotOrdered,
    #[error("cannot parse `{0}`: {1}")]
    Parse(String, String),
}

/// Errors raised by Gröbner, Betti and homology computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComputeError {
    #[error("linear quotients profile failed at generator {0}; formula does not apply")]
    UnusableProfile(usize),
    #[error("table is bounded by i <= {i_max}, j <= {j_max}; cannot certify {what}")]
    Bounded {
        i_max: usize,
        j_max: usize,
        what: &'static str,
    },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unsupported family: {0}")]
    Unsupported(String),
    #[error("corner certificate failed at k = {k}: {reason} (colon = {colon})")]
    ShapeViolation { k: usize, reason: String, colon: String },
    #[error("cap exceeded: {what} has size {size} (cap {cap})")]
    CapExceeded { what: String, size: usize, cap: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
