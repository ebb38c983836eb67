use thiserror::Error;

/// Errors raised by the verification library.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter point lies outside the open simplex.
    #[error("point outside the open simplex: {0}")]
    InvalidPoint(String),

    /// Malformed arguments or configuration.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A constructed fusion graph failed one of the graph axioms.
    #[error("axiom check failed: {0}")]
    Axiom(String),

    /// Two routes that must agree produced different answers.
    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("vertex count {count} exceeds the cap of {cap}")]
    VertexCap { count: usize, cap: usize },

    #[error("sampling budget exhausted: {0}")]
    SamplingBudget(String),

    #[error("eigensolver did not converge for a {0}x{0} matrix")]
    EigenSolver(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code: 1 for mathematical mismatches, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Axiom(_) | Error::Mismatch(_) | Error::EigenSolver(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
