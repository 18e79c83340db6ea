use thiserror::Error;

/// Errors raised by graph construction, the exact linear algebra layer and
/// the decision procedures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("edge {edge} references vertex {vertex}, but the graph has {n} vertices")]
    DanglingEndpoint { edge: usize, vertex: usize, n: usize },
    #[error("intersection index must be nonzero (edge {0})")]
    ZeroIndex(usize),
    #[error("invalid labeled graph: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("graph not connected")]
    Disconnected,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("weak singularity search refused: dimension {n} exceeds cap {cap}")]
    SubsetCapExceeded { n: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vector is not in the kernel of the operator")]
    NotInKernel,
    #[error("s-function is not admissible for this labeled graph")]
    InadmissibleS,
    #[error("gluing matrix must have determinant -1 (got {0})")]
    BadDeterminant(i64),
    #[error("gluing matrix entry b must be nonzero")]
    ZeroGluingB,
    #[error("index {index} out of range (limit {limit})")]
    OutOfRange { index: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
