use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("dimension guard exceeded: dimension {dim} > limit {limit}")]
    DimensionGuardExceeded { dim: usize, limit: usize },
    #[error("size guard exceeded: {what} = {size} > limit {limit}")]
    SizeGuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("invalid vertex/facet pair: vertex {vertex} violates inequality {row}")]
    InvalidPair { vertex: usize, row: usize },
    #[error("origin is not strictly interior")]
    OriginNotInterior,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("affine map is not injective on the affine hull")]
    NonInjectiveOnHull,
    #[error("graph is not perfect: {0}")]
    NotPerfect(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("element name clash: {0}")]
    NameClash(String),
    #[error("shared element invalid for 2-sum: {0}")]
    SharedElementInvalid(String),
    #[error("matching is not stable")]
    NotStable,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("H-polytope has integer points outside {{0,1}}^d")]
    NonBinaryIntegerPoints,
    #[error("matrix is not reduced: {0}")]
    NotReduced(String),
    #[error("unknown reproduction id: {0}")]
    UnknownId(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("assertion failed: {0}")]
    AssertionFailed(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
