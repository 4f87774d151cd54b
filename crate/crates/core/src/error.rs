use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("need at least two distinct points, got {0}")]
    TooFewPoints(usize),
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not rectangular")]
    RaggedMatrix,
    #[error("no hyperplane separates the given sets")]
    NoSeparatingHyperplane,
    #[error("vertex set {0:?} is not a face")]
    NotAFace(Vec<usize>),
    #[error("hyperplane passes through vertex {0}")]
    VertexOnHyperplane(usize),
    #[error("hyperplane misses the interior")]
    NoInteriorIntersection,
    #[error("operation requires a realization, but the polytope has none")]
    MissingRealization,
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),
    #[error("at most 64 vertices supported, got {0}")]
    TooManyVertices(usize),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("certificate rejected: {0}")]
    BadCertificate(String),
    #[error("excess {xi} of a {d}-polytope is outside {{d-2, d-1}}")]
    ExcessOutOfRange { d: usize, xi: i64 },
    #[error("structure contradicts the small-excess classification: {0}")]
    Contradiction(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
