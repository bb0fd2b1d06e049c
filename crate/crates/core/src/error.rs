use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("no reflex angle: the apex lies inside or on the triangle of its targets")]
    NoReflexAngle,

    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),

    #[error("invalid layering: {0}")]
    InvalidLayering(String),

    #[error("singletons are not in strictly convex position")]
    NotConvexPosition,

    #[error("wrong subset size: expected k = {expected}, found k = {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("degenerate tripleton type: {0}")]
    DegenerateType(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("crossing lemma violated: {0}")]
    LemmaViolation(String),

    #[error("search exhausted without a valid placement")]
    SearchExhausted,

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
