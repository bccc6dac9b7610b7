use thiserror::Error;

/// Errors shared across plane construction, incidence operations and checking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("join requires two distinct points")]
    IdenticalPoints,

    #[error("meet requires two distinct lines")]
    IdenticalLines,

    #[error("reference belongs to a different plane")]
    ForeignRef,

    #[error("unsupported plane order {0} (expected a prime power <= 16)")]
    UnsupportedOrder(u64),

    #[error("plane construction failed: {0}")]
    ConstructionFailed(String),

    #[error("structure violates the incidence axioms")]
    NotAPlane,

    #[error("malformed incidence matrix: {0}")]
    MalformedMatrix(String),

    #[error("malformed algebra table: {0}")]
    MalformedTable(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("exhaustive mode requires a finite plane")]
    ExhaustiveOnInfinitePlane,

    #[error("operation requires a finite plane")]
    NotFinite,

    #[error("sampling budget must be positive")]
    BudgetZero,

    #[error("plane too large for brute-force enumeration ({0} points, limit {1})")]
    PlaneTooLarge(u32, u32),

    #[error("triangle is degenerate (collinear vertices)")]
    DegenerateTriangle,

    #[error("triangles are not translates of each other")]
    NotATranslate,

    #[error("unknown plane name `{0}`")]
    UnknownPlane(String),

    #[error("unknown statement tag `{0}`")]
    UnknownStatement(String),

    #[error("instance does not match the statement schema")]
    SchemaMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
