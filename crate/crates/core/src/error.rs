use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("ring arity must be positive")]
    ZeroArity,

    #[error("exponent overflow while multiplying monomials")]
    ExponentOverflow,

    #[error("power exponent must be at least 1")]
    ZeroPower,

    #[error("colon by the zero ideal is undefined")]
    ColonByZero,

    #[error("result is the unit ideal, which is not representable")]
    UnitIdeal,

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("{what} exceeds the configured cap of {cap}")]
    SizeLimit { what: &'static str, cap: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("graph is not a cycle")]
    NotACycle,

    #[error("graph is not integrally closed (forbidden pattern {pattern:?} on vertices {vertices:?})")]
    NotIntegrallyClosed {
        pattern: crate::graph::ForbiddenPattern,
        vertices: Vec<usize>,
    },

    #[error("enumeration cap exceeded: {0}")]
    EnumerationCap(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parameters outside the range covered by the formula: {0}")]
    NotCovered(String),
}
