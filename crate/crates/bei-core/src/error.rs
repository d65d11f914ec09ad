use thiserror::Error;

/// Errors surfaced by the public operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("division is not exact: remainder is nonzero")]
    NotDivisible,
    #[error("division by zero polynomial")]
    ZeroDivisor,
    #[error("{0} must be a prime different from 2")]
    BadPrime(u64),
    #[error("ideal power exponent must be >= 1")]
    ZeroPower,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("invalid graph: {0}")]
    BadGraph(String),
    #[error("invalid family specification: {0}")]
    BadFamilySpec(String),
    #[error("edge {0}-{1} not usable here: {2}")]
    BadEdge(usize, usize, String),
    #[error("vertex partition must cover 1..=n disjointly")]
    BadPartition,
    #[error("enumeration bound exceeded: {0} > {1}")]
    BoundExceeded(usize, usize),
    #[error("graph carries no family tag with a canonical ordering")]
    NoCanonicalOrdering,
    #[error("ordering does not cover the edge set exactly once")]
    BadOrdering,
    #[error("search budget exhausted before the ordering space was covered")]
    Inconclusive,
    #[error("instance too large: {0}")]
    InfeasibleSize(String),
    #[error("unknown claim id {0:?}")]
    UnknownTheorem(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
