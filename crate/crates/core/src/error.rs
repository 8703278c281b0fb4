use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {0} is not an odd integer >= 3")]
    InvalidOrder(u64),

    #[error("residue {element} appears more than once in a 2-partition of Z_{order}*")]
    RepeatedElement { element: u32, order: u32 },

    #[error("pair ({x}, {y}) contains 0, which is not an element of Z_{order}*")]
    ZeroElement { x: i64, y: i64, order: u32 },

    #[error("a 2-partition of Z_{order}* needs {expected} pairs, found {found}")]
    WrongCount {
        order: u32,
        expected: usize,
        found: usize,
    },

    #[error("pair ({x}, {y}) is degenerate modulo {order}")]
    DegeneratePair { x: i64, y: i64, order: u32 },

    #[error("order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: u32, found: u32 },

    #[error("ordered pairs do not orient the given 2-partition: {0}")]
    NotAnOrientation(String),

    #[error("ordered pairs of order {order} violate the covering property (first coordinate {missing} is never hit up to sign)")]
    InvalidCover { order: u32, missing: u32 },

    #[error("invalid nucleus of order {order}: {reason}")]
    InvalidNucleus { order: u32, reason: String },

    #[error("product of orders {left} and {right} exceeds the supported range")]
    ProductTooLarge { left: u32, right: u32 },

    #[error("construction produced the overlapping pair ({u}, {v}) in Z_{order}*")]
    ProductOverlap { u: u32, v: u32, order: u32 },

    #[error("search at order {order} is infeasible: {reason}")]
    SearchInfeasible { order: u32, reason: String },

    #[error("invalid search request: {0}")]
    InvalidSearch(String),

    #[error("invalid Skolem sequence: {0}")]
    InvalidSequence(String),

    #[error("not a Skolem starter: {0}")]
    NotSkolemStarter(String),

    #[error("no cardioidal 2-partition of order {order}: doubling cycle {cycle:?} has odd length")]
    NoCardioidalPartition { order: u32, cycle: Vec<u32> },

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    #[error("a composite needs at least two factors, got {0}")]
    TooFewFactors(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
