use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("interval [{lo}, {hi}] has lo > hi")]
    InvalidInterval { lo: i64, hi: i64 },

    #[error("box {index}: {reason}")]
    InvalidBox { index: usize, reason: String },

    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },

    #[error("line coordinates out of order: c1 = {c1} > c2 = {c2}")]
    LinesOutOfOrder { c1: i64, c2: i64 },

    #[error("box {index} meets neither line {axis} = {c1} nor {axis} = {c2}")]
    TwoLineViolation { index: usize, axis: usize, c1: i64, c2: i64 },

    #[error("family has no two-line certificate")]
    MissingLines,

    #[error("split thresholds out of order: a = {a} > b = {b}")]
    ThresholdOrder { a: i64, b: i64 },

    #[error("box {index} does not meet the hyperplane x{axis} = {x}")]
    MissesHyperplane { index: usize, axis: usize, x: i64 },

    #[error("cannot project a 1-dimensional family")]
    ProjectFromLine,

    #[error("family of {size} boxes exceeds the oracle cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("boxes {first} and {second} are disjoint")]
    NotPairwiseIntersecting { first: usize, second: usize },

    #[error("no threshold packs {needed} disjoint boxes: packing number is {nu}")]
    NoThreshold { needed: usize, nu: usize },

    #[error("operation requires a nonempty family")]
    EmptyFamily,

    #[error("{0} is undefined below n = 1")]
    BelowDomain(&'static str),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}
