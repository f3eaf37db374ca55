use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rank {rank} is not admissible for type {family} (allowed: {allowed})")]
    InadmissibleRank {
        family: char,
        rank: usize,
        allowed: &'static str,
    },

    #[error("unknown Lie type family '{0}'")]
    UnknownFamily(String),

    #[error("node {node} is out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("vector {0:?} is not a root of this system")]
    NotARoot(Vec<i64>),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("degenerate representation: n must be at least 1")]
    DegenerateRepresentation,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("chart vectors are not parallel at sample {index} (relative deviation {deviation:e})")]
    ChartMismatch { index: usize, deviation: f64 },

    #[error("undersampled loop: {0}")]
    Undersampled(String),

    #[error("accumulated phase is not an integer multiple of 2*pi (residual {residual:e})")]
    NonIntegerWinding { residual: f64 },

    #[error("matrix identity failed: {name} (max residual {residual})")]
    IdentityFailure { name: String, residual: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),
}
