use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} is not valid for family {family}")]
    RankDomain { family: String, rank: usize },

    #[error("{0}")]
    Domain(String),

    #[error("partition {partition} violates the {family} parity rule: {rule}")]
    Parity {
        family: String,
        partition: String,
        rule: String,
    },

    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: String, found: String },

    #[error("inconsistent grading: n_{weight} = {value} < 0")]
    InconsistentGrading { weight: i32, value: i64 },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("signed data does not give a normal triple: {0}")]
    Normality(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("dataset schema error at {location}: {message}")]
    Schema { location: String, message: String },

    #[error("dataset invariant violated at {location}: {message}")]
    InvariantViolation { location: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
