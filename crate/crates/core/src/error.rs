use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition token {token:?}: {reason}")]
    BadToken { token: String, reason: String },

    #[error("parts must be weakly decreasing, found {prev} followed by {next}")]
    NotDecreasing { prev: usize, next: usize },

    #[error("partition {partition} does not fit in the {m}x{n} box")]
    OutsideBox { partition: String, m: usize, n: usize },

    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { inner: String, outer: String },

    #[error("malformed skew shape {0:?}: expected OUTER/INNER")]
    BadSkew(String),

    #[error("skew shape {0} is not basic; normalize it with to_basic first")]
    NotBasic(String),

    #[error("hive size mismatch: hive has n={hive}, boundary has n={boundary}")]
    DimensionMismatch { hive: usize, boundary: usize },

    #[error("partition {partition} is longer than the hive side n={n}")]
    TooLong { partition: String, n: usize },

    #[error("weight {0} exceeds the supported limit")]
    WeightTooLarge(u64),

    #[error("no LR-hive exists for this boundary")]
    NoHive,

    #[error("parameters violate the preconditions of case {case}: {reason}")]
    Precondition { case: String, reason: String },

    #[error("unknown case label {0:?}")]
    UnknownCase(String),

    #[error("missing parameter {param:?} for case {case}")]
    MissingParam { case: String, param: String },
}

pub type Result<T> = std::result::Result<T, Error>;
