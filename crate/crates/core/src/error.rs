use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty degree sequence")]
    EmptySequence,
    #[error("invalid token `{0}` in sequence")]
    InvalidToken(String),
    #[error("negative degree {0}")]
    NegativeDegree(i64),
    #[error("degree {degree} exceeds n-1 = {max} for a sequence of length {len}", max = .len - 1)]
    DegreeTooLarge { degree: usize, len: usize },
    #[error("sequence {0} is not graphical")]
    NotGraphical(String),
    #[error("splitted sequence {0} has no split realization")]
    NotSplittedRealizable(String),
    #[error("{what} exceeds the limit of {limit} (reached {reached})")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        reached: usize,
    },
    #[error("2-switch {0:?} is not valid in this graph")]
    InvalidSwitch([usize; 4]),
    #[error("vertex sets do not form an (independent set, clique) partition: {0}")]
    InvalidPartition(String),
    #[error("graph is not split")]
    NotSplit,
    #[error("graph is decomposable; split partition need not be unique")]
    Decomposable,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed graph text: {0}")]
    GraphFormat(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
