//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count must be at least {min}, got {got}")]
    InvalidStrandCount { got: usize, min: usize },

    #[error("generator index {index} out of range 1..={max} for {n} strands")]
    IndexOutOfRange { index: usize, max: usize, n: usize },

    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("word has nontrivial permutation image; not in the pure subgroup")]
    NotInKernel,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("vertices must be distinct")]
    EqualVertices,

    #[error("transvection requires a dominated pair of generators")]
    DominationViolation,

    #[error("conjugating set is not a union of components away from the star")]
    NotAComponentUnion,

    #[error("{what} refused for n={n} (limit {limit}); raise the limit to force")]
    ResourceLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("operation needs n >= {min}, got {n}")]
    NotApplicable { n: usize, min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
