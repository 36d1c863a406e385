use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("not a standard tableau: {0}")]
    NotStandard(String),

    #[error("malformed matching: {0}")]
    MalformedMatching(String),

    #[error("not a Dyck path: {0}")]
    NotDyck(String),

    #[error("size limit exceeded: r = {r}, maximum supported is {max}")]
    SizeLimitExceeded { r: usize, max: usize },

    /// The matching has four or more cyclic short arcs, so the web it would
    /// realize contains a cycle.
    #[error("matching has {0} cyclic short arcs and is not a forest")]
    NotForest(usize),

    #[error("permutation contains a 132 pattern")]
    Not132Avoiding,

    /// The permutation contains one of 132, 4321, 3214 and therefore has no
    /// forest-web preimage.
    #[error("permutation is not {{132,4321,3214}}-avoiding")]
    NotInClass,

    #[error("invalid web: {0}")]
    InvalidWeb(String),

    #[error("pattern set must contain at least one pattern")]
    EmptyPatternSet,

    /// Malformed serialized document (not valid JSON or unknown shape).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
