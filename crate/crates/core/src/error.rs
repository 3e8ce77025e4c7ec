use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two arguments that must have the same size (weight, vertex count) do not.
    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid graph construction: {0}")]
    Construction(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown graph family `{kind}`; valid kinds: {valid}")]
    UnknownFamily { kind: String, valid: String },

    #[error(
        "power-sum expansion needs 2^{edges} edge subsets, over the cap of {cap} edges; \
         use the monomial basis instead"
    )]
    Capacity { edges: usize, cap: usize },

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,

    #[error("expected an expansion in the {expected} basis, found {found}")]
    BasisMismatch { expected: char, found: char },

    /// An invariant that should be guaranteed by upstream code failed.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_weight(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::WeightMismatch { expected, found })
    }
}
