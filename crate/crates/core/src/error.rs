use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),

    #[error("unknown element {0:?}")]
    UnknownElement(String),

    #[error("ground sets of {0} elements are not supported (max 64)")]
    TooManyElements(usize),

    #[error("not meet-closed: {0} and {1} intersect in a non-flat")]
    NotMeetClosed(String, String),

    #[error("not a geometric lattice: {0}")]
    NotGeometric(String),

    #[error("{0} is not a flat")]
    NotAFlat(String),

    #[error("not a complete flag: {0}")]
    IncompleteFlag(String),

    #[error("not a face of S_G: {0}")]
    NotAFace(String),

    #[error("map is not simplicial: image of {0} is not a face")]
    NotSimplicial(String),

    #[error("map is not an involution: {0}")]
    NotInvolution(String),

    #[error("map is not order-preserving: {0}")]
    NotOrderPreserving(String),

    #[error("map is neither lowering nor raising")]
    NotOrderHomotopy,

    #[error("index sets of the two covers differ ({0} vs {1})")]
    CoverMismatch(usize, usize),

    #[error("ground sets differ")]
    GroundSetMismatch,

    #[error("rank-deficient configuration: rank {rank} in dimension {dimension}")]
    RankDeficient { rank: usize, dimension: usize },

    #[error("pivot {0} violates e_i in F_i \\ F_(i-1)")]
    BadPivot(String),

    #[error("sign vector already has element {0}")]
    ElementPresent(String),

    #[error("the zero covector has no image")]
    ZeroCovector,

    #[error("search exceeded {0} assignments")]
    SearchCapExceeded(u64),

    #[error("{what} too large: {size} (limit {limit})")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
