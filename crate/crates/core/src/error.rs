use thiserror::Error;

/// Everything that can go wrong while building or querying matroids and complexes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatxError {
    #[error("not a matroid: basis exchange fails for B1={b1:?}, B2={b2:?}, x={x} (no y in B2-B1 makes (B1-x)+y a basis)")]
    NotAMatroid {
        b1: Vec<String>,
        b2: Vec<String>,
        x: String,
    },
    #[error("basis family is empty")]
    EmptyBases,
    #[error("bases have unequal cardinalities ({0} and {1})")]
    UnequalBases(usize, usize),
    #[error("ground set of {0} elements exceeds the supported maximum")]
    TooLarge(usize),
    #[error("rank {r} is invalid for a ground set of size {n}")]
    BadRank { r: usize, n: usize },
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("cannot delete or contract the whole ground set")]
    DeleteEverything,
    #[error("matroid has loops")]
    HasLoops,
    #[error("matroid has coloops")]
    HasColoops,
    #[error("matroid is not connected")]
    NotConnected,
    #[error("basepoint `{0}` is a loop or a coloop")]
    BadBasepoint(String),
    #[error("complex is not pure")]
    NotPure,
    #[error("removing vertex `{0}` lowers the dimension")]
    DimensionDrops(String),
    #[error("complex has {0} faces, over the configured cap")]
    TooManyFaces(usize),
    #[error("void complex (no faces at all) is not a valid input")]
    VoidComplex,
    #[error("face {0:?} is listed but one of its subsets is not")]
    NotDownwardClosed(Vec<String>),
    #[error("complex is not {0}-CM")]
    NotKCm(usize),
    #[error("brute-force limit exceeded: {0}")]
    BeyondBruteForceCap(String),
    #[error("series normalization cannot be carried out: {0}")]
    PreconditionUnreachable(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("ordering is not a permutation of the ground set")]
    BadOrdering,
    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, MatxError>;
