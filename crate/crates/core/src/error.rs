use thiserror::Error;

/// One variant per violated invariant, so callers can report exactly which
/// check failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be >= 2")]
    NTooSmall,
    #[error("k must be >= 1")]
    KTooSmall,
    #[error("k must be <= n-1")]
    KTooLarge,
    #[error("ground size must be >= 2k")]
    GroundTooSmall,
    #[error("element {element} outside ground set [1,{ground}]")]
    ElementOutOfRange { element: usize, ground: usize },
    #[error("block has fewer than two elements")]
    BlockTooSmall,
    #[error("block contains a duplicate element")]
    DuplicateElement,
    #[error("duplicate block")]
    DuplicateBlock,
    #[error("missing full set")]
    MissingFullSet,
    #[error("not nested")]
    NotNested,
    #[error("blocks do not partition the ground set")]
    NotAPartition,
    #[error("block count mismatch: expected {expected}, found {found}")]
    BlockCountMismatch { expected: usize, found: usize },
    #[error("ground size mismatch: expected {expected}, found {found}")]
    GroundSizeMismatch { expected: usize, found: usize },
    #[error("perm is not a permutation of 1..=n")]
    NotAPermutation,
    #[error("missing maximal interval")]
    MissingFullInterval,
    #[error("interval is not a subrange of [1,n]")]
    BadInterval,
    #[error("no distinguished block")]
    NoDistinguishedBlock,
    #[error("unexpected distinguished block")]
    UnexpectedDistinguishedBlock,
    #[error("distinguished index out of range")]
    BadDistinguishedIndex,
    #[error("I has wrong length")]
    WrongILength,
    #[error("I must be strictly ascending")]
    INotAscending,
    #[error("cuts has wrong length")]
    WrongCutsLength,
    #[error("cuts must be strictly ascending")]
    CutsNotAscending,
    #[error("cut positions must lie in [2, n-1]")]
    CutOutOfRange,
    #[error("comparing an empty set")]
    EmptySet,
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("partition cannot be resolved level by level")]
    Unresolvable,
    #[error("label assignment inconsistent with levels")]
    LabelMismatch,
    #[error("diagonal endpoints must be non-adjacent vertices")]
    AdjacentDiagonal,
    #[error("diagonal endpoint outside 0..=n")]
    DiagonalOutOfRange,
    #[error("duplicate diagonal")]
    DuplicateDiagonal,
    #[error("crossing diagonals")]
    CrossingDiagonals,
    #[error("perm must be the identity")]
    NonIdentityPerm,
    #[error("type multiplicities must sum to k")]
    TypeBlockSum,
    #[error("type edge counts must sum to n+2k-1")]
    TypeEdgeSum,
    #[error("type polygon sizes must be strictly ascending within [3, n+1]")]
    TypeSizesBad,
    #[error("type multiplicities must be >= 1")]
    TypeMultiplicityZero,
}

pub type Result<T> = std::result::Result<T, Error>;
