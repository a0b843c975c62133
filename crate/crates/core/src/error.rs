use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("group too large: closure exceeded {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("lattice too large: {reason}")]
    LatticeTooLarge { reason: String },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generators have mismatched degrees ({expected} vs {found})")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("subgroups belong to different groups")]
    ParentMismatch,
    #[error("subgroup is not contained in the ambient subgroup")]
    NotContained,
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("acting subgroup does not normalize the target")]
    NotNormalizing,
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),
    #[error("exhaustive enumeration supports orders 1..={max}, got {order}")]
    EnumerationOrder { order: usize, max: usize },
    #[error("operation requires a nontrivial group")]
    TrivialGroup,
}
