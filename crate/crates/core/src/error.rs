use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("invalid lambda: {0}")]
    InvalidLambda(String),
    #[error("bound quiver does not match its type: {0}")]
    InvalidQuiver(String),
    #[error("lattice has no vertex 1* (not an octopus)")]
    NotOctopus,
    #[error("{0} is not a vertex of the star quiver")]
    NotStarVertex(String),
    #[error("class {0} does not have norm two")]
    NotNormTwo(String),
    #[error("class {0} does not have Euler norm one")]
    NotNormOne(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("assignment is missing generator {0}")]
    MissingGenerator(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("enumeration exceeded the cap of {cap} elements")]
    BudgetExceeded { cap: usize },
    #[error("matrix does not preserve the line spanned by delta")]
    DeltaNotPreserved,
    #[error("matrix does not preserve the Cartan form")]
    NotCartanPreserving,
    #[error("collection has {found} classes but the lattice has rank {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("no dominant representative within {steps} steps (point outside the Tits cone or budget too small)")]
    NotInConeWithinBudget { steps: usize },
    #[error("matrix assigned to {0} is not invertible")]
    NotInvertible(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
