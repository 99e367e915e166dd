use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polyhedron is infeasible")]
    Infeasible,
    #[error("instance exceeds budget: {0}")]
    TooLarge(String),
    #[error("P intersected with the halfspace is empty")]
    EmptyIntersection,
    #[error("incidence could not be certified within tolerance: {0}")]
    ToleranceFailure(String),
    #[error("cone is not pointed")]
    NotPointed,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invalid W set: {0}")]
    BadW(String),
    #[error("mode inapplicable: {0}")]
    ModeInapplicable(String),
    #[error("matchings are not adjacent")]
    NotAdjacent,
    #[error("base matchings M1 and M2 are not adjacent")]
    NotAdjacentBase,
    #[error("matchings are pairwise adjacent")]
    PairwiseAdjacent,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("inconsistent extension witness: {0}")]
    InconsistentWitness(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
