use thiserror::Error;

/// Domain errors shared by all modules. Violated preconditions surface here;
/// structurally malformed inputs are reported by [`crate::model::Validate`]
/// instead, which never fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate pair")]
    DegeneratePair,

    #[error("index {index} out of range (n = {n})")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("distinct lengths required")]
    TiedLengths,

    #[error("input not quasiplanar")]
    NotQuasiplanar,

    #[error("not maximal")]
    NotMaximal,

    #[error("not maximal planar")]
    NotMaximalPlanar,

    #[error("not degenerate: no vertex of degree <= {bound} at step {step}")]
    NotDegenerate { step: usize, bound: usize },

    #[error("no peelable interior vertex")]
    NoPeelableVertex,

    #[error("two longest not adjacent")]
    LongestNotAdjacent,

    #[error("k must be >= 1")]
    KTooSmall,

    #[error("order must be a permutation of the vertices")]
    NotAPermutation,

    /// A constructed arrangement failed its own recomputed-visibility check.
    /// Reaching this indicates a precondition was bypassed (or a bug).
    #[error("visibility of the constructed arrangement does not match the input drawing")]
    VisibilityMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
