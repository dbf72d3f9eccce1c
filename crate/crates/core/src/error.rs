use crate::decomposition::DecompositionViolation;
use crate::factorization::{FactorViolation, FactorizationViolation};
use crate::quasigroup::LatinViolation;
use crate::report::Report;
use crate::theorem::AssignmentViolation;

/// Errors for constructors and operations.
///
/// `Invalid*` variants carry the full violation report of the failed check;
/// everything else is a parameter problem caught before any real work.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("order must be at least {min}, got {got}")]
    OrderTooSmall { min: usize, got: usize },

    #[error("order must be positive")]
    ZeroOrder,

    #[error("order {0} is not congruent to 1 or 3 mod 6")]
    BadResidueClass(usize),

    #[error("vertex {vertex} is out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("a part needs at least 2 vertices, got {0}")]
    PartTooSmall(usize),

    #[error("part vertices must be strictly increasing")]
    PartNotStrictlyIncreasing,

    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("a base block must consist of 3 distinct vertices")]
    DegenerateBaseBlock,

    #[error("invalid decomposition ({})", .0.summary())]
    InvalidDecomposition(Report<DecompositionViolation>),

    #[error("invalid latin square ({})", .0.summary())]
    InvalidLatinSquare(Report<LatinViolation>),

    #[error("invalid linear factor ({})", .0.summary())]
    InvalidLinearFactor(Report<FactorViolation>),

    #[error("invalid linear factorization ({})", .0.summary())]
    InvalidFactorization(Report<FactorizationViolation>),

    #[error("invalid assignment ({})", .0.summary())]
    InvalidAssignment(Report<AssignmentViolation>),

    #[error("differences are not complete: duplicated {duplicated:?}, missing {missing:?}")]
    NotDifferenceComplete {
        duplicated: Vec<usize>,
        missing: Vec<usize>,
    },

    #[error("required d-gon vertex sets overlap at vertex {0}")]
    OverlappingRequirements(usize),

    #[error("a required d-gon vertex set is empty")]
    EmptyRequirement,

    #[error("vertex {0} repeats inside a required d-gon vertex set")]
    DuplicateRequirementVertex(usize),

    #[error("labeling is not a permutation of 0..{order}")]
    InvalidLabeling { order: usize },

    #[error("decomposition has {parts} parts, over the oracle cap {cap}")]
    PartCapExceeded { parts: usize, cap: usize },
}
