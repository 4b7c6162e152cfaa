use std::fmt;

use crate::state::Subsystem;

/// Density-matrix property that a candidate state failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateInvariant {
    Hermitian,
    UnitTrace,
    PositiveSemidefinite,
}

impl fmt::Display for StateInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StateInvariant::Hermitian => "Hermitian",
            StateInvariant::UnitTrace => "unit trace",
            StateInvariant::PositiveSemidefinite => "positive semidefinite",
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,
    #[error("expected {expected} entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("subsystem dimension {dim} exceeds the supported maximum of {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{invariant} violated (deviation {violation:.3e})")]
    InvalidState {
        invariant: StateInvariant,
        violation: f64,
    },
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NonHermitianInput { deviation: f64 },
    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})"
    )]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },
    #[error("mixture weight {weight} at term {term} is not positive")]
    NonPositiveWeight { term: usize, weight: f64 },
    #[error("mixture weights sum to {sum}, violating unit trace")]
    WeightSum { sum: f64 },
    #[error("index ({i}, {j}) at term {term} is out of range for dims ({dim_a}, {dim_b})")]
    IndexOutOfRange {
        term: usize,
        i: usize,
        j: usize,
        dim_a: usize,
        dim_b: usize,
    },
    #[error("duplicate mixture term ({i}, {j})")]
    DuplicateTerm { i: usize, j: usize },
    #[error("basis vectors are not orthonormal (deviation {deviation:.3e} at ({i}, {j}))")]
    NotOrthonormal { i: usize, j: usize, deviation: f64 },
    #[error("outcome labels must be pairwise distinct")]
    DuplicateLabels,
    #[error("outcome {outcome} on subsystem {side} has probability {probability:.3e}")]
    ZeroProbabilityOutcome {
        side: Subsystem,
        outcome: usize,
        probability: f64,
    },
    #[error("not a probability distribution: {0}")]
    NotADistribution(String),
    #[error("marginal distributions are not identical")]
    MarginalsNotIdentical,
    #[error("cross-check failed: {0}")]
    CrossCheckFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
