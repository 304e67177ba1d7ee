//! Error type shared by every module of the crate.

use crate::semiring::SemiringId;

/// Everything that can go wrong when building or combining semiring objects.
///
/// Divergence of a Kleene star or of a star–vector series is *not* an error;
/// it is reported as a regular outcome by [`crate::linalg::kleene_star`] and
/// [`crate::linalg::star_apply`].
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Two operands were tagged with different semiring instances.
    #[error("semiring mismatch: expected {expected}, found {found}")]
    SemiringMismatch {
        expected: SemiringId,
        found: SemiringId,
    },

    /// A value lies outside the carrier of its semiring (negative, above 1
    /// for the lattice instances, or not finite).
    #[error("value {value} is outside the carrier of {semiring}")]
    OutsideCarrier { value: f64, semiring: SemiringId },

    /// Operand sizes do not agree.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// Division was requested by a scalar with no multiplicative inverse.
    #[error("{value} has no multiplicative inverse in {semiring}")]
    NotInvertible { value: f64, semiring: SemiringId },

    /// The operation is not defined for this semiring instance.
    #[error("{what} is not supported for {semiring}")]
    Unsupported {
        semiring: SemiringId,
        what: &'static str,
    },

    /// A spectral query was made with a value that is not an eigenvalue.
    #[error("{lambda} is not an eigenvalue of the matrix")]
    NotAnEigenvalue { lambda: f64 },

    /// Eigenvector bases are only constructed for strictly positive
    /// eigenvalues; zero is never invertible.
    #[error("eigenbasis construction requires a strictly positive eigenvalue")]
    BasisRequiresPositiveLambda,

    /// A least solution was requested for an unsolvable problem.
    #[error("unsolvable: rho_bar={rho_bar} does not satisfy the bound against lambda={lambda}")]
    Unsolvable { rho_bar: f64, lambda: f64 },

    /// The vector handed to `decompose` does not solve the equation.
    #[error("the given vector is not a solution of the equation")]
    NotASolution,

    /// `least_residual(x, u)` requires `u ≤ x` componentwise.
    #[error("residual undefined: lower bound exceeds the vector at index {index}")]
    ResidualUndefined { index: usize },

    /// A reference oracle declined to run (instance too large, or the
    /// classical system was numerically singular).
    #[error("oracle refused: {0}")]
    OracleRefused(String),

    /// An internal series failed to stabilize where convergence was expected.
    #[error("series diverged unexpectedly")]
    Diverged,

    /// Malformed input that fits no other category (NaN lambda, ragged rows…).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
