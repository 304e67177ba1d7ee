//! Linear algebra over idempotent and nonnegative semirings.
//!
//! The crate revolves around the equation `λx = Ax ⊕ b` for a square matrix
//! `A` and vector `b` with entries in one of four concrete semirings:
//!
//! | id             | carrier  | ⊕        | ⊗                  |
//! |----------------|----------|----------|--------------------|
//! | `max-times`    | [0, ∞)   | max      | ·                  |
//! | `nonnegative`  | [0, ∞)   | +        | ·                  |
//! | `max-min`      | [0, 1]   | max      | min                |
//! | `lukasiewicz`  | [0, 1]   | max      | max(0, a + b − 1)  |
//!
//! Modules build on each other:
//!
//! * [`semiring`] — scalar arithmetic tagged with its semiring instance.
//! * [`linalg`] — matrices, vectors, Kleene stars and star–vector series.
//! * [`structure`] — digraphs, strongly connected classes, Frobenius normal
//!   form and access relations.
//! * [`spectral`] — cycle means, Perron roots, eigenvalue sets, critical
//!   graphs and eigenvector bases.
//! * [`zsolver`] — solvability certificates, least solutions and the
//!   parametrization of the full solution set.
//! * [`oracle`] — slow, independent reference implementations used to
//!   cross-check the fast routines in tests.
//!
//! All public types are plain data (`Send + Sync`); computed objects are
//! immutable once constructed, so sharing them across threads for reads is
//! safe.

pub mod approx;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod semiring;
pub mod spectral;
pub mod structure;
pub mod zsolver;

pub use error::Error;
pub use linalg::{DivergenceReason, Matrix, SeriesParams, StarOutcome, StarResult, Vector};
pub use semiring::{Scalar, SemiringId};
pub use spectral::{CriticalGraph, EigenBasis, SpectralData};
pub use structure::{Digraph, FrobeniusForm, SupportSet};
pub use zsolver::{Decomposition, Solvability, SolveReport, ZProblem};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
