//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by construction, evaluation and transforms.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Family parameters outside their admissible domain, or an invalid query.
    #[error("parameter domain error: {0}")]
    ParameterDomain(String),

    /// Point outside the orthogonality interval where a weight was requested.
    #[error("x = {x} outside the open support ({a}, {b})")]
    OutsideSupport { x: f64, a: f64, b: f64 },

    /// Γ evaluated at a non-positive integer in a numerator position.
    #[error("gamma pole at {0}")]
    GammaPole(f64),

    /// A lower series parameter hits zero before the termination index.
    #[error("ill-posed terminating series: {0}")]
    IllPosedSeries(String),

    /// Series has no non-positive-integer upper parameter to terminate it.
    #[error("series does not terminate: {0}")]
    NotTerminating(String),

    /// A lemma transform does not apply to the given parameters.
    #[error("transform inapplicable: {0}")]
    TransformInapplicable(String),

    /// A recurrence stencil entry is missing from the lookup/table.
    #[error("incomplete stencil: missing R_({m},{n})")]
    IncompleteStencil { m: u32, n: u32 },

    /// Eigenvalue iteration exceeded its cap.
    #[error("eigenvalue iteration did not converge: {0}")]
    NoConvergence(String),

    /// Internal symmetrization produced an invalid value.
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;
