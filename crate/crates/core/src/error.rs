use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |A - A^H| = {violation:e} exceeds {limit:e}")]
    NotHermitian { violation: f64, limit: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("subsystem index {index} out of range for {parties} parties")]
    SubsystemIndex { index: usize, parties: usize },

    #[error("index {index} out of range (limit {limit})")]
    Index { index: usize, limit: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("normalization violated: {0}")]
    Normalization(String),

    #[error("invalid pairing: {0}")]
    Pairing(String),

    #[error("state carries no usable provenance: {0}")]
    MissingProvenance(String),

    #[error("geometrically infeasible distances: {0}")]
    Geometry(String),

    #[error("operator is not unitary: max |U^H U - I| = {0:e}")]
    NotUnitary(f64),

    #[error("invalid projector family at step {step}: {reason}")]
    ProjectorFamily { step: usize, reason: String },

    #[error("invalid Kraus set: sum K^H K deviates from identity by {0:e}")]
    KrausNormalization(f64),

    #[error("problem too large: {0}")]
    TooLarge(String),
}
