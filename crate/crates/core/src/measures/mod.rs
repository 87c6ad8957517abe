//! Scalar measures of superposition, entanglement and information, and the
//! four-correlation classifier.

mod classify;
mod degrees;
mod entropy;
mod ls;
mod magnitude;
mod relative_entropy;
mod two_qubit;

pub use classify::{classify, table_flags, Classification, Correlation, CorrelationProfile, SpectralFacts};
pub(crate) use degrees::reduced;
pub use degrees::{
    degree_of_entanglement, degree_of_superposition, direct_cross_entanglement, nonorthogonality,
    DirectCross,
};
pub use entropy::{binary_entropy, relative_entropy, shannon_entropy, von_neumann_entropy};
pub use ls::{ls_correlation, LsCorrelation};
pub use magnitude::{scope_magnitude, MagnitudeInput};
pub use relative_entropy::{
    relative_entropy_of_entanglement, RelativeEntropyOptions, RelativeEntropyResult,
};
pub use two_qubit::{
    concurrence, entanglement_of_formation, formation_entropy_of_ensemble, magic_coordinates,
    negativity, negativity_from_spectrum, robustness_pure, ConcurrenceBasis,
    EntropyConcurrenceMatrix,
};

