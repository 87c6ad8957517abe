//! Unitary evolution in the three pictures, Kraus channels and their
//! dilations, the decoherence functional of history families, and the
//! Wigner function of a sampled wave function. Units have `ħ = 1`.

mod channel;
mod evolution;
mod histories;
mod wigner;

pub use channel::{apply_channel, dilation_output, kraus_from_dilation, Channel};
pub use evolution::{evolve, expectation_in_pictures, liouville_residual, Evolve, HamiltonianSpec, PictureExpectations};
pub use histories::{
    consistency_check, decoherence_functional, decoherence_matrix, ConsistencyReport, DecoherenceMatrix,
    HistorySpec, HistoryStep, MAX_HISTORIES,
};
pub use wigner::{wigner, wigner_grid, WavefunctionGrid};
