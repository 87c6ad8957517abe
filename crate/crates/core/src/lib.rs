//! Dense numerics for pure and mixed quantum states.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`] - complex matrices, the Jacobi Hermitian eigensolver, SVD,
//!   partial trace/transpose and spectral matrix functions.
//! * [`states`] - scopes, active operators, the bipartite density-matrix
//!   families, Schmidt decomposition, classical reduction and the
//!   wave-function-of-ensemble construction with its two decoherence stages.
//! * [`measures`] - degrees of superposition/entanglement, nonorthogonality,
//!   entropies, concurrence, negativity, relative entropy of entanglement and
//!   the four-correlation classifier.
//! * [`identities`] - permutation-entangled `n ⊗ n` states and their sum rules,
//!   GHZ-type families and the two-state mixture identity.
//! * [`dynamics`] - unitary evolution in three pictures, Kraus channels from
//!   dilations, the decoherence functional and the Wigner function.
//! * [`optim`] - a small Nelder–Mead simplex minimiser.

pub mod dynamics;
mod error;
pub mod identities;
pub mod measures;
pub mod numerics;
pub mod optim;
pub mod states;

pub use error::{Error, Result};
pub use numerics::{ComplexMatrix, C64};
