//! State construction: scopes and their active operators, bipartite
//! density-matrix families, Schmidt decomposition, classical reduction and
//! the two-stage decoherence of a wave function of an ensemble state.

mod density;
mod ensemble;
mod families;
mod pure;
mod schmidt;
mod scope;

pub use density::{decohere, DensityMatrix, Origin};
pub use ensemble::{sub_decohere, wfes_density, wfes_operator, EnsembleDecomposition};
pub use families::{build_family, classical_reduction, FamilyKind, FamilyTag};
pub use pure::PureState;
pub use schmidt::{schmidt_decompose, SchmidtDecomposition};
pub use scope::{
    active_operators, cross_pairing, direct_pairing, entangle, make_scope, permutation_pairing,
    ActiveOperatorSet, ScopeDecomposition, ScopeShape,
};

use crate::numerics::{C64, TOL};
use crate::{Error, Result};

/// Normalises a coefficient list, returning it with its original norm.
/// An all-zero list is rejected.
pub(crate) fn normalize(v: &[C64]) -> Result<(Vec<C64>, f64)> {
    if v.is_empty() {
        return Err(Error::Normalization("empty coefficient list".into()));
    }
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::Normalization("coefficients are all zero".into()));
    }
    Ok((v.iter().map(|z| z / norm).collect(), norm))
}

/// Checks a probability vector; the result is rescaled to sum to one exactly
/// (up to rounding) once it passes the input tolerance.
pub(crate) fn check_weights(weights: &[f64]) -> Result<Vec<f64>> {
    if weights.is_empty() {
        return Err(Error::Normalization("no weights given".into()));
    }
    if let Some(w) = weights.iter().find(|w| !(**w >= 0.0) || !w.is_finite()) {
        return Err(Error::Normalization(format!("weight {w} is not a probability")));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > TOL.input_normalization {
        return Err(Error::Normalization(format!("weights sum to {total}, not 1")));
    }
    Ok(weights.iter().map(|w| w / total).collect())
}
