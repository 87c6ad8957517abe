//! Ensembles with possibly nonorthogonal members and the wave function of an
//! ensemble state (WFES) built from them.

use super::{build_family, check_weights, normalize, DensityMatrix, FamilyTag, PureState};
use crate::numerics::{ComplexMatrix, C64};
use crate::{Error, Result};

/// Weights `p_ξ` with per-party local states `|ψ_ξ^μ⟩`, and optionally the
/// amplitudes `γ_ξ` (with `|γ_ξ|² = p_ξ`) that superpose the members into a
/// WFES.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleDecomposition {
    weights: Vec<f64>,
    locals: Vec<Vec<Vec<C64>>>,
    gammas: Option<Vec<C64>>,
}

impl EnsembleDecomposition {
    /// `locals[party][member]`. Local states are normalised; weights must
    /// sum to one within `1e-9`.
    pub fn new(weights: &[f64], locals: Vec<Vec<Vec<C64>>>) -> Result<Self> {
        let weights = check_weights(weights)?;
        if locals.is_empty() {
            return Err(Error::Dimension("an ensemble needs at least one party".into()));
        }
        let mut normalized = Vec::with_capacity(locals.len());
        for (mu, party) in locals.into_iter().enumerate() {
            if party.len() != weights.len() {
                return Err(Error::Dimension(format!(
                    "party {mu} has {} members, expected {}",
                    party.len(),
                    weights.len()
                )));
            }
            let dim = party[0].len();
            let mut states = Vec::with_capacity(party.len());
            for (xi, v) in party.iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::Dimension(format!(
                        "party {mu} member {xi} has dimension {}, expected {dim}",
                        v.len()
                    )));
                }
                states.push(normalize(v)?.0);
            }
            normalized.push(states);
        }
        Ok(Self {
            weights,
            locals: normalized,
            gammas: None,
        })
    }

    /// Weights taken from `|γ_ξ|²`.
    pub fn from_gammas(gammas: &[C64], locals: Vec<Vec<Vec<C64>>>) -> Result<Self> {
        let weights: Vec<f64> = gammas.iter().map(|g| g.norm_sqr()).collect();
        let mut e = Self::new(&weights, locals)?;
        e.gammas = Some(gammas.to_vec());
        Ok(e)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn parties(&self) -> usize {
        self.locals.len()
    }

    pub fn members(&self) -> usize {
        self.weights.len()
    }

    /// Local states of one party, indexed by member.
    pub fn locals(&self, party: usize) -> &[Vec<C64>] {
        &self.locals[party]
    }

    pub fn gammas(&self) -> Option<&[C64]> {
        self.gammas.as_deref()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.locals.iter().map(|p| p[0].len()).collect()
    }

    /// `⊗_μ |ψ_ξ^μ⟩`.
    pub fn member_state(&self, xi: usize) -> PureState {
        let mut amps = vec![C64::new(1.0, 0.0)];
        for party in &self.locals {
            amps = amps
                .iter()
                .flat_map(|a| party[xi].iter().map(move |b| a * b))
                .collect();
        }
        PureState::from_parts_unchecked(amps, self.dims())
    }

    /// `Σ_ξ p_ξ ⊗_μ |ψ_ξ^μ⟩⟨ψ_ξ^μ|`.
    pub fn mixture(&self) -> DensityMatrix {
        let n: usize = self.dims().iter().product();
        let mut m = ComplexMatrix::zeros(n, n);
        for (xi, &p) in self.weights.iter().enumerate() {
            m = &m + &self.member_state(xi).projector().without_dims().scale_real(p);
        }
        let m = m.with_dims(&self.dims()).expect("dims factor the space");
        DensityMatrix::from_parts_unchecked(m.hermitian_part(), None)
    }

    fn wfes_tag(&self) -> Result<FamilyTag> {
        let gammas = self
            .gammas
            .clone()
            .ok_or_else(|| Error::MissingProvenance("ensemble has no WFES amplitudes".into()))?;
        Ok(FamilyTag::Wfes {
            dims: self.dims(),
            gammas,
            members: (0..self.members()).map(|k| self.member_state(k).amplitudes().to_vec()).collect(),
        })
    }
}

/// `|Ψ⟩⟨Ψ|` with `|Ψ⟩ = Σ_k γ_k |ψ_k⟩`, exactly as written: for nonorthogonal
/// members its trace is `⟨Ψ|Ψ⟩ ≠ 1`.
pub fn wfes_operator(ensemble: &EnsembleDecomposition) -> Result<ComplexMatrix> {
    let gammas = ensemble
        .gammas()
        .ok_or_else(|| Error::MissingProvenance("ensemble has no WFES amplitudes".into()))?;
    let n: usize = ensemble.dims().iter().product();
    let mut psi = vec![C64::new(0.0, 0.0); n];
    for (k, g) in gammas.iter().enumerate() {
        for (p, x) in psi.iter_mut().zip(ensemble.member_state(k).amplitudes()) {
            *p += g * x;
        }
    }
    ComplexMatrix::projector(&psi).with_dims(&ensemble.dims())
}

/// The WFES as a state: [`wfes_operator`] divided by its trace, tagged so
/// that [`sub_decohere`] can recover the members.
pub fn wfes_density(ensemble: &EnsembleDecomposition) -> Result<DensityMatrix> {
    build_family(&ensemble.wfes_tag()?)
}

/// Removes the sub-coherences `γ_k γ_k'*` of a WFES, leaving the ensemble
/// `Σ |γ_k|² |ψ_k⟩⟨ψ_k|`. A sub-decohered state is returned unchanged.
pub fn sub_decohere(varrho: &DensityMatrix) -> Result<DensityMatrix> {
    match varrho.family() {
        Some(FamilyTag::Wfes { dims, gammas, members }) => {
            let out = build_family(&FamilyTag::SubDecohered {
                dims: dims.clone(),
                weights: gammas.iter().map(|g| g.norm_sqr()).collect(),
                members: members.clone(),
            })?;
            Ok(match varrho.origin() {
                Some(o) => out.with_origin(o),
                None => out,
            })
        }
        Some(FamilyTag::SubDecohered { .. }) => Ok(varrho.clone()),
        _ => Err(Error::MissingProvenance(
            "sub-decoherence needs a state built from a WFES".into(),
        )),
    }
}
