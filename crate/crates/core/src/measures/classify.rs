use crate::numerics::C64;
use crate::states::{DensityMatrix, FamilyKind, FamilyTag};
use crate::Result;

use super::degrees::{ordered_overlap_sum, pairwise_modulus_sum};
use super::{negativity, shannon_entropy, von_neumann_entropy};

/// A correlation that is either present (with its size) or absent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Correlation {
    pub present: bool,
    /// Zero when absent.
    pub value: f64,
}

impl Correlation {
    fn new(present: bool, value: f64) -> Self {
        Self {
            present,
            value: if present { value } else { 0.0 },
        }
    }
}

/// The four kinds of correlation of a structured bipartite state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationProfile {
    pub family: FamilyKind,
    /// Degree of entanglement `E` (averaged over members for ensembles).
    pub entanglement: Correlation,
    pub decohered_classicality: bool,
    /// Degree of nonorthogonality `Ō`.
    pub nonorthogonality: Correlation,
    /// Shannon entropy of the member weights `p_ξ`, in bits.
    pub coarse_grained_classicality: Correlation,
}

impl CorrelationProfile {
    /// `(entanglement, decohered classicality, nonorthogonality,
    /// coarse-grained classicality)`.
    pub fn flags(&self) -> [bool; 4] {
        [
            self.entanglement.present,
            self.decohered_classicality,
            self.nonorthogonality.present,
            self.coarse_grained_classicality.present,
        ]
    }
}

/// What can be said about a state without structural provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralFacts {
    pub entropy: f64,
    pub purity: f64,
    /// Present for bipartite states.
    pub negativity: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Classification {
    Profile(CorrelationProfile),
    Unstructured(SpectralFacts),
}

impl Classification {
    pub fn profile(&self) -> Option<&CorrelationProfile> {
        match self {
            Classification::Profile(p) => Some(p),
            Classification::Unstructured(_) => None,
        }
    }
}

/// Table of flags per family:
/// `(entanglement, decohered classicality, nonorthogonality, coarse-grained)`.
pub fn table_flags(kind: FamilyKind) -> Option<[bool; 4]> {
    Some(match kind {
        FamilyKind::EntangledQudit => [true, true, false, false],
        FamilyKind::DecoheredQudit | FamilyKind::ClassicalReduced => [false, true, false, false],
        FamilyKind::EnsembleEntangled => [true, true, true, true],
        FamilyKind::EnsembleDecohered => [false, true, true, true],
        FamilyKind::Separable => [false, false, true, true],
        FamilyKind::EnsembleProduct => [false, false, true, false],
        FamilyKind::ProductBasis | FamilyKind::ProductPure => [false; 4],
        FamilyKind::Wfes | FamilyKind::SubDecohered => return None,
    })
}

fn normalized_degree(coeffs: &[C64]) -> f64 {
    let norm = coeffs.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 {
        return 0.0;
    }
    let unit: Vec<C64> = coeffs.iter().map(|z| z / norm).collect();
    pairwise_modulus_sum(&unit)
}

/// Quantitative `(E, Ō, H(p))` for a tag, before masking by the flags.
fn quantities(tag: &FamilyTag) -> (f64, f64, f64) {
    match tag {
        FamilyTag::EntangledQudit { a, b, pairing } | FamilyTag::DecoheredQudit { a, b, pairing } => {
            let eta: Vec<C64> = pairing.iter().enumerate().map(|(i, &j)| a[i] * b[j]).collect();
            (normalized_degree(&eta), 0.0, 0.0)
        }
        FamilyTag::EnsembleEntangled { weights, lambdas } | FamilyTag::EnsembleDecohered { weights, lambdas } => {
            let e = weights.iter().zip(lambdas).map(|(p, l)| p * normalized_degree(l)).sum();
            // each member's Schmidt vector stands in for its local state on both sides
            (e, 2.0 * ordered_overlap_sum(lambdas), shannon_entropy(weights))
        }
        FamilyTag::Separable { weights, locals_a, locals_b }
        | FamilyTag::EnsembleProduct { weights, locals_a, locals_b } => (
            0.0,
            ordered_overlap_sum(locals_a) + ordered_overlap_sum(locals_b),
            shannon_entropy(weights),
        ),
        _ => (0.0, 0.0, 0.0),
    }
}

/// Reads the four correlations off a family-tagged state; untagged states
/// (and the WFES families) get spectrum-based facts only.
pub fn classify(state: &DensityMatrix) -> Result<Classification> {
    let structured = state
        .family()
        .and_then(|tag| table_flags(tag.kind()).map(|flags| (tag, flags)));
    let Some((tag, flags)) = structured else {
        let bipartite = state.dims().is_some_and(|d| d.len() == 2);
        return Ok(Classification::Unstructured(SpectralFacts {
            entropy: von_neumann_entropy(state)?,
            purity: state.purity(),
            negativity: if bipartite { Some(negativity(state)?) } else { None },
        }));
    };
    let (e, o, s) = quantities(tag);
    Ok(Classification::Profile(CorrelationProfile {
        family: tag.kind(),
        entanglement: Correlation::new(flags[0], e),
        decohered_classicality: flags[1],
        nonorthogonality: Correlation::new(flags[2], o),
        coarse_grained_classicality: Correlation::new(flags[3], s),
    }))
}
