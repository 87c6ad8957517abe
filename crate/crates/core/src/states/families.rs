//! Constructors for the bipartite state families and the classical reduction
//! procedure that collapses the ensemble families onto diagonal form.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{check_weights, normalize, DensityMatrix};
use crate::numerics::{ComplexMatrix, C64};
use crate::{Error, Result};

/// A family constructor together with every parameter it was given.
///
/// Vectors stored in a tag returned by [`build_family`] are normalised and
/// weights lie on the simplex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", content = "params", rename_all = "snake_case")]
pub enum FamilyTag {
    /// `|A_i⟩ ⊗ |B_j⟩`.
    ProductBasis { dims: [usize; 2], index_a: usize, index_b: usize },
    /// `|ψ_A⟩⟨ψ_A| ⊗ |ψ_B⟩⟨ψ_B|`.
    ProductPure { a: Vec<C64>, b: Vec<C64> },
    /// `(Σ p_ξ ρ_ξ^A) ⊗ (Σ p_ξ ρ_ξ^B)`.
    EnsembleProduct { weights: Vec<f64>, locals_a: Vec<Vec<C64>>, locals_b: Vec<Vec<C64>> },
    /// `Σ_i a_i b_σ(i) |A_i B_σ(i)⟩`, renormalised. `pairing[i] = σ(i)`.
    EntangledQudit { a: Vec<C64>, b: Vec<C64>, pairing: Vec<usize> },
    /// The entangled qudit with its branch coherences removed.
    DecoheredQudit { a: Vec<C64>, b: Vec<C64>, pairing: Vec<usize> },
    /// `Σ p_ξ ρ_ξ^A ⊗ ρ_ξ^B`.
    Separable { weights: Vec<f64>, locals_a: Vec<Vec<C64>>, locals_b: Vec<Vec<C64>> },
    /// `Σ p_ξ |ψ_ξ⟩⟨ψ_ξ|` with `|ψ_ξ⟩ = Σ_i λ_i^ξ |A_i B_i⟩`.
    EnsembleEntangled { weights: Vec<f64>, lambdas: Vec<Vec<C64>> },
    /// `Σ p_ξ Σ_i |λ_i^ξ|² |A_i B_i⟩⟨A_i B_i|`.
    EnsembleDecohered { weights: Vec<f64>, lambdas: Vec<Vec<C64>> },
    /// `Σ p_ξ |A_{i_ξ} B_{j_ξ}⟩⟨A_{i_ξ} B_{j_ξ}|` with distinct `i_ξ` and
    /// distinct `j_ξ`: the output of the classical reduction.
    ClassicalReduced { dims: [usize; 2], weights: Vec<f64>, pairs: Vec<(usize, usize)> },
    /// `|Ψ⟩⟨Ψ| / ⟨Ψ|Ψ⟩` with `|Ψ⟩ = Σ γ_k |ψ_k⟩`.
    Wfes { dims: Vec<usize>, gammas: Vec<C64>, members: Vec<Vec<C64>> },
    /// `Σ p_k |ψ_k⟩⟨ψ_k|`, the sub-decohered WFES.
    SubDecohered { dims: Vec<usize>, weights: Vec<f64>, members: Vec<Vec<C64>> },
}

/// Parameter-free discriminant of [`FamilyTag`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    ProductBasis,
    ProductPure,
    EnsembleProduct,
    EntangledQudit,
    DecoheredQudit,
    Separable,
    EnsembleEntangled,
    EnsembleDecohered,
    ClassicalReduced,
    Wfes,
    SubDecohered,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 11] = [
        FamilyKind::ProductBasis,
        FamilyKind::ProductPure,
        FamilyKind::EnsembleProduct,
        FamilyKind::EntangledQudit,
        FamilyKind::DecoheredQudit,
        FamilyKind::Separable,
        FamilyKind::EnsembleEntangled,
        FamilyKind::EnsembleDecohered,
        FamilyKind::ClassicalReduced,
        FamilyKind::Wfes,
        FamilyKind::SubDecohered,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::ProductBasis => "product_basis",
            FamilyKind::ProductPure => "product_pure",
            FamilyKind::EnsembleProduct => "ensemble_product",
            FamilyKind::EntangledQudit => "entangled_qudit",
            FamilyKind::DecoheredQudit => "decohered_qudit",
            FamilyKind::Separable => "separable",
            FamilyKind::EnsembleEntangled => "ensemble_entangled",
            FamilyKind::EnsembleDecohered => "ensemble_decohered",
            FamilyKind::ClassicalReduced => "classical_reduced",
            FamilyKind::Wfes => "wfes",
            FamilyKind::SubDecohered => "sub_decohered",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        let name = name.replace('-', "_");
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl FamilyTag {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilyTag::ProductBasis { .. } => FamilyKind::ProductBasis,
            FamilyTag::ProductPure { .. } => FamilyKind::ProductPure,
            FamilyTag::EnsembleProduct { .. } => FamilyKind::EnsembleProduct,
            FamilyTag::EntangledQudit { .. } => FamilyKind::EntangledQudit,
            FamilyTag::DecoheredQudit { .. } => FamilyKind::DecoheredQudit,
            FamilyTag::Separable { .. } => FamilyKind::Separable,
            FamilyTag::EnsembleEntangled { .. } => FamilyKind::EnsembleEntangled,
            FamilyTag::EnsembleDecohered { .. } => FamilyKind::EnsembleDecohered,
            FamilyTag::ClassicalReduced { .. } => FamilyKind::ClassicalReduced,
            FamilyTag::Wfes { .. } => FamilyKind::Wfes,
            FamilyTag::SubDecohered { .. } => FamilyKind::SubDecohered,
        }
    }

    /// The tag of this state after decoherence in the product basis, when
    /// that state is again a member of a family.
    pub(crate) fn decohered_in_product_basis(&self) -> Option<FamilyTag> {
        match self {
            FamilyTag::EntangledQudit { a, b, pairing } => Some(FamilyTag::DecoheredQudit {
                a: a.clone(),
                b: b.clone(),
                pairing: pairing.clone(),
            }),
            FamilyTag::EnsembleEntangled { weights, lambdas } => Some(FamilyTag::EnsembleDecohered {
                weights: weights.clone(),
                lambdas: lambdas.clone(),
            }),
            FamilyTag::ProductBasis { .. }
            | FamilyTag::DecoheredQudit { .. }
            | FamilyTag::EnsembleDecohered { .. }
            | FamilyTag::ClassicalReduced { .. } => Some(self.clone()),
            _ => None,
        }
    }

    /// Subsystem dimensions of the state the tag describes.
    pub fn dims(&self) -> Vec<usize> {
        match self {
            FamilyTag::ProductBasis { dims, .. } | FamilyTag::ClassicalReduced { dims, .. } => dims.to_vec(),
            FamilyTag::ProductPure { a, b }
            | FamilyTag::EntangledQudit { a, b, .. }
            | FamilyTag::DecoheredQudit { a, b, .. } => vec![a.len(), b.len()],
            FamilyTag::EnsembleProduct { locals_a, locals_b, .. }
            | FamilyTag::Separable { locals_a, locals_b, .. } => {
                vec![locals_a.first().map_or(0, Vec::len), locals_b.first().map_or(0, Vec::len)]
            }
            FamilyTag::EnsembleEntangled { lambdas, .. } | FamilyTag::EnsembleDecohered { lambdas, .. } => {
                let d = lambdas.first().map_or(0, Vec::len);
                vec![d, d]
            }
            FamilyTag::Wfes { dims, .. } | FamilyTag::SubDecohered { dims, .. } => dims.clone(),
        }
    }
}

fn normalized_all(vectors: &[Vec<C64>], what: &str) -> Result<Vec<Vec<C64>>> {
    if vectors.is_empty() {
        return Err(Error::Dimension(format!("no {what} given")));
    }
    let len = vectors[0].len();
    vectors
        .iter()
        .enumerate()
        .map(|(k, v)| {
            if v.len() != len {
                return Err(Error::Dimension(format!(
                    "{what} {k} has length {}, expected {len}",
                    v.len()
                )));
            }
            normalize(v)
                .map(|(v, _)| v)
                .map_err(|e| Error::Normalization(format!("{what} {k}: {e}")))
        })
        .collect()
}

fn check_count(weights: &[f64], members: usize, what: &str) -> Result<()> {
    if weights.len() != members {
        return Err(Error::Dimension(format!(
            "{} weights for {members} {what}",
            weights.len()
        )));
    }
    Ok(())
}

fn check_pairing(pairing: &[usize], na: usize, nb: usize) -> Result<()> {
    if pairing.is_empty() || pairing.len() > na {
        return Err(Error::Pairing(format!(
            "pairing has {} entries for {na} states of A",
            pairing.len()
        )));
    }
    let mut seen = HashSet::new();
    for &j in pairing {
        if j >= nb {
            return Err(Error::Pairing(format!("index {j} outside the {nb} states of B")));
        }
        if !seen.insert(j) {
            return Err(Error::Pairing(format!("B state {j} used twice")));
        }
    }
    Ok(())
}

/// Normalises and validates the parameters of a tag.
fn canonical(tag: &FamilyTag) -> Result<FamilyTag> {
    Ok(match tag {
        FamilyTag::ProductBasis { dims, index_a, index_b } => {
            if dims.contains(&0) {
                return Err(Error::Dimension("zero subsystem dimension".into()));
            }
            if *index_a >= dims[0] {
                return Err(Error::Index { index: *index_a, limit: dims[0] });
            }
            if *index_b >= dims[1] {
                return Err(Error::Index { index: *index_b, limit: dims[1] });
            }
            tag.clone()
        }
        FamilyTag::ProductPure { a, b } => FamilyTag::ProductPure { a: normalize(a)?.0, b: normalize(b)?.0 },
        FamilyTag::EnsembleProduct { weights, locals_a, locals_b } | FamilyTag::Separable { weights, locals_a, locals_b } => {
            let weights = check_weights(weights)?;
            let locals_a = normalized_all(locals_a, "local state of A")?;
            let locals_b = normalized_all(locals_b, "local state of B")?;
            check_count(&weights, locals_a.len(), "local states of A")?;
            check_count(&weights, locals_b.len(), "local states of B")?;
            if matches!(tag, FamilyTag::Separable { .. }) {
                FamilyTag::Separable { weights, locals_a, locals_b }
            } else {
                FamilyTag::EnsembleProduct { weights, locals_a, locals_b }
            }
        }
        FamilyTag::EntangledQudit { a, b, pairing } | FamilyTag::DecoheredQudit { a, b, pairing } => {
            let (a, b) = (normalize(a)?.0, normalize(b)?.0);
            check_pairing(pairing, a.len(), b.len())?;
            if pairing.iter().enumerate().all(|(i, &j)| (a[i] * b[j]).norm_sqr() == 0.0) {
                return Err(Error::Normalization("every branch has zero amplitude".into()));
            }
            let pairing = pairing.clone();
            if matches!(tag, FamilyTag::EntangledQudit { .. }) {
                FamilyTag::EntangledQudit { a, b, pairing }
            } else {
                FamilyTag::DecoheredQudit { a, b, pairing }
            }
        }
        FamilyTag::EnsembleEntangled { weights, lambdas } | FamilyTag::EnsembleDecohered { weights, lambdas } => {
            let weights = check_weights(weights)?;
            let lambdas = normalized_all(lambdas, "Schmidt vector")?;
            check_count(&weights, lambdas.len(), "Schmidt vectors")?;
            if matches!(tag, FamilyTag::EnsembleEntangled { .. }) {
                FamilyTag::EnsembleEntangled { weights, lambdas }
            } else {
                FamilyTag::EnsembleDecohered { weights, lambdas }
            }
        }
        FamilyTag::ClassicalReduced { dims, weights, pairs } => {
            let weights = check_weights(weights)?;
            check_count(&weights, pairs.len(), "pairs")?;
            let (mut seen_a, mut seen_b) = (HashSet::new(), HashSet::new());
            for &(i, j) in pairs {
                if i >= dims[0] || j >= dims[1] {
                    return Err(Error::Pairing(format!("pair ({i}, {j}) outside {}x{}", dims[0], dims[1])));
                }
                if !seen_a.insert(i) || !seen_b.insert(j) {
                    return Err(Error::Pairing(format!("pair ({i}, {j}) reuses a basis state")));
                }
            }
            FamilyTag::ClassicalReduced { dims: *dims, weights, pairs: pairs.clone() }
        }
        FamilyTag::Wfes { dims, gammas, members } => {
            let members = normalized_all(members, "member")?;
            check_member_dims(dims, &members)?;
            if gammas.len() != members.len() {
                return Err(Error::Dimension(format!("{} gammas for {} members", gammas.len(), members.len())));
            }
            let weights: Vec<f64> = gammas.iter().map(|g| g.norm_sqr()).collect();
            check_weights(&weights)?;
            FamilyTag::Wfes { dims: dims.clone(), gammas: gammas.clone(), members }
        }
        FamilyTag::SubDecohered { dims, weights, members } => {
            let weights = check_weights(weights)?;
            let members = normalized_all(members, "member")?;
            check_member_dims(dims, &members)?;
            check_count(&weights, members.len(), "members")?;
            FamilyTag::SubDecohered { dims: dims.clone(), weights, members }
        }
    })
}

fn check_member_dims(dims: &[usize], members: &[Vec<C64>]) -> Result<()> {
    let total: usize = dims.iter().product();
    if dims.is_empty() || dims.contains(&0) || members[0].len() != total {
        return Err(Error::Dimension(format!(
            "dims {dims:?} do not factor members of length {}",
            members[0].len()
        )));
    }
    Ok(())
}

fn kron(a: &[C64], b: &[C64]) -> Vec<C64> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

fn basis_vector(n: usize, i: usize) -> Vec<C64> {
    let mut v = vec![C64::new(0.0, 0.0); n];
    v[i] = C64::new(1.0, 0.0);
    v
}

fn mixture(weights: &[f64], vectors: impl Iterator<Item = Vec<C64>>) -> ComplexMatrix {
    let mut out: Option<ComplexMatrix> = None;
    for (w, v) in weights.iter().zip(vectors) {
        let term = ComplexMatrix::projector(&v).scale_real(*w);
        out = Some(match out {
            None => term,
            Some(acc) => &acc + &term,
        });
    }
    out.expect("at least one member")
}

/// `|A_i B_σ(i)⟩` amplitudes of an entangled qudit, normalised.
fn qudit_branches(a: &[C64], b: &[C64], pairing: &[usize]) -> Vec<(usize, C64)> {
    let nb = b.len();
    let raw: Vec<C64> = pairing.iter().enumerate().map(|(i, &j)| a[i] * b[j]).collect();
    let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    pairing
        .iter()
        .enumerate()
        .zip(raw)
        .map(|((i, &j), c)| (i * nb + j, c / norm))
        .collect()
}

fn diagonal_index(d: usize, i: usize) -> usize {
    i * d + i
}

fn matrix_of(tag: &FamilyTag) -> ComplexMatrix {
    match tag {
        FamilyTag::ProductBasis { dims, index_a, index_b } => {
            ComplexMatrix::projector(&basis_vector(dims[0] * dims[1], index_a * dims[1] + index_b))
        }
        FamilyTag::ProductPure { a, b } => ComplexMatrix::projector(&kron(a, b)),
        FamilyTag::EnsembleProduct { weights, locals_a, locals_b } => {
            let rho_a = mixture(weights, locals_a.iter().cloned());
            let rho_b = mixture(weights, locals_b.iter().cloned());
            crate::numerics::tensor_product(&rho_a, &rho_b).without_dims()
        }
        FamilyTag::Separable { weights, locals_a, locals_b } => {
            let terms = locals_a.iter().zip(locals_b).map(|(x, y)| {
                crate::numerics::tensor_product(&ComplexMatrix::projector(x), &ComplexMatrix::projector(y))
            });
            let mut acc = ComplexMatrix::zeros(locals_a[0].len() * locals_b[0].len(), locals_a[0].len() * locals_b[0].len());
            for (w, t) in weights.iter().zip(terms) {
                acc = &acc + &t.without_dims().scale_real(*w);
            }
            acc
        }
        FamilyTag::EntangledQudit { a, b, pairing } => {
            let mut psi = vec![C64::new(0.0, 0.0); a.len() * b.len()];
            for (k, c) in qudit_branches(a, b, pairing) {
                psi[k] = c;
            }
            ComplexMatrix::projector(&psi)
        }
        FamilyTag::DecoheredQudit { a, b, pairing } => {
            let n = a.len() * b.len();
            let mut m = ComplexMatrix::zeros(n, n);
            for (k, c) in qudit_branches(a, b, pairing) {
                m[(k, k)] = C64::new(c.norm_sqr(), 0.0);
            }
            m
        }
        FamilyTag::EnsembleEntangled { weights, lambdas } => {
            let d = lambdas[0].len();
            mixture(
                weights,
                lambdas.iter().map(|l| {
                    let mut psi = vec![C64::new(0.0, 0.0); d * d];
                    for (i, &c) in l.iter().enumerate() {
                        psi[diagonal_index(d, i)] = c;
                    }
                    psi
                }),
            )
        }
        FamilyTag::EnsembleDecohered { weights, lambdas } => {
            let d = lambdas[0].len();
            let mut m = ComplexMatrix::zeros(d * d, d * d);
            for (w, l) in weights.iter().zip(lambdas) {
                for (i, c) in l.iter().enumerate() {
                    let k = diagonal_index(d, i);
                    m[(k, k)] += C64::new(w * c.norm_sqr(), 0.0);
                }
            }
            m
        }
        FamilyTag::ClassicalReduced { dims, weights, pairs } => {
            let n = dims[0] * dims[1];
            let mut m = ComplexMatrix::zeros(n, n);
            for (w, &(i, j)) in weights.iter().zip(pairs) {
                let k = i * dims[1] + j;
                m[(k, k)] += C64::new(*w, 0.0);
            }
            m
        }
        FamilyTag::Wfes { gammas, members, .. } => {
            let mut psi = vec![C64::new(0.0, 0.0); members[0].len()];
            for (g, m) in gammas.iter().zip(members) {
                for (p, x) in psi.iter_mut().zip(m) {
                    *p += g * x;
                }
            }
            let norm_sqr: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
            ComplexMatrix::projector(&psi).scale_real(1.0 / norm_sqr)
        }
        FamilyTag::SubDecohered { weights, members, .. } => mixture(weights, members.iter().cloned()),
    }
}

/// Builds the density matrix of a family from its parameters.
///
/// Unnormalised vectors are rescaled; weights must already sum to one
/// (within `1e-9`). The returned state carries the canonical tag.
pub fn build_family(tag: &FamilyTag) -> Result<DensityMatrix> {
    let tag = canonical(tag)?;
    if matches!(tag, FamilyTag::Wfes { .. }) {
        let m = matrix_of(&tag);
        if !m.trace().re.is_finite() || m.max_abs() == 0.0 {
            return Err(Error::Normalization("members cancel: |Ψ⟩ = 0".into()));
        }
    }
    let dims = tag.dims();
    let matrix = matrix_of(&tag).hermitian_part().with_dims(&dims)?;
    Ok(DensityMatrix::from_parts_unchecked(matrix, Some(tag)))
}

/// Assigns each member a distinct basis index, the largest-modulus entry
/// still free, visiting members in order.
fn greedy_argmax(vectors: &[Vec<C64>]) -> Result<Vec<usize>> {
    let dim = vectors[0].len();
    if vectors.len() > dim {
        return Err(Error::Domain(format!(
            "{} members cannot be made orthogonal in dimension {dim}",
            vectors.len()
        )));
    }
    let mut used = vec![false; dim];
    let mut out = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut best: Option<usize> = None;
        for (i, z) in v.iter().enumerate() {
            if used[i] {
                continue;
            }
            if best.is_none_or(|b| z.norm() > v[b].norm()) {
                best = Some(i);
            }
        }
        let i = best.expect("a free index exists");
        used[i] = true;
        out.push(i);
    }
    Ok(out)
}

/// The classical reduction procedure: every member keeps a single
/// eigenstate per party (`d = 1`), and members are forced mutually
/// orthogonal.
///
/// Each member is replaced by the basis state of its largest coefficient
/// not already taken by an earlier member (ties go to the lower index).
/// Already-classical states are returned unchanged.
pub fn classical_reduction(state: &DensityMatrix) -> Result<DensityMatrix> {
    let tag = state.family().ok_or_else(|| {
        Error::MissingProvenance("classical reduction needs a family-tagged state".into())
    })?;
    let reduced = match tag {
        FamilyTag::DecoheredQudit { .. } | FamilyTag::ClassicalReduced { .. } | FamilyTag::ProductBasis { .. } => {
            return Ok(state.clone());
        }
        FamilyTag::Separable { weights, locals_a, locals_b } => FamilyTag::ClassicalReduced {
            dims: [locals_a[0].len(), locals_b[0].len()],
            weights: weights.clone(),
            pairs: greedy_argmax(locals_a)?.into_iter().zip(greedy_argmax(locals_b)?).collect(),
        },
        FamilyTag::EnsembleEntangled { weights, lambdas } | FamilyTag::EnsembleDecohered { weights, lambdas } => {
            let d = lambdas[0].len();
            FamilyTag::ClassicalReduced {
                dims: [d, d],
                weights: weights.clone(),
                pairs: greedy_argmax(lambdas)?.into_iter().map(|i| (i, i)).collect(),
            }
        }
        other => {
            return Err(Error::Domain(format!(
                "classical reduction is defined for separable and ensemble states, not {}",
                other.kind().name()
            )))
        }
    };
    let mut out = build_family(&reduced)?;
    if let Some(origin) = state.origin() {
        out = out.with_origin(origin);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{partial_transpose, re};
    use crate::states::decohere;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn v(x: &[f64]) -> Vec<C64> {
        x.iter().map(|&t| re(t)).collect()
    }

    #[test]
    fn separable_worked_example() {
        let tag = FamilyTag::Separable {
            weights: vec![0.3, 0.7],
            locals_a: vec![v(&[1.0, 0.0]), v(&[0.0, 1.0])],
            locals_b: vec![v(&[1.0, 0.0]), v(&[0.0, 1.0])],
        };
        let rho = build_family(&tag).unwrap();
        assert!(rho.matrix().max_diff(&ComplexMatrix::diag_real(&[0.3, 0.0, 0.0, 0.7])) < 1e-15);
        assert_eq!(rho.dims(), Some(&[2, 2][..]));
        let reduced = classical_reduction(&rho).unwrap();
        assert!(reduced.matrix().max_diff(rho.matrix()) < 1e-15);
    }

    #[test]
    fn equal_qudit_is_bell() {
        let h = v(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]);
        let rho = build_family(&FamilyTag::EntangledQudit { a: h.clone(), b: h, pairing: vec![0, 1] }).unwrap();
        let bell = ComplexMatrix::projector(&v(&[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]));
        assert!(rho.matrix().max_diff(&bell) < 1e-15);
    }

    #[test]
    fn decohered_qudit_is_the_diagonal_of_the_qudit() {
        let (a, b) = (v(&[0.6, 0.8]), v(&[0.28, 0.96]));
        for pairing in [vec![0, 1], vec![1, 0]] {
            let e = build_family(&FamilyTag::EntangledQudit { a: a.clone(), b: b.clone(), pairing: pairing.clone() }).unwrap();
            let d = build_family(&FamilyTag::DecoheredQudit { a: a.clone(), b: b.clone(), pairing }).unwrap();
            for r in 0..4 {
                for c in 0..4 {
                    let want = if r == c { e.matrix()[(r, c)] } else { re(0.0) };
                    assert!((d.matrix()[(r, c)] - want).norm() < 1e-15);
                }
            }
            let via = decohere(&e, &ComplexMatrix::identity(4)).unwrap();
            assert_eq!(via.family().unwrap().kind(), FamilyKind::DecoheredQudit);
            assert!(via.matrix().max_diff(d.matrix()) < 1e-15);
        }
    }

    #[test]
    fn ensemble_entangled_reduction_is_classical_and_ppt() {
        let tag = FamilyTag::EnsembleEntangled {
            weights: vec![0.25, 0.75],
            lambdas: vec![v(&[0.8, 0.6]), v(&[0.8, 0.6])],
        };
        let rho = build_family(&tag).unwrap();
        let red = classical_reduction(&rho).unwrap();
        assert!(red.matrix().max_diff(&ComplexMatrix::diag_real(&[0.25, 0.0, 0.0, 0.75])) < 1e-15);
        let pt = partial_transpose(red.matrix(), 0).unwrap();
        let min = crate::numerics::eigh(&pt).unwrap().eigenvalues[0];
        assert!(min >= -1e-10);
    }

    #[test]
    fn too_many_members_for_reduction() {
        let tag = FamilyTag::Separable {
            weights: vec![0.2, 0.3, 0.5],
            locals_a: vec![v(&[1.0, 0.0]), v(&[1.0, 1.0]), v(&[0.0, 1.0])],
            locals_b: vec![v(&[1.0, 0.0]), v(&[1.0, 1.0]), v(&[0.0, 1.0])],
        };
        assert!(matches!(classical_reduction(&build_family(&tag).unwrap()), Err(Error::Domain(_))));
    }

    #[test]
    fn untagged_reduction_fails() {
        let rho = DensityMatrix::new(ComplexMatrix::diag_real(&[0.5, 0.5])).unwrap();
        assert!(matches!(classical_reduction(&rho), Err(Error::MissingProvenance(_))));
    }

    #[test]
    fn parameter_validation() {
        let bad_weights = FamilyTag::Separable {
            weights: vec![0.5, 0.6],
            locals_a: vec![v(&[1.0, 0.0]), v(&[0.0, 1.0])],
            locals_b: vec![v(&[1.0, 0.0]), v(&[0.0, 1.0])],
        };
        assert!(matches!(build_family(&bad_weights), Err(Error::Normalization(_))));
        let bad_pairing = FamilyTag::EntangledQudit { a: v(&[1.0, 1.0]), b: v(&[1.0, 1.0]), pairing: vec![0, 0] };
        assert!(matches!(build_family(&bad_pairing), Err(Error::Pairing(_))));
        let ragged = FamilyTag::EnsembleEntangled { weights: vec![0.5, 0.5], lambdas: vec![v(&[1.0]), v(&[1.0, 0.0])] };
        assert!(matches!(build_family(&ragged), Err(Error::Dimension(_))));
    }

    #[test]
    fn tag_is_canonical_and_serializes() {
        let rho = build_family(&FamilyTag::ProductPure { a: v(&[3.0, 4.0]), b: v(&[1.0]) }).unwrap();
        let FamilyTag::ProductPure { a, .. } = rho.family().unwrap() else { panic!() };
        assert!((a[0].re - 0.6).abs() < 1e-15);
        let json = serde_json::to_string(rho.family().unwrap()).unwrap();
        assert!(json.contains("\"name\":\"product_pure\""));
        let back: FamilyTag = serde_json::from_str(&json).unwrap();
        assert_eq!(&back, rho.family().unwrap());
        assert_eq!(FamilyKind::from_name("ensemble-product"), Some(FamilyKind::EnsembleProduct));
    }

    #[test]
    fn every_family_is_a_state() {
        let tags = [
            FamilyTag::ProductBasis { dims: [2, 3], index_a: 1, index_b: 2 },
            FamilyTag::EnsembleProduct {
                weights: vec![0.5, 0.5],
                locals_a: vec![v(&[1.0, 0.0]), v(&[1.0, 1.0])],
                locals_b: vec![v(&[1.0, 2.0]), v(&[0.0, 1.0])],
            },
            FamilyTag::EnsembleDecohered { weights: vec![1.0], lambdas: vec![v(&[0.6, 0.8])] },
            FamilyTag::Wfes {
                dims: vec![2],
                gammas: vec![re(FRAC_1_SQRT_2), re(FRAC_1_SQRT_2)],
                members: vec![v(&[1.0, 0.0]), v(&[1.0, 1.0])],
            },
        ];
        for tag in &tags {
            let rho = build_family(tag).unwrap();
            assert!(DensityMatrix::new(rho.matrix().clone()).is_ok(), "{:?}", tag.kind());
        }
    }
}
