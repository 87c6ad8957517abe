//! Scopes: weighted sets of orthonormal states a motion can occupy, and the
//! operators that act individual states out of them.

use std::collections::HashSet;

use super::{normalize, PureState};
use crate::numerics::{ComplexMatrix, C64, TOL};
use crate::{Error, Result};

/// Geometric shape spanned by the `n` states of a scope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScopeShape {
    Point,
    Segment,
    Triangle,
    Tetrahedron,
    /// Five or more states.
    Ball,
}

impl ScopeShape {
    pub fn for_states(n: usize) -> Self {
        match n {
            0 | 1 => ScopeShape::Point,
            2 => ScopeShape::Segment,
            3 => ScopeShape::Triangle,
            4 => ScopeShape::Tetrahedron,
            _ => ScopeShape::Ball,
        }
    }
}

/// Per-party coefficient lists, plus the branch structure for entangled
/// scopes.
#[derive(Debug, Clone, PartialEq)]
pub struct ScopeDecomposition {
    coeffs: Vec<Vec<C64>>,
    /// Branch `k` uses basis index `branch_map[k][party]` of each party.
    branch_map: Option<Vec<Vec<usize>>>,
    labels: Option<Vec<String>>,
    /// Norm of the caller's coefficients before normalization, per party.
    scale: Vec<f64>,
}

impl ScopeDecomposition {
    pub fn parties(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self, party: usize) -> &[C64] {
        &self.coeffs[party]
    }

    pub fn branch_map(&self) -> Option<&[Vec<usize>]> {
        self.branch_map.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Factor by which the caller's coefficients were divided.
    pub fn scale(&self, party: usize) -> f64 {
        self.scale[party]
    }

    /// Number of states in the scope: basis states for one party, branches
    /// for an entangled scope.
    pub fn len(&self) -> usize {
        match &self.branch_map {
            Some(map) => map.len(),
            None => self.coeffs[0].len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn shape(&self) -> ScopeShape {
        ScopeShape::for_states(self.len())
    }

    /// Amplitudes of the branches, `Π_party coeff[party][index]`, before
    /// renormalisation.
    fn branch_products(&self) -> Vec<C64> {
        match &self.branch_map {
            Some(map) => map
                .iter()
                .map(|idx| idx.iter().enumerate().map(|(p, &i)| self.coeffs[p][i]).product())
                .collect(),
            None => self.coeffs[0].clone(),
        }
    }
}

/// Builds a single-party scope `Σ α_i |ψ_i⟩` on an orthonormal basis.
/// Unnormalised input is rescaled; all-zero input is rejected.
pub fn make_scope(
    coeffs: &[C64],
    labels: Option<Vec<String>>,
) -> Result<(ScopeDecomposition, PureState)> {
    let (alpha, norm) = normalize(coeffs)?;
    if let Some(l) = &labels {
        if l.len() != alpha.len() {
            return Err(Error::Dimension(format!(
                "{} labels for {} coefficients",
                l.len(),
                alpha.len()
            )));
        }
    }
    let state = PureState::from_parts_unchecked(alpha.clone(), vec![alpha.len()]);
    let scope = ScopeDecomposition {
        coeffs: vec![alpha],
        branch_map: None,
        labels,
        scale: vec![norm],
    };
    Ok((scope, state))
}

/// `(i, i)` for `i < n`.
pub fn direct_pairing(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, i)).collect()
}

/// `(i, n - 1 - i)`: for two levels, `|12⟩ + |21⟩`.
pub fn cross_pairing(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, n - 1 - i)).collect()
}

/// `(i, sigma[i])`.
pub fn permutation_pairing(sigma: &[usize]) -> Vec<(usize, usize)> {
    sigma.iter().copied().enumerate().collect()
}

/// Entangles two single-party scopes along the given branches:
/// `Σ_k a_{i_k} b_{j_k} |i_k j_k⟩ / sqrt(Σ_k |a_{i_k} b_{j_k}|²)`.
///
/// The pairing must be injective on both sides; passing fewer branches than
/// `min(n, m)` models a partially realised scope. One branch gives a
/// product state.
pub fn entangle(
    a: &ScopeDecomposition,
    b: &ScopeDecomposition,
    pairing: &[(usize, usize)],
) -> Result<(ScopeDecomposition, PureState)> {
    if a.parties() != 1 || b.parties() != 1 {
        return Err(Error::Pairing("entangle takes two single-party scopes".into()));
    }
    let (na, nb) = (a.coeffs[0].len(), b.coeffs[0].len());
    if pairing.is_empty() {
        return Err(Error::Pairing("no branches given".into()));
    }
    let mut seen_a = HashSet::new();
    let mut seen_b = HashSet::new();
    for &(i, j) in pairing {
        if i >= na || j >= nb {
            return Err(Error::Pairing(format!("branch ({i}, {j}) outside {na}x{nb}")));
        }
        if !seen_a.insert(i) || !seen_b.insert(j) {
            return Err(Error::Pairing(format!(
                "branch ({i}, {j}) reuses a basis state; the pairing must be one-to-one"
            )));
        }
    }

    let mut amplitudes = vec![C64::new(0.0, 0.0); na * nb];
    for &(i, j) in pairing {
        amplitudes[i * nb + j] = a.coeffs[0][i] * b.coeffs[0][j];
    }
    let (amplitudes, _) = normalize(&amplitudes)
        .map_err(|_| Error::Normalization("every realised branch has zero amplitude".into()))?;
    let state = PureState::from_parts_unchecked(amplitudes, vec![na, nb]);
    let scope = ScopeDecomposition {
        coeffs: vec![a.coeffs[0].clone(), b.coeffs[0].clone()],
        branch_map: Some(pairing.iter().map(|&(i, j)| vec![i, j]).collect()),
        labels: None,
        scale: vec![1.0, 1.0],
    };
    Ok((scope, state))
}

/// Projectors that act the individual states of a scope out of it.
#[derive(Debug, Clone)]
pub struct ActiveOperatorSet {
    operators: Vec<ComplexMatrix>,
    scope: PureState,
}

impl ActiveOperatorSet {
    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn scope_state(&self) -> &PureState {
        &self.scope
    }

    /// `⟨S|A_i|S⟩` for every operator.
    pub fn weights(&self) -> Vec<f64> {
        self.operators
            .iter()
            .map(|a| self.scope.expectation(a).re)
            .collect()
    }

    /// `A_i |S⟩` (unnormalised).
    pub fn act(&self, i: usize) -> Vec<C64> {
        self.operators[i].mul_vec(self.scope.amplitudes())
    }

    /// The complement `1 - A_i`.
    pub fn anti_active(&self, i: usize) -> ComplexMatrix {
        let n = self.scope.dim();
        &ComplexMatrix::identity(n) - &self.operators[i]
    }

    /// Idempotence, mutual orthogonality and unit total weight.
    pub fn check(&self) -> Result<()> {
        let tol = TOL.operator;
        for (i, a) in self.operators.iter().enumerate() {
            if (a * a).max_diff(a) > tol {
                return Err(Error::Domain(format!("A_{i} is not idempotent")));
            }
            for (j, b) in self.operators.iter().enumerate().skip(i + 1) {
                if (a * b).max_abs() > tol {
                    return Err(Error::Domain(format!("A_{i} A_{j} != 0")));
                }
            }
        }
        let total: f64 = self.weights().iter().sum();
        if (total - 1.0).abs() > tol {
            return Err(Error::Normalization(format!("active weights sum to {total}")));
        }
        Ok(())
    }
}

/// Rank-one projectors onto the scope's basis states (or, for an entangled
/// scope, onto its branch product states), together with the scope state.
pub fn active_operators(scope: &ScopeDecomposition) -> Result<ActiveOperatorSet> {
    let (state, dims, indices): (Vec<C64>, Vec<usize>, Vec<usize>) = match &scope.branch_map {
        None => {
            let n = scope.coeffs[0].len();
            (scope.coeffs[0].clone(), vec![n], (0..n).collect())
        }
        Some(map) => {
            let dims: Vec<usize> = scope.coeffs.iter().map(Vec::len).collect();
            let flat = |idx: &Vec<usize>| idx.iter().zip(&dims).fold(0, |acc, (&i, &d)| acc * d + i);
            let indices: Vec<usize> = map.iter().map(flat).collect();
            let total: usize = dims.iter().product();
            let mut amps = vec![C64::new(0.0, 0.0); total];
            for (&k, c) in indices.iter().zip(scope.branch_products()) {
                amps[k] = c;
            }
            let (amps, _) = normalize(&amps)?;
            (amps, dims, indices)
        }
    };
    let total: usize = dims.iter().product();
    let operators = indices
        .iter()
        .map(|&k| {
            let mut p = ComplexMatrix::zeros(total, total);
            p[(k, k)] = C64::new(1.0, 0.0);
            p.with_dims(&dims).expect("dims factor the space")
        })
        .collect();
    let set = ActiveOperatorSet {
        operators,
        scope: PureState::from_parts_unchecked(state, dims),
    };
    set.check()?;
    Ok(set)
}
