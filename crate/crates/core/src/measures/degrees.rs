use crate::numerics::{C64, TOL};
use crate::states::EnsembleDecomposition;
use crate::{Error, Result};

fn check_normalized(coeffs: &[C64]) -> Result<()> {
    if coeffs.is_empty() {
        return Err(Error::Normalization("empty coefficient list".into()));
    }
    let total: f64 = coeffs.iter().map(|z| z.norm_sqr()).sum();
    if (total - 1.0).abs() > TOL.input_normalization {
        return Err(Error::Normalization(format!(
            "coefficients have squared norm {total}, expected 1"
        )));
    }
    Ok(())
}

/// `Σ_{i<j} |a_i||a_j|` of normalised coefficients. Lies in `[0, (n-1)/2]`.
pub fn degree_of_superposition(coeffs: &[C64]) -> Result<f64> {
    check_normalized(coeffs)?;
    Ok(pairwise_modulus_sum(coeffs))
}

/// Same sum over the branch coefficients `c_i` of
/// `Σ_i c_i |ψ_1i … ψ_mi⟩`.
pub fn degree_of_entanglement(branch_coeffs: &[C64]) -> Result<f64> {
    degree_of_superposition(branch_coeffs)
}

pub(crate) fn pairwise_modulus_sum(coeffs: &[C64]) -> f64 {
    let moduli: Vec<f64> = coeffs.iter().map(|z| z.norm()).collect();
    let mut total = 0.0;
    for (i, x) in moduli.iter().enumerate() {
        for y in &moduli[i + 1..] {
            total += x * y;
        }
    }
    total
}

/// Degrees of the direct (`|11⟩ + |22⟩`) and cross (`|12⟩ + |21⟩`) states of
/// two qubit scopes, and their reduced combination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectCross {
    pub e_direct: f64,
    pub e_cross: f64,
    /// `E_d E_c / (E_d + E_c)`, zero when both vanish.
    pub e_reduced: f64,
}

/// `E_d`, `E_c` and `E†` for normalised 2-vectors `a`, `b` (moduli are
/// used for complex input).
pub fn direct_cross_entanglement(a: &[C64], b: &[C64]) -> Result<DirectCross> {
    if a.len() != 2 || b.len() != 2 {
        return Err(Error::Dimension("direct/cross states need two 2-level scopes".into()));
    }
    check_normalized(a)?;
    check_normalized(b)?;
    let (a1, a2, b1, b2) = (a[0].norm(), a[1].norm(), b[0].norm(), b[1].norm());
    let numerator = a1 * a2 * b1 * b2;
    let ratio = |den: f64| if numerator == 0.0 { 0.0 } else { numerator / den };
    let e_direct = ratio(a1 * a1 * b1 * b1 + a2 * a2 * b2 * b2);
    let e_cross = ratio(a1 * a1 * b2 * b2 + a2 * a2 * b1 * b1);
    let e_reduced = reduced(&[e_direct, e_cross]);
    Ok(DirectCross {
        e_direct,
        e_cross,
        e_reduced,
    })
}

/// `(Σ_k 1/E_k)^{-1}`, defined as zero when any `E_k` vanishes.
pub(crate) fn reduced(degrees: &[f64]) -> f64 {
    if degrees.contains(&0.0) {
        return 0.0;
    }
    1.0 / degrees.iter().map(|e| 1.0 / e).sum::<f64>()
}

/// `Σ_μ Σ_{ξ≠ξ'} |⟨ψ_ξ^μ|ψ_ξ'^μ⟩|` over ordered pairs, so identical members
/// contribute two per party.
pub fn nonorthogonality(ensemble: &EnsembleDecomposition) -> f64 {
    (0..ensemble.parties())
        .map(|mu| ordered_overlap_sum(ensemble.locals(mu)))
        .sum()
}

pub(crate) fn ordered_overlap_sum(states: &[Vec<C64>]) -> f64 {
    let mut total = 0.0;
    for (i, u) in states.iter().enumerate() {
        for (j, v) in states.iter().enumerate() {
            if i != j {
                let overlap: C64 = u.iter().zip(v).map(|(x, y)| x.conj() * y).sum();
                total += overlap.norm();
            }
        }
    }
    total
}
