use crate::numerics::{eigh, ComplexMatrix};
use crate::states::DensityMatrix;
use crate::Result;

/// `-Σ p log₂ p` with `0 log 0 = 0`; entries at or below zero are skipped.
pub fn shannon_entropy(probabilities: &[f64]) -> f64 {
    let h: f64 = probabilities
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum();
    h.max(0.0)
}

/// `h(x) = -x log₂ x - (1-x) log₂(1-x)`.
pub fn binary_entropy(x: f64) -> f64 {
    shannon_entropy(&[x, 1.0 - x])
}

/// `-Tr ρ log₂ ρ` in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    Ok(shannon_entropy(&rho.eigenvalues()?))
}

/// `Tr ρ (log₂ ρ - log₂ σ)` in bits; infinite when the support of `ρ` is not
/// inside that of `σ`.
pub fn relative_entropy(rho: &ComplexMatrix, sigma: &ComplexMatrix) -> Result<f64> {
    relative_entropy_floored(rho, sigma, 0.0)
}

/// [`relative_entropy`] with `σ`'s eigenvalues clamped below at `floor`; a
/// positive floor keeps the value finite for the optimiser.
pub(crate) fn relative_entropy_floored(rho: &ComplexMatrix, sigma: &ComplexMatrix, floor: f64) -> Result<f64> {
    let neg_entropy = -shannon_entropy(&eigh(rho)?.eigenvalues);
    Ok(neg_entropy - cross_log_term(rho, sigma, floor)?)
}

/// Weight of `ρ` on an eigenvector of `σ` below which it is rounding noise.
const NOISE_WEIGHT: f64 = 1e-14;

/// `Tr ρ log₂ σ` with `σ`'s eigenvalues clamped below at `floor`;
/// `-∞` when `ρ` has weight where `σ` vanishes.
pub(crate) fn cross_log_term(rho: &ComplexMatrix, sigma: &ComplexMatrix, floor: f64) -> Result<f64> {
    let eig = eigh(sigma)?;
    let mut cross = 0.0;
    for (k, &l) in eig.eigenvalues.iter().enumerate() {
        let v = eig.vector(k);
        let weight = rho.sandwich(&v, &v).re;
        if weight <= NOISE_WEIGHT {
            continue;
        }
        let l = l.max(floor);
        if l <= 0.0 {
            return Ok(f64::NEG_INFINITY);
        }
        cross += weight * l.log2();
    }
    Ok(cross)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::re;

    #[test]
    fn examples() {
        let pure = DensityMatrix::from_pure(&crate::states::PureState::from_amplitudes(&[re(0.6), re(0.8)]).unwrap());
        assert!(von_neumann_entropy(&pure).unwrap().abs() < 1e-12);
        let half = DensityMatrix::new(ComplexMatrix::diag_real(&[0.5, 0.5])).unwrap();
        assert!((von_neumann_entropy(&half).unwrap() - 1.0).abs() < 1e-15);
        let q = DensityMatrix::new(ComplexMatrix::diag_real(&[0.75, 0.25])).unwrap();
        assert!((von_neumann_entropy(&q).unwrap() - 0.811_278_124_459_132_8).abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_basics() {
        let a = ComplexMatrix::diag_real(&[0.5, 0.5]);
        assert!(relative_entropy(&a, &a).unwrap().abs() < 1e-15);
        let b = ComplexMatrix::diag_real(&[1.0, 0.0]);
        assert_eq!(relative_entropy(&a, &b).unwrap(), f64::INFINITY);
        // S(|0><0| || I/2) = 1
        assert!((relative_entropy(&b, &a).unwrap() - 1.0).abs() < 1e-15);
    }
}
