use crate::numerics::{eigh, TOL};
use crate::states::DensityMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LsCorrelation {
    /// Largest `λ ∈ [0, 1]` with `ρ - λσ ⪰ 0`.
    pub lambda: f64,
    /// `λ · measure(σ)`.
    pub value: f64,
}

const BISECTION_STEPS: usize = 60;

/// Attributes `λ` times the correlation of a reference state `σ` to `ρ`,
/// where `ρ = λσ + (1 - λ)ρ'` with the largest admissible `λ`.
pub fn ls_correlation(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    measure: impl Fn(&DensityMatrix) -> f64,
) -> Result<LsCorrelation> {
    if rho.dim() != sigma.dim() {
        return Err(Error::Dimension(format!(
            "state has dimension {}, reference has {}",
            rho.dim(),
            sigma.dim()
        )));
    }
    let feasible = |lambda: f64| -> Result<bool> {
        let diff = rho.matrix() - &sigma.matrix().scale_real(lambda);
        Ok(eigh(&diff)?.eigenvalues[0] >= -TOL.psd)
    };
    let lambda = if feasible(1.0)? {
        1.0
    } else {
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if feasible(mid)? {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };
    Ok(LsCorrelation {
        lambda,
        value: lambda * measure(sigma),
    })
}
