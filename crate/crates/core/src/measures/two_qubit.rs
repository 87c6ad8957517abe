use std::f64::consts::FRAC_1_SQRT_2;

use crate::numerics::{eigh, partial_transpose, trace_norm, C64};
use crate::states::{schmidt_decompose, DensityMatrix, PureState};
use crate::{Error, Result};

use super::binary_entropy;

/// Basis in which the concurrence of a pure two-qubit state is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConcurrenceBasis {
    /// `|Σ α_i²|` with `α` the coordinates in the magic basis.
    Magic,
    /// `2|ad - bc|` from the computational amplitudes.
    Computational,
    /// `2xy` from the Schmidt coefficients.
    Schmidt,
}

fn check_two_qubit(psi: &PureState) -> Result<()> {
    if psi.dims() != [2, 2] {
        return Err(Error::Dimension(format!(
            "concurrence needs a 2x2 pure state, got dims {:?}",
            psi.dims()
        )));
    }
    Ok(())
}

/// Coordinates in the magic basis
/// `e₁ = (|00⟩+|11⟩)/√2`, `e₂ = i(|00⟩-|11⟩)/√2`,
/// `e₃ = i(|01⟩+|10⟩)/√2`, `e₄ = (|01⟩-|10⟩)/√2`.
pub fn magic_coordinates(psi: &PureState) -> Result<[C64; 4]> {
    check_two_qubit(psi)?;
    let [a, b, c, d] = [0, 1, 2, 3].map(|k| psi.amplitudes()[k]);
    let i = C64::new(0.0, 1.0);
    Ok([
        (a + d) * FRAC_1_SQRT_2,
        -i * (a - d) * FRAC_1_SQRT_2,
        -i * (b + c) * FRAC_1_SQRT_2,
        (b - c) * FRAC_1_SQRT_2,
    ])
}

pub fn concurrence(psi: &PureState, basis: ConcurrenceBasis) -> Result<f64> {
    check_two_qubit(psi)?;
    let c = match basis {
        ConcurrenceBasis::Magic => magic_coordinates(psi)?.iter().map(|z| z * z).sum::<C64>().norm(),
        ConcurrenceBasis::Computational => {
            let [a, b, c, d] = [0, 1, 2, 3].map(|k| psi.amplitudes()[k]);
            2.0 * (a * d - b * c).norm()
        }
        ConcurrenceBasis::Schmidt => {
            let s = schmidt_decompose(psi)?;
            2.0 * s.coefficients[0] * s.coefficients[1]
        }
    };
    Ok(c.min(1.0))
}

fn check_concurrence(c: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::Domain(format!("concurrence {c} outside [0, 1]")));
    }
    Ok(())
}

/// `h((1 + √(1 - C²)) / 2)` in bits.
pub fn entanglement_of_formation(c: f64) -> Result<f64> {
    check_concurrence(c)?;
    Ok(binary_entropy((1.0 + (1.0 - c * c).sqrt()) / 2.0))
}

/// `Σ p_i E_f(C(ψ_i))` for the given decomposition (no minimisation over
/// decompositions).
pub fn formation_entropy_of_ensemble(members: &[(f64, PureState)]) -> Result<f64> {
    let weights: Vec<f64> = members.iter().map(|(p, _)| *p).collect();
    crate::states::check_weights(&weights)?;
    let mut total = 0.0;
    for (p, psi) in members {
        total += p * entanglement_of_formation(concurrence(psi, ConcurrenceBasis::Computational)?)?;
    }
    Ok(total)
}

/// `½ [[1 + s, C], [C, 1 - s]]` with `s = √(1 - C²)`: populations carry the
/// entropy, coherences the concurrence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyConcurrenceMatrix {
    pub concurrence: f64,
    /// Row-major entries.
    pub entries: [[f64; 2]; 2],
}

impl EntropyConcurrenceMatrix {
    pub fn new(c: f64) -> Result<Self> {
        check_concurrence(c)?;
        let upper = (1.0 + (1.0 - c * c).sqrt()) / 2.0;
        let lower = 1.0 - upper;
        Ok(Self {
            concurrence: c,
            entries: [[upper, c / 2.0], [c / 2.0, lower]],
        })
    }

    pub fn trace(&self) -> f64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn determinant(&self) -> f64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }

    /// `h` of the upper population, which is `E_f`.
    pub fn entropy(&self) -> f64 {
        binary_entropy(self.entries[0][0])
    }
}

fn check_bipartite(rho: &DensityMatrix) -> Result<()> {
    match rho.dims() {
        Some(d) if d.len() == 2 => Ok(()),
        other => Err(Error::Dimension(format!("negativity needs bipartite dims, got {other:?}"))),
    }
}

/// `(‖ρ^{T_A}‖₁ - 1) / 2`.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    check_bipartite(rho)?;
    let pt = partial_transpose(rho.matrix(), 0)?;
    Ok(((trace_norm(&pt)? - 1.0) / 2.0).max(0.0))
}

/// `|Σ μ_i|` over the negative eigenvalues of `ρ^{T_A}`.
pub fn negativity_from_spectrum(rho: &DensityMatrix) -> Result<f64> {
    check_bipartite(rho)?;
    let pt = partial_transpose(rho.matrix(), 0)?;
    Ok(eigh(&pt)?.eigenvalues.iter().filter(|&&l| l < 0.0).sum::<f64>().abs())
}

/// `2N` for a pure state (`Tr ρ² ≥ 1 - 1e-9`).
pub fn robustness_pure(rho: &DensityMatrix) -> Result<f64> {
    let purity = rho.purity();
    if purity < 1.0 - 1e-9 {
        return Err(Error::Domain(format!("robustness formula needs a pure state (purity {purity})")));
    }
    Ok(2.0 * negativity(rho)?)
}
