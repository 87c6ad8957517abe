use crate::numerics::{ComplexMatrix, C64, TOL};
use crate::{Error, Result};

/// Normalised state vector on a (possibly composite) space.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<C64>,
    dims: Vec<usize>,
}

impl PureState {
    /// Validates normalization (to `1e-12`) and the dims factorisation.
    pub fn new(amplitudes: Vec<C64>, dims: &[usize]) -> Result<Self> {
        check_dims(amplitudes.len(), dims)?;
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > TOL.normalization {
            return Err(Error::Normalization(format!(
                "state has squared norm {norm_sqr}, expected 1"
            )));
        }
        Ok(Self {
            amplitudes,
            dims: dims.to_vec(),
        })
    }

    /// Rescales to unit norm; rejects the zero vector.
    pub fn normalized(amplitudes: &[C64], dims: &[usize]) -> Result<Self> {
        check_dims(amplitudes.len(), dims)?;
        let (amplitudes, _) = super::normalize(amplitudes)?;
        Ok(Self {
            amplitudes,
            dims: dims.to_vec(),
        })
    }

    /// Single-system state from a plain list.
    pub fn from_amplitudes(amplitudes: &[C64]) -> Result<Self> {
        Self::normalized(amplitudes, &[amplitudes.len()])
    }

    /// Computational basis vector `|index⟩`.
    pub fn basis(dims: &[usize], index: usize) -> Result<Self> {
        let n: usize = dims.iter().product();
        if index >= n {
            return Err(Error::Index { index, limit: n });
        }
        let mut amplitudes = vec![C64::new(0.0, 0.0); n];
        amplitudes[index] = C64::new(1.0, 0.0);
        Self::new(amplitudes, dims)
    }

    pub(crate) fn from_parts_unchecked(amplitudes: Vec<C64>, dims: Vec<usize>) -> Self {
        Self { amplitudes, dims }
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// `|ψ⟩⟨ψ|` with the subsystem dims attached.
    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::projector(&self.amplitudes)
            .with_dims(&self.dims)
            .expect("dims validated on construction")
    }

    pub fn inner(&self, other: &PureState) -> C64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `⟨ψ|A|ψ⟩`.
    pub fn expectation(&self, a: &ComplexMatrix) -> C64 {
        a.sandwich(&self.amplitudes, &self.amplitudes)
    }

    /// `A|ψ⟩`, renormalised.
    pub fn apply(&self, a: &ComplexMatrix) -> Result<PureState> {
        if a.cols() != self.dim() || a.rows() != self.dim() {
            return Err(Error::Dimension(format!(
                "operator is {}x{}, state has dimension {}",
                a.rows(),
                a.cols(),
                self.dim()
            )));
        }
        Self::normalized(&a.mul_vec(&self.amplitudes), &self.dims)
    }

    /// `|ψ⟩ ⊗ |φ⟩`.
    pub fn tensor(&self, other: &PureState) -> PureState {
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        Self { amplitudes, dims }
    }
}

fn check_dims(len: usize, dims: &[usize]) -> Result<()> {
    let product: usize = dims.iter().product();
    if dims.is_empty() || dims.contains(&0) || product != len {
        return Err(Error::Dimension(format!(
            "dims {dims:?} do not factor a vector of length {len}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::re;

    #[test]
    fn normalization_is_enforced() {
        assert!(PureState::new(vec![re(1.0), re(1.0)], &[2]).is_err());
        let s = PureState::normalized(&[re(1.0), re(1.0)], &[2]).unwrap();
        assert!((s.amplitudes()[0].re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(PureState::normalized(&[re(0.0), re(0.0)], &[2]).is_err());
    }

    #[test]
    fn tensor_of_basis_states() {
        let a = PureState::basis(&[2], 0).unwrap();
        let b = PureState::basis(&[2], 1).unwrap();
        let ab = a.tensor(&b);
        assert_eq!(ab.dims(), &[2, 2]);
        assert_eq!(ab, PureState::basis(&[2, 2], 1).unwrap());
    }

    #[test]
    fn bad_dims() {
        assert!(PureState::new(vec![re(1.0), re(0.0), re(0.0)], &[2, 2]).is_err());
        assert!(PureState::basis(&[2], 2).is_err());
    }
}
