use super::PureState;
use crate::numerics::{svd, ComplexMatrix, C64};
use crate::{Error, Result};

/// `|ψ⟩ = Σ_k λ_k |u_k⟩ ⊗ |v_k⟩`.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    /// Descending, `min(d_A, d_B)` entries, `Σ λ² = 1`.
    pub coefficients: Vec<f64>,
    /// Columns `|u_k⟩`.
    pub basis_a: ComplexMatrix,
    /// Columns `|v_k⟩`.
    pub basis_b: ComplexMatrix,
}

impl SchmidtDecomposition {
    pub fn rank(&self, tol: f64) -> usize {
        self.coefficients.iter().filter(|&&l| l > tol).count()
    }

    pub fn reconstruct(&self) -> Vec<C64> {
        let (da, db) = (self.basis_a.rows(), self.basis_b.rows());
        let mut out = vec![C64::new(0.0, 0.0); da * db];
        for (k, &l) in self.coefficients.iter().enumerate() {
            for i in 0..da {
                for j in 0..db {
                    out[i * db + j] += self.basis_a[(i, k)] * self.basis_b[(j, k)] * l;
                }
            }
        }
        out
    }
}

/// Schmidt form of a bipartite pure state, from the SVD of its `d_A × d_B`
/// amplitude matrix.
pub fn schmidt_decompose(psi: &PureState) -> Result<SchmidtDecomposition> {
    let &[da, db] = psi.dims() else {
        return Err(Error::Dimension(format!(
            "Schmidt decomposition needs two parties, got dims {:?}",
            psi.dims()
        )));
    };
    let m = ComplexMatrix::from_vec(da, db, psi.amplitudes().to_vec())?;
    let s = svd(&m)?;
    Ok(SchmidtDecomposition {
        coefficients: s.singular_values,
        basis_a: s.left_vectors,
        basis_b: s.right_vectors.conj(),
    })
}
