use serde::{Deserialize, Serialize};

use super::{FamilyTag, PureState};
use crate::numerics::{eigh, ComplexMatrix, C64, TOL};
use crate::{Error, Result};

/// Time-quasistatic versus ensemble-isotactic origin of a state. Carried as
/// a label only; no computation depends on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    TimeQuasistatic,
    EnsembleIsotactic,
}

/// Unit-trace positive semidefinite operator, optionally tagged with the
/// family constructor (and parameters) that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    family: Option<FamilyTag>,
    origin: Option<Origin>,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace (`1e-12`) and positivity
    /// (`λ_min >= -1e-10`).
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Dimension("density matrix must be square".into()));
        }
        matrix.check_hermitian(TOL.hermitian)?;
        let matrix = matrix.hermitian_part();
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > TOL.trace {
            return Err(Error::Normalization(format!("trace is {trace}, expected 1")));
        }
        let min = eigh(&matrix)?.eigenvalues[0];
        if min < -TOL.psd {
            return Err(Error::Domain(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self {
            matrix,
            family: None,
            origin: None,
        })
    }

    pub(crate) fn from_parts_unchecked(matrix: ComplexMatrix, family: Option<FamilyTag>) -> Self {
        Self {
            matrix,
            family,
            origin: None,
        }
    }

    pub fn from_pure(psi: &PureState) -> Self {
        Self::from_parts_unchecked(psi.projector(), None)
    }

    pub fn with_family(mut self, family: FamilyTag) -> Self {
        self.family = Some(family);
        self
    }

    pub fn with_origin(mut self, origin: Origin) -> Self {
        self.origin = Some(origin);
        self
    }

    pub fn without_family(mut self) -> Self {
        self.family = None;
        self
    }

    pub fn with_dims(mut self, dims: &[usize]) -> Result<Self> {
        self.matrix = self.matrix.with_dims(dims)?;
        Ok(self)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn family(&self) -> Option<&FamilyTag> {
        self.family.as_ref()
    }

    pub fn origin(&self) -> Option<Origin> {
        self.origin
    }

    pub fn dims(&self) -> Option<&[usize]> {
        self.matrix.dims()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        let m = &self.matrix;
        m.data().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Ascending spectrum.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(eigh(&self.matrix)?.eigenvalues)
    }

    /// The state vector when `Tr ρ² = 1` (to `1e-9`), from the top eigenvector.
    pub fn as_pure(&self) -> Option<PureState> {
        if (self.purity() - 1.0).abs() > 1e-9 {
            return None;
        }
        let eig = eigh(&self.matrix).ok()?;
        let top = eig.vector(self.dim() - 1);
        let dims = self.dims().map_or_else(|| vec![self.dim()], <[usize]>::to_vec);
        PureState::normalized(&top, &dims).ok()
    }
}

/// Removes coherences in the given orthonormal basis (columns of `basis`):
/// `Σ_i |v_i⟩⟨v_i| ρ |v_i⟩⟨v_i|`. A projection, so idempotent.
pub fn decohere(rho: &DensityMatrix, basis: &ComplexMatrix) -> Result<DensityMatrix> {
    let n = rho.dim();
    if basis.rows() != n || basis.cols() != n {
        return Err(Error::Dimension(format!(
            "basis is {}x{}, state has dimension {n}",
            basis.rows(),
            basis.cols()
        )));
    }
    let violation = basis.unitarity_violation();
    if violation > TOL.operator {
        return Err(Error::Domain(format!(
            "basis is not orthonormal (max |V^H V - I| = {violation:e})"
        )));
    }
    let standard = basis.max_diff(&ComplexMatrix::identity(n)) == 0.0;
    let mut out = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        let v = basis.col(i);
        let p = rho.matrix().sandwich(&v, &v).re;
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] += v[r] * v[c].conj() * C64::new(p, 0.0);
            }
        }
    }
    if let Some(dims) = rho.dims() {
        out = out.with_dims(dims)?;
    }
    let family = if standard {
        rho.family().and_then(FamilyTag::decohered_in_product_basis)
    } else {
        None
    };
    let mut result = DensityMatrix::from_parts_unchecked(out.hermitian_part(), family);
    result.origin = rho.origin;
    Ok(result)
}
