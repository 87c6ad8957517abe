use num_complex::Complex64 as C64;

use super::{eigh, ComplexMatrix, TOL};
use crate::Result;

/// Full singular value decomposition `A = U Σ V^H`.
#[derive(Debug, Clone)]
pub struct SvdResult {
    /// Descending, length `min(rows, cols)`.
    pub singular_values: Vec<f64>,
    /// `rows x rows`, unitary.
    pub left_vectors: ComplexMatrix,
    /// `cols x cols`, unitary.
    pub right_vectors: ComplexMatrix,
}

impl SvdResult {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let m = self.left_vectors.rows();
        let n = self.right_vectors.rows();
        let u = &self.left_vectors;
        let v = &self.right_vectors;
        ComplexMatrix::from_fn(m, n, |i, j| {
            self.singular_values
                .iter()
                .enumerate()
                .map(|(k, &s)| u[(i, k)] * s * v[(j, k)].conj())
                .sum()
        })
    }
}

/// SVD through the Hermitian eigenproblem of `A^H A`.
///
/// Right vectors are the eigenvectors of `A^H A`; left vectors are
/// `A v / σ` for the numerically nonzero singular values and a Gram–Schmidt
/// completion for the rest.
pub fn svd(a: &ComplexMatrix) -> Result<SvdResult> {
    let (m, n) = (a.rows(), a.cols());
    let gram = (&a.dagger() * a).without_dims().hermitian_part();
    let eig = eigh(&gram)?;

    // descending order of eigenvalues of A^H A
    let right = ComplexMatrix::from_fn(n, n, |i, k| eig.eigenvectors[(i, n - 1 - k)]);
    let r = m.min(n);
    let singular_values: Vec<f64> = (0..r)
        .map(|k| eig.eigenvalues[n - 1 - k].max(0.0).sqrt())
        .collect();

    let largest = singular_values.first().copied().unwrap_or(0.0);
    let cutoff = TOL.svd_null * largest.max(1.0);
    let mut columns: Vec<Vec<C64>> = Vec::with_capacity(m);
    for (k, &s) in singular_values.iter().enumerate() {
        if s <= cutoff {
            break;
        }
        let mut u = a.mul_vec(&right.col(k));
        u.iter_mut().for_each(|z| *z /= s);
        if let Some(u) = orthonormalize_against(&u, &columns) {
            columns.push(u);
        } else {
            break;
        }
    }
    complete_basis(&mut columns, m);

    let mut left = ComplexMatrix::zeros(m, m);
    for (k, c) in columns.iter().enumerate() {
        left.set_col(k, c);
    }
    Ok(SvdResult {
        singular_values,
        left_vectors: left,
        right_vectors: right,
    })
}

/// Removes the components along `basis` (twice, for stability) and
/// normalises; `None` when nothing is left.
pub(crate) fn orthonormalize_against(v: &[C64], basis: &[Vec<C64>]) -> Option<Vec<C64>> {
    let mut w = v.to_vec();
    for _ in 0..2 {
        for b in basis {
            let overlap: C64 = b.iter().zip(&w).map(|(x, y)| x.conj() * y).sum();
            w.iter_mut().zip(b).for_each(|(y, x)| *y -= overlap * x);
        }
    }
    let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm < 1e-8 {
        return None;
    }
    w.iter_mut().for_each(|z| *z /= norm);
    Some(w)
}

/// Extends an orthonormal list to a basis of `C^dim` with standard vectors.
pub(crate) fn complete_basis(columns: &mut Vec<Vec<C64>>, dim: usize) {
    for e in 0..dim {
        if columns.len() == dim {
            break;
        }
        let mut unit = vec![C64::new(0.0, 0.0); dim];
        unit[e] = C64::new(1.0, 0.0);
        if let Some(u) = orthonormalize_against(&unit, columns) {
            columns.push(u);
        }
    }
}
