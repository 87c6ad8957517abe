//! Tensor-structure operations on composite-system matrices.

use super::ComplexMatrix;
use crate::{Error, Result};

/// Kronecker product `A ⊗ B`. Subsystem dims are concatenated; a factor
/// without dims counts as a single subsystem of its row dimension.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = ComplexMatrix::from_fn(ar * br, ac * bc, |i, j| {
        a[(i / br, j / bc)] * b[(i % br, j % bc)]
    });
    let mut dims: Vec<usize> = a.dims().map_or_else(|| vec![ar], <[usize]>::to_vec);
    dims.extend(b.dims().map_or_else(|| vec![br], <[usize]>::to_vec));
    out.set_dims_unchecked(Some(dims));
    out
}

fn composite_dims(rho: &ComplexMatrix) -> Result<&[usize]> {
    if !rho.is_square() {
        return Err(Error::Dimension("operator must be square".into()));
    }
    rho.dims()
        .ok_or_else(|| Error::Dimension("subsystem dims are required".into()))
}

/// Mixed-radix digits of `index`, most significant subsystem first.
fn digits(mut index: usize, dims: &[usize], out: &mut [usize]) {
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
}

fn compose(digits: &[usize], dims: &[usize], parties: &[usize]) -> usize {
    parties.iter().fold(0, |acc, &p| acc * dims[p] + digits[p])
}

/// Reduced operator on the subsystems in `keep` (kept in ascending order).
pub fn partial_trace(rho: &ComplexMatrix, keep: &[usize]) -> Result<ComplexMatrix> {
    let dims = composite_dims(rho)?;
    if keep.is_empty() {
        return Err(Error::Dimension("at least one subsystem must be kept".into()));
    }
    if let Some(&bad) = keep.iter().find(|&&k| k >= dims.len()) {
        return Err(Error::SubsystemIndex {
            index: bad,
            parties: dims.len(),
        });
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    let traced: Vec<usize> = (0..dims.len()).filter(|p| !kept.contains(p)).collect();
    let out_dim: usize = kept.iter().map(|&p| dims[p]).product();
    let mut out = ComplexMatrix::zeros(out_dim, out_dim);

    let n = rho.rows();
    let mut dr = vec![0; dims.len()];
    let mut dc = vec![0; dims.len()];
    for r in 0..n {
        digits(r, dims, &mut dr);
        let rk = compose(&dr, dims, &kept);
        let rt = compose(&dr, dims, &traced);
        for c in 0..n {
            digits(c, dims, &mut dc);
            if compose(&dc, dims, &traced) != rt {
                continue;
            }
            out[(rk, compose(&dc, dims, &kept))] += rho[(r, c)];
        }
    }
    let kept_dims: Vec<usize> = kept.iter().map(|&p| dims[p]).collect();
    out.with_dims(&kept_dims)
}

/// Transposes the indices of subsystem `party` only. An involution.
pub fn partial_transpose(rho: &ComplexMatrix, party: usize) -> Result<ComplexMatrix> {
    let dims = composite_dims(rho)?.to_vec();
    if party >= dims.len() {
        return Err(Error::SubsystemIndex {
            index: party,
            parties: dims.len(),
        });
    }
    let all: Vec<usize> = (0..dims.len()).collect();
    let n = rho.rows();
    let mut out = ComplexMatrix::zeros(n, n);
    let mut dr = vec![0; dims.len()];
    let mut dc = vec![0; dims.len()];
    for r in 0..n {
        for c in 0..n {
            digits(r, &dims, &mut dr);
            digits(c, &dims, &mut dc);
            std::mem::swap(&mut dr[party], &mut dc[party]);
            out[(compose(&dr, &dims, &all), compose(&dc, &dims, &all))] = rho[(r, c)];
        }
    }
    out.with_dims(&dims)
}
