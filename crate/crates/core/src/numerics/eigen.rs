use num_complex::Complex64 as C64;

use super::{ComplexMatrix, TOL};
use crate::{Error, Result};

/// Spectral decomposition `A = V diag(eigenvalues) V^H`.
#[derive(Debug, Clone)]
pub struct EigenResult {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Unitary; column `k` belongs to `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl EigenResult {
    pub fn vector(&self, k: usize) -> Vec<C64> {
        self.eigenvectors.col(k)
    }

    /// `V diag(f(λ)) V^H`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> C64) -> ComplexMatrix {
        let fl: Vec<C64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        self.reconstruct_from(&fl)
    }

    /// `V diag(values) V^H`.
    pub fn reconstruct_from(&self, fl: &[C64]) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let n = v.rows();
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n).map(|k| v[(i, k)] * fl[k] * v[(j, k)].conj()).sum()
        })
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.reconstruct_with(|l| C64::new(l, 0.0))
    }
}

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Each rotation first removes the phase of `a_pq` and then applies the
/// classical real Jacobi rotation, so the combined transformation is the
/// unitary `G = diag(1, e^{-iφ}) R(θ)` on the `(p, q)` plane.
pub fn eigh(a: &ComplexMatrix) -> Result<EigenResult> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "eigh needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    a.check_hermitian(TOL.hermitian)?;

    let n = a.rows();
    let mut m = a.hermitian_part().without_dims();
    let mut v = ComplexMatrix::identity(n);
    let scale = m.max_abs();
    let threshold = TOL.jacobi_off_diagonal * scale;

    let off_diagonal = |m: &ComplexMatrix| {
        let mut worst: f64 = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                worst = worst.max(m[(p, q)].norm());
            }
        }
        worst
    };

    let mut sweeps = 0;
    while off_diagonal(&m) > threshold {
        if sweeps == TOL.jacobi_max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_diagonal: off_diagonal(&m),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let r = apq.norm();
                if r <= threshold * 1e-3 {
                    continue;
                }
                let phase = apq / r;
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // G[:,p] = (c, -s e^{-iφ}),  G[:,q] = (s, c e^{-iφ})
                let e = phase.conj();
                let g_pp = C64::new(c, 0.0);
                let g_qp = -e * s;
                let g_pq = C64::new(s, 0.0);
                let g_qq = e * c;

                // M <- M G (columns p, q)
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = mkp * g_pp + mkq * g_qp;
                    m[(k, q)] = mkp * g_pq + mkq * g_qq;
                }
                // M <- G^H M (rows p, q)
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = g_pp.conj() * mpk + g_qp.conj() * mqk;
                    m[(q, k)] = g_pq.conj() * mpk + g_qq.conj() * mqk;
                }
                m[(p, q)] = C64::new(0.0, 0.0);
                m[(q, p)] = C64::new(0.0, 0.0);
                m[(p, p)] = C64::new(m[(p, p)].re, 0.0);
                m[(q, q)] = C64::new(m[(q, q)].re, 0.0);
                // V <- V G
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * g_pp + vkq * g_qp;
                    v[(k, q)] = vkp * g_pq + vkq * g_qq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let eigenvalues = order.iter().map(|&i| m[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(EigenResult {
        eigenvalues,
        eigenvectors,
    })
}
