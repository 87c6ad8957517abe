//! Upper bound on the relative entropy of entanglement of a two-qubit state
//! by direct search over mixtures of product states.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::entropy::{relative_entropy_floored, shannon_entropy};
use crate::numerics::{eigh, partial_trace, ComplexMatrix, C64};
use crate::optim::{minimize, NelderMeadOptions};
use crate::states::DensityMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelativeEntropyOptions {
    /// Number of product states `K` in the separable ansatz.
    pub terms: usize,
    /// Random restarts, run in parallel.
    pub restarts: usize,
    /// Objective evaluations per restart.
    pub max_evaluations: usize,
    pub seed: u64,
    /// Add one restart from `ρ` dephased in the product of its local
    /// eigenbases.
    pub warm_start: bool,
}

impl Default for RelativeEntropyOptions {
    fn default() -> Self {
        Self {
            terms: 8,
            restarts: 16,
            max_evaluations: 20_000,
            seed: 0,
            warm_start: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RelativeEntropyResult {
    /// `S(ρ‖σ*)` in bits; an upper bound on the infimum.
    pub value: f64,
    /// The separable state achieving `value`.
    pub sigma: DensityMatrix,
    /// Whether the winning restart stopped on its tolerances rather than
    /// the evaluation budget.
    pub converged: bool,
    /// Total evaluations over all restarts.
    pub evaluations: usize,
}

/// Smallest eigenvalue of `σ` that enters the logarithm during the search.
const SEARCH_FLOOR: f64 = 1e-30;

/// Weight of `I/4` mixed into the returned `σ*`.
const FULL_RANK_MIX: f64 = 1e-13;

fn qubit(theta: f64, phi: f64) -> [C64; 2] {
    [C64::new((theta / 2.0).cos(), 0.0), C64::from_polar((theta / 2.0).sin(), phi)]
}

type Mat4 = [[C64; 4]; 4];

/// Decodes `[θ_A, φ_A, θ_B, φ_B, z]` per term into `Σ softmax(z)_k |a_k b_k⟩⟨a_k b_k|`.
fn sigma_array(x: &[f64], terms: usize) -> Mat4 {
    let z_max = (0..terms).map(|k| x[5 * k + 4]).fold(f64::NEG_INFINITY, f64::max);
    let total: f64 = (0..terms).map(|k| (x[5 * k + 4] - z_max).exp()).sum();
    let mut m = [[C64::new(0.0, 0.0); 4]; 4];
    for k in 0..terms {
        let p = &x[5 * k..5 * k + 5];
        let wk = (p[4] - z_max).exp() / total;
        let (a, b) = (qubit(p[0], p[1]), qubit(p[2], p[3]));
        let v = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]];
        for r in 0..4 {
            let vr = v[r] * wk;
            for c in 0..4 {
                m[r][c] += vr * v[c].conj();
            }
        }
    }
    m
}

fn sigma_of(x: &[f64], terms: usize) -> ComplexMatrix {
    let m = sigma_array(x, terms);
    let mut out = ComplexMatrix::zeros(4, 4);
    for r in 0..4 {
        for c in 0..4 {
            out[(r, c)] = m[r][c];
        }
    }
    out
}

/// Cyclic Jacobi on a 4×4 Hermitian matrix; returns eigenvalues and the
/// eigenvectors as columns of the second array.
fn jacobi4(mut m: Mat4) -> ([f64; 4], Mat4) {
    let zero = C64::new(0.0, 0.0);
    let mut v = [[zero; 4]; 4];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = C64::new(1.0, 0.0);
    }
    let scale = m.iter().flatten().fold(0.0f64, |s, z| s.max(z.norm()));
    let threshold = 1e-15 * scale;
    for _ in 0..50 {
        let mut off: f64 = 0.0;
        for p in 0..4 {
            for q in p + 1..4 {
                off = off.max(m[p][q].norm());
            }
        }
        if off <= threshold {
            break;
        }
        for p in 0..4 {
            for q in p + 1..4 {
                let r = m[p][q].norm();
                if r <= threshold * 1e-3 {
                    continue;
                }
                let e = (m[p][q] / r).conj();
                let theta = (m[q][q].re - m[p][p].re) / (2.0 * r);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let (g_qp, g_qq) = (-e * s, e * c);
                for row in m.iter_mut() {
                    let (a, b) = (row[p], row[q]);
                    row[p] = a * c + b * g_qp;
                    row[q] = a * s + b * g_qq;
                }
                for k in 0..4 {
                    let (a, b) = (m[p][k], m[q][k]);
                    m[p][k] = a * c + g_qp.conj() * b;
                    m[q][k] = a * s + g_qq.conj() * b;
                }
                m[p][q] = zero;
                m[q][p] = zero;
                for row in v.iter_mut() {
                    let (a, b) = (row[p], row[q]);
                    row[p] = a * c + b * g_qp;
                    row[q] = a * s + b * g_qq;
                }
            }
        }
    }
    ([m[0][0].re, m[1][1].re, m[2][2].re, m[3][3].re], v)
}

/// `Tr ρ log₂ σ` for the search, with `σ`'s spectrum floored at [`SEARCH_FLOOR`].
fn cross_log4(rho: &Mat4, sigma: Mat4) -> f64 {
    let (values, v) = jacobi4(sigma);
    let mut cross = 0.0;
    for k in 0..4 {
        let mut weight = 0.0;
        for r in 0..4 {
            let mut acc = C64::new(0.0, 0.0);
            for c in 0..4 {
                acc += rho[r][c] * v[c][k];
            }
            weight += (v[r][k].conj() * acc).re;
        }
        if weight > 0.0 {
            cross += weight * values[k].max(SEARCH_FLOOR).log2();
        }
    }
    cross
}

fn random_start(rng: &mut ChaCha8Rng, terms: usize) -> Vec<f64> {
    let mut x = Vec::with_capacity(5 * terms);
    for _ in 0..terms {
        // uniform on the Bloch sphere
        x.push(rng.gen_range(-1.0f64..1.0).acos());
        x.push(rng.gen_range(0.0..std::f64::consts::TAU));
        x.push(rng.gen_range(-1.0f64..1.0).acos());
        x.push(rng.gen_range(0.0..std::f64::consts::TAU));
        x.push(rng.gen_range(-1.0..1.0));
    }
    x
}

/// Bloch angles of a unit qubit vector.
fn angles(v: &[C64]) -> (f64, f64) {
    let theta = 2.0 * v[1].norm().atan2(v[0].norm());
    let phi = v[1].arg() - v[0].arg();
    (theta, phi)
}

/// `ρ` dephased in `U_A ⊗ U_B`, the eigenbases of its reductions, written
/// in the ansatz coordinates. Unused terms get negligible weight.
fn warm_start(rho: &ComplexMatrix, terms: usize) -> Result<Vec<f64>> {
    let ua = eigh(&partial_trace(rho, &[0])?)?;
    let ub = eigh(&partial_trace(rho, &[1])?)?;
    let mut x = Vec::with_capacity(5 * terms);
    for i in 0..2 {
        for j in 0..2 {
            let (a, b) = (ua.vector(i), ub.vector(j));
            let v: Vec<C64> = a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect();
            let p = rho.sandwich(&v, &v).re.max(1e-12);
            let (ta, pa) = angles(&a);
            let (tb, pb) = angles(&b);
            x.extend_from_slice(&[ta, pa, tb, pb, p.ln()]);
        }
    }
    let mut k = 4;
    while k < terms {
        x.extend_from_slice(&[0.0, 0.0, 0.0, 0.0, -40.0]);
        k += 1;
    }
    x.truncate(5 * terms);
    Ok(x)
}

/// `min_σ S(ρ‖σ)` over `σ = Σ_k w_k |a_k⟩⟨a_k| ⊗ |b_k⟩⟨b_k|`, by Nelder–Mead
/// from seeded random starts.
///
/// The reported value is evaluated exactly at the returned `σ*`, so it is a
/// certified upper bound. Deterministic for a fixed seed regardless of
/// thread scheduling.
pub fn relative_entropy_of_entanglement(
    rho: &DensityMatrix,
    options: &RelativeEntropyOptions,
) -> Result<RelativeEntropyResult> {
    if rho.dims() != Some(&[2, 2][..]) {
        return Err(Error::Dimension("relative entropy of entanglement is implemented for 2x2 states".into()));
    }
    if options.terms == 0 || options.restarts + usize::from(options.warm_start) == 0 {
        return Err(Error::Domain("need at least one term and one restart".into()));
    }
    let terms = options.terms;
    let matrix = rho.matrix();
    let mut starts: Vec<Vec<f64>> = (0..options.restarts)
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
            rng.set_stream(r as u64);
            random_start(&mut rng, terms)
        })
        .collect();
    if options.warm_start && terms >= 4 {
        starts.push(warm_start(matrix, terms)?);
    }
    let nm = NelderMeadOptions {
        max_evaluations: options.max_evaluations,
        initial_step: 0.3,
        f_tolerance: 1e-10,
        x_tolerance: 1e-7,
        max_reseeds: 8,
    };
    let neg_entropy = -shannon_entropy(&eigh(matrix)?.eigenvalues);
    let mut rho4 = [[C64::new(0.0, 0.0); 4]; 4];
    for (r, row) in rho4.iter_mut().enumerate() {
        for (c, z) in row.iter_mut().enumerate() {
            *z = matrix[(r, c)];
        }
    }
    let runs: Vec<_> = starts
        .par_iter()
        .map(|x0| {
            let objective = |x: &[f64]| neg_entropy - cross_log4(&rho4, sigma_array(x, terms));
            minimize(objective, x0, &nm)
        })
        .collect();
    let evaluations = runs.iter().map(|m| m.evaluations).sum();
    let best = runs
        .into_iter()
        .min_by(|a, b| a.value.total_cmp(&b.value))
        .expect("at least one restart");
    // a trace of the maximally mixed state keeps σ* separable and of full rank
    let sigma = &sigma_of(&best.x, terms).scale_real(1.0 - FULL_RANK_MIX)
        + &ComplexMatrix::identity(4).scale_real(FULL_RANK_MIX / 4.0);
    let sigma = sigma.hermitian_part();
    let value = relative_entropy_floored(matrix, &sigma, 0.0)?.max(0.0);
    let sigma = DensityMatrix::new(sigma)?.with_dims(&[2, 2])?;
    if !value.is_finite() {
        return Err(Error::Domain("no separable state with full support was found".into()));
    }
    Ok(RelativeEntropyResult {
        value,
        sigma,
        converged: best.converged,
        evaluations,
    })
}
