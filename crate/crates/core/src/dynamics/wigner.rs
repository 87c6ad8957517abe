use std::f64::consts::PI;

use rayon::prelude::*;

use crate::numerics::C64;
use crate::{Error, Result};

/// Normalisation demanded of a sampled wave function, `Σ|ψ|² dx = 1`.
const GRID_NORMALIZATION: f64 = 1e-6;
/// Amplitude allowed at the grid ends before the support is suspect.
const EDGE_AMPLITUDE: f64 = 1e-8;
/// Largest imaginary part tolerated in a computed Wigner value.
const IMAGINARY_LIMIT: f64 = 1e-8;

/// `ψ(x_j)` on the uniform grid `x_j = x0 + j dx`.
#[derive(Debug, Clone, PartialEq)]
pub struct WavefunctionGrid {
    samples: Vec<C64>,
    x0: f64,
    dx: f64,
}

impl WavefunctionGrid {
    pub fn new(samples: Vec<C64>, x0: f64, dx: f64) -> Result<Self> {
        if samples.len() < 2 || !(dx > 0.0) || !x0.is_finite() {
            return Err(Error::Domain("a grid needs at least two samples and a positive spacing".into()));
        }
        let norm: f64 = samples.iter().map(|z| z.norm_sqr()).sum::<f64>() * dx;
        if (norm - 1.0).abs() > GRID_NORMALIZATION {
            return Err(Error::Normalization(format!("Σ|ψ|² dx = {norm}, expected 1")));
        }
        Ok(Self { samples, x0, dx })
    }

    /// Samples `f` on `[lo, hi]` with spacing `dx` and rescales to unit norm.
    pub fn sample(f: impl Fn(f64) -> C64, lo: f64, hi: f64, dx: f64) -> Result<Self> {
        if !(hi > lo) || !(dx > 0.0) {
            return Err(Error::Domain(format!("bad grid [{lo}, {hi}] with dx = {dx}")));
        }
        let n = ((hi - lo) / dx).round() as usize + 1;
        let mut samples: Vec<C64> = (0..n).map(|j| f(lo + j as f64 * dx)).collect();
        let norm = (samples.iter().map(|z| z.norm_sqr()).sum::<f64>() * dx).sqrt();
        if norm == 0.0 {
            return Err(Error::Normalization("wave function vanishes on the grid".into()));
        }
        samples.iter_mut().for_each(|z| *z /= norm);
        Self::new(samples, lo, dx)
    }

    pub fn samples(&self) -> &[C64] {
        &self.samples
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x0 + j as f64 * self.dx
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// A message when `|ψ|` at either end reaches `1e-8`, suggesting the
    /// grid cuts off part of the support.
    pub fn support_warning(&self) -> Option<String> {
        let first = self.samples[0].norm();
        let last = self.samples[self.samples.len() - 1].norm();
        (first.max(last) >= EDGE_AMPLITUDE)
            .then(|| format!("|ψ| at the grid ends is ({first:e}, {last:e}); the support may be truncated"))
    }

    /// Linear interpolation, zero outside the grid.
    fn at(&self, x: f64) -> C64 {
        let t = (x - self.x0) / self.dx;
        let last = (self.samples.len() - 1) as f64;
        if !(t >= 0.0 && t <= last) {
            return C64::new(0.0, 0.0);
        }
        let j = t.floor() as usize;
        let frac = t - j as f64;
        if frac == 0.0 || j + 1 >= self.samples.len() {
            return self.samples[j];
        }
        self.samples[j] * (1.0 - frac) + self.samples[j + 1] * frac
    }
}

/// `W(q, p) = (1/π) ∫ dx e^{-2ipx} ψ*(q - x) ψ(q + x)` by the trapezoid rule
/// with the grid's spacing; off-grid points of `ψ` are interpolated linearly.
pub fn wigner(psi: &WavefunctionGrid, q: f64, p: f64) -> Result<f64> {
    let span = psi.x(psi.len() - 1) - psi.x0;
    let k_max = (span / psi.dx).ceil() as i64;
    let mut total = C64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    for k in -k_max..=k_max {
        let x = k as f64 * psi.dx;
        let term = psi.at(q - x).conj() * psi.at(q + x) * C64::from_polar(1.0, -2.0 * p * x);
        let weight = if k.abs() == k_max { 0.5 } else { 1.0 };
        total += term * weight;
        scale = scale.max(term.norm());
    }
    let value = total * psi.dx / PI;
    if value.im.abs() > IMAGINARY_LIMIT * scale.max(1.0) {
        return Err(Error::Domain(format!("Wigner integral has imaginary part {:e}", value.im)));
    }
    Ok(value.re)
}

/// `W` on the product grid `qs × ps`, row `i` for `qs[i]`.
pub fn wigner_grid(psi: &WavefunctionGrid, qs: &[f64], ps: &[f64]) -> Result<Vec<Vec<f64>>> {
    qs.par_iter()
        .map(|&q| ps.iter().map(|&p| wigner(psi, q, p)).collect())
        .collect()
}
