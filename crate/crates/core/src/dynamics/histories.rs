use rayon::prelude::*;

use super::Channel;
use crate::numerics::{ComplexMatrix, C64, TOL};
use crate::states::DensityMatrix;
use crate::{Error, Result};

/// Largest outcome lattice [`consistency_check`] will walk.
pub const MAX_HISTORIES: usize = 100_000;

/// One time step: an optional channel, then an optional unitary, then a
/// projective decomposition of the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct HistoryStep {
    pub channel: Option<Channel>,
    pub unitary: Option<ComplexMatrix>,
    pub projectors: Vec<ComplexMatrix>,
}

impl HistoryStep {
    pub fn new(projectors: Vec<ComplexMatrix>) -> Self {
        Self {
            channel: None,
            unitary: None,
            projectors,
        }
    }

    pub fn with_unitary(mut self, u: ComplexMatrix) -> Self {
        self.unitary = Some(u);
        self
    }

    pub fn with_channel(mut self, channel: Channel) -> Self {
        self.channel = Some(channel);
        self
    }
}

/// An initial state and a sequence of steps.
#[derive(Debug, Clone, PartialEq)]
pub struct HistorySpec {
    initial: DensityMatrix,
    steps: Vec<HistoryStep>,
}

fn check_family(step: usize, projectors: &[ComplexMatrix], d: usize) -> Result<()> {
    let fail = |reason: String| Err(Error::ProjectorFamily { step, reason });
    if projectors.is_empty() {
        return fail("no projectors".into());
    }
    let mut total = ComplexMatrix::zeros(d, d);
    for (i, p) in projectors.iter().enumerate() {
        if p.rows() != d || p.cols() != d {
            return fail(format!("projector {i} is {}x{}, expected {d}x{d}", p.rows(), p.cols()));
        }
        total = &total + p;
        for (j, q) in projectors.iter().enumerate() {
            let product = q * p;
            let want = if i == j { p.clone() } else { ComplexMatrix::zeros(d, d) };
            let deviation = product.max_diff(&want);
            if deviation > TOL.operator {
                return fail(format!("P{j} P{i} deviates from δ P{i} by {deviation:e}"));
            }
        }
    }
    let deviation = total.max_diff(&ComplexMatrix::identity(d));
    if deviation > TOL.operator {
        return fail(format!("projectors sum to identity only within {deviation:e}"));
    }
    Ok(())
}

impl HistorySpec {
    /// Validates every step: projectors are orthogonal and complete,
    /// unitaries are unitary, and all dimensions agree.
    pub fn new(initial: DensityMatrix, steps: Vec<HistoryStep>) -> Result<Self> {
        let d = initial.dim();
        for (k, step) in steps.iter().enumerate() {
            check_family(k, &step.projectors, d)?;
            if let Some(u) = &step.unitary {
                if u.rows() != d || u.cols() != d {
                    return Err(Error::Dimension(format!("unitary at step {k} is {}x{}, expected {d}x{d}", u.rows(), u.cols())));
                }
                let violation = u.unitarity_violation();
                if violation > TOL.operator {
                    return Err(Error::NotUnitary(violation));
                }
            }
            if let Some(ch) = &step.channel {
                if ch.dim() != d {
                    return Err(Error::Dimension(format!("channel at step {k} acts on {}, expected {d}", ch.dim())));
                }
            }
        }
        Ok(Self { initial, steps })
    }

    pub fn initial(&self) -> &DensityMatrix {
        &self.initial
    }

    pub fn steps(&self) -> &[HistoryStep] {
        &self.steps
    }

    /// Number of histories, `Π_k |family_k|`, or `None` on overflow.
    pub fn lattice_size(&self) -> Option<usize> {
        self.steps.iter().try_fold(1usize, |acc, s| acc.checked_mul(s.projectors.len()))
    }

    /// All histories in lexicographic order.
    pub fn histories(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for step in &self.steps {
            out = out
                .into_iter()
                .flat_map(|h| {
                    (0..step.projectors.len()).map(move |i| {
                        let mut next = h.clone();
                        next.push(i);
                        next
                    })
                })
                .collect();
        }
        out
    }

    /// Advances the two-sided operator `X ↦ P_i U E(X) U† P_j` through step `k`.
    fn advance(&self, k: usize, x: &ComplexMatrix, i: usize, j: usize) -> ComplexMatrix {
        let step = &self.steps[k];
        let mut x = match &step.channel {
            Some(ch) => ch.apply_operator(x).expect("dimensions checked at construction"),
            None => x.clone(),
        };
        if let Some(u) = &step.unitary {
            x = &(u * &x) * &u.dagger();
        }
        &(&step.projectors[i] * &x) * &step.projectors[j]
    }

    fn check_history(&self, alpha: &[usize]) -> Result<()> {
        if alpha.len() != self.steps.len() {
            return Err(Error::Dimension(format!("history has {} outcomes for {} steps", alpha.len(), self.steps.len())));
        }
        for (step, &i) in self.steps.iter().zip(alpha) {
            if i >= step.projectors.len() {
                return Err(Error::Index {
                    index: i,
                    limit: step.projectors.len(),
                });
            }
        }
        Ok(())
    }
}

/// `D(α, α') = Tr(C_α ρ C_α'†)`, with channels contracted over their Kraus
/// index on both sides.
pub fn decoherence_functional(spec: &HistorySpec, alpha: &[usize], alpha_prime: &[usize]) -> Result<C64> {
    spec.check_history(alpha)?;
    spec.check_history(alpha_prime)?;
    let mut x = spec.initial.matrix().clone();
    for k in 0..spec.steps.len() {
        x = spec.advance(k, &x, alpha[k], alpha_prime[k]);
    }
    Ok(x.trace())
}

/// `D(α, α')` over the whole lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct DecoherenceMatrix {
    /// Histories in lexicographic order.
    pub histories: Vec<Vec<usize>>,
    /// Row-major `D[a][b] = D(histories[a], histories[b])`.
    pub values: Vec<C64>,
}

impl DecoherenceMatrix {
    pub fn get(&self, a: usize, b: usize) -> C64 {
        self.values[a * self.histories.len() + b]
    }

    pub fn diagonal_sum(&self) -> f64 {
        (0..self.histories.len()).map(|a| self.get(a, a).re).sum()
    }
}

/// Largest lattice for which the full matrix is materialised.
const MAX_MATRIX_HISTORIES: usize = 2_000;

/// Walks the pair tree depth first, sharing prefixes; the callback receives
/// flat history indices `(a, b)` and `D(a, b)`.
fn walk_pairs(spec: &HistorySpec, mut visit: impl FnMut(usize, usize, C64)) {
    fn rec(spec: &HistorySpec, k: usize, x: &ComplexMatrix, a: usize, b: usize, visit: &mut dyn FnMut(usize, usize, C64)) {
        if k == spec.steps.len() {
            visit(a, b, x.trace());
            return;
        }
        let n = spec.steps[k].projectors.len();
        for i in 0..n {
            for j in 0..n {
                let next = spec.advance(k, x, i, j);
                if next.max_abs() == 0.0 {
                    // every descendant vanishes identically
                    let below: usize = spec.steps[k + 1..].iter().map(|s| s.projectors.len()).product();
                    for da in 0..below {
                        for db in 0..below {
                            visit((a * n + i) * below + da, (b * n + j) * below + db, C64::new(0.0, 0.0));
                        }
                    }
                    continue;
                }
                rec(spec, k + 1, &next, a * n + i, b * n + j, visit);
            }
        }
    }
    rec(spec, 0, spec.initial.matrix(), 0, 0, &mut visit);
}

pub fn decoherence_matrix(spec: &HistorySpec) -> Result<DecoherenceMatrix> {
    let size = spec.lattice_size().filter(|&n| n <= MAX_MATRIX_HISTORIES).ok_or_else(|| {
        Error::TooLarge(format!("the full decoherence matrix is limited to {MAX_MATRIX_HISTORIES} histories"))
    })?;
    let mut values = vec![C64::new(0.0, 0.0); size * size];
    walk_pairs(spec, |a, b, d| values[a * size + b] = d);
    Ok(DecoherenceMatrix {
        histories: spec.histories(),
        values,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConsistencyReport {
    /// `max |D(α, α')| ≤` the consistency tolerance over `α ≠ α'`.
    pub consistent: bool,
    pub max_offdiag: f64,
    /// `Σ_α D(α, α)`, one for a valid spec.
    pub diagonal_sum: f64,
    pub histories: usize,
}

/// Decides whether the family decoheres. The first step's outcome pairs
/// are processed in parallel and reduced in a fixed order.
pub fn consistency_check(spec: &HistorySpec) -> Result<ConsistencyReport> {
    let size = spec
        .lattice_size()
        .filter(|&n| n <= MAX_HISTORIES)
        .ok_or_else(|| Error::TooLarge(format!("more than {MAX_HISTORIES} histories")))?;
    if spec.steps.is_empty() {
        return Ok(ConsistencyReport {
            consistent: true,
            max_offdiag: 0.0,
            diagonal_sum: spec.initial.matrix().trace().re,
            histories: 1,
        });
    }
    let n0 = spec.steps[0].projectors.len();
    let tail = HistorySpec {
        initial: spec.initial.clone(),
        steps: spec.steps[1..].to_vec(),
    };
    let partial: Vec<(f64, f64)> = (0..n0 * n0)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / n0, ij % n0);
            let x = spec.advance(0, spec.initial.matrix(), i, j);
            let sub = HistorySpec {
                initial: DensityMatrix::from_parts_unchecked(x, None),
                steps: tail.steps.clone(),
            };
            let (mut worst, mut diag) = (0.0f64, 0.0);
            walk_pairs(&sub, |a, b, d| {
                if i == j && a == b {
                    diag += d.re;
                } else {
                    worst = worst.max(d.norm());
                }
            });
            (worst, diag)
        })
        .collect();
    let max_offdiag = partial.iter().map(|p| p.0).fold(0.0, f64::max);
    let diagonal_sum = partial.iter().map(|p| p.1).sum();
    Ok(ConsistencyReport {
        consistent: max_offdiag <= TOL.consistency,
        max_offdiag,
        diagonal_sum,
        histories: size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::re;
    use crate::states::PureState;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn z_projectors() -> Vec<ComplexMatrix> {
        vec![ComplexMatrix::diag_real(&[1.0, 0.0]), ComplexMatrix::diag_real(&[0.0, 1.0])]
    }

    fn hadamard() -> ComplexMatrix {
        ComplexMatrix::from_real(2, 2, &[FRAC_1_SQRT_2, FRAC_1_SQRT_2, FRAC_1_SQRT_2, -FRAC_1_SQRT_2]).unwrap()
    }

    fn ket0() -> DensityMatrix {
        DensityMatrix::from_pure(&PureState::basis(&[2], 0).unwrap())
    }

    fn two_time(dephase: bool) -> HistorySpec {
        let first = HistoryStep::new(z_projectors()).with_unitary(hadamard());
        let mut second = HistoryStep::new(z_projectors()).with_unitary(hadamard());
        if dephase {
            second = second.with_channel(Channel::full_dephasing(2));
        }
        HistorySpec::new(ket0(), vec![first, second]).unwrap()
    }

    #[test]
    fn single_time_born_weights() {
        let psi = PureState::from_amplitudes(&[re(0.6), re(0.8)]).unwrap();
        let spec = HistorySpec::new(DensityMatrix::from_pure(&psi), vec![HistoryStep::new(z_projectors())]).unwrap();
        assert!((decoherence_functional(&spec, &[0], &[0]).unwrap().re - 0.36).abs() < 1e-15);
        assert!((decoherence_functional(&spec, &[1], &[1]).unwrap().re - 0.64).abs() < 1e-15);
        assert_eq!(decoherence_functional(&spec, &[0], &[1]).unwrap().norm(), 0.0);
        let r = consistency_check(&spec).unwrap();
        assert!(r.consistent && (r.diagonal_sum - 1.0).abs() < 1e-15);
    }

    #[test]
    fn interference_between_histories() {
        let spec = two_time(false);
        // P0 H P0 H |0> = |0>/2 and P0 H P1 H |0> = |0>/2
        let d = decoherence_functional(&spec, &[0, 0], &[1, 0]).unwrap();
        assert!((d - re(0.25)).norm() < 1e-15);
        let r = consistency_check(&spec).unwrap();
        assert!(!r.consistent);
        assert!((r.max_offdiag - 0.25).abs() < 1e-15);
        assert!((r.diagonal_sum - 1.0).abs() < 1e-15);
    }

    #[test]
    fn dephasing_restores_consistency() {
        let r = consistency_check(&two_time(true)).unwrap();
        assert!(r.consistent, "{r:?}");
        assert!((r.diagonal_sum - 1.0).abs() < 1e-15);
    }

    #[test]
    fn matrix_matches_pointwise() {
        let spec = two_time(false);
        let m = decoherence_matrix(&spec).unwrap();
        assert_eq!(m.histories, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        for (a, ha) in m.histories.iter().enumerate() {
            for (b, hb) in m.histories.iter().enumerate() {
                let d = decoherence_functional(&spec, ha, hb).unwrap();
                assert!((m.get(a, b) - d).norm() < 1e-15);
                assert!((m.get(a, b) - m.get(b, a).conj()).norm() < 1e-15);
            }
        }
        assert!((m.diagonal_sum() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn validation() {
        let bad = vec![ComplexMatrix::diag_real(&[1.0, 0.0]), ComplexMatrix::diag_real(&[1.0, 1.0])];
        assert!(matches!(HistorySpec::new(ket0(), vec![HistoryStep::new(bad)]), Err(Error::ProjectorFamily { step: 0, .. })));
        let incomplete = vec![ComplexMatrix::diag_real(&[1.0, 0.0])];
        assert!(matches!(HistorySpec::new(ket0(), vec![HistoryStep::new(incomplete)]), Err(Error::ProjectorFamily { .. })));
        let spec = two_time(false);
        assert!(decoherence_functional(&spec, &[0], &[0, 0]).is_err());
        assert!(matches!(decoherence_functional(&spec, &[0, 2], &[0, 0]), Err(Error::Index { .. })));
    }
}
