//! Permutation-entangled `n ⊗ n` states and their sum rules, GHZ-type
//! families of qubit scopes, and the two-state mixture identity.
//!
//! Coefficients enter only through their moduli.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::measures::{degree_of_superposition, reduced};
use crate::numerics::{re, C64, TOL};
use crate::{Error, Result};

/// Largest `n` enumerated by default (`7! = 5040` states).
pub const DEFAULT_MAX_N: usize = 7;

/// One of the `n!` states `Σ_i a_i b_σ(i) |i σ(i)⟩ / √β`.
#[derive(Debug, Clone, PartialEq)]
pub struct PermutationStateReport {
    /// `σ` as zero-based images, `permutation[i] = σ(i)`.
    pub permutation: Vec<usize>,
    /// `Σ_{i<j} |a_i b_σ(i)| |a_j b_σ(j)|`.
    pub alpha: f64,
    /// `Σ_i |a_i|² |b_σ(i)|²`.
    pub beta: f64,
    /// `α / β`, zero when `β` vanishes.
    pub entanglement: f64,
}

impl PermutationStateReport {
    /// Normalised branch coefficients `a_i b_σ(i) / √β`.
    pub fn branch_coefficients(&self, a: &[C64], b: &[C64]) -> Vec<C64> {
        let scale = self.beta.sqrt();
        self.permutation
            .iter()
            .enumerate()
            .map(|(i, &j)| if scale > 0.0 { a[i] * b[j] / scale } else { C64::new(0.0, 0.0) })
            .collect()
    }
}

/// Sums over one enumeration together with their closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentitySums {
    pub sum_beta: f64,
    pub sum_alpha: f64,
    pub sum_alpha_over_e: f64,
    pub epsilon_a: f64,
    pub epsilon_b: f64,
    /// `(n-1)!`, the closed form of `Σβ` and `Σα/E`.
    pub expected_sum_beta: f64,
    /// `2 (n-2)! ε_A ε_B`.
    pub expected_sum_alpha: f64,
}

/// Residuals `|LHS - RHS|` of the three sum identities, maximised over
/// `trials` coefficient draws.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityReport {
    pub n: usize,
    pub trials: usize,
    pub sum_beta_residual: f64,
    pub sum_alpha_residual: f64,
    pub sum_alpha_over_e_residual: f64,
    pub max_abs_residual: f64,
    /// The raw sums, present for single-draw reports.
    pub sums: Option<IdentitySums>,
}

impl IdentityReport {
    /// Worst case over several reports of the same `n`.
    pub fn combine(reports: &[IdentityReport]) -> Result<IdentityReport> {
        let first = reports.first().ok_or_else(|| Error::Domain("no reports to combine".into()))?;
        if reports.iter().any(|r| r.n != first.n) {
            return Err(Error::Dimension("reports mix different n".into()));
        }
        let worst = |f: fn(&IdentityReport) -> f64| reports.iter().map(f).fold(0.0, f64::max);
        Ok(IdentityReport {
            n: first.n,
            trials: reports.iter().map(|r| r.trials).sum(),
            sum_beta_residual: worst(|r| r.sum_beta_residual),
            sum_alpha_residual: worst(|r| r.sum_alpha_residual),
            sum_alpha_over_e_residual: worst(|r| r.sum_alpha_over_e_residual),
            max_abs_residual: worst(|r| r.max_abs_residual),
            sums: None,
        })
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn check_pair(a: &[C64], b: &[C64], max_n: usize) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!("parties have {} and {} coefficients", a.len(), b.len())));
    }
    if a.len() < 2 {
        return Err(Error::Dimension("need n >= 2".into()));
    }
    if a.len() > max_n {
        return Err(Error::TooLarge(format!("n = {} exceeds the enumeration cap {max_n}", a.len())));
    }
    degree_of_superposition(a)?;
    degree_of_superposition(b)?;
    Ok(())
}

/// All `n!` permutation-entangled states of two normalised `n`-level scopes,
/// in lexicographic order of `σ`. Fails for `n` above [`DEFAULT_MAX_N`].
pub fn enumerate_perm_states(a: &[C64], b: &[C64]) -> Result<Vec<PermutationStateReport>> {
    enumerate_perm_states_capped(a, b, DEFAULT_MAX_N)
}

/// [`enumerate_perm_states`] with an explicit cap on `n`.
pub fn enumerate_perm_states_capped(a: &[C64], b: &[C64], max_n: usize) -> Result<Vec<PermutationStateReport>> {
    check_pair(a, b, max_n)?;
    let n = a.len();
    let (ma, mb): (Vec<f64>, Vec<f64>) = (a.iter().map(|z| z.norm()).collect(), b.iter().map(|z| z.norm()).collect());
    Ok((0..n)
        .permutations(n)
        .map(|sigma| {
            let c: Vec<f64> = sigma.iter().enumerate().map(|(i, &j)| ma[i] * mb[j]).collect();
            let beta: f64 = c.iter().map(|x| x * x).sum();
            let alpha: f64 = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| c[i] * c[j]).sum();
            PermutationStateReport {
                permutation: sigma,
                alpha,
                beta,
                entanglement: if beta > 0.0 { alpha / beta } else { 0.0 },
            }
        })
        .collect())
}

/// Checks `Σβ_i = (n-1)!`, `Σα_i = 2 (n-2)! ε_A ε_B` and
/// `Σα_i/E_i = (n-1)!` over the permutation states of `a` and `b`.
pub fn verify_sum_identities(a: &[C64], b: &[C64]) -> Result<IdentityReport> {
    let reports = enumerate_perm_states(a, b)?;
    let n = a.len();
    let epsilon_a = degree_of_superposition(a)?;
    let epsilon_b = degree_of_superposition(b)?;
    // sums run in lexicographic order, so residuals are reproducible bit for bit
    let sum_beta: f64 = reports.iter().map(|r| r.beta).sum();
    let sum_alpha: f64 = reports.iter().map(|r| r.alpha).sum();
    let sum_alpha_over_e: f64 = reports
        .iter()
        .map(|r| if r.alpha == 0.0 { r.beta } else { r.alpha / r.entanglement })
        .sum();
    let expected_sum_beta = factorial(n - 1);
    let expected_sum_alpha = 2.0 * factorial(n - 2) * epsilon_a * epsilon_b;
    let sum_beta_residual = (sum_beta - expected_sum_beta).abs();
    let sum_alpha_residual = (sum_alpha - expected_sum_alpha).abs();
    let sum_alpha_over_e_residual = (sum_alpha_over_e - expected_sum_beta).abs();
    Ok(IdentityReport {
        n,
        trials: 1,
        sum_beta_residual,
        sum_alpha_residual,
        sum_alpha_over_e_residual,
        max_abs_residual: sum_beta_residual.max(sum_alpha_residual).max(sum_alpha_over_e_residual),
        sums: Some(IdentitySums {
            sum_beta,
            sum_alpha,
            sum_alpha_over_e,
            epsilon_a,
            epsilon_b,
            expected_sum_beta,
            expected_sum_alpha,
        }),
    })
}

/// Normalised vector of `n` moduli drawn uniformly from `(0, 1]`.
pub fn random_positive_coefficients(rng: &mut impl Rng, n: usize) -> Vec<C64> {
    let raw: Vec<f64> = (0..n).map(|_| 1.0 - rng.gen::<f64>()).collect();
    let norm = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
    raw.iter().map(|x| re(x / norm)).collect()
}

/// One [`verify_sum_identities`] report per random draw of positive
/// coefficients; trial `t` uses stream `t` of a generator seeded by `seed`.
pub fn verify_random_identities(n: usize, trials: usize, seed: u64) -> Result<Vec<IdentityReport>> {
    (0..trials)
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let a = random_positive_coefficients(&mut rng, n);
            let b = random_positive_coefficients(&mut rng, n);
            verify_sum_identities(&a, &b)
        })
        .collect()
}

/// A two-branch state of `m` qubit scopes: branch one takes level
/// `pattern[μ]` of party `μ`, branch two the other level.
#[derive(Debug, Clone, PartialEq)]
pub struct GhzState {
    /// Zero-based levels of the first branch; `pattern[0] = 0`.
    pub pattern: Vec<usize>,
    /// Normalised coefficients of the two branches.
    pub branch_coefficients: [f64; 2],
    pub entanglement: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GhzFamily {
    /// The `2^{m-1}` states, with patterns in lexicographic order.
    pub states: Vec<GhzState>,
    /// Superposition degree `ε_μ = |c_μ1||c_μ2|` of each party.
    pub epsilons: Vec<f64>,
    /// `(Σ_k 1/E_k)^{-1}`; zero if any party has a vanishing coefficient.
    pub e_dagger: f64,
}

/// The GHZ-type states of `m ≥ 2` normalised qubit scopes and their
/// reduced entanglement, which equals `Π_μ ε_μ`.
pub fn ghz_family(party_coeffs: &[Vec<C64>]) -> Result<GhzFamily> {
    let m = party_coeffs.len();
    if m < 2 {
        return Err(Error::Dimension(format!("need at least two parties, got {m}")));
    }
    if m > 30 {
        return Err(Error::TooLarge(format!("{m} parties give 2^{} states", m - 1)));
    }
    let mut moduli = Vec::with_capacity(m);
    let mut epsilons = Vec::with_capacity(m);
    for (mu, c) in party_coeffs.iter().enumerate() {
        if c.len() != 2 {
            return Err(Error::Dimension(format!("party {mu} has {} levels, expected 2", c.len())));
        }
        epsilons.push(degree_of_superposition(c)?);
        moduli.push([c[0].norm(), c[1].norm()]);
    }
    let states: Vec<GhzState> = (0..1usize << (m - 1))
        .map(|bits| {
            let pattern: Vec<usize> = (0..m).map(|mu| if mu == 0 { 0 } else { (bits >> (m - 1 - mu)) & 1 }).collect();
            let first: f64 = pattern.iter().zip(&moduli).map(|(&l, c)| c[l]).product();
            let second: f64 = pattern.iter().zip(&moduli).map(|(&l, c)| c[1 - l]).product();
            let beta = first * first + second * second;
            let (branch_coefficients, entanglement) = if beta > 0.0 {
                let s = beta.sqrt();
                ([first / s, second / s], first * second / beta)
            } else {
                ([0.0, 0.0], 0.0)
            };
            GhzState {
                pattern,
                branch_coefficients,
                entanglement,
            }
        })
        .collect();
    let degrees: Vec<f64> = states.iter().map(|s| s.entanglement).collect();
    Ok(GhzFamily {
        e_dagger: reduced(&degrees),
        states,
        epsilons,
    })
}

/// Both sides of `p₁E_d + p₂E_c = (E_d+E_c) u_c² + E† u₀²` with `u_k = √p_k`,
/// `u_c = (u₁E_d + u₂E_c)/(E_d+E_c)` and `u₀ = |u₁ - u₂|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixtureIdentity {
    pub lhs: f64,
    pub rhs: f64,
    /// `(E_d + E_c) u_c²`.
    pub collective: f64,
    /// `E† u₀²`.
    pub relative: f64,
}

pub fn mixture_identity(e_d: f64, e_c: f64, p1: f64, p2: f64) -> Result<MixtureIdentity> {
    if !(e_d >= 0.0 && e_c >= 0.0) || e_d + e_c == 0.0 {
        return Err(Error::Domain(format!("degrees ({e_d}, {e_c}) must be nonnegative and not both zero")));
    }
    if !(p1 >= 0.0 && p2 >= 0.0) || (p1 + p2 - 1.0).abs() > TOL.input_normalization {
        return Err(Error::Normalization(format!("weights ({p1}, {p2}) are not a distribution")));
    }
    let (u1, u2) = (p1.sqrt(), p2.sqrt());
    let total = e_d + e_c;
    let u_c = (u1 * e_d + u2 * e_c) / total;
    let u_0 = (u1 - u2).abs();
    let e_dagger = e_d * e_c / total;
    let collective = total * u_c * u_c;
    let relative = e_dagger * u_0 * u_0;
    Ok(MixtureIdentity {
        lhs: p1 * e_d + p2 * e_c,
        rhs: collective + relative,
        collective,
        relative,
    })
}
