//! The fifteen acceptance criteria, run in order in a single test so the
//! timing budgets are measured without contention. One line per criterion
//! is written straight to stderr, so it shows even when output is captured.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scope_lab::dynamics::{
    consistency_check, dilation_output, kraus_from_dilation, wigner, HistorySpec, HistoryStep, WavefunctionGrid,
};
use scope_lab::identities::{enumerate_perm_states, ghz_family, mixture_identity, verify_random_identities};
use scope_lab::measures::{
    classify, concurrence, degree_of_superposition, direct_cross_entanglement, negativity, negativity_from_spectrum,
    relative_entropy_of_entanglement, robustness_pure, von_neumann_entropy, ConcurrenceBasis,
    EntropyConcurrenceMatrix, RelativeEntropyOptions,
};
use scope_lab::numerics::{partial_trace, re, unitary_from_generator, ComplexMatrix, C64};
use scope_lab::states::{
    build_family, decohere, sub_decohere, wfes_density, wfes_operator, DensityMatrix, EnsembleDecomposition,
    FamilyTag, PureState,
};

type Check = Result<String, String>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian_complex(r: &mut ChaCha8Rng) -> C64 {
    C64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))
}

fn unit(r: &mut ChaCha8Rng, n: usize) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..n).map(|_| gaussian_complex(r)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return v.iter().map(|z| z / norm).collect();
        }
    }
}

fn hermitian(r: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| gaussian_complex(r)).hermitian_part()
}

fn random_unitary(r: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let t = r.gen_range(0.5..3.0);
    unitary_from_generator(&hermitian(r, n), t).unwrap()
}

fn random_density(r: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, n, |_, _| gaussian_complex(r));
    let m = &g * &g.dagger();
    m.scale_real(1.0 / m.trace().re).hermitian_part()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(value: f64, want: f64, tol: f64, what: &str) -> Result<(), String> {
    ensure((value - want).abs() <= tol, || format!("{what} = {value:e}, expected {want:e} within {tol:e}"))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// 1. `ε = (n-1)/2` at uniform moduli; perturbations never exceed it.
fn maximal_superposition() -> Check {
    let mut r = rng(1);
    for n in 2..=6 {
        let uniform = vec![re(1.0 / (n as f64).sqrt()); n];
        let bound = (n as f64 - 1.0) / 2.0;
        within(degree_of_superposition(&uniform).map_err(err)?, bound, 1e-12, &format!("ε at n = {n}"))?;
        for _ in 0..10_000 {
            let v: Vec<C64> = (0..n)
                .map(|_| C64::from_polar(1.0 + r.gen_range(-0.3..0.3), r.gen_range(0.0..2.0 * PI)))
                .collect();
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let v: Vec<C64> = v.iter().map(|z| z / norm).collect();
            let eps = degree_of_superposition(&v).map_err(err)?;
            ensure(eps <= bound + 1e-12, || format!("perturbed ε = {eps} exceeds {bound} at n = {n}"))?;
        }
    }
    Ok("ε_max = (n-1)/2 for n = 2..6; 5·10^4 perturbations stay below".into())
}

/// 2. `E_d = E_c = 1/2`, `E† = 1/4` at equal coefficients.
fn bell_reduced_entanglement() -> Check {
    let h = vec![re(FRAC_1_SQRT_2); 2];
    let dc = direct_cross_entanglement(&h, &h).map_err(err)?;
    within(dc.e_direct, 0.5, 1e-12, "E_d")?;
    within(dc.e_cross, 0.5, 1e-12, "E_c")?;
    within(dc.e_reduced, 0.25, 1e-12, "E†")?;
    Ok(format!("E_d = {}, E_c = {}, E† = {}", dc.e_direct, dc.e_cross, dc.e_reduced))
}

/// 3. `E† = ε_A ε_B` on random pairs.
fn fundamental_relation() -> Check {
    let mut r = rng(3);
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let (a, b) = (unit(&mut r, 2), unit(&mut r, 2));
        let dc = direct_cross_entanglement(&a, &b).map_err(err)?;
        let product = degree_of_superposition(&a).map_err(err)? * degree_of_superposition(&b).map_err(err)?;
        worst = worst.max((dc.e_reduced - product).abs());
    }
    within(worst, 0.0, 1e-12, "max |E† - ε_Aε_B|")?;
    Ok(format!("500 pairs, max residual {worst:e}"))
}

/// 4. `E† = 1/2ⁿ` for uniform GHZ families of `n` parties.
fn ghz_reduced_entanglement() -> Check {
    for n in 2..=6 {
        let family = ghz_family(&vec![vec![re(FRAC_1_SQRT_2); 2]; n]).map_err(err)?;
        within(family.e_dagger, 0.5f64.powi(n as i32), 1e-12, &format!("E† for {n} parties"))?;
        ensure(family.states.len() == 1 << (n - 1), || format!("{} states for {n} parties", family.states.len()))?;
    }
    Ok("E† = 1/8 at three parties and 1/2^n for n = 2..6".into())
}

/// 5. The three permutation-sum identities.
fn sum_identities() -> Check {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in 2..=6 {
        let reports = verify_random_identities(n, 100, 5).map_err(err)?;
        for rep in &reports {
            worst = worst.max(rep.max_abs_residual);
            let s = rep.sums.as_ref().ok_or("missing sums")?;
            match n {
                3 => ensure(s.expected_sum_beta == 2.0 && format!("{:.1}", s.sum_beta) == "2.0", || format!("n = 3 Σβ = {}", s.sum_beta))?,
                4 => ensure(s.expected_sum_beta == 6.0 && format!("{:.1}", s.sum_alpha_over_e) == "6.0", || format!("n = 4 Σα/E = {}", s.sum_alpha_over_e))?,
                _ => {}
            }
        }
    }
    within(worst, 0.0, 1e-10, "max identity residual")?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("n = 2..6 × 100 draws, max residual {worst:e}, constants 2 and 6 reproduced, {elapsed:.2?}"))
}

/// 6. Uniform 4⊗4: `α = 3/8`, `β = 1/4`, `E = 3/2` for all 24 states.
fn four_by_four_maximum() -> Check {
    let u = vec![re(0.5); 4];
    let states = enumerate_perm_states(&u, &u).map_err(err)?;
    ensure(states.len() == 24, || format!("{} states", states.len()))?;
    for s in &states {
        within(s.alpha, 0.375, 1e-12, "α")?;
        within(s.beta, 0.25, 1e-12, "β")?;
        within(s.entanglement, 1.5, 1e-12, "E")?;
    }
    Ok("24 states with α = 3/8, β = 1/4, E = 3/2".into())
}

/// 7. Concurrence in the magic, computational and Schmidt bases.
fn concurrence_modes() -> Check {
    let modes = [ConcurrenceBasis::Magic, ConcurrenceBasis::Computational, ConcurrenceBasis::Schmidt];
    let mut r = rng(7);
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let psi = PureState::new(unit(&mut r, 4), &[2, 2]).map_err(err)?;
        let c: Vec<f64> = modes.iter().map(|&m| concurrence(&psi, m)).collect::<Result<_, _>>().map_err(err)?;
        worst = worst.max((c[0] - c[1]).abs()).max((c[0] - c[2]).abs()).max((c[1] - c[2]).abs());
    }
    within(worst, 0.0, 1e-10, "max disagreement")?;
    let bell = PureState::new(vec![re(FRAC_1_SQRT_2), re(0.0), re(0.0), re(FRAC_1_SQRT_2)], &[2, 2]).map_err(err)?;
    within(concurrence(&bell, ConcurrenceBasis::Computational).map_err(err)?, 1.0, 1e-12, "2|ad - bc| for Bell")?;
    let xy = PureState::new(vec![re(0.6), re(0.0), re(0.0), re(0.8)], &[2, 2]).map_err(err)?;
    within(concurrence(&xy, ConcurrenceBasis::Schmidt).map_err(err)?, 0.96, 1e-12, "2|xy| at (0.6, 0.8)")?;
    Ok(format!("500 states, max disagreement {worst:e}; examples give 1 and 0.96"))
}

/// 8. Negativity by two formulas, robustness and `N = C/2`.
fn negativity_and_robustness() -> Check {
    let bell = DensityMatrix::from_pure(&PureState::new(vec![re(FRAC_1_SQRT_2), re(0.0), re(0.0), re(FRAC_1_SQRT_2)], &[2, 2]).map_err(err)?)
        .with_dims(&[2, 2])
        .map_err(err)?;
    let (n1, n2) = (negativity(&bell).map_err(err)?, negativity_from_spectrum(&bell).map_err(err)?);
    within(n1, 0.5, 1e-10, "Bell negativity (trace norm)")?;
    within(n2, n1, 1e-10, "Bell negativity (spectrum)")?;
    within(robustness_pure(&bell).map_err(err)?, 2.0 * n1, 1e-12, "Bell robustness")?;
    let mut r = rng(8);
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let psi = PureState::new(unit(&mut r, 4), &[2, 2]).map_err(err)?;
        let rho = DensityMatrix::from_pure(&psi).with_dims(&[2, 2]).map_err(err)?;
        let n = negativity(&rho).map_err(err)?;
        let c = concurrence(&psi, ConcurrenceBasis::Magic).map_err(err)?;
        worst = worst.max((n - c / 2.0).abs()).max((robustness_pure(&rho).map_err(err)? - 2.0 * n).abs());
    }
    within(worst, 0.0, 1e-10, "max |N - C/2|")?;
    Ok(format!("Bell N = {n1}, 500 states with max residual {worst:e}"))
}

/// 9. Entropy-concurrence matrix over `C ∈ [0, 1]`.
fn entropy_concurrence_matrix() -> Check {
    let mut worst_trace = 0.0f64;
    let mut worst_det = 0.0f64;
    for k in 0..1000 {
        let m = EntropyConcurrenceMatrix::new(k as f64 / 999.0).map_err(err)?;
        worst_trace = worst_trace.max((m.trace() - 1.0).abs());
        worst_det = worst_det.max(m.determinant().abs());
    }
    ensure(worst_trace == 0.0, || format!("trace deviates by {worst_trace:e}"))?;
    within(worst_det, 0.0, 1e-12, "max |det|")?;
    Ok(format!("1000 points, trace exactly 1, max |det| {worst_det:e}"))
}

fn reduced_entropy(psi: &PureState) -> Result<f64, String> {
    let rho = DensityMatrix::from_pure(psi);
    let a = partial_trace(rho.matrix(), &[0]).map_err(err)?;
    von_neumann_entropy(&DensityMatrix::new(a).map_err(err)?).map_err(err)
}

/// 10. Relative entropy of entanglement bounds.
fn relative_entropy() -> Check {
    let start = Instant::now();
    let mut r = rng(10);
    let mut worst = 0.0f64;
    for k in 0..20 {
        let psi = PureState::new(unit(&mut r, 4), &[2, 2]).map_err(err)?;
        let rho = DensityMatrix::from_pure(&psi).with_dims(&[2, 2]).map_err(err)?;
        let oracle = reduced_entropy(&psi)?;
        let value = relative_entropy_of_entanglement(&rho, &RelativeEntropyOptions { seed: k, ..Default::default() }).map_err(err)?.value;
        let rel = (value - oracle).abs() / oracle.max(1e-6);
        ensure(rel <= 0.02 || (value - oracle).abs() <= 1e-9, || format!("state {k}: {value} vs S(ρ_A) = {oracle}"))?;
        worst = worst.max(rel);
    }
    let separable = build_family(&FamilyTag::Separable {
        weights: vec![0.3, 0.7],
        locals_a: vec![unit(&mut r, 2), unit(&mut r, 2)],
        locals_b: vec![unit(&mut r, 2), unit(&mut r, 2)],
    })
    .map_err(err)?;
    let sep = relative_entropy_of_entanglement(&separable, &RelativeEntropyOptions::default()).map_err(err)?.value;
    ensure(sep <= 1e-6, || format!("separable input gives {sep:e}"))?;
    let bell = build_family(&FamilyTag::EntangledQudit { a: vec![re(1.0); 2], b: vec![re(1.0); 2], pairing: vec![0, 1] }).map_err(err)?;
    let b = relative_entropy_of_entanglement(&bell, &RelativeEntropyOptions::default()).map_err(err)?.value;
    within(b, 1.0, 0.02, "Bell")?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("20 pure states within {:.3}%, separable {sep:.1e}, Bell {b:.6}, {elapsed:.2?}", 100.0 * worst))
}

/// 11. Two-member WFES matrix, sub-decoherence and decoherence.
fn wfes_example() -> Check {
    let mut r = rng(11);
    for _ in 0..100 {
        let gamma = unit(&mut r, 2);
        let (ca, cb) = (unit(&mut r, 2), unit(&mut r, 2));
        let e = EnsembleDecomposition::from_gammas(&gamma, vec![vec![ca.clone(), cb.clone()]]).map_err(err)?;
        let op = wfes_operator(&e).map_err(err)?;
        let (ga, gb) = (gamma[0], gamma[1]);
        for i in 0..2 {
            for j in 0..2 {
                let want = ga.norm_sqr() * ca[i] * ca[j].conj()
                    + gb.norm_sqr() * cb[i] * cb[j].conj()
                    + ga * gb.conj() * ca[i] * cb[j].conj()
                    + gb * ga.conj() * cb[i] * ca[j].conj();
                ensure((op[(i, j)] - want).norm() <= 1e-12, || format!("entry ({i}, {j}) differs"))?;
            }
        }
        let eps = decohere(&sub_decohere(&wfes_density(&e).map_err(err)?).map_err(err)?, &ComplexMatrix::identity(2)).map_err(err)?;
        let (e11, e22) = (eps.matrix()[(0, 0)].re, eps.matrix()[(1, 1)].re);
        within(e11 + e22, 1.0, 1e-12, "ε₁₁ + ε₂₂")?;
        within(e11, ga.norm_sqr() * ca[0].norm_sqr() + gb.norm_sqr() * cb[0].norm_sqr(), 1e-12, "ε₁₁")?;
    }
    let g = re(FRAC_1_SQRT_2);
    let e = EnsembleDecomposition::from_gammas(&[g, g], vec![vec![vec![re(1.0), re(0.0)], vec![g, g]]]).map_err(err)?;
    let eps = decohere(&sub_decohere(&wfes_density(&e).map_err(err)?).map_err(err)?, &ComplexMatrix::identity(2)).map_err(err)?;
    ensure(eps.matrix().max_diff(&ComplexMatrix::diag_real(&[0.75, 0.25])) <= 1e-12, || "worked instance is not diag(3/4, 1/4)".into())?;
    Ok("100 random instances match entrywise; worked instance gives diag(3/4, 1/4)".into())
}

/// 12. Kraus operators from dilations and normalisation of `D`.
fn kraus_and_histories() -> Check {
    let mut r = rng(12);
    let mut worst_norm = 0.0f64;
    let mut worst_oracle = 0.0f64;
    for k in 0..100 {
        let (d, env) = (2 + k % 2, 2 + (k / 2) % 2);
        let u = random_unitary(&mut r, d * env);
        let e0 = k % env;
        let ch = kraus_from_dilation(&u, env, e0).map_err(err)?;
        let total = ch.kraus().iter().fold(ComplexMatrix::zeros(d, d), |acc, k| &acc + &(&k.dagger() * k));
        worst_norm = worst_norm.max(total.max_diff(&ComplexMatrix::identity(d)));
        for _ in 0..20 {
            let rho = random_density(&mut r, d);
            let via_kraus = ch.apply_operator(&rho).map_err(err)?;
            worst_oracle = worst_oracle.max(via_kraus.max_diff(&dilation_output(&u, &rho, env, e0).map_err(err)?));
        }
    }
    within(worst_norm, 0.0, 1e-10, "max |ΣK†K - I|")?;
    within(worst_oracle, 0.0, 1e-10, "max Kraus vs partial trace")?;
    let mut worst_d = 0.0f64;
    for k in 0..50 {
        let d = 2 + k % 3;
        let steps = (0..1 + k % 3)
            .map(|_| {
                let basis = random_unitary(&mut r, d);
                let projectors = (0..d).map(|i| ComplexMatrix::projector(&basis.col(i))).collect();
                HistoryStep::new(projectors).with_unitary(random_unitary(&mut r, d))
            })
            .collect();
        let initial = DensityMatrix::new(random_density(&mut r, d)).map_err(err)?;
        let spec = HistorySpec::new(initial, steps).map_err(err)?;
        worst_d = worst_d.max((consistency_check(&spec).map_err(err)?.diagonal_sum - 1.0).abs());
    }
    within(worst_d, 0.0, 1e-10, "max |Σ D(α,α) - 1|")?;
    Ok(format!("ΣK†K within {worst_norm:.1e}, oracle within {worst_oracle:.1e}, Σ D(α,α) within {worst_d:.1e}"))
}

/// 13. The two-state mixture identity.
fn mixture() -> Check {
    let mut r = rng(13);
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let (e_d, e_c, p1) = (r.gen_range(0.0..1.0) + 1e-3, r.gen_range(0.0..1.0), r.gen_range(0.0..=1.0));
        let m = mixture_identity(e_d, e_c, p1, 1.0 - p1).map_err(err)?;
        worst = worst.max((m.lhs - m.rhs).abs());
    }
    within(worst, 0.0, 1e-12, "max residual")?;
    Ok(format!("500 draws, max residual {worst:e}"))
}

/// 14. Wigner function of a Gaussian and of an odd cat.
fn wigner_checks() -> Check {
    let start = Instant::now();
    let g = WavefunctionGrid::sample(|x| re((-x * x / 2.0).exp()), -8.0, 8.0, 0.01).map_err(err)?;
    within(wigner(&g, 0.0, 0.0).map_err(err)?, 1.0 / PI, 1e-4, "W(0, 0)")?;
    let step = 0.1;
    let axis: Vec<f64> = (0..=120).map(|k| -6.0 + k as f64 * step).collect();
    let rows: Vec<Vec<f64>> = scope_lab::dynamics::wigner_grid(&g, &axis, &axis).map_err(err)?;
    let total: f64 = rows.iter().flatten().sum::<f64>() * step * step;
    within(total, 1.0, 1e-4, "∫∫W")?;
    let mut worst_q = 0.0f64;
    let mut worst_p = 0.0f64;
    for (i, &x) in axis.iter().enumerate() {
        let density = (-x * x).exp() / PI.sqrt();
        // both marginals of this state share the same Gaussian density
        let over_p: f64 = rows[i].iter().sum::<f64>() * step;
        let over_q: f64 = rows.iter().map(|row| row[i]).sum::<f64>() * step;
        worst_q = worst_q.max((over_p - density).abs());
        worst_p = worst_p.max((over_q - density).abs());
    }
    within(worst_q, 0.0, 1e-4, "max |∫W dp - |ψ(q)|²|")?;
    within(worst_p, 0.0, 1e-4, "max |∫W dq - |φ(p)|²|")?;
    let cat = WavefunctionGrid::sample(
        |x| re((-(x - 3.0) * (x - 3.0) / 2.0).exp() - (-(x + 3.0) * (x + 3.0) / 2.0).exp()),
        -10.0,
        10.0,
        0.01,
    )
    .map_err(err)?;
    let w = wigner(&cat, 0.0, 0.0).map_err(err)?;
    within(w, -1.0 / PI, 0.02 / PI, "odd cat W(0, 0)")?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("norm {total:.7}, marginals within {:.1e}, cat W(0,0) = {w:.6}, {elapsed:.2?}", worst_q.max(worst_p)))
}

/// 15. The correlation table, one instance per family.
fn table_one() -> Check {
    let v = |x: &[f64]| x.iter().map(|&t| re(t)).collect::<Vec<_>>();
    let (a, b) = (v(&[0.6, 0.8]), v(&[1.0, 1.0]));
    let weights = vec![0.4, 0.6];
    let lambdas = vec![v(&[0.6, 0.8]), v(&[1.0, 0.5])];
    let locals_a = vec![v(&[1.0, 0.0]), v(&[1.0, 1.0])];
    let locals_b = vec![v(&[0.0, 1.0]), v(&[1.0, -1.0])];
    // rows: entanglement, decohered classicality, nonorthogonality, coarse-grained classicality
    let table: [(&str, FamilyTag, [bool; 4]); 6] = [
        ("qudit", FamilyTag::EntangledQudit { a: a.clone(), b: b.clone(), pairing: vec![0, 1] }, [true, true, false, false]),
        ("decohered qudit", FamilyTag::DecoheredQudit { a, b, pairing: vec![0, 1] }, [false, true, false, false]),
        ("ensemble qudit", FamilyTag::EnsembleEntangled { weights: weights.clone(), lambdas: lambdas.clone() }, [true, true, true, true]),
        ("ensemble-decohered qudit", FamilyTag::EnsembleDecohered { weights: weights.clone(), lambdas }, [false, true, true, true]),
        ("separable", FamilyTag::Separable { weights: weights.clone(), locals_a: locals_a.clone(), locals_b: locals_b.clone() }, [false, false, true, true]),
        ("ensemble-product", FamilyTag::EnsembleProduct { weights, locals_a, locals_b }, [false, false, true, false]),
    ];
    for (name, tag, want) in table {
        let rho = build_family(&tag).map_err(err)?;
        let got = classify(&rho).map_err(err)?.profile().ok_or(format!("{name}: no profile"))?.flags();
        ensure(got == want, || format!("{name}: {got:?}, expected {want:?}"))?;
    }
    Ok("all 24 entries match".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 15] = [
        ("maximal superposition", maximal_superposition),
        ("Bell reduced entanglement", bell_reduced_entanglement),
        ("fundamental relation", fundamental_relation),
        ("GHZ family", ghz_reduced_entanglement),
        ("sum identities", sum_identities),
        ("4x4 maximal point", four_by_four_maximum),
        ("concurrence in three bases", concurrence_modes),
        ("negativity and robustness", negativity_and_robustness),
        ("entropy-concurrence matrix", entropy_concurrence_matrix),
        ("relative entropy of entanglement", relative_entropy),
        ("WFES two-party example", wfes_example),
        ("Kraus dilations and histories", kraus_and_histories),
        ("mixture identity", mixture),
        ("Wigner function", wigner_checks),
        ("correlation table", table_one),
    ];
    let mut failures = Vec::new();
    let mut err_out = std::io::stderr();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let line = match &outcome {
            Ok(detail) => format!("PASS {:>2} {name}: {detail} [{:.2?}]", k + 1, start.elapsed()),
            Err(reason) => format!("FAIL {:>2} {name}: {reason} [{:.2?}]", k + 1, start.elapsed()),
        };
        writeln!(err_out, "{line}").unwrap();
        if outcome.is_err() {
            failures.push(line);
        }
    }
    assert!(failures.is_empty(), "{} criteria failed:\n{}", failures.len(), failures.join("\n"));
}
