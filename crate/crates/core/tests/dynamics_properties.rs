mod common;

use common::{config, density, density_state, hermitian, pure_state, unitary};
use proptest::prelude::*;
use scope_lab::dynamics::{
    apply_channel, consistency_check, decoherence_matrix, dilation_output, evolve, expectation_in_pictures,
    kraus_from_dilation, wigner, Channel, HamiltonianSpec, HistorySpec, HistoryStep, WavefunctionGrid,
};
use scope_lab::numerics::{eigh, re, ComplexMatrix};
use scope_lab::states::DensityMatrix;

/// Spectral projectors of a random Hermitian matrix, grouped into `k` blocks.
fn projector_family(d: usize) -> impl Strategy<Value = Vec<ComplexMatrix>> {
    (hermitian(d), 1usize..=d).prop_map(move |(h, k)| {
        let v = eigh(&h).unwrap().eigenvectors;
        let mut family = vec![ComplexMatrix::zeros(d, d); k];
        for j in 0..d {
            let p = ComplexMatrix::projector(&v.col(j));
            family[j % k] = &family[j % k] + &p;
        }
        family
    })
}

fn history_spec() -> impl Strategy<Value = HistorySpec> {
    (2usize..=3).prop_flat_map(|d| {
        (
            density(d),
            prop::collection::vec((unitary(d), projector_family(d), prop::bool::ANY), 1..=3),
        )
            .prop_map(move |(rho, steps)| {
                let steps = steps
                    .into_iter()
                    .map(|(u, p, dephase)| {
                        let step = HistoryStep::new(p).with_unitary(u);
                        if dephase { step.with_channel(Channel::full_dephasing(d)) } else { step }
                    })
                    .collect();
                HistorySpec::new(DensityMatrix::new(rho).unwrap(), steps).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn evolution_is_unitary(h in hermitian(3), t in -5.0f64..5.0, rho in density_state(&[3])) {
        let spec = HamiltonianSpec::new(h).unwrap();
        prop_assert!(spec.unitary(t).unwrap().unitarity_violation() <= 1e-10);
        let out = evolve(&rho, &spec, t).unwrap();
        prop_assert!((out.matrix().trace().re - 1.0).abs() < 1e-10);
        prop_assert!((out.purity() - rho.purity()).abs() < 1e-10);
    }

    #[test]
    fn pictures_agree(
        h0 in hermitian(2),
        h1 in hermitian(2),
        a in hermitian(2),
        psi in pure_state(&[2]),
        t in -3.0f64..3.0,
    ) {
        let spec = HamiltonianSpec::with_split(h0, h1).unwrap();
        let e = expectation_in_pictures(&a, &psi, &spec, t).unwrap();
        prop_assert!(e.max_disagreement() <= 1e-10, "{:?}", e);
    }

    #[test]
    fn decoherence_functional_is_hermitian_and_normalized(spec in history_spec()) {
        let m = decoherence_matrix(&spec).unwrap();
        let n = m.histories.len();
        for a in 0..n {
            prop_assert!(m.get(a, a).re >= -1e-12);
            for b in 0..n {
                prop_assert!((m.get(a, b) - m.get(b, a).conj()).norm() <= 1e-10);
            }
        }
        prop_assert!((m.diagonal_sum() - 1.0).abs() <= 1e-10);
        let r = consistency_check(&spec).unwrap();
        prop_assert!((r.diagonal_sum - 1.0).abs() <= 1e-10);
        let worst = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
            .map(|(a, b)| m.get(a, b).norm()).fold(0.0, f64::max);
        prop_assert!((worst - r.max_offdiag).abs() <= 1e-14);
    }

    #[test]
    fn dilated_channels_are_cptp(u in unitary(4), rho in density_state(&[2]), e0 in 0usize..2) {
        let ch = kraus_from_dilation(&u, 2, e0).unwrap();
        let out = apply_channel(&rho, &ch).unwrap();
        prop_assert!((out.matrix().trace().re - 1.0).abs() < 1e-10);
        prop_assert!(eigh(out.matrix()).unwrap().eigenvalues[0] >= -1e-10);
        prop_assert!(out.matrix().max_diff(&dilation_output(&u, rho.matrix(), 2, e0).unwrap()) <= 1e-10);
    }
}

proptest! {
    #![proptest_config(config(20))]

    #[test]
    fn wigner_of_even_state_is_even_in_p(width in 0.5f64..2.0, shift in 0.0f64..2.0, p in 0.0f64..3.0) {
        let f = move |x: f64| re((-(x - shift) * (x - shift) / (2.0 * width * width)).exp() + (-(x + shift) * (x + shift) / (2.0 * width * width)).exp());
        let psi = WavefunctionGrid::sample(f, -12.0, 12.0, 0.02).unwrap();
        let plus = wigner(&psi, 0.0, p).unwrap();
        let minus = wigner(&psi, 0.0, -p).unwrap();
        prop_assert!((plus - minus).abs() <= 1e-8);
    }
}
