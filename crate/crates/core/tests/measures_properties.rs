mod common;

use common::{config, density_state, pure_state, unit_vec};
use proptest::prelude::*;
use scope_lab::measures::{
    concurrence, degree_of_superposition, direct_cross_entanglement, ls_correlation, negativity,
    negativity_from_spectrum, relative_entropy_of_entanglement, robustness_pure, von_neumann_entropy, ConcurrenceBasis,
    EntropyConcurrenceMatrix, RelativeEntropyOptions,
};
use scope_lab::numerics::{eigh, partial_trace};
use scope_lab::states::{DensityMatrix, PureState};

fn reduced_entropy(psi: &PureState) -> f64 {
    let rho = DensityMatrix::from_pure(psi);
    let a = partial_trace(rho.matrix(), &[0]).unwrap();
    von_neumann_entropy(&DensityMatrix::new(a).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn superposition_degree_identity(v in (1usize..=8).prop_flat_map(unit_vec)) {
        let eps = degree_of_superposition(&v).unwrap();
        let l1: f64 = v.iter().map(|z| z.norm()).sum();
        let l2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        prop_assert!((eps - 0.5 * (l1 * l1 - l2)).abs() < 1e-12);
        prop_assert!(eps <= (v.len() as f64 - 1.0) / 2.0 + 1e-12);
    }

    #[test]
    fn fundamental_relation(a in unit_vec(2), b in unit_vec(2)) {
        let dc = direct_cross_entanglement(&a, &b).unwrap();
        let product = degree_of_superposition(&a).unwrap() * degree_of_superposition(&b).unwrap();
        prop_assert!((dc.e_reduced - product).abs() < 1e-12);
    }

    #[test]
    fn concurrence_modes_and_negativity(psi in pure_state(&[2, 2])) {
        let c = concurrence(&psi, ConcurrenceBasis::Computational).unwrap();
        prop_assert!((concurrence(&psi, ConcurrenceBasis::Magic).unwrap() - c).abs() < 1e-10);
        prop_assert!((concurrence(&psi, ConcurrenceBasis::Schmidt).unwrap() - c).abs() < 1e-10);
        prop_assert!((0.0..=1.0).contains(&c));
        let rho = DensityMatrix::from_pure(&psi);
        let n = negativity(&rho).unwrap();
        prop_assert!((n - c / 2.0).abs() < 1e-10);
        prop_assert!((negativity_from_spectrum(&rho).unwrap() - n).abs() < 1e-10);
        prop_assert!((robustness_pure(&rho).unwrap() - 2.0 * n).abs() < 1e-12);
    }

    #[test]
    fn entropy_concurrence_matrix(c in 0.0f64..=1.0) {
        let m = EntropyConcurrenceMatrix::new(c).unwrap();
        prop_assert_eq!(m.trace(), 1.0);
        prop_assert!(m.determinant().abs() < 1e-12);
        prop_assert_eq!(m.entries[0][1], c / 2.0);
        prop_assert_eq!(m.entries[1][0], c / 2.0);
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn ls_certificate(rho in density_state(&[2, 2]), sigma in density_state(&[2, 2])) {
        let r = ls_correlation(&rho, &sigma, |_| 1.0).unwrap();
        let gap = rho.matrix() - &sigma.matrix().scale_real(r.lambda);
        let min = eigh(&gap).unwrap().eigenvalues[0];
        prop_assert!((-1e-9..=1e-6).contains(&min), "min eigenvalue {}", min);
        prop_assert!((0.0..=1.0).contains(&r.lambda));
    }
}

proptest! {
    #![proptest_config(config(4))]

    #[test]
    fn relative_entropy_of_pure_states(psi in pure_state(&[2, 2]), seed in any::<u64>()) {
        let options = RelativeEntropyOptions { seed, ..Default::default() };
        let r = relative_entropy_of_entanglement(&DensityMatrix::from_pure(&psi), &options).unwrap();
        let oracle = reduced_entropy(&psi);
        prop_assert!((r.value - oracle).abs() <= 0.02 * oracle.max(1e-6) + 1e-9, "{} vs {}", r.value, oracle);
        prop_assert!(r.value >= oracle - 1e-9, "below oracle: {} vs {}", r.value, oracle);
    }
}
