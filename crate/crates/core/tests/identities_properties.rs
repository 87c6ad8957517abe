mod common;

use common::{config, positive_unit_vec, unit_vec};
use proptest::prelude::*;
use scope_lab::identities::{enumerate_perm_states, ghz_family, mixture_identity, verify_sum_identities};
use scope_lab::measures::{degree_of_entanglement, degree_of_superposition};
use scope_lab::numerics::{re, C64};

fn pair() -> impl Strategy<Value = (Vec<C64>, Vec<C64>)> {
    (2usize..=6).prop_flat_map(|n| (positive_unit_vec(n), positive_unit_vec(n)))
}

fn uniform(n: usize) -> Vec<C64> {
    vec![re(1.0 / (n as f64).sqrt()); n]
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn sum_identities_hold((a, b) in pair()) {
        let r = verify_sum_identities(&a, &b).unwrap();
        prop_assert!(r.max_abs_residual <= 1e-10, "{:?}", r);
    }

    #[test]
    fn reports_match_branch_degrees((a, b) in (2usize..=4).prop_flat_map(|n| (unit_vec(n), unit_vec(n)))) {
        for s in enumerate_perm_states(&a, &b).unwrap() {
            let e = degree_of_entanglement(&s.branch_coefficients(&a, &b)).unwrap();
            prop_assert!((e - s.entanglement).abs() < 1e-12);
        }
    }

    #[test]
    fn perturbing_the_uniform_point_lowers_the_minimum(n in 2usize..=6, which in 0usize..12, sign in prop::bool::ANY) {
        let base = enumerate_perm_states(&uniform(n), &uniform(n)).unwrap();
        let max = (n as f64 - 1.0) / 2.0;
        prop_assert!(base.iter().all(|s| (s.entanglement - max).abs() < 1e-12));
        let mut a: Vec<f64> = vec![1.0 / (n as f64).sqrt(); n];
        a[which % n] += if sign { 1e-3 } else { -1e-3 };
        let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        let a: Vec<C64> = a.iter().map(|x| re(x / norm)).collect();
        let perturbed = enumerate_perm_states(&a, &uniform(n)).unwrap();
        let min = perturbed.iter().map(|s| s.entanglement).fold(f64::INFINITY, f64::min);
        prop_assert!(min < max);
    }

    #[test]
    fn ghz_reduced_is_product_of_degrees(parties in (2usize..=6).prop_flat_map(|m| prop::collection::vec(unit_vec(2), m))) {
        let f = ghz_family(&parties).unwrap();
        let product: f64 = parties.iter().map(|c| degree_of_superposition(c).unwrap()).product();
        prop_assert!((f.e_dagger - product).abs() < 1e-12);
        prop_assert_eq!(f.states.len(), 1 << (parties.len() - 1));
    }
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn mixture_identity_holds(e_d in 0.0f64..2.0, e_c in 0.001f64..2.0, p1 in 0.0f64..=1.0) {
        let m = mixture_identity(e_d, e_c, p1, 1.0 - p1).unwrap();
        prop_assert!((m.lhs - m.rhs).abs() <= 1e-12);
    }
}
