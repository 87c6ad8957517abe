#![allow(dead_code)]

use proptest::prelude::*;
use scope_lab::numerics::{c64, ComplexMatrix, C64};
use scope_lab::states::{DensityMatrix, PureState};

pub fn complex() -> impl Strategy<Value = C64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| c64(a, b))
}

/// A complex vector bounded away from zero norm.
pub fn complex_vec(n: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec(complex(), n).prop_filter("nonzero", |v| v.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3)
}

pub fn unit_vec(n: usize) -> impl Strategy<Value = Vec<C64>> {
    complex_vec(n).prop_map(|v| {
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        v.iter().map(|z| z / norm).collect()
    })
}

/// Normalised vector of strictly positive reals.
pub fn positive_unit_vec(n: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec(0.05f64..1.0, n).prop_map(|v| {
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.iter().map(|x| c64(x / norm, 0.0)).collect()
    })
}

pub fn hermitian(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(complex(), n * n)
        .prop_map(move |data| ComplexMatrix::from_vec(n, n, data).unwrap().hermitian_part())
}

/// `G G† / Tr(G G†)` for a random square `G`.
pub fn density(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(complex(), n * n).prop_filter_map("nonzero", move |data| {
        let g = ComplexMatrix::from_vec(n, n, data).unwrap();
        let m = &g * &g.dagger();
        let t = m.trace().re;
        (t > 1e-3).then(|| m.scale_real(1.0 / t).hermitian_part())
    })
}

pub fn density_state(dims: &'static [usize]) -> impl Strategy<Value = DensityMatrix> {
    density(dims.iter().product()).prop_map(move |m| DensityMatrix::new(m).unwrap().with_dims(dims).unwrap())
}

pub fn pure_state(dims: &'static [usize]) -> impl Strategy<Value = PureState> {
    unit_vec(dims.iter().product()).prop_map(move |v| PureState::normalized(&v, dims).unwrap())
}

pub fn unitary(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    (hermitian(n), 0.1f64..3.0).prop_map(|(h, t)| scope_lab::numerics::unitary_from_generator(&h, t).unwrap())
}

/// `cases` cases without on-disk failure persistence.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}
