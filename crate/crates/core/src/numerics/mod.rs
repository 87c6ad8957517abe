//! Self-contained dense complex linear algebra.
//!
//! Everything here works on [`ComplexMatrix`], a row-major dense matrix that
//! optionally records how its row space factors into subsystems. Sizes in
//! this crate stay below a few hundred, so all algorithms are the plain
//! `O(n^3)` ones.

mod eigen;
mod funcs;
mod matrix;
mod structure;
mod svd;
mod tolerances;

pub use eigen::{eigh, EigenResult};
pub use funcs::{mat_func, spectral_map, trace_norm, unitary_from_generator, LogBase, MatFunc};
pub use matrix::ComplexMatrix;
pub use structure::{partial_trace, partial_transpose, tensor_product};
pub use svd::{svd, SvdResult};
pub use tolerances::{Tolerances, TOL};

pub use num_complex::Complex64 as C64;

/// Shorthand for a complex number with the given parts.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Shorthand for a real complex number.
#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}
