use num_complex::Complex64 as C64;

use super::{eigh, svd, ComplexMatrix, TOL};
use crate::{Error, Result};

/// Scalar function lifted to Hermitian matrices by [`mat_func`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatFunc {
    Exp,
    Log,
    Sqrt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBase {
    E,
    Two,
}

impl LogBase {
    fn ln(self) -> f64 {
        match self {
            LogBase::E => 1.0,
            LogBase::Two => std::f64::consts::LN_2,
        }
    }
}

/// Eigenvalues this far below zero are clamped to zero by `log` and `sqrt`.
const NEGATIVE_CLAMP: f64 = 1e-12;

/// Applies `f` to the eigenvalues of a Hermitian matrix.
///
/// `Exp` means `base^λ`, `Log` means `log_base λ`. With
/// `support_restricted`, `log` maps (numerically) zero eigenvalues to zero,
/// i.e. it acts on the support only; otherwise they are a domain error.
pub fn mat_func(
    a: &ComplexMatrix,
    f: MatFunc,
    base: LogBase,
    support_restricted: bool,
) -> Result<ComplexMatrix> {
    let eig = eigh(a)?;
    let mut mapped = Vec::with_capacity(eig.eigenvalues.len());
    for &l in &eig.eigenvalues {
        let value = match f {
            MatFunc::Exp => (l * base.ln()).exp(),
            MatFunc::Sqrt | MatFunc::Log if l < -NEGATIVE_CLAMP => {
                return Err(Error::Domain(format!("eigenvalue {l:e} is negative")));
            }
            MatFunc::Sqrt => l.max(0.0).sqrt(),
            MatFunc::Log => {
                let l = l.max(0.0);
                if l < TOL.log_floor {
                    if !support_restricted {
                        return Err(Error::Domain(
                            "log of a rank-deficient matrix; request the support-restricted log".into(),
                        ));
                    }
                    0.0
                } else {
                    l.ln() / base.ln()
                }
            }
        };
        mapped.push(C64::new(value, 0.0));
    }
    let mut out = eig.reconstruct_from(&mapped);
    out.set_dims_unchecked(a.dims().map(<[usize]>::to_vec));
    Ok(out)
}

/// `V diag(f(λ)) V^H` for an arbitrary complex-valued `f`.
pub fn spectral_map(a: &ComplexMatrix, f: impl Fn(f64) -> C64) -> Result<ComplexMatrix> {
    let mut out = eigh(a)?.reconstruct_with(f);
    out.set_dims_unchecked(a.dims().map(<[usize]>::to_vec));
    Ok(out)
}

/// `exp(-i H t)` for Hermitian `H` (ħ = 1).
pub fn unitary_from_generator(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    spectral_map(h, |l| C64::from_polar(1.0, -l * t))
}

/// Sum of singular values; for Hermitian input, the sum of `|λ|`.
pub fn trace_norm(a: &ComplexMatrix) -> Result<f64> {
    if !a.is_square() {
        return Err(Error::Dimension("trace norm needs a square matrix".into()));
    }
    if a.is_hermitian(TOL.hermitian) {
        Ok(eigh(a)?.eigenvalues.iter().map(|l| l.abs()).sum())
    } else {
        Ok(svd(a)?.singular_values.iter().sum())
    }
}
