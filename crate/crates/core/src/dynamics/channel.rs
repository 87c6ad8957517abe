use crate::numerics::{partial_trace, tensor_product, ComplexMatrix, C64, TOL};
use crate::states::DensityMatrix;
use crate::{Error, Result};

/// A completely positive trace-preserving map in Kraus form.
#[derive(Debug, Clone, PartialEq)]
pub struct Channel {
    kraus: Vec<ComplexMatrix>,
}

impl Channel {
    /// Checks that all operators are `d × d` and `Σ K†K = I`.
    pub fn new(kraus: Vec<ComplexMatrix>) -> Result<Self> {
        let d = kraus
            .first()
            .ok_or_else(|| Error::Domain("a channel needs at least one Kraus operator".into()))?
            .rows();
        let mut total = ComplexMatrix::zeros(d, d);
        for (i, k) in kraus.iter().enumerate() {
            if k.rows() != d || k.cols() != d {
                return Err(Error::Dimension(format!("Kraus operator {i} is {}x{}, expected {d}x{d}", k.rows(), k.cols())));
            }
            total = &total + &(&k.dagger() * k);
        }
        let deviation = total.max_diff(&ComplexMatrix::identity(d));
        if deviation > TOL.operator {
            return Err(Error::KrausNormalization(deviation));
        }
        Ok(Self { kraus })
    }

    pub fn identity(d: usize) -> Self {
        Self {
            kraus: vec![ComplexMatrix::identity(d)],
        }
    }

    /// `K_i = |i⟩⟨i|` in the computational basis.
    pub fn full_dephasing(d: usize) -> Self {
        Self {
            kraus: (0..d)
                .map(|i| {
                    let mut k = ComplexMatrix::zeros(d, d);
                    k[(i, i)] = C64::new(1.0, 0.0);
                    k
                })
                .collect(),
        }
    }

    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    pub fn dim(&self) -> usize {
        self.kraus[0].rows()
    }

    /// `self` followed by `next`: Kraus set `{B_j A_i}`.
    pub fn then(&self, next: &Channel) -> Result<Channel> {
        if self.dim() != next.dim() {
            return Err(Error::Dimension("channels act on different dimensions".into()));
        }
        let kraus = next
            .kraus
            .iter()
            .flat_map(|b| self.kraus.iter().map(move |a| b * a))
            .collect();
        Ok(Channel { kraus })
    }

    /// `Σ K X K†` for any square operator `X`, not only states.
    pub fn apply_operator(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.rows() != self.dim() || x.cols() != self.dim() {
            return Err(Error::Dimension(format!("operator is {}x{}, channel acts on {}", x.rows(), x.cols(), self.dim())));
        }
        let mut out = ComplexMatrix::zeros(self.dim(), self.dim());
        for k in &self.kraus {
            out = &out + &(&(k * x) * &k.dagger());
        }
        if let Some(d) = x.dims() {
            out = out.with_dims(d)?;
        }
        Ok(out)
    }
}

/// `Σ K_i ρ K_i†`. The output keeps subsystem dims but not the family tag.
pub fn apply_channel(rho: &DensityMatrix, channel: &Channel) -> Result<DensityMatrix> {
    let out = DensityMatrix::new(channel.apply_operator(rho.matrix())?.hermitian_part())?;
    match rho.dims() {
        Some(d) => out.with_dims(d),
        None => Ok(out),
    }
}

fn split_dims(u: &ComplexMatrix, env_dim: usize, env_init: usize) -> Result<usize> {
    if !u.is_square() || env_dim == 0 || !u.rows().is_multiple_of(env_dim) {
        return Err(Error::Dimension(format!(
            "a {}x{} unitary does not factor with environment dimension {env_dim}",
            u.rows(),
            u.cols()
        )));
    }
    if env_init >= env_dim {
        return Err(Error::Index {
            index: env_init,
            limit: env_dim,
        });
    }
    let violation = u.unitarity_violation();
    if violation > TOL.operator {
        return Err(Error::NotUnitary(violation));
    }
    Ok(u.rows() / env_dim)
}

/// `K_i = ⟨i|_E U |e₀⟩_E` for a unitary on `S ⊗ E` (environment last).
pub fn kraus_from_dilation(u: &ComplexMatrix, env_dim: usize, env_init: usize) -> Result<Channel> {
    let d = split_dims(u, env_dim, env_init)?;
    let kraus = (0..env_dim)
        .map(|i| ComplexMatrix::from_fn(d, d, |r, c| u[(r * env_dim + i, c * env_dim + env_init)]))
        .collect();
    Channel::new(kraus)
}

/// `Tr_E[U (ρ ⊗ |e₀⟩⟨e₀|) U†]`, the reference the Kraus form must match.
pub fn dilation_output(u: &ComplexMatrix, rho: &ComplexMatrix, env_dim: usize, env_init: usize) -> Result<ComplexMatrix> {
    let d = split_dims(u, env_dim, env_init)?;
    if rho.rows() != d || rho.cols() != d {
        return Err(Error::Dimension(format!("state is {}x{}, system dimension is {d}", rho.rows(), rho.cols())));
    }
    let mut env = ComplexMatrix::zeros(env_dim, env_dim);
    env[(env_init, env_init)] = C64::new(1.0, 0.0);
    let joint = tensor_product(&rho.clone().without_dims(), &env);
    let evolved = (&(u * &joint) * &u.dagger()).with_dims(&[d, env_dim])?;
    partial_trace(&evolved, &[0])
}
