use crate::numerics::{unitary_from_generator, ComplexMatrix, C64, TOL};
use crate::states::{DensityMatrix, PureState};
use crate::{Error, Result};

/// A Hamiltonian, optionally split as `H = H₀ + H'` for the interaction
/// picture.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSpec {
    h: ComplexMatrix,
    split: Option<(ComplexMatrix, ComplexMatrix)>,
}

impl HamiltonianSpec {
    pub fn new(h: ComplexMatrix) -> Result<Self> {
        if !h.is_square() {
            return Err(Error::Dimension(format!("Hamiltonian is {}x{}", h.rows(), h.cols())));
        }
        h.check_hermitian(TOL.hermitian)?;
        Ok(Self { h, split: None })
    }

    /// `H = H₀ + H'` with both parts Hermitian.
    pub fn with_split(h0: ComplexMatrix, h_int: ComplexMatrix) -> Result<Self> {
        if (h0.rows(), h0.cols()) != (h_int.rows(), h_int.cols()) {
            return Err(Error::Dimension("H0 and H' differ in shape".into()));
        }
        h0.check_hermitian(TOL.hermitian)?;
        h_int.check_hermitian(TOL.hermitian)?;
        let mut spec = Self::new(&h0 + &h_int)?;
        spec.split = Some((h0, h_int));
        Ok(spec)
    }

    pub fn h(&self) -> &ComplexMatrix {
        &self.h
    }

    pub fn split(&self) -> Option<(&ComplexMatrix, &ComplexMatrix)> {
        self.split.as_ref().map(|(a, b)| (a, b))
    }

    pub fn dim(&self) -> usize {
        self.h.rows()
    }

    /// `exp(-i H t)`.
    pub fn unitary(&self, t: f64) -> Result<ComplexMatrix> {
        unitary_from_generator(&self.h, t)
    }
}

/// States that can be moved forward by a unitary.
pub trait Evolve: Sized {
    fn evolve_by(&self, u: &ComplexMatrix) -> Result<Self>;
    fn state_dim(&self) -> usize;
}

impl Evolve for PureState {
    fn evolve_by(&self, u: &ComplexMatrix) -> Result<Self> {
        self.apply(u)
    }

    fn state_dim(&self) -> usize {
        self.dim()
    }
}

impl Evolve for DensityMatrix {
    /// The family tag does not survive evolution; subsystem dims do.
    fn evolve_by(&self, u: &ComplexMatrix) -> Result<Self> {
        let out = DensityMatrix::new((&(u * self.matrix()) * &u.dagger()).hermitian_part())?;
        match self.dims() {
            Some(d) => out.with_dims(d),
            None => Ok(out),
        }
    }

    fn state_dim(&self) -> usize {
        self.dim()
    }
}

/// `U(t) ψ` or `U(t) ρ U(t)†` with `U(t) = exp(-i H t)`.
pub fn evolve<S: Evolve>(state: &S, h: &HamiltonianSpec, t: f64) -> Result<S> {
    if state.state_dim() != h.dim() {
        return Err(Error::Dimension(format!(
            "state has dimension {}, Hamiltonian {}",
            state.state_dim(),
            h.dim()
        )));
    }
    state.evolve_by(&h.unitary(t)?)
}

/// `max |i ρ̇(t) - [H, ρ(t)]|`, with `ρ̇` from a central difference of
/// step `dt`.
pub fn liouville_residual(rho: &DensityMatrix, h: &HamiltonianSpec, t: f64, dt: f64) -> Result<f64> {
    let at = |s: f64| -> Result<ComplexMatrix> { Ok(evolve(rho, h, s)?.matrix().clone()) };
    let derivative = (&at(t + dt)? - &at(t - dt)?).scale(C64::new(0.0, 1.0 / (2.0 * dt)));
    let rho_t = at(t)?;
    Ok(derivative.max_diff(&h.h().commutator(&rho_t)))
}

/// `⟨A⟩(t)` computed three ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PictureExpectations {
    /// `⟨ψ(t)| A |ψ(t)⟩` with `ψ(t) = U ψ₀`.
    pub schrodinger: f64,
    /// `⟨ψ₀| U† A U |ψ₀⟩`.
    pub heisenberg: f64,
    /// `⟨ψ_I(t)| A_I(t) |ψ_I(t)⟩` with `A_I = U₀† A U₀` and `ψ_I = U₀† U ψ₀`.
    pub dirac: f64,
}

impl PictureExpectations {
    pub fn max_disagreement(&self) -> f64 {
        let v = [self.schrodinger, self.heisenberg, self.dirac];
        let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
        hi - lo
    }
}

/// Expectation of a Hermitian observable in the Schrödinger, Heisenberg
/// and interaction pictures. The Hamiltonian must carry a split.
pub fn expectation_in_pictures(
    a: &ComplexMatrix,
    psi0: &PureState,
    h: &HamiltonianSpec,
    t: f64,
) -> Result<PictureExpectations> {
    a.check_hermitian(TOL.hermitian)?;
    if a.rows() != h.dim() || psi0.dim() != h.dim() {
        return Err(Error::Dimension("observable, state and Hamiltonian differ in dimension".into()));
    }
    let (h0, _) = h
        .split()
        .ok_or_else(|| Error::Domain("the interaction picture needs H = H0 + H'".into()))?;
    let u = h.unitary(t)?;
    let u0 = unitary_from_generator(h0, t)?;

    let schrodinger = psi0.apply(&u)?.expectation(a).re;
    let a_heisenberg = &(&u.dagger() * a) * &u;
    let heisenberg = psi0.expectation(&a_heisenberg).re;
    let a_interaction = &(&u0.dagger() * a) * &u0;
    let psi_interaction = psi0.apply(&(&u0.dagger() * &u))?;
    let dirac = psi_interaction.expectation(&a_interaction).re;
    Ok(PictureExpectations {
        schrodinger,
        heisenberg,
        dirac,
    })
}
