//! JSON state files.
//!
//! Complex numbers are `[re, im]` pairs. Floats are written in shortest
//! round-trip form, so write-then-read reproduces every bit.

use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use scope_lab::dynamics::WavefunctionGrid;
use scope_lab::numerics::{ComplexMatrix, C64};
use scope_lab::states::{build_family, make_scope, DensityMatrix, EnsembleDecomposition, FamilyTag, PureState, ScopeDecomposition};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StateKind {
    Pure,
    Density,
    Ensemble,
    Scope,
    /// A sampled one-dimensional wave function `ψ(x0 + j dx)`.
    Wavefunction,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub kind: StateKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes: Option<Vec<C64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<C64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_tag: Option<FamilyTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
    /// `locals[party][member]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub locals: Option<Vec<Vec<Vec<C64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x0: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dx: Option<f64>,
}

/// A state file turned into library values.
#[derive(Debug, Clone)]
pub enum State {
    Pure(PureState),
    Density(DensityMatrix),
    Ensemble(EnsembleDecomposition),
    Scope(ScopeDecomposition, PureState),
    Wavefunction(WavefunctionGrid),
}

/// A family-tagged matrix must agree with a rebuild from its tag this well.
const TAG_AGREEMENT: f64 = 1e-10;

fn rows_of(m: &ComplexMatrix) -> Vec<Vec<C64>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

impl StateFile {
    fn empty(kind: StateKind, dims: Vec<usize>) -> Self {
        Self {
            kind,
            dims,
            amplitudes: None,
            matrix: None,
            family_tag: None,
            weights: None,
            locals: None,
            x0: None,
            dx: None,
        }
    }

    pub fn from_pure(psi: &PureState) -> Self {
        Self {
            amplitudes: Some(psi.amplitudes().to_vec()),
            ..Self::empty(StateKind::Pure, psi.dims().to_vec())
        }
    }

    pub fn from_density(rho: &DensityMatrix) -> Self {
        let dims = rho.dims().map_or_else(|| vec![rho.dim()], <[usize]>::to_vec);
        Self {
            matrix: Some(rows_of(rho.matrix())),
            family_tag: rho.family().cloned(),
            ..Self::empty(StateKind::Density, dims)
        }
    }

    pub fn from_ensemble(e: &EnsembleDecomposition) -> Self {
        Self {
            weights: Some(e.weights().to_vec()),
            locals: Some((0..e.parties()).map(|mu| e.locals(mu).to_vec()).collect()),
            ..Self::empty(StateKind::Ensemble, e.dims())
        }
    }

    pub fn from_scope(state: &PureState) -> Self {
        Self {
            amplitudes: Some(state.amplitudes().to_vec()),
            ..Self::empty(StateKind::Scope, state.dims().to_vec())
        }
    }

    pub fn from_wavefunction(grid: &WavefunctionGrid) -> Self {
        Self {
            amplitudes: Some(grid.samples().to_vec()),
            x0: Some(grid.x0()),
            dx: Some(grid.dx()),
            ..Self::empty(StateKind::Wavefunction, vec![grid.len()])
        }
    }

    pub fn from_state(state: &State) -> Self {
        match state {
            State::Pure(p) => Self::from_pure(p),
            State::Density(d) => Self::from_density(d),
            State::Ensemble(e) => Self::from_ensemble(e),
            State::Scope(_, s) => Self::from_scope(s),
            State::Wavefunction(g) => Self::from_wavefunction(g),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("state file is not valid JSON for the state schema")
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        Self::from_json(&text).with_context(|| format!("in {}", path.display()))
    }

    fn amplitudes(&self) -> Result<&[C64]> {
        self.amplitudes.as_deref().context("field \"amplitudes\" is required for this kind")
    }

    /// Validates the file against the invariants of its kind.
    pub fn to_state(&self) -> Result<State> {
        Ok(match self.kind {
            StateKind::Pure => {
                let dims = if self.dims.is_empty() { vec![self.amplitudes()?.len()] } else { self.dims.clone() };
                State::Pure(PureState::new(self.amplitudes()?.to_vec(), &dims)?)
            }
            StateKind::Density => {
                let rows = self.matrix.as_ref().context("field \"matrix\" is required for a density state")?;
                let mut rho = DensityMatrix::new(ComplexMatrix::from_rows(rows)?)?;
                if !self.dims.is_empty() {
                    rho = rho.with_dims(&self.dims)?;
                }
                if let Some(tag) = &self.family_tag {
                    let rebuilt = build_family(tag)?;
                    let gap = rebuilt.matrix().max_diff(rho.matrix());
                    ensure!(gap <= TAG_AGREEMENT, "matrix differs from its family_tag by {gap:e}");
                    rho = rho.with_dims(&tag.dims())?.with_family(tag.clone());
                }
                State::Density(rho)
            }
            StateKind::Ensemble => {
                let weights = self.weights.as_ref().context("field \"weights\" is required for an ensemble")?;
                let locals = self.locals.clone().context("field \"locals\" is required for an ensemble")?;
                State::Ensemble(EnsembleDecomposition::new(weights, locals)?)
            }
            StateKind::Scope => {
                let (scope, state) = make_scope(self.amplitudes()?, None)?;
                State::Scope(scope, state)
            }
            StateKind::Wavefunction => {
                let (Some(x0), Some(dx)) = (self.x0, self.dx) else {
                    bail!("fields \"x0\" and \"dx\" are required for a wave function");
                };
                State::Wavefunction(WavefunctionGrid::new(self.amplitudes()?.to_vec(), x0, dx)?)
            }
        })
    }
}

pub fn read_state(path: &Path) -> Result<State> {
    StateFile::read(path)?.to_state()
}

/// Parses a bare matrix: rows of `[re, im]` pairs.
pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    let rows: Vec<Vec<C64>> = serde_json::from_str(text).context("expected a matrix as rows of [re, im] pairs")?;
    Ok(ComplexMatrix::from_rows(&rows)?)
}
