use std::path::Path;

use anyhow::{bail, Context, Result};
use scope_lab::dynamics::{
    consistency_check, decoherence_matrix, evolve, expectation_in_pictures, wigner_grid, Channel, HamiltonianSpec,
    HistorySpec, HistoryStep, MAX_HISTORIES,
};
use scope_lab::numerics::{ComplexMatrix, C64};
use scope_lab::states::DensityMatrix;
use serde::Deserialize;

use crate::cli::{EvolveArgs, HistoriesArgs, WignerArgs};
use crate::parse::{grid, matrix_arg};
use crate::report::{exact, flag, num, Report};
use crate::statefile::{read_state, State, StateFile};

type Rows = Vec<Vec<C64>>;

/// Projectors listed explicitly, or `"computational"` for `|i⟩⟨i|`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ProjectorSpec {
    Named(String),
    Explicit(Vec<Rows>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepFile {
    /// Kraus operators.
    #[serde(default)]
    channel: Option<Vec<Rows>>,
    #[serde(default)]
    unitary: Option<Rows>,
    projectors: ProjectorSpec,
}

/// JSON history specification: an initial state file and its steps.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HistoryFile {
    initial: StateFile,
    steps: Vec<StepFile>,
}

fn initial_density(file: &StateFile) -> Result<DensityMatrix> {
    match file.to_state()? {
        State::Pure(p) => Ok(DensityMatrix::from_pure(&p)),
        State::Density(d) => Ok(d),
        State::Ensemble(e) => Ok(e.mixture()),
        _ => bail!("the initial state must be pure, density or ensemble"),
    }
}

fn matrix(rows: &Rows) -> Result<ComplexMatrix> {
    Ok(ComplexMatrix::from_rows(rows)?)
}

fn load_spec(path: &Path) -> Result<HistorySpec> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let file: HistoryFile = serde_json::from_str(&text).with_context(|| format!("{} is not a history specification", path.display()))?;
    let initial = initial_density(&file.initial).context("in \"initial\"")?;
    let d = initial.dim();
    let mut steps = Vec::with_capacity(file.steps.len());
    for (k, s) in file.steps.iter().enumerate() {
        let projectors = match &s.projectors {
            ProjectorSpec::Named(name) if name == "computational" => (0..d)
                .map(|i| {
                    let mut p = ComplexMatrix::zeros(d, d);
                    p[(i, i)] = C64::new(1.0, 0.0);
                    p
                })
                .collect(),
            ProjectorSpec::Named(name) => bail!("step {k}: unknown projector family {name:?}"),
            ProjectorSpec::Explicit(list) => list.iter().map(matrix).collect::<Result<_>>()?,
        };
        let mut step = HistoryStep::new(projectors);
        if let Some(u) = &s.unitary {
            step = step.with_unitary(matrix(u)?);
        }
        if let Some(kraus) = &s.channel {
            let ops = kraus.iter().map(matrix).collect::<Result<_>>()?;
            step = step.with_channel(Channel::new(ops).with_context(|| format!("channel at step {k}"))?);
        }
        steps.push(step);
    }
    Ok(HistorySpec::new(initial, steps)?)
}

fn label(history: &[usize]) -> String {
    history.iter().map(usize::to_string).collect::<Vec<_>>().join("-")
}

pub fn histories(args: &HistoriesArgs) -> Result<String> {
    let spec = load_spec(&args.spec)?;
    let mut out = Report::new(&["record", "alpha", "alpha_prime", "re", "im", "consistent", "max_offdiag", "diagonal_sum"])?;
    let e = String::new;
    if !args.summary_only {
        let m = decoherence_matrix(&spec)?;
        for (i, a) in m.histories.iter().enumerate() {
            for (j, b) in m.histories.iter().enumerate() {
                let v = m.get(i, j);
                out.row(["D".to_string(), label(a), label(b), num(v.re), num(v.im), e(), e(), e()])?;
            }
        }
    }
    if spec.lattice_size().is_none_or(|n| n > MAX_HISTORIES) {
        bail!("more than {MAX_HISTORIES} histories; the consistency check is not attempted");
    }
    let c = consistency_check(&spec)?;
    out.row(["summary".to_string(), e(), e(), e(), e(), flag(c.consistent), exact(c.max_offdiag), num(c.diagonal_sum)])?;
    out.finish()
}

/// Report text and an optional warning about the grid's support.
pub fn wigner(args: &WignerArgs) -> Result<(String, Option<String>)> {
    let State::Wavefunction(psi) = read_state(&args.state)? else {
        bail!("the Wigner function needs a state file of kind \"wavefunction\"");
    };
    let qs = grid(&args.q).context("in --q")?;
    let ps = grid(&args.p).context("in --p")?;
    let w = wigner_grid(&psi, &qs, &ps)?;
    let mut out = Report::new(&["q", "p", "w"])?;
    for (q, row) in qs.iter().zip(&w) {
        for (p, value) in ps.iter().zip(row) {
            out.row([num(*q), num(*p), num(*value)])?;
        }
    }
    Ok((out.finish()?, psi.support_warning()))
}

/// Report text and the evolved state.
pub fn evolve_cmd(args: &EvolveArgs) -> Result<(String, StateFile)> {
    let h = matrix_arg(&args.h).context("in --h")?;
    let spec = match &args.h0 {
        Some(h0) => {
            let h0 = matrix_arg(h0).context("in --h0")?;
            if (h0.rows(), h0.cols()) != (h.rows(), h.cols()) {
                bail!("--h0 and --h differ in shape");
            }
            HamiltonianSpec::with_split(h0.clone(), &h - &h0)?
        }
        None => HamiltonianSpec::new(h)?,
    };
    let observable = args.observable.as_deref().map(matrix_arg).transpose().context("in --observable")?;
    let mut out = Report::new(&["quantity", "value"])?;
    out.pair("t", num(args.t))?;
    let evolved = match read_state(&args.state)? {
        State::Pure(psi) => {
            let after = evolve(&psi, &spec, args.t)?;
            if let Some(a) = &observable {
                if spec.split().is_some() {
                    let e = expectation_in_pictures(a, &psi, &spec, args.t)?;
                    out.pair("schrodinger", num(e.schrodinger))?;
                    out.pair("heisenberg", num(e.heisenberg))?;
                    out.pair("dirac", num(e.dirac))?;
                    out.pair("max_disagreement", exact(e.max_disagreement()))?;
                } else {
                    out.pair("schrodinger", num(after.expectation(a).re))?;
                }
            }
            StateFile::from_pure(&after)
        }
        State::Density(rho) => {
            let after = evolve(&rho, &spec, args.t)?;
            if let Some(a) = &observable {
                out.pair("expectation", num((a * after.matrix()).trace().re))?;
            }
            out.pair("purity", num(after.purity()))?;
            StateFile::from_density(&after)
        }
        _ => bail!("evolution needs a pure or density state file"),
    };
    Ok((out.finish()?, evolved))
}
