//! Subcommand implementations. Each returns its report as text; writing
//! it out is left to [`run`].

mod analyze;
mod dynamics;
mod gen;
mod identities;

use std::path::Path;

use anyhow::{Context, Result};

pub use analyze::analyze;
pub use dynamics::{evolve_cmd, histories, wigner};
pub use gen::generate;
pub use identities::{ghz, mixture, verify, RESIDUAL_LIMIT};

use crate::cli::Command;
use crate::statefile::StateFile;

/// What a finished command hands back to the process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// Text for standard output (empty when written to `--out`).
    pub stdout: String,
    pub warnings: Vec<String>,
    /// A check ran to completion and failed.
    pub failed: bool,
}

fn emit(text: String, out: Option<&Path>) -> Result<String> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

pub fn run(command: &Command) -> Result<Outcome> {
    let mut warnings = Vec::new();
    let mut failed = false;
    let stdout = match command {
        Command::Gen(a) => emit(StateFile::from_state(&generate(a)?).to_json()?, a.out.as_deref())?,
        Command::Analyze(a) => emit(analyze(a)?, a.out.as_deref())?,
        Command::Verify(a) => {
            let (text, ok) = verify(a)?;
            failed = !ok;
            if failed {
                warnings.push(format!("an identity residual exceeds {RESIDUAL_LIMIT:e}"));
            }
            emit(text, a.out.as_deref())?
        }
        Command::Ghz(a) => emit(ghz(a)?, a.out.as_deref())?,
        Command::MixtureIdentity(a) => emit(mixture(a)?, a.out.as_deref())?,
        Command::Histories(a) => emit(histories(a)?, a.out.as_deref())?,
        Command::Wigner(a) => {
            let (text, warning) = wigner(a)?;
            warnings.extend(warning);
            emit(text, a.out.as_deref())?
        }
        Command::Evolve(a) => {
            let (text, state) = evolve_cmd(a)?;
            if let Some(path) = &a.state_out {
                emit(state.to_json()?, Some(path))?;
            }
            emit(text, a.out.as_deref())?
        }
    };
    Ok(Outcome { stdout, warnings, failed })
}
