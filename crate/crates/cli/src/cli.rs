//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "scope-lab", version, about = "Superposition, entanglement and correlation measures for structured quantum states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a state and write it as JSON.
    Gen(Box<GenArgs>),
    /// Report the measures applicable to a state file.
    Analyze(AnalyzeArgs),
    /// Check the permutation-sum identities on random coefficients.
    Verify(VerifyArgs),
    /// Degrees of entanglement of the GHZ-type family of qubit scopes.
    Ghz(GhzArgs),
    /// Evaluate the two-state mixture identity.
    MixtureIdentity(MixtureArgs),
    /// Decoherence functional and consistency of a history specification.
    Histories(HistoriesArgs),
    /// Wigner function of a sampled wave function.
    Wigner(WignerArgs),
    /// Unitary evolution and picture-independent expectations.
    Evolve(EvolveArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Bell,
    ProductBasis,
    ProductPure,
    EnsembleProduct,
    EntangledQudit,
    DecoheredQudit,
    Separable,
    EnsembleEntangled,
    EnsembleDecohered,
    Wfes,
    SubDecohered,
    /// A pure state from `--amplitudes` and `--dims`.
    Pure,
    /// A product ensemble from `--weights`, `--locals-a`, `--locals-b`.
    Ensemble,
    /// A single-party scope from `--amplitudes`.
    Scope,
    /// `exp(-(x - c)²/2)` sampled on a grid.
    Gaussian,
    /// `exp(-(x - s)²/2) ± exp(-(x + s)²/2)` sampled on a grid.
    Cat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub family: Family,
    /// Coefficients of party A, e.g. `0.6,0.8` or `0.3+0.1i,0.5`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// `direct`, `cross`, or the image list of A's indices.
    #[arg(long, default_value = "direct")]
    pub pairing: String,
    /// Member weights, e.g. `0.5,0.5`.
    #[arg(long)]
    pub weights: Option<String>,
    /// Local states of A, one per member, separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    pub locals_a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub locals_b: Option<String>,
    /// Schmidt vectors of the members, separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambdas: Option<String>,
    /// Superposition weights of the WFES members.
    #[arg(long, allow_hyphen_values = true)]
    pub gammas: Option<String>,
    /// Joint-space member vectors for `wfes` and `sub-decohered`.
    #[arg(long, allow_hyphen_values = true)]
    pub members: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub amplitudes: Option<String>,
    /// Subsystem dimensions, e.g. `2,2`.
    #[arg(long)]
    pub dims: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub index_a: usize,
    #[arg(long, default_value_t = 0)]
    pub index_b: usize,
    /// Eigenstates kept per party; only `1` (the classical reduction) is
    /// supported.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub center: f64,
    #[arg(long, default_value_t = 3.0)]
    pub separation: f64,
    #[arg(long, value_enum, default_value_t = Parity::Odd)]
    pub parity: Parity,
    #[arg(long, default_value_t = -10.0, allow_hyphen_values = true)]
    pub lo: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    pub hi: f64,
    #[arg(long, default_value_t = 0.01)]
    pub dx: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub state: PathBuf,
    /// Also bound the relative entropy of entanglement (2x2 states).
    #[arg(long)]
    pub ree: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = scope_lab::identities::DEFAULT_MAX_N)]
    pub max_n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GhzArgs {
    /// Uniform coefficients on this many parties.
    #[arg(long, conflicts_with = "coeffs")]
    pub parties: Option<usize>,
    /// Per-party 2-vectors separated by `;`, e.g. `0.6,0.8;1,1`.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MixtureArgs {
    #[arg(long)]
    pub e_d: f64,
    #[arg(long)]
    pub e_c: f64,
    #[arg(long)]
    pub p1: f64,
    /// Defaults to `1 - p1`.
    #[arg(long)]
    pub p2: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HistoriesArgs {
    pub spec: PathBuf,
    /// Only the consistency summary, without the table of `D`.
    #[arg(long)]
    pub summary_only: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WignerArgs {
    pub state: PathBuf,
    /// A list `0,0.5` or a range `-2:2:0.1`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub q: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub p: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    pub state: PathBuf,
    /// Hamiltonian as JSON rows of `[re, im]` pairs, inline or a file.
    #[arg(long)]
    pub h: String,
    /// Free part `H₀` of the Hamiltonian; enables the interaction picture.
    #[arg(long)]
    pub h0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: f64,
    /// Hermitian observable, same format as `--h`.
    #[arg(long)]
    pub observable: Option<String>,
    /// Write the evolved state here as JSON.
    #[arg(long)]
    pub state_out: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
