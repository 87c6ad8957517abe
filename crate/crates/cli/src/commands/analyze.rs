use anyhow::Result;
use scope_lab::dynamics::wigner;
use scope_lab::measures::{
    classify, concurrence, degree_of_entanglement, degree_of_superposition, entanglement_of_formation, negativity,
    negativity_from_spectrum, nonorthogonality, relative_entropy_of_entanglement, robustness_pure, shannon_entropy,
    von_neumann_entropy, Classification, ConcurrenceBasis, RelativeEntropyOptions,
};
use scope_lab::numerics::re;
use scope_lab::states::{schmidt_decompose, DensityMatrix, PureState};

use crate::cli::AnalyzeArgs;
use crate::report::{flag, num, Report};
use crate::statefile::{read_state, State};

fn pure_rows(report: &mut Report, psi: &PureState) -> Result<()> {
    report.pair("epsilon", num(degree_of_superposition(psi.amplitudes())?))?;
    if psi.dims().len() == 2 {
        let schmidt = schmidt_decompose(psi)?;
        let lambdas: Vec<_> = schmidt.coefficients.iter().map(|&l| re(l)).collect();
        let probabilities: Vec<f64> = schmidt.coefficients.iter().map(|l| l * l).collect();
        report.pair("schmidt_rank", schmidt.rank(1e-12).to_string())?;
        report.pair("degree_of_entanglement", num(degree_of_entanglement(&lambdas)?))?;
        report.pair("entanglement_entropy", num(shannon_entropy(&probabilities)))?;
    }
    if psi.dims() == [2, 2] {
        let c = concurrence(psi, ConcurrenceBasis::Magic)?;
        report.pair("concurrence", num(c))?;
        report.pair("entanglement_of_formation", num(entanglement_of_formation(c)?))?;
    }
    Ok(())
}

fn density_rows(report: &mut Report, rho: &DensityMatrix, args: &AnalyzeArgs) -> Result<()> {
    report.pair("dimension", rho.dim().to_string())?;
    report.pair("trace", num(rho.matrix().trace().re))?;
    report.pair("purity", num(rho.purity()))?;
    report.pair("von_neumann_entropy", num(von_neumann_entropy(rho)?))?;
    if let Classification::Profile(p) = classify(rho)? {
        report.pair("family", p.family.name())?;
        report.pair("entanglement", num(p.entanglement.value))?;
        report.pair("nonorthogonality", num(p.nonorthogonality.value))?;
        report.pair("coarse_grained_classicality", num(p.coarse_grained_classicality.value))?;
        let names = ["flag_entanglement", "flag_decohered_classicality", "flag_nonorthogonality", "flag_coarse_grained_classicality"];
        for (name, f) in names.iter().zip(p.flags()) {
            report.pair(name, flag(f))?;
        }
    }
    if rho.dims().is_some_and(|d| d.len() == 2) {
        report.pair("negativity", num(negativity(rho)?))?;
        report.pair("negativity_spectrum", num(negativity_from_spectrum(rho)?))?;
        if let Some(psi) = rho.as_pure() {
            report.pair("robustness", num(robustness_pure(rho)?))?;
            if psi.dims() == [2, 2] {
                let c = concurrence(&psi, ConcurrenceBasis::Magic)?;
                report.pair("concurrence", num(c))?;
                report.pair("entanglement_of_formation", num(entanglement_of_formation(c)?))?;
            }
        }
        if args.ree && rho.dims() == Some(&[2, 2][..]) {
            let options = RelativeEntropyOptions { seed: args.seed, ..Default::default() };
            let r = relative_entropy_of_entanglement(rho, &options)?;
            report.pair("relative_entropy_of_entanglement", num(r.value))?;
            report.pair("relative_entropy_converged", flag(r.converged))?;
        }
    }
    Ok(())
}

pub fn analyze(args: &AnalyzeArgs) -> Result<String> {
    let state = read_state(&args.state)?;
    let mut report = Report::new(&["quantity", "value"])?;
    match &state {
        State::Pure(psi) => {
            report.pair("kind", "pure")?;
            pure_rows(&mut report, psi)?;
            let rho = DensityMatrix::from_pure(psi).with_dims(psi.dims())?;
            density_rows(&mut report, &rho, args)?;
        }
        State::Scope(scope, psi) => {
            report.pair("kind", "scope")?;
            report.pair("levels", scope.len().to_string())?;
            report.pair("epsilon", num(degree_of_superposition(psi.amplitudes())?))?;
        }
        State::Density(rho) => {
            report.pair("kind", "density")?;
            density_rows(&mut report, rho, args)?;
        }
        State::Ensemble(e) => {
            report.pair("kind", "ensemble")?;
            report.pair("members", e.members().to_string())?;
            report.pair("weight_entropy", num(shannon_entropy(e.weights())))?;
            report.pair("nonorthogonality", num(nonorthogonality(e)))?;
            density_rows(&mut report, &e.mixture(), args)?;
        }
        State::Wavefunction(g) => {
            report.pair("kind", "wavefunction")?;
            report.pair("samples", g.len().to_string())?;
            let norm: f64 = g.samples().iter().map(|z| z.norm_sqr()).sum::<f64>() * g.dx();
            report.pair("norm", num(norm))?;
            report.pair("wigner_origin", num(wigner(g, 0.0, 0.0)?))?;
        }
    }
    report.finish()
}
