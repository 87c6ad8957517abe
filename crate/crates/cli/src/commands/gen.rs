use anyhow::{bail, Context, Result};
use scope_lab::dynamics::WavefunctionGrid;
use scope_lab::numerics::{re, C64};
use scope_lab::states::{build_family, classical_reduction, make_scope, EnsembleDecomposition, FamilyTag, PureState};

use crate::cli::{Family, GenArgs, Parity};
use crate::parse::{complex_vec, complex_vecs, pairing, real_vec, usize_vec};
use crate::statefile::State;

fn need<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str> {
    value.as_deref().with_context(|| format!("--{flag} is required for this family"))
}

fn vector(value: &Option<String>, flag: &str) -> Result<Vec<C64>> {
    complex_vec(need(value, flag)?).with_context(|| format!("in --{flag}"))
}

fn vectors(value: &Option<String>, flag: &str) -> Result<Vec<Vec<C64>>> {
    complex_vecs(need(value, flag)?).with_context(|| format!("in --{flag}"))
}

fn weights(args: &GenArgs) -> Result<Vec<f64>> {
    real_vec(need(&args.weights, "weights")?).context("in --weights")
}

fn dims(args: &GenArgs) -> Result<Vec<usize>> {
    usize_vec(need(&args.dims, "dims")?).context("in --dims")
}

fn dims2(args: &GenArgs) -> Result<[usize; 2]> {
    match dims(args)?.as_slice() {
        &[da, db] => Ok([da, db]),
        other => bail!("--dims must name two parties, got {other:?}"),
    }
}

fn tag(args: &GenArgs) -> Result<Option<FamilyTag>> {
    let half = std::f64::consts::FRAC_1_SQRT_2;
    Ok(Some(match args.family {
        Family::Bell => FamilyTag::EntangledQudit { a: vec![re(half); 2], b: vec![re(half); 2], pairing: vec![0, 1] },
        Family::ProductBasis => FamilyTag::ProductBasis { dims: dims2(args)?, index_a: args.index_a, index_b: args.index_b },
        Family::ProductPure => FamilyTag::ProductPure { a: vector(&args.a, "a")?, b: vector(&args.b, "b")? },
        Family::EntangledQudit | Family::DecoheredQudit => {
            let a = vector(&args.a, "a")?;
            let b = vector(&args.b, "b")?;
            let pairing = pairing(&args.pairing, a.len()).context("in --pairing")?;
            if args.family == Family::EntangledQudit {
                FamilyTag::EntangledQudit { a, b, pairing }
            } else {
                FamilyTag::DecoheredQudit { a, b, pairing }
            }
        }
        Family::EnsembleProduct | Family::Separable => {
            let (weights, locals_a, locals_b) = (weights(args)?, vectors(&args.locals_a, "locals-a")?, vectors(&args.locals_b, "locals-b")?);
            if args.family == Family::Separable {
                FamilyTag::Separable { weights, locals_a, locals_b }
            } else {
                FamilyTag::EnsembleProduct { weights, locals_a, locals_b }
            }
        }
        Family::EnsembleEntangled => FamilyTag::EnsembleEntangled { weights: weights(args)?, lambdas: vectors(&args.lambdas, "lambdas")? },
        Family::EnsembleDecohered => FamilyTag::EnsembleDecohered { weights: weights(args)?, lambdas: vectors(&args.lambdas, "lambdas")? },
        Family::Wfes => FamilyTag::Wfes { dims: dims(args)?, gammas: vector(&args.gammas, "gammas")?, members: vectors(&args.members, "members")? },
        Family::SubDecohered => FamilyTag::SubDecohered { dims: dims(args)?, weights: weights(args)?, members: vectors(&args.members, "members")? },
        Family::Pure | Family::Ensemble | Family::Scope | Family::Gaussian | Family::Cat => return Ok(None),
    }))
}

fn untagged(args: &GenArgs) -> Result<State> {
    Ok(match args.family {
        Family::Pure => {
            let amplitudes = vector(&args.amplitudes, "amplitudes")?;
            let dims = if args.dims.is_some() { dims(args)? } else { vec![amplitudes.len()] };
            State::Pure(PureState::normalized(&amplitudes, &dims)?)
        }
        Family::Ensemble => {
            let locals = vec![vectors(&args.locals_a, "locals-a")?, vectors(&args.locals_b, "locals-b")?];
            State::Ensemble(EnsembleDecomposition::new(&weights(args)?, locals)?)
        }
        Family::Scope => {
            let (scope, state) = make_scope(&vector(&args.amplitudes, "amplitudes")?, None)?;
            State::Scope(scope, state)
        }
        Family::Gaussian => {
            let c = args.center;
            State::Wavefunction(WavefunctionGrid::sample(|x| re((-(x - c) * (x - c) / 2.0).exp()), args.lo, args.hi, args.dx)?)
        }
        Family::Cat => {
            let (s, sign) = (args.separation, if args.parity == Parity::Odd { -1.0 } else { 1.0 });
            let f = |x: f64| re((-(x - s) * (x - s) / 2.0).exp() + sign * (-(x + s) * (x + s) / 2.0).exp());
            State::Wavefunction(WavefunctionGrid::sample(f, args.lo, args.hi, args.dx)?)
        }
        _ => unreachable!("tagged families are built from their tag"),
    })
}

pub fn generate(args: &GenArgs) -> Result<State> {
    if let Some(d) = args.d {
        if d != 1 {
            bail!("--d {d} is not supported: only d = 1 (one eigenstate per party) has a defined reduction");
        }
    }
    let Some(tag) = tag(args)? else {
        if args.d.is_some() {
            bail!("--d applies only to the bipartite families");
        }
        return untagged(args);
    };
    let mut rho = build_family(&tag)?;
    if args.d.is_some() {
        rho = classical_reduction(&rho)?;
    }
    Ok(State::Density(rho))
}
