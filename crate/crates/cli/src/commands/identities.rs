use anyhow::{bail, Context, Result};
use scope_lab::identities::{ghz_family, mixture_identity, verify_random_identities, IdentityReport};
use scope_lab::numerics::re;

use crate::cli::{GhzArgs, MixtureArgs, VerifyArgs};
use crate::parse::complex_vecs;
use crate::report::{exact, flag, num, Report};

/// Residual above which `verify` reports failure.
pub const RESIDUAL_LIMIT: f64 = 1e-8;

/// Report text and whether every residual stayed within the limit.
pub fn verify(args: &VerifyArgs) -> Result<(String, bool)> {
    if !(2..=args.max_n).contains(&args.n) {
        bail!("n = {} is outside the supported range 2..={}", args.n, args.max_n);
    }
    if args.trials == 0 {
        bail!("--trials must be at least 1");
    }
    let reports = verify_random_identities(args.n, args.trials, args.seed)?;
    let mut out = Report::new(&[
        "trial",
        "n",
        "sum_beta",
        "expected_sum_beta",
        "sum_alpha",
        "expected_sum_alpha",
        "sum_alpha_over_e",
        "epsilon_a",
        "epsilon_b",
        "max_abs_residual",
    ])?;
    for (t, r) in reports.iter().enumerate() {
        let s = r.sums.as_ref().context("per-trial report without sums")?;
        out.row([
            t.to_string(),
            r.n.to_string(),
            num(s.sum_beta),
            num(s.expected_sum_beta),
            num(s.sum_alpha),
            num(s.expected_sum_alpha),
            num(s.sum_alpha_over_e),
            num(s.epsilon_a),
            num(s.epsilon_b),
            exact(r.max_abs_residual),
        ])?;
    }
    let summary = IdentityReport::combine(&reports)?;
    let blank = String::new;
    out.row(["summary".to_string(), summary.n.to_string(), blank(), blank(), blank(), blank(), blank(), blank(), blank(), exact(summary.max_abs_residual)])?;
    Ok((out.finish()?, summary.max_abs_residual <= RESIDUAL_LIMIT))
}

pub fn ghz(args: &GhzArgs) -> Result<String> {
    let coeffs = match (args.parties, &args.coeffs) {
        (Some(m), None) => vec![vec![re(std::f64::consts::FRAC_1_SQRT_2); 2]; m],
        (None, Some(text)) => complex_vecs(text)
            .context("in --coeffs")?
            .into_iter()
            .enumerate()
            .map(|(mu, v)| {
                let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if norm == 0.0 {
                    bail!("party {mu} has all-zero coefficients");
                }
                Ok(v.iter().map(|z| z / norm).collect())
            })
            .collect::<Result<_>>()?,
        _ => bail!("give either --parties or --coeffs"),
    };
    let family = ghz_family(&coeffs)?;
    let mut out = Report::new(&["record", "label", "branch_0", "branch_1", "value"])?;
    for (mu, e) in family.epsilons.iter().enumerate() {
        out.row(["epsilon".to_string(), mu.to_string(), String::new(), String::new(), num(*e)])?;
    }
    for s in &family.states {
        let pattern: String = s.pattern.iter().map(|b| b.to_string()).collect();
        out.row([
            "state".to_string(),
            pattern,
            num(s.branch_coefficients[0]),
            num(s.branch_coefficients[1]),
            num(s.entanglement),
        ])?;
    }
    out.row(["e_dagger".to_string(), String::new(), String::new(), String::new(), num(family.e_dagger)])?;
    out.finish()
}

pub fn mixture(args: &MixtureArgs) -> Result<String> {
    let p2 = args.p2.unwrap_or(1.0 - args.p1);
    let m = mixture_identity(args.e_d, args.e_c, args.p1, p2)?;
    let mut out = Report::new(&["quantity", "value"])?;
    out.pair("lhs", num(m.lhs))?;
    out.pair("rhs", num(m.rhs))?;
    out.pair("collective", num(m.collective))?;
    out.pair("relative", num(m.relative))?;
    out.pair("residual", exact((m.lhs - m.rhs).abs()))?;
    out.pair("holds", flag((m.lhs - m.rhs).abs() <= RESIDUAL_LIMIT))?;
    out.finish()
}
