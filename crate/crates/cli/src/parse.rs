//! Flag-value grammars shared by the subcommands.
//!
//! Vectors are comma separated and vector lists are semicolon separated.
//! Complex entries use the `a+bi` form, so `0.6`, `-0.5i` and `0.3+0.1i`
//! are all accepted.

use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use scope_lab::numerics::{ComplexMatrix, C64};
use scope_lab::states::cross_pairing;

use crate::statefile::matrix_from_json;

pub fn complex(token: &str) -> Result<C64> {
    let t = token.trim();
    t.parse::<C64>().map_err(|_| anyhow::anyhow!("{t:?} is not a complex number"))
}

pub fn complex_vec(text: &str) -> Result<Vec<C64>> {
    ensure!(!text.trim().is_empty(), "empty vector");
    text.split(',').map(complex).collect()
}

pub fn complex_vecs(text: &str) -> Result<Vec<Vec<C64>>> {
    text.split(';').map(complex_vec).collect()
}

pub fn real_vec(text: &str) -> Result<Vec<f64>> {
    ensure!(!text.trim().is_empty(), "empty list");
    text.split(',')
        .map(|t| t.trim().parse::<f64>().with_context(|| format!("{:?} is not a number", t.trim())))
        .collect()
}

pub fn usize_vec(text: &str) -> Result<Vec<usize>> {
    ensure!(!text.trim().is_empty(), "empty list");
    text.split(',')
        .map(|t| t.trim().parse::<usize>().with_context(|| format!("{:?} is not an index", t.trim())))
        .collect()
}

/// `direct`, `cross`, or an explicit image list such as `1,0,2`.
pub fn pairing(text: &str, n: usize) -> Result<Vec<usize>> {
    match text.trim() {
        "direct" => Ok((0..n).collect()),
        "cross" => Ok(cross_pairing(n).into_iter().map(|(_, j)| j).collect()),
        list => usize_vec(list),
    }
}

/// A single value, or an inclusive range `start:stop:step`.
pub fn grid(text: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [_] => real_vec(text),
        [start, stop, step] => {
            let (start, stop, step) = (real_one(start)?, real_one(stop)?, real_one(step)?);
            ensure!(step > 0.0 && stop >= start, "range {text:?} needs start <= stop and a positive step");
            let n = ((stop - start) / step + 1e-9).floor() as usize;
            Ok((0..=n).map(|k| start + k as f64 * step).collect())
        }
        _ => bail!("{text:?} is neither a list nor start:stop:step"),
    }
}

fn real_one(text: &str) -> Result<f64> {
    text.trim().parse().with_context(|| format!("{text:?} is not a number"))
}

/// A matrix given inline as JSON or as the path of a JSON file.
pub fn matrix_arg(text: &str) -> Result<ComplexMatrix> {
    let path = Path::new(text);
    if path.is_file() {
        let body = std::fs::read_to_string(path).with_context(|| format!("cannot read {text}"))?;
        return matrix_from_json(&body).with_context(|| format!("in {text}"));
    }
    matrix_from_json(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(complex("0.6").unwrap(), C64::new(0.6, 0.0));
        assert_eq!(complex(" 0.3+0.1i").unwrap(), C64::new(0.3, 0.1));
        assert_eq!(complex("-0.5i").unwrap(), C64::new(0.0, -0.5));
        assert!(complex("x").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(complex_vecs("1,0;0,1").unwrap().len(), 2);
        assert_eq!(usize_vec("1, 0,2").unwrap(), vec![1, 0, 2]);
        assert_eq!(pairing("cross", 3).unwrap(), vec![2, 1, 0]);
        assert_eq!(pairing("direct", 2).unwrap(), vec![0, 1]);
    }

    #[test]
    fn grids() {
        assert_eq!(grid("0").unwrap(), vec![0.0]);
        assert_eq!(grid("-1:1:0.5").unwrap(), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert!(grid("1:0:0.1").is_err());
    }
}
