use crate::{Error, Result};

/// How the pairwise distances between the states of a scope are given.
#[derive(Debug, Clone, PartialEq)]
pub enum MagnitudeInput {
    /// Symmetric matrix of nonnegative distances, row-major `n × n`.
    Distances(Vec<Vec<f64>>),
    /// Energies; the distance between states is `|E_i - E_j|`.
    Energies(Vec<f64>),
}

/// Relative slack allowed on the triangle inequality and on the sign of the
/// Cayley–Menger determinant.
const GEOMETRY_SLACK: f64 = 1e-12;

impl MagnitudeInput {
    fn distances(&self) -> Result<Vec<Vec<f64>>> {
        match self {
            MagnitudeInput::Energies(e) => Ok(e
                .iter()
                .map(|x| e.iter().map(|y| (x - y).abs()).collect())
                .collect()),
            MagnitudeInput::Distances(d) => {
                let n = d.len();
                for (i, row) in d.iter().enumerate() {
                    if row.len() != n {
                        return Err(Error::Dimension(format!("distance row {i} has {} entries, expected {n}", row.len())));
                    }
                    if row[i] != 0.0 {
                        return Err(Error::Geometry(format!("D[{i}][{i}] = {} is not zero", row[i])));
                    }
                    for (j, &x) in row.iter().enumerate() {
                        if !(x >= 0.0) || !x.is_finite() {
                            return Err(Error::Geometry(format!("D[{i}][{j}] = {x} is not a distance")));
                        }
                        if (x - d[j][i]).abs() > GEOMETRY_SLACK * x.max(1.0) {
                            return Err(Error::Geometry(format!("D is not symmetric at ({i}, {j})")));
                        }
                    }
                }
                Ok(d.clone())
            }
        }
    }
}

fn determinant(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .expect("nonempty");
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            for c in col..n {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    det
}

/// Content of the simplex spanned by the scope's states: 0 for a point, the
/// length of a segment, the area of a triangle (Heron) or the volume of a
/// tetrahedron (Cayley–Menger). Five or more states are rejected.
pub fn scope_magnitude(input: &MagnitudeInput) -> Result<f64> {
    let d = input.distances()?;
    match d.len() {
        0 => Err(Error::Dimension("a scope has at least one state".into())),
        1 => Ok(0.0),
        2 => Ok(d[0][1]),
        3 => {
            let (a, b, c) = (d[0][1], d[1][2], d[0][2]);
            let longest = a.max(b).max(c);
            if 2.0 * longest > (a + b + c) * (1.0 + GEOMETRY_SLACK) {
                return Err(Error::Geometry(format!("sides ({a}, {b}, {c}) violate the triangle inequality")));
            }
            let s = (a + b + c) / 2.0;
            Ok((s * (s - a) * (s - b) * (s - c)).max(0.0).sqrt())
        }
        4 => {
            let mut cm = vec![vec![1.0; 5]; 5];
            cm[0][0] = 0.0;
            for i in 0..4 {
                for j in 0..4 {
                    cm[i + 1][j + 1] = d[i][j] * d[i][j];
                }
            }
            // 288 V² = det(CM)
            let det = determinant(cm);
            let scale = d.iter().flatten().fold(0.0f64, |m, &x| m.max(x)).powi(6).max(f64::MIN_POSITIVE);
            if det < -GEOMETRY_SLACK * 288.0 * scale {
                return Err(Error::Geometry("distances do not embed as a tetrahedron".into()));
            }
            for face in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
                let sub: Vec<Vec<f64>> = face.iter().map(|&i| face.iter().map(|&j| d[i][j]).collect()).collect();
                scope_magnitude(&MagnitudeInput::Distances(sub))?;
            }
            Ok((det.max(0.0) / 288.0).sqrt())
        }
        n => Err(Error::Domain(format!("magnitude is defined up to four states, got {n}"))),
    }
}
