//! Nelder–Mead simplex minimisation.
//!
//! Uses the dimension-adaptive coefficients of Gao & Han, which keep the
//! method usable in the few-dozen-parameter range, and re-seeds the simplex
//! around the incumbent whenever it collapses without exhausting the budget.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadOptions {
    /// Hard cap on objective evaluations.
    pub max_evaluations: usize,
    /// Initial edge length of the simplex.
    pub initial_step: f64,
    /// Converged when `f_worst - f_best` falls below this.
    pub f_tolerance: f64,
    /// Converged when the simplex diameter falls below this.
    pub x_tolerance: f64,
    /// Number of times a collapsed simplex is rebuilt around the best point.
    pub max_reseeds: usize,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        Self {
            max_evaluations: 20_000,
            initial_step: 0.5,
            f_tolerance: 1e-12,
            x_tolerance: 1e-10,
            max_reseeds: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
    /// The last reseed found no improvement before the budget ran out.
    pub converged: bool,
}

struct Counted<'a, F> {
    f: &'a mut F,
    evaluations: usize,
}

impl<F: FnMut(&[f64]) -> f64> Counted<'_, F> {
    fn eval(&mut self, x: &[f64]) -> f64 {
        self.evaluations += 1;
        let v = (self.f)(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    }
}

/// Minimises `f` starting from `x0`.
pub fn minimize<F>(mut f: F, x0: &[f64], options: &NelderMeadOptions) -> Minimum
where
    F: FnMut(&[f64]) -> f64,
{
    assert!(!x0.is_empty(), "Nelder-Mead needs at least one parameter");
    let mut counted = Counted {
        f: &mut f,
        evaluations: 0,
    };
    let mut best_x = x0.to_vec();
    let mut best_f = counted.eval(x0);
    let mut step = options.initial_step;
    let mut converged = false;

    for _ in 0..=options.max_reseeds {
        if counted.evaluations >= options.max_evaluations {
            break;
        }
        let (x, fx) = run_simplex(&mut counted, &best_x, best_f, step, options);
        let improved = fx < best_f - options.f_tolerance;
        if fx < best_f {
            best_x = x;
            best_f = fx;
        }
        if !improved {
            converged = true;
            break;
        }
        step = (step * 0.5).max(1e-4);
    }

    Minimum {
        x: best_x,
        value: best_f,
        evaluations: counted.evaluations,
        converged,
    }
}

fn run_simplex<F: FnMut(&[f64]) -> f64>(
    counted: &mut Counted<'_, F>,
    x0: &[f64],
    f0: f64,
    step: f64,
    options: &NelderMeadOptions,
) -> (Vec<f64>, f64) {
    let n = x0.len();
    let nf = n as f64;
    let alpha = 1.0;
    let beta = 1.0 + 2.0 / nf;
    let gamma = 0.75 - 1.0 / (2.0 * nf);
    let delta = 1.0 - 1.0 / nf;

    let mut points: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    points.push((x0.to_vec(), f0));
    for i in 0..n {
        let mut x = x0.to_vec();
        x[i] += step;
        let fx = counted.eval(&x);
        points.push((x, fx));
    }

    let along = |c: &[f64], w: &[f64], t: f64| -> Vec<f64> {
        c.iter().zip(w).map(|(ci, wi)| ci + t * (ci - wi)).collect()
    };
    let total = |points: &[(Vec<f64>, f64)]| -> Vec<f64> {
        let mut sum = vec![0.0; n];
        for (x, _) in points {
            sum.iter_mut().zip(x).for_each(|(s, xi)| *s += xi);
        }
        sum
    };
    let mut sum = total(&points);
    let mut centroid = vec![0.0; n];
    let mut iteration = 0usize;

    while counted.evaluations < options.max_evaluations {
        points.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (f_best, f_worst) = (points[0].1, points[n].1);
        if (f_worst - f_best).abs() <= options.f_tolerance {
            break;
        }
        if iteration.is_multiple_of(n) {
            let diameter = points[1..]
                .iter()
                .map(|(x, _)| {
                    x.iter()
                        .zip(&points[0].0)
                        .map(|(a, b)| (a - b).abs())
                        .fold(0.0, f64::max)
                })
                .fold(0.0, f64::max);
            if diameter <= options.x_tolerance {
                break;
            }
            // resynchronise the running sum against rounding drift
            sum = total(&points);
        }
        iteration += 1;

        for ((c, s), w) in centroid.iter_mut().zip(&sum).zip(&points[n].0) {
            *c = (s - w) / nf;
        }
        let f_second = points[n - 1].1;
        let worst = &points[n].0;

        let xr = along(&centroid, worst, alpha);
        let fr = counted.eval(&xr);
        let replacement = if fr < f_best {
            let xe = along(&centroid, worst, alpha * beta);
            let fe = counted.eval(&xe);
            Some(if fe < fr { (xe, fe) } else { (xr, fr) })
        } else if fr < f_second {
            Some((xr, fr))
        } else {
            let t = if fr < f_worst { alpha * gamma } else { -gamma };
            let xc = along(&centroid, worst, t);
            let fc = counted.eval(&xc);
            (fc < fr.min(f_worst)).then_some((xc, fc))
        };
        match replacement {
            Some(p) => {
                for ((s, new), old) in sum.iter_mut().zip(&p.0).zip(&points[n].0) {
                    *s += new - old;
                }
                points[n] = p;
            }
            None => {
                // shrink toward the best vertex
                let best = points[0].0.clone();
                for p in points.iter_mut().skip(1) {
                    for (xi, bi) in p.0.iter_mut().zip(&best) {
                        *xi = bi + delta * (*xi - bi);
                    }
                    p.1 = counted.eval(&p.0);
                }
                sum = total(&points);
            }
        }
    }
    points.sort_by(|a, b| a.1.total_cmp(&b.1));
    points.swap_remove(0)
}
