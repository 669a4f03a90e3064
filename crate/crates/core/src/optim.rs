//! Nelder–Mead simplex minimization and the parameter transforms that let
//! it search an unconstrained space.

use serde::{Deserialize, Serialize};

use crate::distributions::Family;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimplexConfig {
    pub reflection: f64,
    pub expansion: f64,
    pub contraction: f64,
    pub shrink: f64,
    pub f_tolerance: f64,
    pub x_tolerance: f64,
    pub max_iterations: usize,
    pub restarts: usize,
}

impl Default for SimplexConfig {
    fn default() -> Self {
        Self {
            reflection: 1.0,
            expansion: 2.0,
            contraction: 0.5,
            shrink: 0.5,
            f_tolerance: 1e-10,
            x_tolerance: 1e-8,
            max_iterations: 2000,
            restarts: 1,
        }
    }
}

impl SimplexConfig {
    pub fn validate(&self) -> Result<()> {
        let ok = self.reflection > 0.0
            && self.expansion > 1.0
            && self.contraction > 0.0
            && self.contraction < 1.0
            && self.shrink > 0.0
            && self.shrink < 1.0
            && self.f_tolerance > 0.0
            && self.x_tolerance > 0.0
            && self.max_iterations > 0;
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("invalid simplex configuration {self:?}")))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimResult {
    pub x_min: Vec<f64>,
    pub f_min: f64,
    pub iterations: usize,
    pub converged: bool,
    pub function_evals: usize,
}

/// Minimizes `objective` from `x0`.
///
/// Non-finite objective values are ranked as +∞, so the simplex simply
/// moves away from them. After the first run the search restarts
/// `config.restarts` times from the best vertex with a fresh simplex; the
/// result is converged when the last run met both tolerances.
pub fn minimize<F>(objective: F, x0: &[f64], config: &SimplexConfig) -> Result<OptimResult>
where
    F: Fn(&[f64]) -> f64,
{
    config.validate()?;
    if x0.is_empty() {
        return Err(Error::Domain("cannot minimize over zero dimensions".into()));
    }
    let f0 = objective(x0);
    if !f0.is_finite() || x0.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("objective is not finite at the start point {x0:?}")));
    }

    let mut state = RunState { evals: 1, iterations: 0 };
    let mut best = (x0.to_vec(), f0);
    let mut converged = false;
    for _ in 0..=config.restarts {
        let (x, f, ok) = run(&objective, &best.0, best.1, config, &mut state);
        if f <= best.1 {
            best = (x, f);
        }
        converged = ok;
    }
    Ok(OptimResult {
        x_min: best.0,
        f_min: best.1,
        iterations: state.iterations,
        converged,
        function_evals: state.evals,
    })
}

struct RunState {
    evals: usize,
    iterations: usize,
}

fn rank(f: f64) -> f64 {
    if f.is_finite() {
        f
    } else {
        f64::INFINITY
    }
}

fn run<F>(
    objective: &F,
    x0: &[f64],
    f0: f64,
    cfg: &SimplexConfig,
    state: &mut RunState,
) -> (Vec<f64>, f64, bool)
where
    F: Fn(&[f64]) -> f64,
{
    let d = x0.len();
    let eval = |x: &[f64], state: &mut RunState| {
        state.evals += 1;
        rank(objective(x))
    };

    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(d + 1);
    simplex.push((x0.to_vec(), f0));
    for i in 0..d {
        let mut x = x0.to_vec();
        x[i] = if x[i] == 0.0 { 0.00025 } else { x[i] * 1.05 };
        let f = eval(&x, state);
        simplex.push((x, f));
    }

    let mut converged = false;
    for _ in 0..cfg.max_iterations {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        if spread_ok(&simplex, cfg) {
            converged = true;
            break;
        }
        state.iterations += 1;

        let worst = simplex[d].clone();
        let mut centroid = vec![0.0; d];
        for (x, _) in &simplex[..d] {
            for (c, v) in centroid.iter_mut().zip(x) {
                *c += v / d as f64;
            }
        }
        let along = |t: f64| -> Vec<f64> {
            centroid.iter().zip(&worst.0).map(|(c, w)| c + t * (c - w)).collect()
        };

        let xr = along(cfg.reflection);
        let fr = eval(&xr, state);
        let f_best = simplex[0].1;
        let f_second = simplex[d - 1].1;

        if fr < f_best {
            let xe = along(cfg.reflection * cfg.expansion);
            let fe = eval(&xe, state);
            simplex[d] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < f_second {
            simplex[d] = (xr, fr);
            continue;
        }
        let (xc, fc, accept) = if fr < worst.1 {
            let xc = along(cfg.reflection * cfg.contraction);
            let fc = eval(&xc, state);
            let ok = fc <= fr;
            (xc, fc, ok)
        } else {
            let xc = along(-cfg.contraction);
            let fc = eval(&xc, state);
            let ok = fc < worst.1;
            (xc, fc, ok)
        };
        if accept {
            simplex[d] = (xc, fc);
            continue;
        }
        let best = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            for (v, b) in vertex.0.iter_mut().zip(&best) {
                *v = b + cfg.shrink * (*v - b);
            }
            vertex.1 = eval(&vertex.0, state);
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, f) = simplex.swap_remove(0);
    (x, f, converged)
}

fn spread_ok(simplex: &[(Vec<f64>, f64)], cfg: &SimplexConfig) -> bool {
    let (x0, f0) = &simplex[0];
    let f_spread = simplex.iter().map(|(_, f)| (f - f0).abs()).fold(0.0, f64::max);
    let x_spread = simplex
        .iter()
        .flat_map(|(x, _)| x.iter().zip(x0).map(|(a, b)| (a - b).abs()))
        .fold(0.0, f64::max);
    f_spread <= cfg.f_tolerance && x_spread <= cfg.x_tolerance
}

/// Maps natural parameters to the unconstrained search space.
///
/// Positive parameters go through ln. GOMBUR-2's shape n > 1 is searched
/// as ln m with m = (n − 1)/2, the GOMBUR-1 shape of the same law.
pub fn to_unconstrained(family: Family, params: &[f64]) -> Result<Vec<f64>> {
    family.validate(params)?;
    params
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let v = if family == Family::Gombur2 && i == 0 { 0.5 * (p - 1.0) } else { p };
            if v > 0.0 {
                Ok(v.ln())
            } else {
                Err(Error::Domain(format!(
                    "{} parameter {p} is on the boundary of its domain",
                    family.display_name()
                )))
            }
        })
        .collect()
}

/// Inverse of [`to_unconstrained`].
pub fn from_unconstrained(family: Family, z: &[f64]) -> Result<Vec<f64>> {
    if z.len() != family.param_count() {
        return Err(Error::Domain(format!(
            "{} takes {} parameter(s), got {}",
            family.display_name(),
            family.param_count(),
            z.len()
        )));
    }
    Ok(z.iter()
        .enumerate()
        .map(|(i, &t)| {
            if family == Family::Gombur2 && i == 0 {
                2.0 * t.exp() + 1.0
            } else {
                t.exp()
            }
        })
        .collect())
}
