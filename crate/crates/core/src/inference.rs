//! Maximum-likelihood fits with observed-information standard errors and
//! Wald tests.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::data::Dataset;
use crate::distributions::{Family, FamilySpec};
use crate::error::{Error, Result};
use crate::optim::{from_unconstrained, minimize, to_unconstrained, OptimResult, SimplexConfig};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub spec: FamilySpec,
    pub log_lik: f64,
    /// Inverse observed information, the "Var" block of the comparison
    /// tables. `None` when the Hessian is not negative definite.
    pub vcov_scaled: Option<Vec<Vec<f64>>>,
    /// sqrt(vcov_scaled[i][i] / n_obs).
    pub se: Option<Vec<f64>>,
    pub determinant: Option<f64>,
    pub wald_z: Option<Vec<f64>>,
    pub wald_p: Option<Vec<f64>>,
    pub n_obs: usize,
    pub converged: bool,
    pub iterations: usize,
    pub function_evals: usize,
}

impl FitResult {
    pub fn family(&self) -> Family {
        self.spec.family()
    }

    /// Wald labels per parameter, when the inference block is available.
    pub fn wald_labels(&self) -> Option<Vec<String>> {
        self.wald_p.as_ref().map(|ps| ps.iter().map(|&p| wald_label(p)).collect())
    }
}

/// Starting points on the natural scale.
pub fn start_grid(family: Family) -> Vec<Vec<f64>> {
    const ALPHA: [f64; 3] = [0.5, 1.0, 2.0];
    const SHAPE: [f64; 3] = [0.5, 2.0, 10.0];
    match family {
        Family::ToppLeone | Family::UnitLindley | Family::Mbur => {
            ALPHA.iter().map(|&a| vec![a]).collect()
        }
        Family::Beta | Family::Kumaraswamy => ALPHA
            .iter()
            .flat_map(|&a| SHAPE.iter().map(move |&b| vec![a, b]))
            .collect(),
        Family::Gombur1 | Family::Gombur2 => {
            let to_n = |m: f64| if family == Family::Gombur2 { 2.0 * m + 1.0 } else { m };
            SHAPE
                .iter()
                .flat_map(|&m| ALPHA.iter().map(move |&a| vec![to_n(m), a]))
                .collect()
        }
    }
}

/// Fits `family` to `data` by maximum likelihood.
///
/// Every point of [`start_grid`] is optimized in the unconstrained space;
/// the best converged run wins (the best overall when none converged).
/// The inference block is left empty when the observed information at the
/// optimum is not positive definite or its stencil leaves the domain.
pub fn fit_mle(family: Family, data: &Dataset, config: &SimplexConfig) -> Result<FitResult> {
    config.validate()?;
    let d = family.param_count();
    if data.len() < d + 2 {
        return Err(Error::InsufficientData { got: data.len(), needed: d + 2 });
    }
    let objective = |z: &[f64]| -> f64 {
        from_unconstrained(family, z)
            .and_then(|p| FamilySpec::new(family, &p))
            .map(|s| -s.log_likelihood(data))
            .unwrap_or(f64::INFINITY)
    };

    let starts = start_grid(family);
    let runs: Vec<Option<OptimResult>> = std::thread::scope(|scope| {
        let handles: Vec<_> = starts
            .iter()
            .map(|start| {
                scope.spawn(move || {
                    let z0 = to_unconstrained(family, start).ok()?;
                    minimize(objective, &z0, config).ok()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("fit worker panicked")).collect()
    });

    let pick = |require_converged: bool| {
        runs.iter()
            .flatten()
            .filter(|r| r.converged || !require_converged)
            .min_by(|a, b| a.f_min.total_cmp(&b.f_min))
    };
    let best = pick(true)
        .or_else(|| pick(false))
        .ok_or_else(|| Error::Degenerate(format!("{} likelihood is not finite at any start", family.display_name())))?;

    let params = from_unconstrained(family, &best.x_min)?;
    let spec = FamilySpec::new(family, &params)?;
    let log_lik = spec.log_likelihood(data);
    let (iterations, function_evals) = runs
        .iter()
        .flatten()
        .fold((0, 0), |(i, e), r| (i + r.iterations, e + r.function_evals));

    let mut fit = FitResult {
        spec,
        log_lik,
        vcov_scaled: None,
        se: None,
        determinant: None,
        wald_z: None,
        wald_p: None,
        n_obs: data.len(),
        converged: best.converged,
        iterations,
        function_evals,
    };

    let ll = |theta: &[f64]| {
        FamilySpec::new(family, theta).map(|s| s.log_likelihood(data)).unwrap_or(f64::NAN)
    };
    if let Ok(h) = hessian_fd(ll, &params) {
        if let Some(block) = inference_block(&h, &params, data.len()) {
            fit.vcov_scaled = Some(block.vcov);
            fit.se = Some(block.se);
            fit.determinant = Some(block.determinant);
            fit.wald_z = Some(block.z);
            fit.wald_p = Some(block.p);
        }
    }
    Ok(fit)
}

struct InferenceBlock {
    vcov: Vec<Vec<f64>>,
    se: Vec<f64>,
    determinant: f64,
    z: Vec<f64>,
    p: Vec<f64>,
}

fn inference_block(hessian: &[Vec<f64>], theta: &[f64], n_obs: usize) -> Option<InferenceBlock> {
    let d = theta.len();
    let info = DMatrix::from_fn(d, d, |i, j| -hessian[i][j]);
    let vcov = info.cholesky()?.inverse();
    let vcov = (&vcov + vcov.transpose()) * 0.5;
    let se: Vec<f64> = (0..d).map(|i| (vcov[(i, i)] / n_obs as f64).sqrt()).collect();
    let mut z = Vec::with_capacity(d);
    let mut p = Vec::with_capacity(d);
    for (&t, &s) in theta.iter().zip(&se) {
        let w = wald_test(t, s).ok()?;
        z.push(w.z);
        p.push(w.p);
    }
    Some(InferenceBlock {
        determinant: vcov.determinant(),
        vcov: (0..d).map(|i| (0..d).map(|j| vcov[(i, j)]).collect()).collect(),
        se,
        z,
        p,
    })
}

/// Central-difference Hessian of `f` at `theta` with steps
/// hᵢ = 1e-4·max(1, |θᵢ|), symmetrized.
pub fn hessian_fd<F>(f: F, theta: &[f64]) -> Result<Vec<Vec<f64>>>
where
    F: Fn(&[f64]) -> f64,
{
    let d = theta.len();
    let h: Vec<f64> = theta.iter().map(|t| 1e-4 * t.abs().max(1.0)).collect();
    let at = |offsets: &[(usize, f64)]| -> Result<f64> {
        let mut x = theta.to_vec();
        for &(i, s) in offsets {
            x[i] += s * h[i];
        }
        let v = f(&x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::InfeasibleStencil)
        }
    };

    let f0 = at(&[])?;
    let mut hess = vec![vec![0.0; d]; d];
    for i in 0..d {
        let fp = at(&[(i, 1.0)])?;
        let fm = at(&[(i, -1.0)])?;
        hess[i][i] = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
        for j in 0..i {
            let fpp = at(&[(i, 1.0), (j, 1.0)])?;
            let fpm = at(&[(i, 1.0), (j, -1.0)])?;
            let fmp = at(&[(i, -1.0), (j, 1.0)])?;
            let fmm = at(&[(i, -1.0), (j, -1.0)])?;
            let v = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
            hess[i][j] = v;
            hess[j][i] = v;
        }
    }
    Ok(hess)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WaldTest {
    pub z: f64,
    pub p: f64,
    pub label: String,
}

/// z = θ̂/se against the standard normal, two-sided.
pub fn wald_test(theta_hat: f64, se: f64) -> Result<WaldTest> {
    if !(se > 0.0 && se.is_finite() && theta_hat.is_finite()) {
        return Err(Error::Domain(format!("Wald test needs a finite estimate and se > 0, got se={se}")));
    }
    let z = theta_hat / se;
    let p = libm::erfc(z.abs() / std::f64::consts::SQRT_2).min(1.0);
    Ok(WaldTest { z, p, label: wald_label(p) })
}

pub fn wald_label(p: f64) -> String {
    if p < 0.001 {
        "P<0.001".to_string()
    } else {
        format!("{p:.4}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::load_embedded;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn hessian_of_quadratics() {
        let h = hessian_fd(|t| -0.5 * (t[0] - 1.0).powi(2), &[0.3]).unwrap();
        assert_abs_diff_eq!(h[0][0], -1.0, epsilon = 1e-8);
        let h = hessian_fd(|t| -t[0] * t[0] - 3.0 * t[1] * t[1] - t[0] * t[1], &[0.7, -2.0]).unwrap();
        let want = [[-2.0, -1.0], [-1.0, -6.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert_abs_diff_eq!(h[i][j], want[i][j], epsilon = 1e-6);
            }
        }
    }

    #[test]
    fn hessian_flags_infeasible_stencil() {
        let f = |t: &[f64]| if t[0] <= 0.0 { f64::NAN } else { t[0].ln() };
        assert!(matches!(hessian_fd(f, &[5e-5]), Err(Error::InfeasibleStencil)));
    }

    #[test]
    fn wald_examples() {
        let w = wald_test(5.7248, 0.3004).unwrap();
        assert_abs_diff_eq!(w.z, 19.0573, epsilon = 1e-3);
        assert_eq!(w.label, "P<0.001");
        let w = wald_test(0.0, 1.0).unwrap();
        assert_eq!((w.z, w.p), (0.0, 1.0));
        assert_abs_diff_eq!(wald_test(1.96, 1.0).unwrap().p, 0.05, epsilon = 1e-4);
        assert!(wald_test(1.0, 0.0).is_err());
    }

    #[test]
    fn start_grids() {
        assert_eq!(start_grid(Family::Mbur).len(), 3);
        assert_eq!(start_grid(Family::Beta).len(), 9);
        let g2 = start_grid(Family::Gombur2);
        assert!(g2.iter().all(|p| p[0] > 1.0));
        for (a, b) in start_grid(Family::Gombur1).iter().zip(&g2) {
            assert_eq!(b[0], 2.0 * a[0] + 1.0);
            assert_eq!(a[1], b[1]);
        }
    }

    #[test]
    fn too_few_observations() {
        let d = Dataset::new("tiny", vec![0.2, 0.4, 0.6]).unwrap();
        assert!(matches!(
            fit_mle(Family::Beta, &d, &SimplexConfig::default()),
            Err(Error::InsufficientData { got: 3, needed: 4 })
        ));
        assert!(fit_mle(Family::Mbur, &d, &SimplexConfig::default()).is_ok());
    }

    #[test]
    fn gombur1_on_dwelling() {
        let fit = fit_mle(Family::Gombur1, &load_embedded(1).unwrap(), &SimplexConfig::default()).unwrap();
        assert!(fit.converged);
        let p = fit.spec.params();
        assert_abs_diff_eq!(p[0], 5.7248, epsilon = 1e-3);
        assert_abs_diff_eq!(p[1], 2.4988, epsilon = 1e-3);
        assert_abs_diff_eq!(fit.log_lik, 81.0731, epsilon = 1e-3);
        let v = fit.vcov_scaled.as_ref().unwrap();
        assert_relative_eq!(v[0][0], 2.7974, max_relative = 0.05);
        assert_relative_eq!(v[0][1], 0.0255, max_relative = 0.05);
        assert_relative_eq!(v[1][1], 0.008, max_relative = 0.05);
        let se = fit.se.as_ref().unwrap();
        assert_abs_diff_eq!(se[0], 0.3004, epsilon = 5e-3);
        assert_abs_diff_eq!(se[1], 0.0161, epsilon = 5e-4);
        assert_relative_eq!(fit.determinant.unwrap(), 0.0218, max_relative = 0.05);
        assert_eq!(fit.wald_labels().unwrap(), vec!["P<0.001", "P<0.001"]);
    }

    #[test]
    fn mbur_on_dwelling() {
        let fit = fit_mle(Family::Mbur, &load_embedded(1).unwrap(), &SimplexConfig::default()).unwrap();
        assert_abs_diff_eq!(fit.spec.params()[0], 2.3519, epsilon = 1e-3);
        assert_abs_diff_eq!(fit.vcov_scaled.unwrap()[0][0], 0.023, epsilon = 5e-4);
        assert_abs_diff_eq!(fit.se.unwrap()[0], 0.0272, epsilon = 5e-4);
    }

    #[test]
    fn inference_identities() {
        let fit = fit_mle(Family::Kumaraswamy, &load_embedded(4).unwrap(), &SimplexConfig::default()).unwrap();
        let v = fit.vcov_scaled.unwrap();
        let se = fit.se.unwrap();
        let n = fit.n_obs as f64;
        assert_eq!(v[0][1], v[1][0]);
        for i in 0..2 {
            assert_relative_eq!(se[i], (v[i][i] / n).sqrt(), max_relative = 1e-15);
        }
        assert_relative_eq!(fit.determinant.unwrap(), v[0][0] * v[1][1] - v[0][1] * v[1][0], max_relative = 1e-12);
    }
}
