//! The seven unit-interval families and their densities, distribution
//! functions, quantiles and log-likelihoods.
//!
//! All densities are evaluated in log space. The GOMBUR normalizing
//! constants Γ(2n+2)/Γ(n+1)² are written as 1/B(n+1, n+1) so that nothing
//! is exponentiated before the final step.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::data::Dataset;
use crate::error::{Error, Result};
use crate::specfun::{digamma_unchecked, ln_beta_unchecked, ln_gamma_unchecked, reg_inc_beta_unchecked};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Beta,
    Kumaraswamy,
    ToppLeone,
    UnitLindley,
    Mbur,
    Gombur1,
    Gombur2,
}

impl Family {
    /// Canonical order used for reports.
    pub const ALL: [Family; 7] = [
        Family::Beta,
        Family::Kumaraswamy,
        Family::ToppLeone,
        Family::UnitLindley,
        Family::Mbur,
        Family::Gombur1,
        Family::Gombur2,
    ];

    /// Lowercase token used on the command line and in JSON.
    pub fn token(self) -> &'static str {
        match self {
            Family::Beta => "beta",
            Family::Kumaraswamy => "kumaraswamy",
            Family::ToppLeone => "topp_leone",
            Family::UnitLindley => "unit_lindley",
            Family::Mbur => "mbur",
            Family::Gombur1 => "gombur1",
            Family::Gombur2 => "gombur2",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            Family::Beta => "Beta",
            Family::Kumaraswamy => "Kumaraswamy",
            Family::ToppLeone => "Topp-Leone",
            Family::UnitLindley => "Unit-Lindley",
            Family::Mbur => "MBUR",
            Family::Gombur1 => "GOMBUR-1",
            Family::Gombur2 => "GOMBUR-2",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Beta | Family::Kumaraswamy => &["alpha", "beta"],
            Family::ToppLeone | Family::UnitLindley => &["theta"],
            Family::Mbur => &["alpha"],
            Family::Gombur1 | Family::Gombur2 => &["n", "alpha"],
        }
    }

    pub fn param_count(self) -> usize {
        self.param_names().len()
    }

    /// Checks that `params` has the right length and lies in the family's
    /// parameter domain (boundaries included where the family allows them).
    pub fn validate(self, params: &[f64]) -> Result<()> {
        if params.len() != self.param_count() {
            return Err(Error::Domain(format!(
                "{} takes {} parameter(s), got {}",
                self.display_name(),
                self.param_count(),
                params.len()
            )));
        }
        let ok = params.iter().all(|p| p.is_finite())
            && match self {
                Family::Gombur1 => params[0] >= 0.0 && params[1] > 0.0,
                Family::Gombur2 => params[0] >= 1.0 && params[1] > 0.0,
                _ => params.iter().all(|&p| p > 0.0),
            };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "parameters {params:?} outside the {} domain",
                self.display_name()
            )))
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.token() == key)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family together with a valid parameter vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SpecRepr", into = "SpecRepr")]
pub struct FamilySpec {
    family: Family,
    params: [f64; 2],
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    family: Family,
    params: Vec<f64>,
}

impl TryFrom<SpecRepr> for FamilySpec {
    type Error = Error;

    fn try_from(r: SpecRepr) -> Result<Self> {
        FamilySpec::new(r.family, &r.params)
    }
}

impl From<FamilySpec> for SpecRepr {
    fn from(s: FamilySpec) -> Self {
        SpecRepr { family: s.family, params: s.params().to_vec() }
    }
}

impl FamilySpec {
    pub fn new(family: Family, params: &[f64]) -> Result<Self> {
        family.validate(params)?;
        let mut p = [0.0; 2];
        p[..params.len()].copy_from_slice(params);
        Ok(Self { family, params: p })
    }

    pub fn beta(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(Family::Beta, &[alpha, beta])
    }

    pub fn kumaraswamy(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(Family::Kumaraswamy, &[alpha, beta])
    }

    pub fn topp_leone(theta: f64) -> Result<Self> {
        Self::new(Family::ToppLeone, &[theta])
    }

    pub fn unit_lindley(theta: f64) -> Result<Self> {
        Self::new(Family::UnitLindley, &[theta])
    }

    pub fn mbur(alpha: f64) -> Result<Self> {
        Self::new(Family::Mbur, &[alpha])
    }

    pub fn gombur1(n: f64, alpha: f64) -> Result<Self> {
        Self::new(Family::Gombur1, &[n, alpha])
    }

    pub fn gombur2(n: f64, alpha: f64) -> Result<Self> {
        Self::new(Family::Gombur2, &[n, alpha])
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[f64] {
        &self.params[..self.family.param_count()]
    }

    /// ln f(y).
    pub fn ln_pdf(&self, y: f64) -> Result<f64> {
        check_interior(y)?;
        Ok(self.ln_pdf_unchecked(y))
    }

    /// f(y).
    pub fn pdf(&self, y: f64) -> Result<f64> {
        self.ln_pdf(y).map(f64::exp)
    }

    pub(crate) fn ln_pdf_unchecked(&self, y: f64) -> f64 {
        let [p0, p1] = self.params;
        let ln_y = y.ln();
        match self.family {
            Family::Beta => (p0 - 1.0) * ln_y + (p1 - 1.0) * (-y).ln_1p() - ln_beta_unchecked(p0, p1),
            Family::Kumaraswamy => {
                (p0 * p1).ln() + (p0 - 1.0) * ln_y + (p1 - 1.0) * ln_one_minus_exp(p0 * ln_y)
            }
            Family::ToppLeone => {
                p0.ln() + (2.0 * (1.0 - y)).ln() + (p0 - 1.0) * (y * (2.0 - y)).ln()
            }
            Family::UnitLindley => {
                2.0 * p0.ln() - p0.ln_1p() - 3.0 * (-y).ln_1p() - p0 * y / (1.0 - y)
            }
            Family::Mbur => {
                let t = (p0 * p0).recip();
                (6.0 * t).ln() + ln_one_minus_exp(t * ln_y) + (2.0 * t - 1.0) * ln_y
            }
            Family::Gombur1 => {
                let t = (p1 * p1).recip();
                -ln_beta_unchecked(p0 + 1.0, p0 + 1.0)
                    + t.ln()
                    + xlogy(p0, ln_one_minus_exp(t * ln_y))
                    + ((p0 + 1.0) * t - 1.0) * ln_y
            }
            Family::Gombur2 => {
                let t = (p1 * p1).recip();
                let half = 0.5 * (p0 + 1.0);
                ln_gamma_unchecked(p0 + 1.0) - 2.0 * ln_gamma_unchecked(half)
                    + t.ln()
                    + xlogy(0.5 * (p0 - 1.0), ln_one_minus_exp(t * ln_y))
                    + (half * t - 1.0) * ln_y
            }
        }
    }

    /// F(y) for y in [0, 1].
    pub fn cdf(&self, y: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&y) {
            return Err(Error::Domain(format!("cdf argument {y} outside [0, 1]")));
        }
        Ok(self.cdf_unchecked(y))
    }

    pub(crate) fn cdf_unchecked(&self, y: f64) -> f64 {
        if y <= 0.0 {
            return 0.0;
        }
        if y >= 1.0 {
            return 1.0;
        }
        let [p0, p1] = self.params;
        let v = match self.family {
            Family::Beta => reg_inc_beta_unchecked(y, p0, p1),
            Family::Kumaraswamy => -(p1 * ln_one_minus_exp(p0 * y.ln())).exp_m1(),
            Family::ToppLeone => (p0 * (y * (2.0 - y)).ln()).exp(),
            Family::UnitLindley => {
                let s = p0 * y / (1.0 - y);
                -(-s).exp_m1() - s / (1.0 + p0) * (-s).exp()
            }
            Family::Mbur => {
                let u = (y.ln() / (p0 * p0)).exp();
                u * u * (3.0 - 2.0 * u)
            }
            Family::Gombur1 => {
                let w = (y.ln() / (p1 * p1)).exp();
                reg_inc_beta_unchecked(w, p0 + 1.0, p0 + 1.0)
            }
            Family::Gombur2 => {
                let w = (y.ln() / (p1 * p1)).exp();
                let a = 0.5 * (p0 + 1.0);
                reg_inc_beta_unchecked(w, a, a)
            }
        };
        v.clamp(0.0, 1.0)
    }

    /// The y in (0, 1) with F(y) = p.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain(format!("quantile level {p} outside (0, 1)")));
        }
        let [p0, p1] = self.params;
        let y = match self.family {
            Family::Kumaraswamy => {
                let inner = -((-p).ln_1p() / p1).exp_m1();
                (inner.ln() / p0).exp()
            }
            Family::ToppLeone => {
                let tail = -(p.ln() / p0).exp_m1();
                1.0 - tail.sqrt()
            }
            Family::Mbur => {
                // smoothstep inverse of 3u² − 2u³, then y = u^(α²)
                let u = 0.5 - ((1.0 - 2.0 * p).asin() / 3.0).sin();
                let u = invert_monotone(|w| w * w * (3.0 - 2.0 * w), |w| 6.0 * w * (1.0 - w), p, Some(u));
                (p0 * p0 * u.ln()).exp()
            }
            Family::Gombur1 | Family::Gombur2 => {
                let a = if self.family == Family::Gombur1 { p0 + 1.0 } else { 0.5 * (p0 + 1.0) };
                let ln_norm = -ln_beta_unchecked(a, a);
                let w = invert_monotone(
                    |w| reg_inc_beta_unchecked(w, a, a),
                    |w| (ln_norm + (a - 1.0) * (w.ln() + (-w).ln_1p())).exp(),
                    p,
                    None,
                );
                (p1 * p1 * w.ln()).exp()
            }
            Family::Beta | Family::UnitLindley => invert_monotone(
                |y| self.cdf_unchecked(y),
                |y| self.ln_pdf_unchecked(y).exp(),
                p,
                None,
            ),
        };
        Ok(y)
    }

    /// Σ ln f(yᵢ), or −∞ if any term is not finite.
    pub fn log_likelihood(&self, data: &Dataset) -> f64 {
        self.log_likelihood_values(data.values())
    }

    pub(crate) fn log_likelihood_values(&self, values: &[f64]) -> f64 {
        let mut total = 0.0;
        for &y in values {
            let v = self.ln_pdf_unchecked(y);
            if !v.is_finite() {
                return f64::NEG_INFINITY;
            }
            total += v;
        }
        total
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.family.display_name())?;
        for (i, (name, v)) in self.family.param_names().iter().zip(self.params()).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}={v}")?;
        }
        f.write_str(")")
    }
}

fn check_interior(y: f64) -> Result<()> {
    if y > 0.0 && y < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("observation {y} outside (0, 1)")))
    }
}

/// ln(1 − eˣ) for x ≤ 0.
fn ln_one_minus_exp(x: f64) -> f64 {
    if x > -std::f64::consts::LN_2 {
        (-x.exp_m1()).ln()
    } else {
        (-x.exp()).ln_1p()
    }
}

/// x·ln_term with 0·(anything finite) = 0, so the bracket term vanishes at
/// the lower end of the GOMBUR shape domain.
fn xlogy(x: f64, ln_term: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * ln_term
    }
}

/// Solves cdf(y) = p on (0, 1) for a continuous nondecreasing `cdf` with
/// density `pdf`, by Newton steps safeguarded with a shrinking bracket.
fn invert_monotone(
    cdf: impl Fn(f64) -> f64,
    pdf: impl Fn(f64) -> f64,
    p: f64,
    start: Option<f64>,
) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut y = start.filter(|s| *s > 0.0 && *s < 1.0).unwrap_or(0.5);
    for _ in 0..2000 {
        let f = cdf(y) - p;
        if f == 0.0 {
            return y;
        }
        if f < 0.0 {
            lo = y;
        } else {
            hi = y;
        }
        if hi - lo <= 4.0 * f64::EPSILON * hi {
            break;
        }
        let d = pdf(y);
        let newton = y - f / d;
        y = if d.is_finite() && d > 0.0 && newton > lo && newton < hi {
            newton
        } else if lo == 0.0 {
            hi / 16.0
        } else if hi / lo > 16.0 {
            (lo * hi).sqrt()
        } else {
            0.5 * (lo + hi)
        };
        if f.abs() < 1e-15 && (newton - y).abs() <= 2.0 * f64::EPSILON * y {
            return y;
        }
    }
    y
}

/// Analytic score (∂l/∂n, ∂l/∂α) of the GOMBUR-1 log-likelihood summed
/// over the sample.
pub fn score_gombur1(n: f64, alpha: f64, data: &Dataset) -> Result<(f64, f64)> {
    if !(n > 0.0 && n.is_finite() && alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Domain(format!(
            "GOMBUR-1 score needs n > 0 and alpha > 0, got n={n}, alpha={alpha}"
        )));
    }
    let t = (alpha * alpha).recip();
    let a3 = alpha.powi(3);
    let nn = data.len() as f64;
    let mut dn = nn * (2.0 * digamma_unchecked(2.0 * n + 2.0) - 2.0 * digamma_unchecked(n + 1.0));
    let mut da = -2.0 * nn / alpha;
    for &y in data.values() {
        let ln_y = y.ln();
        let (ln_bracket, ratio) = bracket_terms(t, ln_y);
        dn += ln_bracket + t * ln_y;
        da += (2.0 * n / a3) * ratio - (2.0 * (n + 1.0) / a3) * ln_y;
    }
    Ok((dn, da))
}

/// Analytic score (∂l/∂n, ∂l/∂α) of the GOMBUR-2 log-likelihood summed
/// over the sample.
pub fn score_gombur2(n: f64, alpha: f64, data: &Dataset) -> Result<(f64, f64)> {
    if !(n > 1.0 && n.is_finite() && alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Domain(format!(
            "GOMBUR-2 score needs n > 1 and alpha > 0, got n={n}, alpha={alpha}"
        )));
    }
    let t = (alpha * alpha).recip();
    let a3 = alpha.powi(3);
    let nn = data.len() as f64;
    let mut dn = nn * (digamma_unchecked(n + 1.0) - digamma_unchecked(0.5 * (n + 1.0)));
    let mut da = -2.0 * nn / alpha;
    for &y in data.values() {
        let ln_y = y.ln();
        let (ln_bracket, ratio) = bracket_terms(t, ln_y);
        dn += 0.5 * ln_bracket + 0.5 * t * ln_y;
        da += ((n - 1.0) / a3) * ratio - ((n + 1.0) / a3) * ln_y;
    }
    Ok((dn, da))
}

/// ln(1 − yᵗ) and yᵗ·ln y / (1 − yᵗ).
fn bracket_terms(t: f64, ln_y: f64) -> (f64, f64) {
    let x = t * ln_y;
    let one_minus = -x.exp_m1();
    (ln_one_minus_exp(x), x.exp() * ln_y / one_minus)
}
