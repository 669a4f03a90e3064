//! Goodness-of-fit statistics and information criteria.

use serde::{Deserialize, Serialize};

use crate::data::Dataset;
use crate::distributions::FamilySpec;
use crate::error::{Error, Result};

/// Level of the KS decision.
pub const KS_LEVEL: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GofReport {
    /// Exact supremum of |F_n − F|.
    pub ks: f64,
    /// Kolmogorov p-value of `ks`.
    pub ks_p: f64,
    pub h0_rejected: bool,
    /// max |F_n − F| evaluated at the sample points only, the value the
    /// published comparison tables print as "K-S Value".
    pub ks_at_samples: f64,
    pub ad: f64,
    pub ad_clamped: bool,
    pub cvm: f64,
}

impl GofReport {
    pub fn new(data: &Dataset, spec: &FamilySpec) -> Self {
        let cdf = |y: f64| spec.cdf_unchecked(y);
        let ks = ks_statistic(data, cdf);
        let ks_p = ks_pvalue(ks, data.len());
        let ad = ad_statistic(data, cdf);
        Self {
            ks,
            ks_p,
            h0_rejected: ks_p < KS_LEVEL,
            ks_at_samples: ks_statistic_at_samples(data, cdf),
            ad: ad.value,
            ad_clamped: ad.clamped,
            cvm: cvm_statistic(data, cdf),
        }
    }
}

/// D = maxᵢ max(i/n − F(y₍ᵢ₎), F(y₍ᵢ₎) − (i−1)/n).
pub fn ks_statistic(data: &Dataset, cdf: impl Fn(f64) -> f64) -> f64 {
    let n = data.len() as f64;
    data.sorted()
        .iter()
        .enumerate()
        .map(|(i, &y)| {
            let f = cdf(y);
            ((i + 1) as f64 / n - f).max(f - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

/// maxᵢ |F_n(y₍ᵢ₎) − F(y₍ᵢ₎)| with the right-continuous eCDF, so tied
/// observations all take the height of the last of them.
pub fn ks_statistic_at_samples(data: &Dataset, cdf: impl Fn(f64) -> f64) -> f64 {
    let sorted = data.sorted();
    let n = sorted.len();
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        d = d.max(((j + 1) as f64 / n as f64 - cdf(sorted[i])).abs());
        i = j + 1;
    }
    d
}

/// Kolmogorov tail probability at λ = (√n + 0.12 + 0.11/√n)·d.
pub fn ks_pvalue(d: f64, n: usize) -> f64 {
    let rn = (n as f64).sqrt();
    kolmogorov_q((rn + 0.12 + 0.11 / rn) * d)
}

/// Q_K(λ) = 2 Σ (−1)^(k−1) exp(−2k²λ²). Below λ = 1 the alternating series
/// converges slowly, so the complementary theta-function form is used.
fn kolmogorov_q(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    let q = if lambda < 1.0 {
        let c = std::f64::consts::PI.powi(2) / (8.0 * lambda * lambda);
        let mut sum = 0.0;
        for k in (1..).step_by(2) {
            let term = (-(k * k) as f64 * c).exp();
            sum += term;
            if term < 1e-16 {
                break;
            }
        }
        1.0 - (2.0 * std::f64::consts::PI).sqrt() / lambda * sum
    } else {
        let mut sum = 0.0;
        let mut sign = 1.0;
        for k in 1..=100 {
            let term = (-2.0 * (k * k) as f64 * lambda * lambda).exp();
            sum += sign * term;
            if term < 1e-12 {
                break;
            }
            sign = -sign;
        }
        2.0 * sum
    };
    q.clamp(0.0, 1.0)
}

/// 1/(12n) + Σ (F(y₍ᵢ₎) − (2i−1)/(2n))².
pub fn cvm_statistic(data: &Dataset, cdf: impl Fn(f64) -> f64) -> f64 {
    let n = data.len() as f64;
    let sum: f64 = data
        .sorted()
        .iter()
        .enumerate()
        .map(|(i, &y)| (cdf(y) - (2 * i + 1) as f64 / (2.0 * n)).powi(2))
        .sum();
    1.0 / (12.0 * n) + sum
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AndersonDarling {
    pub value: f64,
    /// True when some F(y₍ᵢ₎) was clamped into [1e-300, 1 − 1e-15].
    pub clamped: bool,
}

/// −n − Σ ((2i−1)/n)·[ln F(y₍ᵢ₎) + ln(1 − F(y₍ₙ₋ᵢ₊₁₎))].
pub fn ad_statistic(data: &Dataset, cdf: impl Fn(f64) -> f64) -> AndersonDarling {
    const LO: f64 = 1e-300;
    const HI: f64 = 1.0 - 1e-15;
    let mut clamped = false;
    let f: Vec<f64> = data
        .sorted()
        .iter()
        .map(|&y| {
            let v = cdf(y);
            let c = v.clamp(LO, HI);
            clamped |= c != v;
            c
        })
        .collect();
    let n = f.len();
    let sum: f64 = (0..n)
        .map(|i| (2 * i + 1) as f64 / n as f64 * (f[i].ln() + (-f[n - 1 - i]).ln_1p()))
        .sum();
    AndersonDarling { value: -(n as f64) - sum, clamped }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriteriaReport {
    pub aic: f64,
    pub caic: f64,
    pub bic: f64,
    pub hqic: f64,
    pub log_lik: f64,
    pub k: usize,
    pub n: usize,
}

/// AIC, corrected AIC (penalty 2kn/(n−k−1)), BIC and HQIC.
pub fn criteria(log_lik: f64, k: usize, n: usize) -> Result<CriteriaReport> {
    if n <= k + 1 {
        return Err(Error::InsufficientData { got: n, needed: k + 2 });
    }
    let (kf, nf) = (k as f64, n as f64);
    let dev = -2.0 * log_lik;
    Ok(CriteriaReport {
        aic: dev + 2.0 * kf,
        caic: dev + 2.0 * kf * nf / (nf - kf - 1.0),
        bic: dev + kf * nf.ln(),
        hqic: dev + 2.0 * kf * nf.ln().ln(),
        log_lik,
        k,
        n,
    })
}
