//! Per-dataset comparison tables and their markdown, CSV and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::data::{Dataset, DescriptiveStats};
use crate::distributions::Family;
use crate::error::{Error, Result};
use crate::gof::{criteria, CriteriaReport, GofReport};
use crate::inference::{fit_mle, FitResult};
use crate::optim::SimplexConfig;

pub mod plot;

pub use plot::{ecdf_overlay, pdf_overlay, pp_points, qq_points, render_svg, Histogram, PlotKind, PlotSeries, Series};

/// One family's column of a comparison table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyBlock {
    pub family: Family,
    /// Set when the family could not be fitted at all.
    pub failure: Option<String>,
    pub fit: Option<FitResult>,
    pub gof: Option<GofReport>,
    pub criteria: Option<CriteriaReport>,
    pub wald_labels: Option<Vec<String>>,
}

impl FamilyBlock {
    /// Fits `family` and evaluates the fit; errors are returned as is.
    pub fn try_new(family: Family, data: &Dataset, config: &SimplexConfig) -> Result<Self> {
        let fit = fit_mle(family, data, config)?;
        let crit = criteria(fit.log_lik, family.param_count(), fit.n_obs)?;
        Ok(Self {
            family,
            failure: None,
            gof: Some(GofReport::new(data, &fit.spec)),
            criteria: Some(crit),
            wald_labels: fit.wald_labels(),
            fit: Some(fit),
        })
    }

    /// Like [`FamilyBlock::try_new`], but records a failure in the block.
    pub fn new(family: Family, data: &Dataset, config: &SimplexConfig) -> Self {
        Self::try_new(family, data, config).unwrap_or_else(|e| Self {
            family,
            failure: Some(e.to_string()),
            fit: None,
            gof: None,
            criteria: None,
            wald_labels: None,
        })
    }

    pub fn converged(&self) -> bool {
        self.fit.as_ref().is_some_and(|f| f.converged)
    }

    /// Determinant cell; only two-parameter families show one.
    pub fn determinant(&self) -> Option<f64> {
        self.fit
            .as_ref()
            .filter(|f| f.family().param_count() > 1)
            .and_then(|f| f.determinant)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonTable {
    pub dataset: String,
    pub n_obs: usize,
    pub families: Vec<FamilyBlock>,
}

impl ComparisonTable {
    /// True when every family fitted and converged.
    pub fn all_converged(&self) -> bool {
        self.families.iter().all(FamilyBlock::converged)
    }

    pub fn block(&self, family: Family) -> Option<&FamilyBlock> {
        self.families.iter().find(|b| b.family == family)
    }
}

/// Fits every requested family (deduplicated, in canonical order)
/// concurrently and assembles the table.
pub fn build_comparison(data: &Dataset, families: &[Family], config: &SimplexConfig) -> Result<ComparisonTable> {
    if families.is_empty() {
        return Err(Error::Domain("no families requested".into()));
    }
    config.validate()?;
    let mut wanted = families.to_vec();
    wanted.sort();
    wanted.dedup();
    let blocks = std::thread::scope(|scope| {
        let handles: Vec<_> = wanted
            .iter()
            .map(|&f| scope.spawn(move || FamilyBlock::new(f, data, config)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("fit worker panicked"))
            .collect()
    });
    Ok(ComparisonTable { dataset: data.name.clone(), n_obs: data.len(), families: blocks })
}

const NA: &str = "n/a";

fn f4(v: f64) -> String {
    format!("{v:.4}")
}

fn opt4(v: Option<f64>) -> String {
    v.map(f4).unwrap_or_else(|| NA.to_string())
}

fn h0_label(rejected: bool) -> &'static str {
    if rejected {
        "Reject"
    } else {
        "Fail to reject"
    }
}

/// Human-readable table, one column per family, values at four decimals.
pub fn render_markdown(table: &ComparisonTable) -> String {
    let mut rows: Vec<(&str, Vec<String>)> = Vec::new();
    let blocks = &table.families;
    let cells = |f: &dyn Fn(&FamilyBlock) -> Option<String>| -> Vec<String> {
        blocks.iter().map(|b| f(b).unwrap_or_else(|| NA.to_string())).collect()
    };

    rows.push((
        "theta",
        blocks
            .iter()
            .map(|b| match (&b.fit, &b.failure) {
                (Some(fit), _) => fit
                    .family()
                    .param_names()
                    .iter()
                    .zip(fit.spec.params())
                    .map(|(n, v)| format!("{n}={}", f4(*v)))
                    .collect::<Vec<_>>()
                    .join(", "),
                (None, Some(msg)) => format!("failed: {msg}"),
                (None, None) => NA.to_string(),
            })
            .collect(),
    ));
    rows.push(("SE", cells(&|b| Some(join4(b.fit.as_ref()?.se.as_ref()?)))));
    rows.push((
        "Var",
        cells(&|b| {
            let v = b.fit.as_ref()?.vcov_scaled.as_ref()?;
            Some(if v.len() == 1 {
                f4(v[0][0])
            } else {
                let inner: Vec<String> = v.iter().map(|r| format!("[{}]", join4(r))).collect();
                format!("[{}]", inner.join(", "))
            })
        }),
    ));
    rows.push((
        "Determinant",
        blocks
            .iter()
            .map(|b| match b.fit.as_ref() {
                Some(f) if f.family().param_count() == 1 => String::new(),
                _ => opt4(b.determinant()),
            })
            .collect(),
    ));
    rows.push(("LL", cells(&|b| Some(f4(b.fit.as_ref()?.log_lik)))));
    rows.push(("AIC", cells(&|b| Some(f4(b.criteria.as_ref()?.aic)))));
    rows.push(("CAIC", cells(&|b| Some(f4(b.criteria.as_ref()?.caic)))));
    rows.push(("BIC", cells(&|b| Some(f4(b.criteria.as_ref()?.bic)))));
    rows.push(("HQIC", cells(&|b| Some(f4(b.criteria.as_ref()?.hqic)))));
    rows.push(("K-S Value", cells(&|b| Some(f4(b.gof.as_ref()?.ks_at_samples)))));
    rows.push(("K-S Sup", cells(&|b| Some(f4(b.gof.as_ref()?.ks)))));
    rows.push(("P-value", cells(&|b| Some(f4(b.gof.as_ref()?.ks_p)))));
    rows.push(("H0", cells(&|b| Some(h0_label(b.gof.as_ref()?.h0_rejected).to_string()))));
    rows.push(("AD", cells(&|b| Some(f4(b.gof.as_ref()?.ad)))));
    rows.push(("CVM", cells(&|b| Some(f4(b.gof.as_ref()?.cvm)))));
    rows.push(("Significant", cells(&|b| Some(b.wald_labels.as_ref()?.join(", ")))));
    rows.push((
        "Converged",
        blocks.iter().map(|b| if b.converged() { "yes" } else { "no" }.to_string()).collect(),
    ));

    let mut out = String::new();
    let _ = writeln!(out, "## {} (n = {})\n", table.dataset, table.n_obs);
    out.push_str("| Statistic |");
    for b in blocks {
        let _ = write!(out, " {} |", b.family.display_name());
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(blocks.len()));
    out.push('\n');
    for (label, values) in rows {
        let _ = write!(out, "| {label} |");
        for v in values {
            let _ = write!(out, " {v} |");
        }
        out.push('\n');
    }
    out
}

fn join4(values: &[f64]) -> String {
    values.iter().map(|v| f4(*v)).collect::<Vec<_>>().join(", ")
}

/// Long format `dataset,family,statistic,value` at full precision.
pub fn render_csv(table: &ComparisonTable) -> String {
    let mut out = String::from("dataset,family,statistic,value\n");
    for b in &table.families {
        let mut row = |stat: &str, value: String| {
            let _ = writeln!(out, "{},{},{},{}", csv_field(&table.dataset), b.family, stat, value);
        };
        if let Some(msg) = &b.failure {
            row("failure", csv_field(msg));
        }
        if let Some(fit) = &b.fit {
            let names = fit.family().param_names();
            for (n, v) in names.iter().zip(fit.spec.params()) {
                row(&format!("param:{n}"), v.to_string());
            }
            if let Some(se) = &fit.se {
                for (n, v) in names.iter().zip(se) {
                    row(&format!("se:{n}"), v.to_string());
                }
            }
            if let Some(vc) = &fit.vcov_scaled {
                for (i, r) in vc.iter().enumerate() {
                    for (j, v) in r.iter().enumerate() {
                        row(&format!("var:{}:{}", names[i], names[j]), v.to_string());
                    }
                }
            }
            if let Some(det) = b.determinant() {
                row("determinant", det.to_string());
            }
            row("log_lik", fit.log_lik.to_string());
            if let Some(p) = &fit.wald_p {
                for (n, v) in names.iter().zip(p) {
                    row(&format!("wald_p:{n}"), v.to_string());
                }
            }
            row("converged", fit.converged.to_string());
        }
        if let Some(c) = &b.criteria {
            row("aic", c.aic.to_string());
            row("caic", c.caic.to_string());
            row("bic", c.bic.to_string());
            row("hqic", c.hqic.to_string());
        }
        if let Some(g) = &b.gof {
            row("ks", g.ks.to_string());
            row("ks_at_samples", g.ks_at_samples.to_string());
            row("ks_p", g.ks_p.to_string());
            row("h0_rejected", g.h0_rejected.to_string());
            row("ad", g.ad.to_string());
            row("cvm", g.cvm.to_string());
        }
    }
    out
}

pub fn render_json(table: &ComparisonTable) -> String {
    serde_json::to_string_pretty(table).expect("comparison tables always serialize")
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Column headers of the descriptive-statistics row.
pub const DESCRIBE_COLUMNS: [&str; 11] =
    ["dataset", "n", "min", "mean", "std", "skewness", "kurtosis", "q25", "q50", "q75", "max"];

fn describe_cells(s: &DescriptiveStats, fmt: impl Fn(f64) -> String, na: &str) -> Vec<String> {
    let opt = |v: Option<f64>| v.map(&fmt).unwrap_or_else(|| na.to_string());
    vec![
        s.n.to_string(),
        fmt(s.min),
        fmt(s.mean),
        fmt(s.std),
        opt(s.skewness),
        opt(s.kurtosis),
        fmt(s.q25),
        fmt(s.q50),
        fmt(s.q75),
        fmt(s.max),
    ]
}

pub fn describe_markdown(name: &str, s: &DescriptiveStats) -> String {
    let mut out = format!("| {} |\n|{}\n", DESCRIBE_COLUMNS.join(" | "), "---|".repeat(DESCRIBE_COLUMNS.len()));
    let _ = writeln!(out, "| {} | {} |", name, describe_cells(s, f4, NA).join(" | "));
    out
}

pub fn describe_csv(name: &str, s: &DescriptiveStats) -> String {
    format!(
        "{}\n{},{}\n",
        DESCRIBE_COLUMNS.join(","),
        csv_field(name),
        describe_cells(s, |v| v.to_string(), "").join(",")
    )
}
