//! Plot point sets (eCDF and density overlays, PP and QQ) and a small SVG
//! writer for them.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::data::Dataset;
use crate::distributions::FamilySpec;
use crate::error::{Error, Result};

/// Number of interior grid points for fitted curves.
pub const CURVE_POINTS: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlotKind {
    EcdfOverlay,
    PdfOverlay,
    Pp,
    Qq,
}

impl FromStr for PlotKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ecdf" | "ecdf_overlay" => Ok(PlotKind::EcdfOverlay),
            "pdf" | "pdf_overlay" => Ok(PlotKind::PdfOverlay),
            "pp" => Ok(PlotKind::Pp),
            "qq" => Ok(PlotKind::Qq),
            _ => Err(Error::Domain(format!("unknown plot kind {s:?}; expected ecdf, pdf, pp or qq"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    /// Bin edges, one more than `densities`.
    pub edges: Vec<f64>,
    pub densities: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotSeries {
    pub kind: PlotKind,
    pub series: Vec<Series>,
    pub histogram: Option<Histogram>,
}

fn plotting_position(i: usize, n: usize) -> f64 {
    (i as f64 + 0.5) / n as f64
}

fn curve_grid() -> impl Iterator<Item = f64> {
    (0..CURVE_POINTS).map(|k| (k + 1) as f64 / (CURVE_POINTS + 1) as f64)
}

/// (F(y₍ᵢ₎), (i − 0.5)/n) on the sorted sample.
pub fn pp_points(data: &Dataset, spec: &FamilySpec) -> PlotSeries {
    PlotSeries { kind: PlotKind::Pp, series: vec![pp_series(data, spec)], histogram: None }
}

fn pp_series(data: &Dataset, spec: &FamilySpec) -> Series {
    let n = data.len();
    let points = data
        .sorted()
        .iter()
        .enumerate()
        .map(|(i, &y)| (spec.cdf_unchecked(y), plotting_position(i, n)))
        .collect();
    Series { label: spec.family().token().to_string(), points }
}

/// (Q((i − 0.5)/n), y₍ᵢ₎) on the sorted sample.
pub fn qq_points(data: &Dataset, spec: &FamilySpec) -> PlotSeries {
    PlotSeries { kind: PlotKind::Qq, series: vec![qq_series(data, spec)], histogram: None }
}

fn qq_series(data: &Dataset, spec: &FamilySpec) -> Series {
    let n = data.len();
    let points = data
        .sorted()
        .iter()
        .enumerate()
        .map(|(i, &y)| {
            let q = spec.quantile(plotting_position(i, n)).expect("plotting positions lie in (0, 1)");
            (q, y)
        })
        .collect();
    Series { label: spec.family().token().to_string(), points }
}

/// Empirical staircase (y₍ᵢ₎, i/n) plus each fitted CDF on the curve grid.
pub fn ecdf_overlay(data: &Dataset, specs: &[FamilySpec]) -> PlotSeries {
    let n = data.len() as f64;
    let mut series = vec![Series {
        label: "empirical".to_string(),
        points: data.sorted().iter().enumerate().map(|(i, &y)| (y, (i + 1) as f64 / n)).collect(),
    }];
    series.extend(specs.iter().map(|s| Series {
        label: s.family().token().to_string(),
        points: curve_grid().map(|x| (x, s.cdf_unchecked(x))).collect(),
    }));
    PlotSeries { kind: PlotKind::EcdfOverlay, series, histogram: None }
}

/// Density histogram with ⌈log₂ n⌉ + 1 bins over [min, max] plus each
/// fitted density on the curve grid.
pub fn pdf_overlay(data: &Dataset, specs: &[FamilySpec]) -> PlotSeries {
    let series = specs
        .iter()
        .map(|s| Series {
            label: s.family().token().to_string(),
            points: curve_grid().map(|x| (x, s.ln_pdf_unchecked(x).exp())).collect(),
        })
        .collect();
    PlotSeries { kind: PlotKind::PdfOverlay, series, histogram: Some(histogram(data)) }
}

pub fn sturges_bins(n: usize) -> usize {
    (n as f64).log2().ceil() as usize + 1
}

fn histogram(data: &Dataset) -> Histogram {
    let sorted = data.sorted();
    let n = sorted.len();
    let bins = sturges_bins(n);
    let (mut lo, mut hi) = (sorted[0], sorted[n - 1]);
    if hi <= lo {
        lo = (lo - 0.005).max(0.0);
        hi = (hi + 0.005).min(1.0);
    }
    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0usize; bins];
    for &y in &sorted {
        let k = (((y - lo) / width) as usize).min(bins - 1);
        counts[k] += 1;
    }
    Histogram {
        edges: (0..=bins).map(|k| if k == bins { hi } else { lo + k as f64 * width }).collect(),
        densities: counts.iter().map(|&c| c as f64 / (n as f64 * width)).collect(),
    }
}

/// Builds the series of `kind` for every spec.
pub fn plot_series(kind: PlotKind, data: &Dataset, specs: &[FamilySpec]) -> PlotSeries {
    match kind {
        PlotKind::EcdfOverlay => ecdf_overlay(data, specs),
        PlotKind::PdfOverlay => pdf_overlay(data, specs),
        PlotKind::Pp => PlotSeries { kind, series: specs.iter().map(|s| pp_series(data, s)).collect(), histogram: None },
        PlotKind::Qq => PlotSeries { kind, series: specs.iter().map(|s| qq_series(data, s)).collect(), histogram: None },
    }
}

/// Long-format `series,x,y`; histogram bars appear as series "histogram"
/// at their bin centres.
pub fn render_plot_csv(plot: &PlotSeries) -> String {
    let mut out = String::from("series,x,y\n");
    if let Some(h) = &plot.histogram {
        for (k, d) in h.densities.iter().enumerate() {
            let _ = writeln!(out, "histogram,{},{}", 0.5 * (h.edges[k] + h.edges[k + 1]), d);
        }
    }
    for s in &plot.series {
        for (x, y) in &s.points {
            let _ = writeln!(out, "{},{x},{y}", super::csv_field(&s.label));
        }
    }
    out
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 50.0;
const COLORS: [&str; 8] = ["#000000", "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"];

/// Standalone SVG 1.1 document with one polyline per series.
pub fn render_svg(plot: &PlotSeries) -> String {
    let (x_max, y_max) = extent(plot);
    let sx = |x: f64| MARGIN + x / x_max * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - y.clamp(0.0, y_max) / y_max * (HEIGHT - 2.0 * MARGIN);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (x0, x1, y0, y1) = (sx(0.0), sx(x_max), sy(0.0), sy(y_max));
    let _ = writeln!(
        out,
        r#"<path d="M{x0:.2},{y1:.2} L{x0:.2},{y0:.2} L{x1:.2},{y0:.2}" fill="none" stroke="black"/>"#
    );
    for t in [0.0, 0.5, 1.0] {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="middle">{:.3}</text>"#,
            sx(t * x_max),
            y0 + 16.0,
            t * x_max
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="end">{:.3}</text>"#,
            x0 - 6.0,
            sy(t * y_max) + 4.0,
            t * y_max
        );
    }

    if let Some(h) = &plot.histogram {
        for (k, d) in h.densities.iter().enumerate() {
            let (a, b) = (sx(h.edges[k]), sx(h.edges[k + 1]));
            let top = sy(*d);
            let _ = writeln!(
                out,
                r#"<rect x="{a:.2}" y="{top:.2}" width="{:.2}" height="{:.2}" fill="gainsboro" stroke="gray"/>"#,
                b - a,
                y0 - top
            );
        }
    }
    if matches!(plot.kind, PlotKind::Pp | PlotKind::Qq) {
        let m = x_max.min(y_max);
        let _ = writeln!(
            out,
            r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{:.2}" y2="{:.2}" stroke="darkgray" stroke-dasharray="4,3"/>"#,
            sx(m),
            sy(m)
        );
    }

    for (k, s) in plot.series.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let pts: Vec<String> = if plot.kind == PlotKind::EcdfOverlay && s.label == "empirical" {
            staircase(&s.points).iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect()
        } else {
            s.points.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect()
        };
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
            pts.join(" ")
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="12" fill="{color}">{}</text>"#,
            WIDTH - MARGIN - 110.0,
            MARGIN + 14.0 * k as f64,
            xml_escape(&s.label)
        );
    }
    out.push_str("</svg>\n");
    out
}

fn extent(plot: &PlotSeries) -> (f64, f64) {
    match plot.kind {
        PlotKind::Pp | PlotKind::EcdfOverlay => (1.0, 1.0),
        PlotKind::Qq => {
            let m = plot
                .series
                .iter()
                .flat_map(|s| s.points.iter().flat_map(|&(x, y)| [x, y]))
                .fold(0.0, f64::max);
            (m.max(1e-6), m.max(1e-6))
        }
        PlotKind::PdfOverlay => {
            let hist_max = plot.histogram.as_ref().map_or(0.0, |h| h.densities.iter().copied().fold(0.0, f64::max));
            let curve_max = plot
                .series
                .iter()
                .flat_map(|s| s.points.iter().map(|p| p.1))
                .filter(|v| v.is_finite())
                .fold(0.0, f64::max);
            let y = if hist_max > 0.0 { curve_max.min(3.0 * hist_max).max(hist_max) } else { curve_max };
            (1.0, (1.05 * y).max(1e-6))
        }
    }
}

/// Horizontal-then-vertical path through the eCDF jump points.
fn staircase(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(2 * points.len() + 2);
    let mut level = 0.0;
    out.push((0.0, 0.0));
    for &(x, y) in points {
        out.push((x, level));
        out.push((x, y));
        level = y;
    }
    out.push((1.0, level));
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
