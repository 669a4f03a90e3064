//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::data::{describe, find_embedded, load_embedded, Dataset, DescriptiveStats, EMBEDDED};
use crate::distributions::{Family, FamilySpec};
use crate::error::Error;
use crate::optim::SimplexConfig;
use crate::report::plot::{plot_series, render_plot_csv};
use crate::report::{
    build_comparison, csv_field, describe_csv, describe_markdown, render_csv, render_json, render_markdown,
    render_svg, ComparisonTable, FamilyBlock, PlotKind,
};

/// Environment variable overriding the simplex iteration budget.
pub const MAX_ITERS_ENV: &str = "UNITFIT_MAX_ITERS";

pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const DATA: i32 = 3;
    pub const NOT_CONVERGED: i32 = 4;
    pub const IO: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(name = "unitfit", version, about = "Fit and compare distributions on the unit interval")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the embedded datasets.
    ListDatasets {
        #[arg(long, value_enum, default_value_t = OutputFormat::Markdown)]
        format: OutputFormat,
    },
    /// Descriptive statistics of a dataset.
    Describe {
        /// Embedded id, embedded name, or path to a file of values.
        dataset: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Markdown)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit one family by maximum likelihood.
    Fit {
        dataset: String,
        #[arg(long)]
        family: Family,
        #[arg(long, value_enum, default_value_t = OutputFormat::Markdown)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit several families and tabulate the comparison.
    Compare {
        dataset: String,
        /// Comma-separated family tokens; all seven when omitted.
        #[arg(long, value_delimiter = ',')]
        families: Vec<Family>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Markdown)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write plot data as CSV plus an SVG rendering.
    Plot {
        dataset: String,
        /// ecdf, pdf, pp or qq.
        #[arg(long)]
        kind: PlotKind,
        #[arg(long, value_delimiter = ',')]
        families: Vec<Family>,
        /// SVG path; the CSV goes next to it with a .csv extension.
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::USAGE } else { exit::OK };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownDataset(_) | Error::UnknownFamily(_) | Error::Config(_) => exit::USAGE,
        Error::Io(_) => exit::IO,
        Error::Domain(_)
        | Error::Parse { .. }
        | Error::OutOfRange { .. }
        | Error::Degenerate(_)
        | Error::InsufficientData { .. }
        | Error::InfeasibleStencil => exit::DATA,
    }
}

fn simplex_config() -> Result<SimplexConfig, Error> {
    let mut config = SimplexConfig::default();
    if let Ok(raw) = std::env::var(MAX_ITERS_ENV) {
        config.max_iterations = raw
            .trim()
            .parse()
            .ok()
            .filter(|&v: &usize| v > 0)
            .ok_or_else(|| Error::Config(format!("{MAX_ITERS_ENV}={raw:?} is not a positive integer")))?;
    }
    Ok(config)
}

/// Resolves an embedded id, an embedded name, or a file path.
pub fn resolve_dataset(reference: &str) -> Result<Dataset, Error> {
    if let Ok(id) = reference.trim().parse::<u8>() {
        return load_embedded(id);
    }
    if let Some(d) = find_embedded(reference.trim()) {
        return Ok(d);
    }
    let path = Path::new(reference);
    if !path.is_file() {
        return Err(Error::UnknownDataset(reference.to_string()));
    }
    let bytes = std::fs::read(path)?;
    let name = path.file_stem().map_or_else(|| reference.to_string(), |s| s.to_string_lossy().into_owned());
    Dataset::parse(name, &bytes)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn render_table(table: &ComparisonTable, format: OutputFormat) -> String {
    match format {
        OutputFormat::Markdown => render_markdown(table),
        OutputFormat::Csv => render_csv(table),
        OutputFormat::Json => render_json(table) + "\n",
    }
}

#[derive(Serialize)]
struct DescribeRow<'a> {
    dataset: &'a str,
    #[serde(flatten)]
    stats: &'a DescriptiveStats,
}

#[derive(Serialize)]
struct ListingRow {
    id: u8,
    name: &'static str,
    n: usize,
    description: &'static str,
}

fn execute(command: Command) -> Result<i32, Error> {
    match command {
        Command::ListDatasets { format } => {
            let text = match format {
                OutputFormat::Markdown => EMBEDDED
                    .iter()
                    .map(|d| format!("{:>2}  {:<20}  {:>3}  {}\n", d.id, d.name, d.values.len(), d.description))
                    .collect(),
                OutputFormat::Csv => {
                    let mut s = String::from("id,name,n,description\n");
                    for d in &EMBEDDED {
                        s += &format!("{},{},{},{}\n", d.id, d.name, d.values.len(), csv_field(d.description));
                    }
                    s
                }
                OutputFormat::Json => {
                    let rows: Vec<ListingRow> = EMBEDDED
                        .iter()
                        .map(|d| ListingRow { id: d.id, name: d.name, n: d.values.len(), description: d.description })
                        .collect();
                    serde_json::to_string_pretty(&rows).expect("listing serializes") + "\n"
                }
            };
            emit(&text, None)?;
            Ok(exit::OK)
        }
        Command::Describe { dataset, format, out } => {
            let data = resolve_dataset(&dataset)?;
            let stats = describe(&data)?;
            let text = match format {
                OutputFormat::Markdown => describe_markdown(&data.name, &stats),
                OutputFormat::Csv => describe_csv(&data.name, &stats),
                OutputFormat::Json => {
                    let row = DescribeRow { dataset: &data.name, stats: &stats };
                    serde_json::to_string_pretty(&row).expect("statistics serialize") + "\n"
                }
            };
            emit(&text, out.as_deref())?;
            Ok(exit::OK)
        }
        Command::Fit { dataset, family, format, out } => {
            let data = resolve_dataset(&dataset)?;
            let config = simplex_config()?;
            let block = FamilyBlock::try_new(family, &data, &config)?;
            let table = ComparisonTable { dataset: data.name.clone(), n_obs: data.len(), families: vec![block] };
            emit(&render_table(&table, format), out.as_deref())?;
            Ok(convergence_code(&table))
        }
        Command::Compare { dataset, families, format, out } => {
            let data = resolve_dataset(&dataset)?;
            let config = simplex_config()?;
            let families = if families.is_empty() { Family::ALL.to_vec() } else { families };
            let table = build_comparison(&data, &families, &config)?;
            emit(&render_table(&table, format), out.as_deref())?;
            Ok(convergence_code(&table))
        }
        Command::Plot { dataset, kind, families, out } => {
            let data = resolve_dataset(&dataset)?;
            let config = simplex_config()?;
            let families = if families.is_empty() { Family::ALL.to_vec() } else { families };
            let table = build_comparison(&data, &families, &config)?;
            let specs: Vec<FamilySpec> = table.families.iter().filter_map(|b| b.fit.as_ref().map(|f| f.spec)).collect();
            for b in table.families.iter().filter(|b| b.fit.is_none()) {
                eprintln!("warning: {} omitted: {}", b.family, b.failure.as_deref().unwrap_or("no fit"));
            }
            let plot = plot_series(kind, &data, &specs);
            let csv_path = out.with_extension("csv");
            emit(&render_svg(&plot), Some(&out))?;
            emit(&render_plot_csv(&plot), Some(&csv_path))?;
            Ok(convergence_code(&table))
        }
    }
}

fn convergence_code(table: &ComparisonTable) -> i32 {
    if table.all_converged() {
        exit::OK
    } else {
        eprintln!("warning: not every fit converged");
        exit::NOT_CONVERGED
    }
}
