//! Command logic behind the `ctree` binary, kept in a library so the
//! formatting and exit-code mapping can be tested without spawning processes.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ctree_core::oracle::{check_limit, to_dot, Census};
use ctree_core::pipeline::tree_series_check;
use ctree_core::{verify, BigInt, SeriesBundle, VariantFlag, VerificationReport};

pub const DEFAULT_ORDER: usize = 20;
pub const DEFAULT_MAX_ORDER: usize = 500;

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ctree",
    version,
    about = "Count C-trees: connected graphs whose cycles share no node"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the coefficients of one generating function, n = 1..order.
    Series(SeriesArgs),
    /// Compare series coefficients against brute-force counts for n = 1..n_max.
    Verify(VerifyArgs),
    /// Write one DOT file per C-tree on n nodes.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    pub name: SeriesName,
    #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = positive)]
    pub order: usize,
    /// Largest order accepted.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Exclude cycles of length 2.
    #[arg(long)]
    pub no_two_cycles: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(default_value_t = 6, value_parser = positive)]
    pub n_max: usize,
    #[arg(long)]
    pub no_two_cycles: bool,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(value_parser = positive)]
    pub n: usize,
    #[arg(long)]
    pub no_two_cycles: bool,
    /// Output directory, created if missing.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    /// Unrooted C-trees.
    C,
    /// Planted C-trees (rooted at an endnode).
    P,
    /// Planted forests.
    F,
    /// Node-rooted C-trees.
    Cprime,
    /// Skeleton-rooted C-trees.
    Cdot,
    /// Unrooted trees, via the cycle-length-1 specialisation.
    Trees,
}

impl SeriesName {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::C => "c",
            Self::P => "p",
            Self::F => "f",
            Self::Cprime => "cprime",
            Self::Cdot => "cdot",
            Self::Trees => "trees",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Comma-separated on one line.
    Plain,
    Json,
    /// `n a(n)` per line.
    Bfile,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    VerificationFailed { failed: usize },
    Io { path: PathBuf, source: io::Error },
    Compute(ctree_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::VerificationFailed { .. } | Self::Compute(_) => 1,
            Self::Usage(_) => 2,
            Self::Io { .. } => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Usage(msg) => f.write_str(msg),
            Self::VerificationFailed { failed } => write!(f, "{failed} verification checks failed"),
            Self::Io { path, source } => write!(f, "{}: {source}", path.display()),
            Self::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ctree_core::Error> for CliError {
    fn from(e: ctree_core::Error) -> Self {
        match e {
            ctree_core::Error::OracleLimit { .. } | ctree_core::Error::TooSmall { .. } => {
                Self::Usage(e.to_string())
            }
            other => Self::Compute(other),
        }
    }
}

fn io_err(path: impl Into<PathBuf>) -> impl FnOnce(io::Error) -> CliError {
    let path = path.into();
    move |source| CliError::Io { path, source }
}

fn variant(no_two_cycles: bool) -> VariantFlag {
    if no_two_cycles {
        VariantFlag::NO_TWO_CYCLES
    } else {
        VariantFlag::ALL
    }
}

/// Coefficients `a(1), .., a(order)` of the named series.
pub fn series_coefficients(
    name: SeriesName,
    order: usize,
    variant: VariantFlag,
) -> Result<Vec<BigInt>, CliError> {
    let series = if name == SeriesName::Trees {
        tree_series_check(order)?
    } else {
        let bundle = SeriesBundle::compute(order, variant)?;
        match name {
            SeriesName::C => bundle.ctree,
            SeriesName::P => bundle.planted,
            SeriesName::F => bundle.forest,
            SeriesName::Cprime => bundle.decapitated,
            SeriesName::Cdot => bundle.skeleton_rooted,
            SeriesName::Trees => unreachable!(),
        }
    };
    Ok((1..=order).map(|n| series.coeff(n).clone()).collect())
}

pub fn format_coefficients(
    name: SeriesName,
    variant: VariantFlag,
    coeffs: &[BigInt],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Plain => {
            let items: Vec<String> = coeffs.iter().map(BigInt::to_string).collect();
            format!("{}\n", items.join(", "))
        }
        OutputFormat::Json => {
            let value = serde_json::json!({
                "name": name.as_str(),
                "variant": variant.name(),
                "order": coeffs.len(),
                "offset": 1,
                "coefficients": coeffs.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            });
            format!("{value}\n")
        }
        OutputFormat::Bfile => {
            let mut out = String::new();
            for (k, a) in coeffs.iter().enumerate() {
                writeln!(out, "{} {a}", k + 1).unwrap();
            }
            out
        }
    }
}

/// Parses `n a(n)` lines back into `a(1), a(2), ..`, requiring consecutive
/// indices from 1.
pub fn parse_bfile(text: &str) -> Result<Vec<BigInt>, String> {
    let mut coeffs = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let (n, a) = line
            .split_once(' ')
            .ok_or_else(|| format!("line {}: expected \"n a(n)\"", k + 1))?;
        if n.parse::<usize>().ok() != Some(k + 1) {
            return Err(format!("line {}: index {n:?} out of sequence", k + 1));
        }
        coeffs.push(a.parse().map_err(|e| format!("line {}: {e}", k + 1))?);
    }
    Ok(coeffs)
}

pub fn cmd_series(args: &SeriesArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    if args.order > args.max_order {
        return Err(CliError::Usage(format!(
            "order {} exceeds the maximum of {} (raise it with --max-order)",
            args.order, args.max_order
        )));
    }
    let variant = variant(args.no_two_cycles);
    let coeffs = series_coefficients(args.name, args.order, variant)?;
    let text = format_coefficients(args.name, variant, &coeffs, args.format);
    match &args.out {
        Some(path) => fs::write(path, text).map_err(io_err(path)),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(io_err("<stdout>")),
    }
}

/// Prints the report and fails when any row disagrees.
pub fn report_outcome(report: &VerificationReport, stdout: &mut dyn Write) -> Result<(), CliError> {
    stdout
        .write_all(report.render().as_bytes())
        .map_err(io_err("<stdout>"))?;
    match report.failures().count() {
        0 => Ok(()),
        failed => Err(CliError::VerificationFailed { failed }),
    }
}

pub fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let report = verify::verify(args.n_max, variant(args.no_two_cycles))?;
    report_outcome(&report, stdout)
}

/// Writes `ctree-<n>-<k>.dot` for every representative; returns the count.
pub fn export_dot(n: usize, variant: VariantFlag, dir: &Path) -> Result<usize, CliError> {
    check_limit(n, variant)?;
    let census = Census::enumerate(n, variant)?;
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let width = census.len().to_string().len();
    for (k, g) in census.representatives().enumerate() {
        let name = format!("ctree_{n}_{:0width$}", k + 1);
        let path = dir.join(format!("{}.dot", name.replace('_', "-")));
        fs::write(&path, to_dot(&g, &name)).map_err(io_err(&path))?;
    }
    Ok(census.len())
}

pub fn cmd_export(args: &ExportArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let written = export_dot(args.n, variant(args.no_two_cycles), &args.out)?;
    writeln!(stdout, "wrote {written} files to {}", args.out.display()).map_err(io_err("<stdout>"))
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Series(args) => cmd_series(args, stdout),
        Command::Verify(args) => cmd_verify(args, stdout),
        Command::Export(args) => cmd_export(args, stdout),
    }
}
