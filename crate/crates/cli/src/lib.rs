//! Command implementations behind the `udebruijn` binary.
//!
//! Every command writes to a caller-supplied sink and returns the process
//! exit code, so the binary stays a thin wrapper and tests can drive the
//! commands directly.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use udebruijn::eulerize::{duplicate_bound, ratio, EulerizationRecord};
use udebruijn::graph::{build_unoriented_with_cap, ov_formula, DEFAULT_EDGE_CAP};
use udebruijn::oracle::{min_cover_length, SearchRecord, DEFAULT_BUDGET};
use udebruijn::sequence::{generate_with_cap, optimal_length, verify};
use udebruijn::{optimal_exists, Error, Word};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NOT_COVER: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "udebruijn",
    version,
    about = "Unoriented de Bruijn sequences: generate, verify, tabulate, export, search"
)]
#[command(after_help = "Exit codes: 0 success, 1 not a cover, 2 invalid input or I/O error, \
3 size cap or search budget exceeded, 4 internal error.\nOutput is deterministic.")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a covering word through an alternating Eulerian path
    Generate(GenerateArgs),
    /// Check whether a word covers every reflected pair of length-n words
    Verify(VerifyArgs),
    /// Tabulate optimal length, odd vertices, duplicate bound and ratio
    Stats(StatsArgs),
    /// Write the unoriented de Bruijn graph in DOT format
    ExportDot(ExportArgs),
    /// Exhaustively search for the shortest covering word
    Search(SearchArgs),
}

#[derive(Debug, Args)]
pub struct Size {
    /// Alphabet size
    #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    /// Subword length
    #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub size: Size,
    /// Emit JSON
    #[arg(long)]
    pub json: bool,
    /// Also print the path as a chain of subwords
    #[arg(long)]
    pub path: bool,
    /// Refuse graphs with more than this many edge words
    #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
    pub cap: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Word to check, one character per symbol (0-9, a-z)
    pub word: String,
    #[command(flatten)]
    pub size: Size,
    /// Emit JSON
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long, default_value_t = 2)]
    pub kmin: u64,
    #[arg(long, default_value_t = 10)]
    pub kmax: u64,
    #[arg(long, default_value_t = 2)]
    pub nmin: u64,
    #[arg(long, default_value_t = 10)]
    pub nmax: u64,
    /// Emit CSV with columns k,n,l,ov,bound_extra,r,optimal
    #[arg(long, conflicts_with = "json")]
    pub csv: bool,
    /// Emit JSON
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub size: Size,
    /// Output file; standard output when omitted or "-"
    pub path: Option<PathBuf>,
    /// Refuse graphs with more than this many edge words
    #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
    pub cap: u64,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub size: Size,
    /// Maximum number of search nodes
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Emit JSON
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::EmptyAlphabet
            | Error::InvalidSymbol { .. }
            | Error::InvalidCharacter(_)
            | Error::AlphabetTooLarge(_)
            | Error::InvalidParameters(_)
            | Error::UnknownVertex(_)
            | Error::UnknownEdge(_) => EXIT_INVALID,
            Error::Overflow(_) | Error::SizeCap { .. } => EXIT_RESOURCE,
            _ => EXIT_INTERNAL,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError { code: EXIT_INVALID, message: e.to_string() }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError { code: EXIT_INTERNAL, message: e.to_string() }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> CliError {
        CliError { code: EXIT_INVALID, message: e.to_string() }
    }
}

pub type CliResult = Result<u8, CliError>;

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::Generate(a) => cmd_generate(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Stats(a) => cmd_stats(&a, out),
        Command::ExportDot(a) => cmd_export_dot(&a, out),
        Command::Search(a) => cmd_search(&a, out),
    }
}

fn length(n: u64) -> Result<usize, CliError> {
    usize::try_from(n).map_err(|_| CliError { code: EXIT_INVALID, message: format!("n = {n} is too large") })
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerateRecord {
    pub k: u32,
    pub n: usize,
    pub sequence: String,
    pub length: usize,
    pub optimal_length: u128,
    pub optimal: bool,
    pub duplicates: usize,
    pub eulerization: Option<EulerizationRecord>,
    pub path: Option<Vec<String>>,
}

pub fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> CliResult {
    let (k, n) = (a.size.k, length(a.size.n)?);
    let g = generate_with_cap(k, n, a.cap)?;
    let record = GenerateRecord {
        k,
        n,
        sequence: g.word.to_string(),
        length: g.word.len(),
        optimal_length: optimal_length(u64::from(k), n)?,
        optimal: g.optimal,
        duplicates: g.duplicates(),
        eulerization: g.eulerization.as_ref().map(|e| e.to_record()),
        path: g.path.as_ref().map(|p| p.to_strings()),
    };
    if a.json {
        write_json(out, &record)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{}", record.sequence)?;
    if record.optimal {
        writeln!(out, "length {}, optimal", record.length)?;
    } else {
        writeln!(out, "length {}, not optimal (optimal length {})", record.length, record.optimal_length)?;
    }
    if let Some(e) = &g.eulerization {
        if e.used() > 0 {
            let listed: Vec<String> = e.duplicates.iter().map(|d| format!("{} as {}", d.edge, d.word)).collect();
            writeln!(out, "duplicated {} of at most {} edges: {}", e.used(), e.bound, listed.join(", "))?;
        }
    }
    if a.path {
        if let Some(path) = &record.path {
            writeln!(out, "{}", path.join(" → "))?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let (k, n) = (a.size.k, length(a.size.n)?);
    let word = Word::parse(&a.word, k)?;
    let report = verify(&word, k, n)?;
    let code = if report.is_cover { EXIT_OK } else { EXIT_NOT_COVER };
    if a.json {
        write_json(out, &report.to_record())?;
        return Ok(code);
    }
    let join = |classes: &[udebruijn::PairClass]| classes.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    if !report.is_cover {
        writeln!(out, "not a cover (length {})", report.length)?;
        writeln!(out, "missing {}", join(&report.missing))?;
    } else if report.is_optimal {
        writeln!(out, "cover, optimal (length {})", report.length)?;
    } else {
        let l = optimal_length(u64::from(k), n)?;
        writeln!(out, "cover, not optimal (length {} > {l})", report.length)?;
    }
    if !report.duplicated.is_empty() {
        writeln!(out, "duplicated {}", join(&report.duplicated))?;
    }
    Ok(code)
}

/// One row of the statistics table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRow {
    pub k: u64,
    pub n: usize,
    pub l: u128,
    pub ov: u128,
    pub bound_extra: u128,
    /// Exact ratio, as `p/q` or an integer.
    pub r: String,
    pub optimal: bool,
}

pub fn stats_row(k: u64, n: usize) -> Result<StatsRow, CliError> {
    Ok(StatsRow {
        k,
        n,
        l: optimal_length(k, n)?,
        ov: ov_formula(k, n)?,
        bound_extra: duplicate_bound(k, n)?,
        r: ratio(k, n)?.to_string(),
        optimal: optimal_exists(k, n as u64),
    })
}

/// Parses the `r` column back into an exact ratio.
pub fn parse_ratio(text: &str) -> Option<Ratio<u128>> {
    match text.split_once('/') {
        Some((p, q)) => {
            let (p, q): (u128, u128) = (p.parse().ok()?, q.parse().ok()?);
            (q != 0).then(|| Ratio::new(p, q))
        }
        None => text.parse().ok().map(Ratio::from_integer),
    }
}

pub fn stats_table(kmin: u64, kmax: u64, nmin: u64, nmax: u64) -> Result<Vec<StatsRow>, CliError> {
    if kmin < 2 || nmin < 2 {
        return Err(CliError { code: EXIT_INVALID, message: "stats needs k >= 2 and n >= 2".into() });
    }
    let mut rows = Vec::new();
    for k in kmin..=kmax {
        for n in nmin..=nmax {
            rows.push(stats_row(k, length(n)?)?);
        }
    }
    Ok(rows)
}

pub fn cmd_stats(a: &StatsArgs, out: &mut dyn Write) -> CliResult {
    let rows = stats_table(a.kmin, a.kmax, a.nmin, a.nmax)?;
    if a.json {
        write_json(out, &rows)?;
    } else if a.csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        for row in &rows {
            w.serialize(row)?;
        }
        w.flush()?;
    } else {
        writeln!(out, "{:>3} {:>3} {:>14} {:>10} {:>10} {:>16} {:>8}", "k", "n", "l", "ov", "extra", "r", "optimal")?;
        for row in &rows {
            writeln!(
                out,
                "{:>3} {:>3} {:>14} {:>10} {:>10} {:>16} {:>8}",
                row.k, row.n, row.l, row.ov, row.bound_extra, row.r, row.optimal
            )?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_export_dot(a: &ExportArgs, out: &mut dyn Write) -> CliResult {
    let g = build_unoriented_with_cap(a.size.k, length(a.size.n)?, a.cap)?;
    let dot = g.to_dot();
    match &a.path {
        Some(path) if path.as_os_str() != "-" => {
            fs::write(path, dot).map_err(|e| CliError {
                code: EXIT_INVALID,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            writeln!(out, "wrote {} vertices and {} edges to {}", g.vertex_count(), g.edge_count(), path.display())?;
        }
        _ => out.write_all(dot.as_bytes())?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_search(a: &SearchArgs, out: &mut dyn Write) -> CliResult {
    let r = min_cover_length(a.size.k, length(a.size.n)?, a.budget)?;
    let code = if r.exhaustive { EXIT_OK } else { EXIT_RESOURCE };
    if a.json {
        let record: SearchRecord = r.to_record();
        write_json(out, &record)?;
        return Ok(code);
    }
    match (&r.min_length, &r.witness) {
        (Some(len), Some(w)) => {
            writeln!(out, "min length {len}, witness {w}, exhaustive (floor {}, {} nodes)", r.floor, r.nodes)?
        }
        _ => writeln!(
            out,
            "inconclusive: no cover shorter than {} (floor {}), budget of {} nodes exhausted",
            r.refuted_below, r.floor, a.budget
        )?,
    }
    Ok(code)
}
