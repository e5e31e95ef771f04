//! The `minperim` command-line interface.
//!
//! Every command writes plain text to the given writer and returns the
//! process exit status; only `enumerate` touches the filesystem.

use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::KnownValuesCorpus;
use crate::counting::{classify, count_extremal, max_common_edges, min_perimeter, shared_tables};
use crate::oracle::{check_identities, extremal_subset, FreeCorpus, IdentityReport, OracleError, DEFAULT_ORACLE_CAP};
use crate::shapes::{enumerate_extremal, render, RenderFormat, ShapeError, DEFAULT_SHAPE_CAP};

#[derive(Debug, Parser)]
#[command(name = "minperim", version, about = "Count and draw polyominoes of minimum perimeter")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print `n p(n) B(n) case e(n)` on one line.
    Compute { n: u64 },
    /// Print p, B and e over a range of orders.
    Table {
        from: u64,
        to: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Recompute the published values of e(n) and report mismatches.
    Verify,
    /// Write one rendering per extremal polyomino of order n.
    Enumerate {
        n: u64,
        #[arg(long, value_enum, default_value_t = ShapeFormat::Ascii)]
        format: ShapeFormat,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SHAPE_CAP)]
        cap: u64,
    },
    /// Compare the formulas with brute-force enumeration up to NMAX.
    Oracle {
        n_max: u64,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeFormat {
    Ascii,
    Svg,
}

impl From<ShapeFormat> for RenderFormat {
    fn from(f: ShapeFormat) -> Self {
        match f {
            ShapeFormat::Ascii => RenderFormat::Ascii,
            ShapeFormat::Svg => RenderFormat::Svg,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Runs one command, returning the exit status for a completed run.
pub fn run(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Compute { n } => {
            writeln!(out, "{}", compute_line(*n)?)?;
            Ok(0)
        }
        Command::Table { from, to, format } => {
            out.write_all(table(*from, *to, *format)?.as_bytes())?;
            Ok(0)
        }
        Command::Verify => {
            let report = verify(&KnownValuesCorpus::published());
            writeln!(out, "{report}")?;
            Ok(if report.all_ok() { 0 } else { 1 })
        }
        Command::Enumerate { n, format, out_dir, cap } => {
            let written = enumerate_to_dir(*n, (*format).into(), out_dir, *cap)?;
            writeln!(out, "{}", written.len())?;
            Ok(0)
        }
        Command::Oracle { n_max, cap } => {
            let report = oracle(*n_max, *cap)?;
            write!(out, "{report}")?;
            Ok(if report.all_ok() { 0 } else { 1 })
        }
    }
}

fn require_positive(n: u64) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("order must be at least 1".into()));
    }
    Ok(())
}

/// `n p B case e`, space separated.
pub fn compute_line(n: u64) -> Result<String, CliError> {
    require_positive(n)?;
    let cls = classify(n);
    Ok(format!("{n} {} {} {} {}", min_perimeter(n), max_common_edges(n), cls.case, count_extremal(n)))
}

/// CSV with header `n,p,B,e`, or b-file lines `n e(n)`.
pub fn table(from: u64, to: u64, format: TableFormat) -> Result<String, CliError> {
    if from == 0 || from > to {
        return Err(CliError::Usage(format!("invalid range {from}..{to}; need 1 <= FROM <= TO")));
    }
    let tables = shared_tables(to);
    let rows: Vec<String> = (from..=to)
        .into_par_iter()
        .map(|n| {
            let e = tables.count(n);
            match format {
                TableFormat::Csv => format!("{n},{},{},{e}\n", min_perimeter(n), max_common_edges(n)),
                TableFormat::Bfile => format!("{n} {e}\n"),
            }
        })
        .collect();
    let mut text = String::new();
    if format == TableFormat::Csv {
        text.push_str("n,p,B,e\n");
    }
    text.extend(rows);
    Ok(text)
}

/// Outcome of checking one list of published values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListCheck {
    pub name: &'static str,
    pub total: usize,
    pub matched: usize,
    /// `(n, published, computed)` at the first disagreement.
    pub first_mismatch: Option<(u64, u64, BigUint)>,
}

impl ListCheck {
    fn run(name: &'static str, values: &[u64], order_of: impl Fn(u64) -> u64) -> Self {
        let max_n = values.len().max(1) as u64;
        let tables = shared_tables(order_of(max_n));
        let mut matched = 0;
        let mut first_mismatch = None;
        for (i, &expected) in values.iter().enumerate() {
            let n = order_of(i as u64 + 1);
            let got = tables.count(n);
            if got == BigUint::from(expected) {
                matched += 1;
            } else if first_mismatch.is_none() {
                first_mismatch = Some((n, expected, got));
            }
        }
        ListCheck { name, total: values.len(), matched, first_mismatch }
    }

    pub fn ok(&self) -> bool {
        self.matched == self.total
    }
}

impl fmt::Display for ListCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{}", self.name, self.matched, self.total)?;
        match &self.first_mismatch {
            None => write!(f, " OK"),
            Some((n, expected, got)) => write!(f, " FAIL (first mismatch at n={n}: expected {expected}, computed {got})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub lists: Vec<ListCheck>,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.lists.iter().all(ListCheck::ok)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lists.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Recomputes every entry of `corpus` from the closed form.
pub fn verify(corpus: &KnownValuesCorpus) -> VerifyReport {
    VerifyReport {
        lists: vec![
            ListCheck::run("e_list", &corpus.e_list, |n| n),
            ListCheck::run("e_sq_plus_1", &corpus.e_sq_plus_1, |s| s * s + 1),
            ListCheck::run("e_sq_s_1", &corpus.e_sq_s_1, |s| s * s + s + 1),
        ],
    }
}

/// Writes `poly_<n>_<index>.<ext>` for each extremal polyomino, numbered
/// from 1 in canonical order, and returns the paths.
pub fn enumerate_to_dir(n: u64, format: RenderFormat, dir: &Path, cap: u64) -> Result<Vec<PathBuf>, CliError> {
    require_positive(n)?;
    let shapes = enumerate_extremal(n, cap)?;
    std::fs::create_dir_all(dir)?;
    let mut paths = Vec::with_capacity(shapes.len());
    for (i, p) in shapes.iter().enumerate() {
        let path = dir.join(format!("poly_{n}_{}.{}", i + 1, format.extension()));
        let mut body = render(p, format);
        if !body.ends_with('\n') {
            body.push('\n');
        }
        std::fs::write(&path, body)?;
        paths.push(path);
    }
    Ok(paths)
}

/// Formula against brute force for one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRow {
    pub n: u64,
    pub perimeter: (u64, u64),
    pub common_edges: (u64, u64),
    pub count: (BigUint, BigUint),
}

impl OracleRow {
    pub fn agrees(&self) -> bool {
        self.perimeter.0 == self.perimeter.1
            && self.common_edges.0 == self.common_edges.1
            && self.count.0 == self.count.1
    }
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub rows: Vec<OracleRow>,
    pub identities: IdentityReport,
}

impl OracleReport {
    /// Rows agree and the boundary identities hold. Degree-balance failures
    /// on walks that revisit a square are reported but do not count.
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(OracleRow::agrees)
            && self.identities.degree_balance_holds_on_simple_walks()
            && self.identities.edge_identity_holds()
            && self.identities.area_bound_holds()
            && self.identities.extremal_cycle_holds()
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok { "OK" } else { "FAIL" }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n p p_brute B B_brute e e_brute status")?;
        for r in &self.rows {
            writeln!(
                f,
                "{} {} {} {} {} {} {} {}",
                r.n,
                r.perimeter.0,
                r.perimeter.1,
                r.common_edges.0,
                r.common_edges.1,
                r.count.0,
                r.count.1,
                verdict(r.agrees())
            )?;
        }
        let l = &self.identities;
        writeln!(f, "boundary walks examined (hole-free, no degree-1 square): {}", l.examined)?;
        writeln!(
            f,
            "h2 = h4 + 4: {} failures, {} on walks without repeated squares {}",
            l.degree_balance_failures.len(),
            l.degree_balance_failures_simple,
            verdict(l.degree_balance_holds_on_simple_walks())
        )?;
        writeln!(f, "m = 2n - |H|/2 - 2: {} failures {}", l.edge_identity_failures, verdict(l.edge_identity_holds()))?;
        for row in &l.area_bounds {
            let seen = row.corpus_max.map_or_else(|| "-".to_string(), |m| m.to_string());
            writeln!(
                f,
                "max order at |H| = {}: bound {}, corpus {} {}",
                row.cycle_len,
                row.bound,
                seen,
                verdict(row.holds(l.n_max))
            )?;
        }
        writeln!(
            f,
            "extremal |H| = 2 ceil(2 sqrt(n)) - 4: {} shapes, {} failures {}",
            l.extremal_examined,
            l.extremal_cycle_failures,
            verdict(l.extremal_cycle_holds())
        )?;
        writeln!(f, "overall {}", verdict(self.all_ok()))
    }
}

pub fn oracle(n_max: u64, cap: u64) -> Result<OracleReport, CliError> {
    require_positive(n_max)?;
    let corpus = FreeCorpus::grow(n_max, cap)?;
    let rows = (1..=n_max)
        .map(|n| {
            let level = corpus.level(n);
            let (p_brute, winners) = extremal_subset(level);
            let b_brute = level.iter().map(|p| p.common_edges()).max().unwrap_or(0) as u64;
            OracleRow {
                n,
                perimeter: (min_perimeter(n), p_brute),
                common_edges: (max_common_edges(n), b_brute),
                count: (count_extremal(n), BigUint::from(winners.len())),
            }
        })
        .collect();
    Ok(OracleReport { rows, identities: check_identities(&corpus, n_max) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compute_lines() {
        assert_eq!(compute_line(7).unwrap(), "7 12 8 IV 4");
        assert_eq!(compute_line(1).unwrap(), "1 4 0 I 1");
        assert!(compute_line(50).unwrap().ends_with(" 182"));
        assert!(matches!(compute_line(0), Err(CliError::Usage(_))));
    }

    #[test]
    fn tables() {
        assert_eq!(table(1, 3, TableFormat::Bfile).unwrap(), "1 1\n2 1\n3 2\n");
        assert_eq!(table(1, 1, TableFormat::Csv).unwrap(), "n,p,B,e\n1,4,0,1\n");
        let big = table(1, 100, TableFormat::Csv).unwrap();
        assert_eq!(big.lines().count(), 101);
        assert_eq!(big.lines().nth(13).unwrap(), "13,16,18,11");
        assert!(matches!(table(5, 4, TableFormat::Csv), Err(CliError::Usage(_))));
        assert!(matches!(table(0, 4, TableFormat::Csv), Err(CliError::Usage(_))));
    }

    #[test]
    fn verify_published() {
        let report = verify(&KnownValuesCorpus::published());
        assert!(report.all_ok());
        assert_eq!(report.to_string(), "e_list: 144/144 OK; e_sq_plus_1: 49/49 OK; e_sq_s_1: 49/49 OK");
    }

    #[test]
    fn verify_reports_injected_fault() {
        let mut corpus = KnownValuesCorpus::published();
        corpus.e_list[12] = 12;
        corpus.e_sq_s_1[3] += 1;
        let report = verify(&corpus);
        assert!(!report.all_ok());
        assert_eq!(report.lists[0].first_mismatch, Some((13, 12, BigUint::from(11u32))));
        assert_eq!(report.lists[0].matched, 143);
        assert!(report.lists[1].ok());
        assert_eq!(report.lists[2].first_mismatch.as_ref().map(|m| m.0), Some(21));
        assert!(report.to_string().contains("e_list: 143/144 FAIL (first mismatch at n=13: expected 12, computed 11)"));
    }

    #[test]
    fn verify_empty_corpus_passes_vacuously() {
        let report = verify(&KnownValuesCorpus::empty());
        assert!(report.all_ok());
        assert_eq!(report.to_string(), "e_list: 0/0 OK; e_sq_plus_1: 0/0 OK; e_sq_s_1: 0/0 OK");
    }

    #[test]
    fn enumerate_writes_files() {
        let dir = tempfile::tempdir().unwrap();
        for (n, expected) in [(3u64, 2usize), (9, 1), (10, 6)] {
            let paths = enumerate_to_dir(n, RenderFormat::Ascii, dir.path(), DEFAULT_SHAPE_CAP).unwrap();
            assert_eq!(paths.len(), expected);
            assert!(paths[0].ends_with(format!("poly_{n}_1.txt")));
        }
        assert_eq!(std::fs::read_to_string(dir.path().join("poly_9_1.txt")).unwrap(), "###\n###\n###\n");
        let svg = enumerate_to_dir(3, RenderFormat::Svg, dir.path(), DEFAULT_SHAPE_CAP).unwrap();
        assert!(svg.iter().all(|p| p.extension().unwrap() == "svg"));
        assert!(matches!(
            enumerate_to_dir(20, RenderFormat::Ascii, dir.path(), 10),
            Err(CliError::Shape(ShapeError::CapExceeded { n: 20, cap: 10 }))
        ));
    }

    #[test]
    fn oracle_small_ranges() {
        let report = oracle(6, DEFAULT_ORACLE_CAP).unwrap();
        assert!(report.rows.iter().all(OracleRow::agrees));
        assert!(report.all_ok());
        let one = oracle(1, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(one.rows.len(), 1);
        assert!(one.all_ok());
        assert!(matches!(oracle(13, 12), Err(CliError::Oracle(OracleError::CapExceeded { .. }))));
    }
}
