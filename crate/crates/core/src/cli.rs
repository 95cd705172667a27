//! Rendering and command logic behind the `partition-bounds` binary.
//!
//! Everything here returns strings and exit codes so the binary stays a thin
//! argument parser and the output can be tested without spawning processes.

use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::frobenius::{dyson_rank, successive_ranks, to_frobenius};
use crate::genfunc::{count_f_gf, count_fprime_gf, count_rank_bounded, count_residue_avoiding};
use crate::graphical::{count_g, erdos_gallai_report, havel_hakimi_witness};
use crate::partitions::count_p;
use crate::{Count, Partition};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NOT_GRAPHICAL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Largest `n` accepted by `bounds`.
pub const MAX_TABLE_N: u32 = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct UsageError(pub String);

/// Output format for the bounds table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Markdown,
    Csv,
    Tsv,
}

/// One row of the bounds table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTableRow {
    pub n: u32,
    pub fprime: Count,
    pub g: Count,
    pub f: Count,
    pub p: Count,
}

impl CountTableRow {
    pub fn compute(n: u32) -> Self {
        Self {
            n,
            fprime: count_fprime_gf(n),
            g: count_g(n),
            f: count_f_gf(n),
            p: count_p(n),
        }
    }

    /// `f' ≤ g ≤ f ≤ p`.
    pub fn is_sandwiched(&self) -> bool {
        self.fprime <= self.g && self.g <= self.f && self.f <= self.p
    }

    fn cells(&self) -> [String; 5] {
        [
            self.n.to_string(),
            self.fprime.to_string(),
            self.g.to_string(),
            self.f.to_string(),
            self.p.to_string(),
        ]
    }
}

/// Rows for `n = step, 2·step, … ≤ max_n`, in order.
pub fn bounds_rows(max_n: u32, step: u32) -> Result<Vec<CountTableRow>, UsageError> {
    if step == 0 {
        return Err(UsageError("--step must be at least 1".into()));
    }
    if max_n == 0 || max_n > MAX_TABLE_N {
        return Err(UsageError(format!("--max-n must be in 1..={MAX_TABLE_N}")));
    }
    let ns: Vec<u32> = (1..)
        .map(|i| i * step)
        .take_while(|&n| n <= max_n)
        .collect();
    Ok(ns.into_par_iter().map(CountTableRow::compute).collect())
}

const HEADERS: [&str; 5] = ["n", "f'(n)", "g(n)*", "f(n)", "p(n)"];
const MACHINE_HEADERS: [&str; 5] = ["n", "fprime", "g", "f", "p"];
const STAR_FOOTNOTE: &str =
    "\\* g(n) is counted by testing every partition of n against the Erdős–Gallai criterion.";

pub fn render_table(rows: &[CountTableRow], format: Format) -> String {
    match format {
        Format::Csv => render_delimited(rows, ','),
        Format::Tsv => render_delimited(rows, '\t'),
        Format::Markdown => render_markdown(rows),
    }
}

fn render_delimited(rows: &[CountTableRow], sep: char) -> String {
    let mut out = String::new();
    let sep = sep.to_string();
    out.push_str(&MACHINE_HEADERS.join(&sep));
    out.push('\n');
    for row in rows {
        out.push_str(&row.cells().join(&sep));
        out.push('\n');
    }
    out
}

fn render_markdown(rows: &[CountTableRow]) -> String {
    let body: Vec<[String; 5]> = rows.iter().map(CountTableRow::cells).collect();
    let mut widths = HEADERS.map(|h| h.chars().count());
    for cells in &body {
        for (w, cell) in widths.iter_mut().zip(cells) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: &[&str]| {
        out.push('|');
        for (cell, &w) in cells.iter().zip(&widths) {
            let pad = w - cell.chars().count();
            let _ = write!(out, " {}{} |", " ".repeat(pad), cell);
        }
        out.push('\n');
    };
    line(&mut out, &HEADERS);
    out.push('|');
    for &w in &widths {
        let _ = write!(out, "{}:|", "-".repeat(w + 1));
    }
    out.push('\n');
    for cells in &body {
        let refs: Vec<&str> = cells.iter().map(String::as_str).collect();
        line(&mut out, &refs);
    }
    out.push('\n');
    out.push_str(STAR_FOOTNOTE);
    out.push('\n');
    out
}

/// Parses a comma-separated list of nonnegative integers in any order.
///
/// A blank argument is the empty partition.
pub fn parse_parts(input: &str) -> Result<Partition, UsageError> {
    if input.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let values = input
        .split(',')
        .map(|field| {
            field
                .trim()
                .parse::<i64>()
                .map_err(|_| UsageError(format!("not an integer: {:?}", field.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::from_raw(&values).map_err(|e| UsageError(e.to_string()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Text written by `check` and the matching exit status.
pub fn check_report(p: &Partition) -> (String, u8) {
    let symbol = to_frobenius(p);
    let ranks = successive_ranks(&symbol);
    let report = erdos_gallai_report(p);
    let slack: Vec<String> = report.slack.iter().map(i64::to_string).collect();

    let mut out = String::new();
    let _ = writeln!(out, "partition: {p}");
    let _ = writeln!(out, "weight: {}", p.weight());
    let _ = writeln!(out, "frobenius symbol: {symbol}");
    let _ = writeln!(out, "successive ranks: {ranks}");
    match dyson_rank(p) {
        Ok(r) => {
            let _ = writeln!(out, "dyson rank: {r}");
        }
        Err(_) => out.push_str("dyson rank: undefined\n"),
    }
    let _ = writeln!(out, "erdos-gallai slack: ({})", slack.join(","));
    let _ = writeln!(out, "graphical: {}", yes_no(report.graphical));
    if !report.parity_ok {
        out.push_str("reason: odd weight\n");
    } else if let Some((m, s)) = report.first_violation() {
        let _ = writeln!(out, "reason: erdos-gallai slack {s} at m={m}");
    }
    let _ = writeln!(
        out,
        "f condition (k + sum a <= sum b): {}",
        yes_no(symbol.column_condition())
    );
    let _ = writeln!(
        out,
        "all successive ranks <= -1: {}",
        yes_no(ranks.all_at_most(-1))
    );

    let code = if report.graphical {
        EXIT_OK
    } else {
        EXIT_NOT_GRAPHICAL
    };
    (out, code)
}

/// Text written by `witness` and the matching exit status.
pub fn witness_report(p: &Partition) -> (String, u8) {
    match havel_hakimi_witness(p) {
        Some(w) => {
            let mut out = String::new();
            for (u, v) in &w.edges {
                let _ = writeln!(out, "{u} {v}");
            }
            (out, EXIT_OK)
        }
        None => ("NOT GRAPHICAL\n".to_string(), EXIT_NOT_GRAPHICAL),
    }
}

/// Which counter `count` runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Counter {
    #[value(name = "p")]
    P,
    #[value(name = "g")]
    G,
    #[value(name = "f")]
    F,
    #[value(name = "fprime")]
    FPrime,
    /// Partitions avoiding parts ≡ 0, ±r (mod M).
    #[value(name = "A")]
    A,
    /// Partitions with every successive rank in [2 - r, M - r - 2].
    #[value(name = "B")]
    B,
}

pub fn run_count(
    which: Counter,
    n: u32,
    modulus: Option<u32>,
    residue: Option<u32>,
) -> Result<Count, UsageError> {
    let needs_extra = matches!(which, Counter::A | Counter::B);
    match (needs_extra, modulus, residue) {
        (false, None, None) => {}
        (false, _, _) => {
            return Err(UsageError(
                "--modulus/--residue only apply to A and B".into(),
            ))
        }
        (true, Some(0), Some(_)) => return Err(UsageError("--modulus must be positive".into())),
        (true, Some(_), Some(_)) => {}
        (true, _, _) => {
            return Err(UsageError(
                "A and B need both --modulus and --residue".into(),
            ))
        }
    }
    Ok(match which {
        Counter::P => count_p(n),
        Counter::G => count_g(n),
        Counter::F => count_f_gf(n),
        Counter::FPrime => count_fprime_gf(n),
        Counter::A => count_residue_avoiding(modulus.unwrap(), residue.unwrap(), n),
        Counter::B => count_rank_bounded(modulus.unwrap(), residue.unwrap(), n),
    })
}
