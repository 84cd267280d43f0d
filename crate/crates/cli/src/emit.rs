//! CSV and JSON emission of attack rows.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use centra_core::resilience::{AttackRow, PhiSummary};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const ROW_HEADER: [&str; 6] = ["metric", "phi", "run", "giant_frac", "infected_frac", "elapsed_ms"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// `x` with 6 significant digits, trailing zeros dropped, like C's `%g`.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    trim_zeros(&format!("{x:.*}", (5 - exp) as usize)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Value as emitted, so JSON carries the same precision as CSV.
pub fn round_sig(x: f64) -> f64 {
    fmt_sig(x).parse().unwrap_or(x)
}

pub fn rounded(row: &AttackRow) -> AttackRow {
    AttackRow {
        metric: row.metric.clone(),
        phi: round_sig(row.phi),
        run: row.run,
        giant_frac: round_sig(row.giant_frac),
        infected_frac: row.infected_frac.map(round_sig),
        elapsed_ms: row.elapsed_ms.map(round_sig),
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(fmt_sig).unwrap_or_default()
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::input(format!("write failed: {e}"))
}

pub fn write_rows<W: Write>(rows: &[AttackRow], format: OutputFormat, out: W) -> CliResult<()> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(ROW_HEADER).map_err(csv_error)?;
            for r in rows {
                w.write_record([
                    r.metric.clone(),
                    fmt_sig(r.phi),
                    r.run.to_string(),
                    fmt_sig(r.giant_frac),
                    opt(r.infected_frac),
                    opt(r.elapsed_ms),
                ])
                .map_err(csv_error)?;
            }
            w.flush().map_err(|e| CliError::input(format!("write failed: {e}")))
        }
        OutputFormat::Json => {
            let rows: Vec<AttackRow> = rows.iter().map(rounded).collect();
            let mut out = io::BufWriter::new(out);
            serde_json::to_writer_pretty(&mut out, &rows).map_err(|e| CliError::input(format!("write failed: {e}")))?;
            writeln!(out).and_then(|_| out.flush()).map_err(|e| CliError::input(format!("write failed: {e}")))
        }
    }
}

/// Writes rows to `path`, or stdout when absent.
pub fn emit_results(rows: &[AttackRow], format: OutputFormat, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| CliError::input(format!("cannot create {}: {e}", p.display())))?;
            write_rows(rows, format, file)
        }
        None => write_rows(rows, format, io::stdout().lock()),
    }
}

pub fn read_json_rows(text: &str) -> CliResult<Vec<AttackRow>> {
    serde_json::from_str(text).map_err(|e| CliError::input(format!("invalid row JSON: {e}")))
}

/// Per-phi mean and sample standard deviation as CSV.
pub fn write_summary<W: Write>(metric: &str, summary: &[PhiSummary], out: W) -> CliResult<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    for s in summary {
        w.write_record([
            metric.to_string(),
            fmt_sig(s.phi),
            fmt_sig(s.giant_mean),
            fmt_sig(s.giant_std),
            opt(s.infected_mean),
            opt(s.infected_std),
        ])
        .map_err(csv_error)?;
    }
    w.flush().map_err(|e| CliError::input(format!("write failed: {e}")))
}

pub const SUMMARY_HEADER: &str = "metric,phi,giant_mean,giant_std,infected_mean,infected_std";
