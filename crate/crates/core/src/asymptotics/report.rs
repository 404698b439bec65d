//! CSV and JSON emission for quotient and defect series.

use std::io::{self, Write};

use serde::Serialize;

use super::LogTable;
use crate::error::Result;

/// One row of the quotient series.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuotientRow {
    pub n: usize,
    #[serde(rename = "logP")]
    pub log_p: f64,
    #[serde(rename = "logBound")]
    pub log_bound: f64,
    pub quotient: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DefectRow {
    pub s: u64,
    pub defect: f64,
}

/// Rows for `n_min ..= n_max`; `n_min` is raised to 2.
pub fn quotient_series(table: &LogTable, n_min: usize, n_max: usize) -> Result<Vec<QuotientRow>> {
    (n_min.max(2)..=n_max)
        .map(|n| {
            Ok(QuotientRow {
                n,
                log_p: table.log_p(n).unwrap_or(f64::NAN),
                log_bound: table.log_bound(n).unwrap_or(f64::NAN),
                quotient: table.quotient(n)?,
            })
        })
        .collect()
}

pub fn defect_series(pairs: &[(u64, f64)]) -> Vec<DefectRow> {
    pairs
        .iter()
        .map(|&(s, defect)| DefectRow { s, defect })
        .collect()
}

/// 17 significant digits, round-trip exact.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_quotient_csv<W: Write>(mut w: W, rows: &[QuotientRow]) -> io::Result<()> {
    writeln!(w, "n,logP,logBound,quotient")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{}",
            r.n,
            fmt_f64(r.log_p),
            fmt_f64(r.log_bound),
            fmt_f64(r.quotient)
        )?;
    }
    Ok(())
}

pub fn write_quotient_json<W: Write>(w: W, rows: &[QuotientRow]) -> io::Result<()> {
    serde_json::to_writer_pretty(w, rows).map_err(io::Error::other)
}

pub fn write_defect_csv<W: Write>(mut w: W, rows: &[DefectRow]) -> io::Result<()> {
    writeln!(w, "s,defect")?;
    for r in rows {
        writeln!(w, "{},{}", r.s, fmt_f64(r.defect))?;
    }
    Ok(())
}

pub fn write_defect_json<W: Write>(w: W, rows: &[DefectRow]) -> io::Result<()> {
    serde_json::to_writer_pretty(w, rows).map_err(io::Error::other)
}
