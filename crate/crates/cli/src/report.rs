//! Report rows and CSV/JSON emission.
//!
//! Column order is fixed: `relation_id,dim,seed,lhs,rhs,slack,saturated,
//! wall_time_micros`. Floats are serialized with 17 significant digits, so a
//! report round-trips exactly and reruns with the same config are
//! byte-identical apart from the timing column.

use std::io::Write;

use serde::Serialize;

pub const CSV_HEADER: &str = "relation_id,dim,seed,lhs,rhs,slack,saturated,wall_time_micros";

/// How a row is judged by the violation scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    /// `slack ≥ -slack_tol` must hold.
    Inequality,
    /// `lhs` is an error bound and `rhs` the measured residual; `slack ≥ 0`
    /// must hold.
    IdentityBound,
    /// Never scanned (demo values, plateau statistics).
    Informational,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub relation_id: String,
    pub dim: usize,
    pub seed: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub saturated: bool,
    pub wall_time_micros: u64,
    #[serde(skip)]
    pub kind: RowKind,
}

impl ReportRow {
    pub fn new(
        relation_id: impl Into<String>,
        dim: usize,
        seed: u64,
        lhs: f64,
        rhs: f64,
        saturated: bool,
        kind: RowKind,
    ) -> Self {
        Self {
            relation_id: relation_id.into(),
            dim,
            seed,
            lhs,
            rhs,
            slack: lhs - rhs,
            saturated,
            wall_time_micros: 0,
            kind,
        }
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.relation_id,
            self.dim,
            self.seed,
            fmt_float(self.lhs),
            fmt_float(self.rhs),
            fmt_float(self.slack),
            self.saturated,
            self.wall_time_micros
        )
    }
}

/// 17 significant digits, enough for exact f64 round trips.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    rows: &'a [ReportRow],
}

pub fn write_report(out: &mut dyn Write, rows: &[ReportRow], format: Format) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for row in rows {
                writeln!(out, "{}", row.csv_line())?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &JsonReport { rows })?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// A violating row plus the reason it failed the scan.
#[derive(Debug, Clone)]
pub struct Violation {
    pub row: ReportRow,
    pub reason: String,
}

/// Scans rows for violations: non-finite fields, slack inconsistent with
/// `lhs - rhs`, inequality slack below `-slack_tol`, or an identity residual
/// above its bound.
pub fn scan_violations(rows: &[ReportRow], slack_tol: f64) -> Vec<Violation> {
    let mut out = Vec::new();
    for row in rows {
        let mut push = |reason: String| {
            out.push(Violation {
                row: row.clone(),
                reason,
            })
        };
        if !row.lhs.is_finite() || !row.rhs.is_finite() || !row.slack.is_finite() {
            push("non-finite field".into());
            continue;
        }
        // slack is computed as lhs - rhs at construction, so any mismatch
        // means the row was tampered with (the self-test fault injector).
        if row.slack != row.lhs - row.rhs {
            push(format!(
                "slack {} inconsistent with lhs - rhs = {}",
                fmt_float(row.slack),
                fmt_float(row.lhs - row.rhs)
            ));
            continue;
        }
        match row.kind {
            RowKind::Inequality => {
                if row.slack < -slack_tol {
                    push(format!("slack {} below -{slack_tol:e}", fmt_float(row.slack)));
                }
            }
            RowKind::IdentityBound => {
                if row.slack < 0.0 {
                    push(format!(
                        "identity residual {} above bound {}",
                        fmt_float(row.rhs),
                        fmt_float(row.lhs)
                    ));
                }
            }
            RowKind::Informational => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_has_17_significant_digits() {
        assert_eq!(fmt_float(0.5), "5.0000000000000000e-1");
        assert_eq!(fmt_float(1.0), "1.0000000000000000e0");
        let x = 0.1 + 0.2;
        let parsed: f64 = fmt_float(x).parse().unwrap();
        assert_eq!(parsed, x);
    }

    #[test]
    fn scan_catches_negative_inequality_slack() {
        let row = ReportRow::new("test", 2, 0, 1.0, 1.0 + 1e-6, false, RowKind::Inequality);
        let violations = scan_violations(&[row], 1e-9);
        assert_eq!(violations.len(), 1);
    }

    #[test]
    fn scan_catches_tampered_rhs() {
        let mut row = ReportRow::new("test", 2, 0, 2.0, 1.0, false, RowKind::Inequality);
        row.rhs = -row.rhs;
        let violations = scan_violations(&[row], 1e-9);
        assert_eq!(violations.len(), 1);
        assert!(violations[0].reason.contains("inconsistent"));
    }

    #[test]
    fn informational_rows_are_never_violations() {
        let row = ReportRow::new("gain", 4, 0, 0.0, 5.0, false, RowKind::Informational);
        assert!(scan_violations(&[row], 1e-9).is_empty());
    }
}
