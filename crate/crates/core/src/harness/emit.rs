//! Report formats.
//!
//! The machine format is one JSON object per line. Claim lines carry the
//! fields `entry`, `claim`, `predicate`, `expected`, `computed`, `witness`,
//! `algebra_relative`, `passed`, `note` (omitted when empty) and
//! `duration_ms`, in that order; each report ends with a summary line.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{ClaimOutcome, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
enum Line {
    Claim {
        entry: String,
        #[serde(flatten)]
        outcome: ClaimOutcome,
    },
    Summary {
        entry: String,
        passed: usize,
        failed: usize,
        status: String,
    },
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Text => text(report),
        Format::Machine => machine(report),
    }
}

pub fn emit_reports(reports: &[Report], format: Format) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&emit_report(r, format));
    }
    if format == Format::Text && reports.len() > 1 {
        let failed = reports.iter().filter(|r| !r.passed()).count();
        let _ = writeln!(out, "{} reports, {failed} failing", reports.len());
    }
    out
}

fn machine(report: &Report) -> String {
    let mut out = String::new();
    for o in &report.outcomes {
        let line = Line::Claim {
            entry: report.entry.clone(),
            outcome: o.clone(),
        };
        out.push_str(&serde_json::to_string(&line).expect("plain data serializes"));
        out.push('\n');
    }
    let s = report.summary();
    let line = Line::Summary {
        entry: report.entry.clone(),
        passed: s.passed,
        failed: s.failed,
        status: s.status().to_string(),
    };
    out.push_str(&serde_json::to_string(&line).expect("plain data serializes"));
    out.push('\n');
    out
}

fn text(report: &Report) -> String {
    let s = report.summary();
    let mut out = format!(
        "{}: {} ({} passed, {} failed)\n",
        report.entry,
        s.status(),
        s.passed,
        s.failed
    );
    for o in report.failures() {
        text_line(&mut out, "FAIL", o);
    }
    for o in report.outcomes.iter().filter(|o| o.passed) {
        text_line(&mut out, "ok  ", o);
    }
    out
}

fn text_line(out: &mut String, mark: &str, o: &ClaimOutcome) {
    let _ = write!(
        out,
        "  {mark} {} [{}] expected {}, computed {}",
        o.claim, o.predicate, o.expected, o.computed
    );
    if o.algebra_relative {
        out.push_str(" (relative to the atom algebra)");
    }
    if let Some(ms) = o.duration_ms {
        let _ = write!(out, " in {ms} ms");
    }
    out.push('\n');
    if let Some(w) = &o.witness {
        let _ = writeln!(out, "       witness: {w}");
    }
    if !o.note.is_empty() {
        let _ = writeln!(out, "       note: {}", o.note);
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("line {line}: summary for `{entry}` does not match its claims")]
    Summary { line: usize, entry: String },
    #[error("claims for `{0}` are not closed by a summary line")]
    Unterminated(String),
}

/// Reads back the machine format.
pub fn parse_machine(text: &str) -> Result<Vec<Report>, ParseError> {
    let mut reports = Vec::new();
    let mut current: Option<Report> = None;
    for (k, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let line = k + 1;
        match serde_json::from_str(raw).map_err(|source| ParseError::Json { line, source })? {
            Line::Claim { entry, outcome } => {
                let report = current.get_or_insert_with(|| Report::new(entry.clone()));
                if report.entry != entry {
                    return Err(ParseError::Unterminated(report.entry.clone()));
                }
                report.outcomes.push(outcome);
            }
            Line::Summary {
                entry, passed, failed, ..
            } => {
                let report = current.take().unwrap_or_else(|| Report::new(entry.clone()));
                let s = report.summary();
                if report.entry != entry || s.passed != passed || s.failed != failed {
                    return Err(ParseError::Summary { line, entry });
                }
                reports.push(report);
            }
        }
    }
    match current {
        Some(r) => Err(ParseError::Unterminated(r.entry)),
        None => Ok(reports),
    }
}
