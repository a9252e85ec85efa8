//! Report files: one JSON object per line, fields in a fixed order.

use std::io::{self, Write};

use serde::Serialize;
use starinv_core::lab::{LabError, SweepItem, TheoremVerdict};
use starinv_core::ring::RingElement;

use crate::text;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Formula {
    pub tag: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    #[serde(rename = "theoremId")]
    pub theorem_id: String,
    pub ring: String,
    pub element: Vec<String>,
    pub conditions: String,
    pub agree: bool,
    pub formulas: Vec<Formula>,
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub other: Option<Vec<String>>,
    /// `pass`, `fail` or `skipped`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn skipped(e: &LabError<RingElement>) -> bool {
    matches!(e, LabError::NotRegular | LabError::NotApplicable(_))
}

impl ReportRecord {
    pub fn verdict(v: &TheoremVerdict<RingElement>) -> Self {
        ReportRecord {
            theorem_id: v.theorem.code().to_string(),
            ring: text::ring_spec(&v.element.context()),
            element: text::entries(&v.element),
            conditions: v.bits(),
            agree: v.agree(),
            formulas: v.formulas.iter().map(|f| Formula { tag: f.tag.to_string(), pass: f.pass }).collect(),
            n: Some(v.n),
            other: v.other.as_ref().map(text::entries),
            status: if v.passed() { "pass" } else { "fail" },
            detail: None,
        }
    }

    pub fn item(item: &SweepItem<RingElement>) -> Self {
        match item {
            SweepItem::Verdict(v) => ReportRecord::verdict(v),
            SweepItem::Error { theorem, element, other, n, error } => ReportRecord {
                theorem_id: theorem.code().to_string(),
                ring: text::ring_spec(&element.context()),
                element: text::entries(element),
                conditions: String::new(),
                agree: skipped(error),
                formulas: Vec::new(),
                n: Some(*n),
                other: other.as_ref().map(text::entries),
                status: if skipped(error) { "skipped" } else { "fail" },
                detail: Some(error.to_string()),
            },
            SweepItem::Engine { element, label, failure } => ReportRecord {
                theorem_id: format!("engine:{label}"),
                ring: text::ring_spec(&element.context()),
                element: text::entries(element),
                conditions: String::new(),
                agree: failure.is_none(),
                formulas: Vec::new(),
                n: None,
                other: None,
                status: if failure.is_none() { "pass" } else { "fail" },
                detail: failure.clone(),
            },
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("report records serialize")
    }
}

/// Streams records to `out`, one per line.
pub struct ReportWriter<W: Write> {
    out: W,
    pub written: usize,
}

impl<W: Write> ReportWriter<W> {
    pub fn new(out: W) -> Self {
        ReportWriter { out, written: 0 }
    }

    pub fn write(&mut self, rec: &ReportRecord) -> io::Result<()> {
        self.written += 1;
        writeln!(self.out, "{}", rec.to_line())
    }

    pub fn finish(mut self) -> io::Result<W> {
        self.out.flush()?;
        Ok(self.out)
    }
}
