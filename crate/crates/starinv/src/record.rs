//! Element files: JSON records `{"ring": "...", "entries": [...]}`, one
//! after another (line-delimited or pretty-printed).

use serde::{Deserialize, Serialize};
use starinv_core::ring::{RingContext, RingElement};

use crate::text::{self, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub ring: String,
    pub entries: Vec<String>,
}

impl ElementRecord {
    pub fn of(e: &RingElement) -> Self {
        ElementRecord {
            ring: text::ring_spec(&e.context()),
            entries: text::entries(e),
        }
    }

    pub fn element(&self) -> Result<RingElement, ParseError> {
        let ctx = text::parse_ring(&self.ring)?;
        text::from_entries(&ctx, &self.entries)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, col)
}

/// Every record in `src`. Errors carry the line and column of the record.
pub fn read_records(src: &str) -> Result<Vec<RingElement>, ParseError> {
    let mut out = Vec::new();
    let mut stream = serde_json::Deserializer::from_str(src).into_iter::<ElementRecord>();
    let mut start = 0;
    while let Some(next) = stream.next() {
        let rec = next.map_err(|e| ParseError::new(e.to_string()).at(e.line(), e.column()))?;
        let skipped = src[start..].len() - src[start..].trim_start().len();
        let (line, col) = line_col(src, start + skipped);
        out.push(rec.element().map_err(|e| ParseError::new(e.message).at(line, col))?);
        start = stream.byte_offset();
    }
    if out.is_empty() {
        return Err(ParseError::new("no element records found"));
    }
    Ok(out)
}

/// An element given on the command line: a JSON record, or the list form
/// read in `ring`.
pub fn parse_inline(ring: Option<&RingContext>, s: &str) -> Result<RingElement, ParseError> {
    if s.trim_start().starts_with('{') {
        let e = read_records(s)?.remove(0);
        if let Some(ctx) = ring {
            if e.context() != *ctx {
                return Err(ParseError::new("record ring differs from --ring"));
            }
        }
        return Ok(e);
    }
    match ring {
        Some(ctx) => text::parse_list(ctx, s),
        None => Err(ParseError::new("list-form elements need --ring")),
    }
}
