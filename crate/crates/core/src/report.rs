//! Verification records and their two renderings: an aligned text table and
//! JSON lines with the fields `context`, `theorem`, `status`, `details`.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisNotMet,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HypothesisNotMet => "hypothesis-not-met",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub context: String,
    pub theorem: String,
    pub status: Status,
    pub details: Value,
    /// One-line summary for the text table.
    #[serde(skip)]
    pub note: String,
}

impl Record {
    pub fn pass(context: &str, theorem: &str, details: Value, note: impl Into<String>) -> Self {
        Record {
            context: context.into(),
            theorem: theorem.into(),
            status: Status::Pass,
            details,
            note: note.into(),
        }
    }

    pub fn fail(context: &str, theorem: &str, reason: impl Into<String>) -> Self {
        let reason = reason.into();
        Record {
            context: context.into(),
            theorem: theorem.into(),
            status: Status::Fail,
            details: json!({ "error": reason }),
            note: reason,
        }
    }

    /// `Ok` passes; a failed hypothesis or a decomposable lattice is
    /// "hypothesis not met"; any other error fails.
    pub fn from_result<T: Serialize>(
        context: &str,
        theorem: &str,
        result: Result<T>,
        note: impl FnOnce(&T) -> String,
    ) -> Self {
        match result {
            Ok(v) => {
                let n = note(&v);
                let details = serde_json::to_value(&v).unwrap_or_else(|e| json!({ "error": e.to_string() }));
                Record::pass(context, theorem, details, n)
            }
            Err(e @ (Error::HypothesisFailed(_) | Error::NotIndecomposable(_))) => Record {
                context: context.into(),
                theorem: theorem.into(),
                status: Status::HypothesisNotMet,
                details: json!({ "reason": e.to_string() }),
                note: e.to_string(),
            },
            Err(e) => Record::fail(context, theorem, e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub command: String,
    pub records: Vec<Record>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport { command: command.into(), records: Vec::new() }
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = Record>) {
        self.records.extend(rs);
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn failed(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    pub fn human(&self) -> String {
        let header = ["context", "theorem", "status", "note"];
        let rows: Vec<[String; 4]> = self
            .records
            .iter()
            .map(|r| [r.context.clone(), r.theorem.clone(), r.status.to_string(), r.note.clone()])
            .collect();
        let width = |i: usize| {
            rows.iter().map(|r| r[i].chars().count()).chain([header[i].len()]).max().unwrap_or(0)
        };
        let widths = [width(0), width(1), width(2)];
        let line = |cells: [&str; 4]| {
            let mut s = String::new();
            for (i, w) in widths.iter().enumerate() {
                s.push_str(cells[i]);
                s.push_str(&" ".repeat(w - cells[i].chars().count() + 2));
            }
            s.push_str(cells[3]);
            s.trim_end().to_string()
        };
        let mut out = format!("# {}\n", self.command);
        out.push_str(&line(header));
        out.push('\n');
        for r in &rows {
            out.push_str(&line([&r[0], &r[1], &r[2], &r[3]]));
            out.push('\n');
        }
        out.push_str(&format!(
            "{} pass, {} fail, {} hypothesis-not-met\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::HypothesisNotMet)
        ));
        out
    }

    pub fn json_lines(&self) -> String {
        self.records
            .iter()
            .map(|r| serde_json::to_string(r).expect("records serialize") + "\n")
            .collect()
    }

    /// The text table followed by the JSON lines, or the JSON lines alone.
    pub fn render(&self, json_only: bool) -> String {
        if json_only {
            self.json_lines()
        } else {
            format!("{}\n{}", self.human(), self.json_lines())
        }
    }
}
