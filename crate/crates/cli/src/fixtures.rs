//! The `fixtures` command: runs the bundled corpus and compares the verdict
//! matrix with the frozen expectations.

use std::fmt::Write;
use std::path::Path;

use midarch::corpus::{self, Fixture};
use midarch::model::assemble_suite;
use midarch::{classify_middle_architecture, BreadthArea, CriterionId, Registry};
use serde_json::json;

use crate::load::{expand_inputs, load_all, CliError};

pub struct Row {
    pub fixture: &'static Fixture,
    /// `None` when the fixture failed to load.
    pub verdicts: Option<[bool; 4]>,
    pub uncovered: Vec<BreadthArea>,
    pub error: Option<String>,
}

impl Row {
    pub fn matches(&self) -> bool {
        match self.verdicts {
            Some(v) => v == self.fixture.expected && self.fixture.uncovered.matches(&self.uncovered),
            None => false,
        }
    }

    fn diff(&self) -> Vec<String> {
        let id = self.fixture.id;
        let Some(got) = self.verdicts else {
            return vec![format!("{id}: {}", self.error.as_deref().unwrap_or("failed to load"))];
        };
        let mut out = Vec::new();
        for (i, c) in CriterionId::ALL.iter().enumerate() {
            if got[i] != self.fixture.expected[i] {
                out.push(format!("{id}: {c} expected {}, got {}", mark(self.fixture.expected[i]), mark(got[i])));
            }
        }
        if !self.fixture.uncovered.matches(&self.uncovered) {
            out.push(format!("{id}: uncovered areas {:?} do not meet {:?}", names(&self.uncovered), self.fixture.uncovered));
        }
        out
    }
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "P"
    } else {
        "F"
    }
}

fn names(areas: &[BreadthArea]) -> Vec<&'static str> {
    areas.iter().map(|a| a.name()).collect()
}

fn evaluate(fixture: &'static Fixture, dir: Option<&Path>, registry: &Registry) -> Row {
    let result = (|| -> Result<([bool; 4], Vec<BreadthArea>), CliError> {
        let (docs, tlo) = match dir {
            None => (corpus::load_files(fixture.files)?, vec![corpus::bfo_document()]),
            Some(d) => {
                let files = expand_inputs(&[d.join(fixture.id)])?;
                let docs = load_all(&files)?.into_iter().map(|l| l.document).collect();
                let tlo = load_all(&[d.join("bfo-mini.ttl")])?.into_iter().map(|l| l.document).collect();
                (docs, tlo)
            }
        };
        let suite = assemble_suite(docs, tlo)?;
        let report = classify_middle_architecture(&suite, registry);
        let set = report.primary();
        let mut v = [false; 4];
        for (i, c) in CriterionId::ALL.iter().enumerate() {
            v[i] = set.get(*c).pass;
        }
        let uncovered = set.get(CriterionId::Inheritance).uncovered_areas.clone().unwrap_or_default();
        Ok((v, uncovered))
    })();
    match result {
        Ok((v, uncovered)) => Row {
            fixture,
            verdicts: Some(v),
            uncovered,
            error: None,
        },
        Err(e) => Row {
            fixture,
            verdicts: None,
            uncovered: Vec::new(),
            error: Some(e.0),
        },
    }
}

pub fn run(dir: Option<&Path>, registry: &Registry) -> Vec<Row> {
    corpus::FIXTURES.iter().map(|f| evaluate(f, dir, registry)).collect()
}

pub fn render_text(rows: &[Row]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<10} {:<7} {:<7} {:<4} {:<11} {:<7} {:<8} result",
        "fixture", "EXTEND", "DELIMIT", "HUB", "INHERITANCE", "member", "expected"
    );
    for row in rows {
        let expected: String = row.fixture.expected.iter().map(|&p| mark(p)).collect();
        match row.verdicts {
            Some(v) => {
                let member = if v.iter().all(|&p| p) { "yes" } else { "no" };
                let _ = writeln!(
                    out,
                    "{:<10} {:<7} {:<7} {:<4} {:<11} {:<7} {:<8} {}",
                    row.fixture.id,
                    mark(v[0]),
                    mark(v[1]),
                    mark(v[2]),
                    mark(v[3]),
                    member,
                    expected,
                    if row.matches() { "ok" } else { "MISMATCH" }
                );
                if !row.uncovered.is_empty() && row.uncovered.len() < BreadthArea::ALL.len() {
                    let _ = writeln!(out, "  uncovered: {}", names(&row.uncovered).join("; "));
                }
            }
            None => {
                let _ = writeln!(out, "{:<10} {:<41} {:<8} MISMATCH", row.fixture.id, "(not evaluated)", expected);
            }
        }
    }
    let diffs: Vec<String> = rows.iter().flat_map(Row::diff).collect();
    if !diffs.is_empty() {
        let _ = writeln!(out);
        for d in diffs {
            let _ = writeln!(out, "- {d}");
        }
    }
    out
}

pub fn render_json(rows: &[Row]) -> String {
    let fixtures: Vec<_> = rows
        .iter()
        .map(|row| {
            let criteria = |v: [bool; 4]| -> serde_json::Map<String, serde_json::Value> {
                CriterionId::ALL.iter().zip(v).map(|(c, p)| (c.name().to_string(), json!(p))).collect()
            };
            json!({
                "id": row.fixture.id,
                "verdicts": row.verdicts.map(criteria),
                "expected": criteria(row.fixture.expected),
                "uncovered_areas": names(&row.uncovered),
                "matches": row.matches(),
                "error": row.error,
            })
        })
        .collect();
    let value = json!({
        "fixtures": fixtures,
        "all_match": rows.iter().all(Row::matches),
    });
    let mut out = serde_json::to_string_pretty(&value).expect("values always serialize");
    out.push('\n');
    out
}
