//! Deterministic rendering of membership reports.

mod text;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::criteria::{MembershipReport, Verdict};
use crate::finding::Finding;
use crate::model::Suite;
use crate::registry::Registry;

pub use text::{render_text, render_text_styled, Style};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub documents: usize,
    /// Native classes.
    pub classes: usize,
    /// Native object properties.
    pub properties: usize,
    pub opaque_axioms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SourceDigest {
    /// Relative path or file name; never absolute.
    pub source: String,
    pub sha256: String,
}

impl SourceDigest {
    pub fn of(source: impl Into<String>, content: &[u8]) -> Self {
        let digest = Sha256::digest(content);
        let sha256 = digest.iter().map(|b| format!("{b:02x}")).collect();
        Self {
            source: source.into(),
            sha256,
        }
    }
}

/// Everything a run produced, in serializable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    /// Ids of every registry entry consulted.
    pub registries: Vec<String>,
    /// Ids of the adopted entries.
    pub adopted: Vec<String>,
    pub suite: SuiteSummary,
    /// Flattened verdict sets, ordered by entry id then criterion.
    pub verdicts: Vec<Verdict>,
    pub advisories: Vec<Finding>,
    pub member: bool,
    pub generated_from: Vec<SourceDigest>,
}

impl Report {
    pub fn new(suite: &Suite, registry: &Registry, membership: &MembershipReport, mut sources: Vec<SourceDigest>) -> Self {
        let mut verdicts: Vec<Verdict> = membership
            .verdict_sets
            .iter()
            .flat_map(|s| s.verdicts.iter().cloned())
            .collect();
        verdicts.sort_by(|a, b| (&a.tlo, a.criterion).cmp(&(&b.tlo, b.criterion)));
        sources.sort();
        let mut advisories = membership.advisories.clone();
        advisories.sort();
        Self {
            tool_version: TOOL_VERSION.to_string(),
            registries: registry.ids(),
            adopted: membership.adopted.clone(),
            suite: SuiteSummary {
                documents: suite.documents().len(),
                classes: suite.native_classes().len(),
                properties: suite.native_properties().len(),
                opaque_axioms: suite.opaque_axiom_total(),
            },
            verdicts,
            advisories,
            member: membership.member,
            generated_from: sources,
        }
    }

    /// Verdicts grouped by entry id, in report order.
    pub fn verdict_sets(&self) -> Vec<(&str, Vec<&Verdict>)> {
        let mut sets: Vec<(&str, Vec<&Verdict>)> = Vec::new();
        for v in &self.verdicts {
            match sets.last_mut() {
                Some((tlo, list)) if *tlo == v.tlo => list.push(v),
                _ => sets.push((&v.tlo, vec![v])),
            }
        }
        sets
    }

    /// Every finding in the report: verdict evidence, then advisories.
    pub fn findings(&self) -> impl Iterator<Item = &Finding> {
        self.verdicts.iter().flat_map(|v| &v.evidence).chain(&self.advisories)
    }
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn render_json(report: &Report) -> String {
    // `Value` objects are BTreeMaps, which sorts keys.
    let value = serde_json::to_value(report).expect("reports always serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("values always serialize");
    out.push('\n');
    out
}

pub fn parse_json(text: &str) -> serde_json::Result<Report> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::fixtures::*;
    use crate::criteria::{classify_with, AdvisoryOptions};

    fn sample(bad: bool) -> Report {
        let suite = suite_of(vec![
            covering_document("hub.ttl", bad),
            OntologyDocumentBuilder::new("z.ttl").class("Rogue").build(),
        ]);
        let registry = registry();
        let membership = classify_with(&suite, &registry, AdvisoryOptions::all());
        Report::new(
            &suite,
            &registry,
            &membership,
            vec![SourceDigest::of("z.ttl", b"z"), SourceDigest::of("hub.ttl", b"")],
        )
    }

    #[test]
    fn digest_is_sha256_hex() {
        assert_eq!(
            SourceDigest::of("a", b"").sha256,
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn json_round_trips() {
        let report = sample(true);
        let json = render_json(&report);
        assert_eq!(parse_json(&json).unwrap(), report);
    }

    #[test]
    fn json_keys_are_sorted_and_stable() {
        let report = sample(false);
        let a = render_json(&report);
        assert_eq!(a, render_json(&sample(false)));
        let top: Vec<&str> = a
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        let mut sorted = top.clone();
        sorted.sort();
        assert_eq!(top, sorted);
        for key in ["tool_version", "registries", "suite", "verdicts", "advisories", "member"] {
            assert!(top.contains(&key), "missing {key}");
        }
    }

    #[test]
    fn sources_and_verdicts_are_ordered() {
        let report = sample(false);
        assert_eq!(report.generated_from[0].source, "hub.ttl");
        let criteria: Vec<_> = report.verdicts.iter().map(|v| v.criterion.name()).collect();
        assert_eq!(criteria, ["EXTEND", "DELIMIT", "HUB", "INHERITANCE"]);
        assert!(!report.member);
        assert_eq!(report.suite.documents, 2);
        assert_eq!(report.suite.classes, 16);
    }
}
