//! Non-normative diagnostics. None of these affect membership.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::finding::Finding;
use crate::iri::Iri;
use crate::model::{DocRef, Suite};
use crate::registry::TloRegistryEntry;

pub const STAR_LABEL: &str =
    "promotion candidate (non-normative: shared reuse does not entail mid-level residence)";
pub const DOUBLE_STAR_LABEL: &str = "strict mode, rejected as too strong";

/// Terms a suite uses outside its top-level ontology documents: native classes,
/// native properties and the endpoints of asserted subclass edges.
fn used_terms(suite: &Suite) -> BTreeMap<Iri, BTreeSet<String>> {
    let is_tlo = |iri: &Iri| {
        suite
            .declared_in(iri)
            .is_some_and(|refs| refs.iter().any(|r| matches!(r, DocRef::Tlo(_))))
    };
    let mut used: BTreeMap<Iri, BTreeSet<String>> = BTreeMap::new();
    for doc in suite.documents() {
        let terms = doc
            .classes
            .iter()
            .chain(&doc.object_properties)
            .chain(doc.subclass_edges.iter().flat_map(|(c, p)| [c, p]));
        for term in terms {
            if !is_tlo(term) {
                used.entry(term.clone()).or_default().insert(doc.source_name.clone());
            }
        }
    }
    used
}

/// Star reuse: terms used by at least `n` of the given domain suites.
pub fn check_star_reuse(suites: &[Suite], n: usize) -> Result<Vec<Finding>> {
    if n < 2 {
        return Err(Error::Args(format!("star reuse threshold must be at least 2, got {n}")));
    }
    if suites.len() < 2 {
        return Err(Error::Args(format!("star reuse needs at least 2 domain suites, got {}", suites.len())));
    }
    let mut counts: BTreeMap<Iri, (usize, BTreeSet<String>)> = BTreeMap::new();
    for suite in suites {
        for (term, docs) in used_terms(suite) {
            let slot = counts.entry(term).or_default();
            slot.0 += 1;
            slot.1.extend(docs);
        }
    }
    Ok(counts
        .into_iter()
        .filter(|(_, (k, _))| *k >= n)
        .map(|(term, (k, docs))| {
            Finding::advisory("STAR_REUSE", format!("{term} is used by {k} domain suites: {STAR_LABEL}"))
                .with_entities([term])
                .with_documents(docs)
        })
        .collect())
}

/// Double-star: lower-bound classes with no strict native descendant.
pub fn check_double_star(suite: &Suite, entry: &TloRegistryEntry) -> Result<Vec<Finding>> {
    if entry.lower_bound_classes.is_empty() {
        return Err(Error::Args(format!("registry entry '{}' has an empty lower bound", entry.id)));
    }
    let graph = suite.class_graph();
    let mut findings = Vec::new();
    for class in &entry.lower_bound_classes {
        let extended = graph.id(class).is_some_and(|id| {
            let below = graph.descendants_mask([id]);
            (0..graph.len()).any(|d| d != id && below[d] && suite.is_native_class(graph.iri(d)))
        });
        if !extended {
            findings.push(
                Finding::advisory(
                    "DOUBLE_STAR_UNEXTENDED",
                    format!("lower-bound class {class} has no native subclass: {DOUBLE_STAR_LABEL}"),
                )
                .with_entities([class.clone()]),
            );
        }
    }
    Ok(findings)
}

/// Native classes placed under a discouraged class of `entry`, one finding
/// per class naming every discouraged class it reaches.
pub fn check_discouraged(suite: &Suite, entry: &TloRegistryEntry) -> Vec<Finding> {
    let graph = suite.class_graph();
    let discouraged: Vec<(usize, Vec<bool>)> = entry
        .discouraged_classes
        .iter()
        .filter_map(|c| graph.id(c))
        .map(|id| (id, graph.descendants_mask([id])))
        .collect();
    let mut findings = Vec::new();
    for class in suite.native_classes() {
        let Some(id) = graph.id(class) else { continue };
        let reached: Vec<Iri> = discouraged
            .iter()
            .filter(|(_, below)| below[id])
            .map(|(d, _)| graph.iri(*d).clone())
            .collect();
        if reached.is_empty() {
            continue;
        }
        let names: Vec<&str> = reached.iter().map(Iri::as_str).collect();
        findings.push(
            Finding::advisory(
                "DISCOURAGED_EXTENSION",
                format!("{class} extends discouraged class(es) {}", names.join(", ")),
            )
            .with_entities(std::iter::once(class.clone()).chain(reached))
            .with_documents(super::declaring_documents(suite, class)),
        );
    }
    findings.sort();
    findings
}
