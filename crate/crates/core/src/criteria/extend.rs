use std::collections::BTreeSet;

use crate::finding::Finding;
use crate::iri::Iri;
use crate::model::Suite;
use crate::registry::{Registry, TloRegistryEntry};

use super::{CriterionId, Verdict};

/// Indices into `suite.tlo_documents()` that belong to `entry`: documents whose
/// ontology IRI is one of the entry's, or that declare one of its root classes.
pub fn tlo_documents_of(suite: &Suite, entry: &TloRegistryEntry) -> Vec<usize> {
    suite
        .tlo_documents()
        .iter()
        .enumerate()
        .filter(|(_, d)| {
            d.ontology_iri.as_ref().is_some_and(|i| entry.ontology_iris.contains(i))
                || entry.root_classes.iter().any(|r| d.classes.contains(r))
        })
        .map(|(i, _)| i)
        .collect()
}

/// Evidence of adoption for one entry; empty when the entry is not adopted.
fn adoption_evidence(suite: &Suite, entry: &TloRegistryEntry) -> Vec<Finding> {
    let mut evidence = Vec::new();

    for doc in suite.documents() {
        let matched: Vec<Iri> = doc.imports.intersection(&entry.ontology_iris).cloned().collect();
        if !matched.is_empty() {
            evidence.push(
                Finding::info("EXTEND_IMPORT", format!("{} imports top-level ontology '{}'", doc.source_name, entry.id))
                    .with_entities(matched)
                    .with_documents([doc.source_name.clone()]),
            );
        }
    }

    let tlo_classes: BTreeSet<&Iri> = tlo_documents_of(suite, entry)
        .into_iter()
        .flat_map(|i| suite.tlo_documents()[i].classes.iter())
        .collect();
    for doc in suite.documents() {
        for (child, parent) in &doc.subclass_edges {
            if suite.is_native_class(child) && tlo_classes.contains(parent) {
                evidence.push(
                    Finding::info("EXTEND_ATTACHMENT", format!("{child} ⊑ {parent} attaches to '{}'", entry.id))
                        .with_entities([child.clone(), parent.clone()])
                        .with_documents([doc.source_name.clone()]),
                );
            }
        }
    }
    evidence
}

/// Registry entries adopted by the suite, each with its adoption evidence.
pub fn adopted_entries<'r>(suite: &Suite, registry: &'r Registry) -> Vec<(&'r TloRegistryEntry, Vec<Finding>)> {
    registry
        .entries()
        .filter_map(|entry| {
            let evidence = adoption_evidence(suite, entry);
            (!evidence.is_empty()).then_some((entry, evidence))
        })
        .collect()
}

/// EXTEND against one entry: passes iff the suite adopts it.
pub fn check_extend_for(suite: &Suite, entry: &TloRegistryEntry) -> Verdict {
    let mut evidence = adoption_evidence(suite, entry);
    if evidence.is_empty() {
        evidence.push(not_adopted(&entry.id));
    }
    Verdict::new(CriterionId::Extend, entry.id.clone(), evidence)
}

/// EXTEND over the whole registry: passes iff at least one entry is adopted.
/// The verdict's `tlo` lists every adopted entry id, comma-separated.
pub fn check_extend(suite: &Suite, registry: &Registry) -> Verdict {
    let adopted = adopted_entries(suite, registry);
    if adopted.is_empty() {
        let ids = registry.ids().join(", ");
        return Verdict::new(
            CriterionId::Extend,
            "",
            vec![Finding::violation(
                "EXTEND_NOT_ADOPTED",
                format!("no registered top-level ontology ({ids}) is imported or extended by any document"),
            )],
        );
    }
    let ids: Vec<String> = adopted.iter().map(|(e, _)| e.id.clone()).collect();
    let evidence = adopted.into_iter().flat_map(|(_, ev)| ev).collect();
    Verdict::new(CriterionId::Extend, ids.join(","), evidence)
}

fn not_adopted(id: &str) -> Finding {
    Finding::violation(
        "EXTEND_NOT_ADOPTED",
        format!("top-level ontology '{id}' is neither imported nor extended by any native class"),
    )
}
