use std::collections::BTreeSet;

use crate::finding::Finding;
use crate::iri::Iri;
use crate::model::{bound_profile, OntologyModule, Suite};
use crate::registry::TloRegistryEntry;

use super::{CriterionId, Verdict};

/// HUB: every analyzed document declares native content, and no two documents
/// overlap in scope.
///
/// Two documents overlap when their declared native classes intersect or
/// their scope sets intersect. A lone document passes trivially.
pub fn check_hub(suite: &Suite, entry: &TloRegistryEntry) -> Verdict {
    let docs = suite.documents();
    let mut evidence = Vec::new();

    let native: Vec<BTreeSet<Iri>> = (0..docs.len()).map(|i| suite.native_classes_of(i)).collect();
    let scopes: Vec<BTreeSet<Iri>> = (0..docs.len()).map(|i| bound_profile(suite, i).scope_set).collect();

    for (i, doc) in docs.iter().enumerate() {
        if native[i].is_empty() {
            evidence.push(
                Finding::violation("HUB_EMPTY", format!("{} declares no native class", doc.source_name))
                    .with_documents([doc.source_name.clone()]),
            );
            continue;
        }
        let profile = bound_profile(suite, i);
        evidence.push(
            Finding::info(
                "HUB_ATTACHMENT",
                format!("{} attaches at {} class(es)", doc.source_name, profile.attachment_points.len()),
            )
            .with_entities(profile.attachment_points)
            .with_documents([doc.source_name.clone()]),
        );
        if !OntologyModule::of_document(suite, i).is_proper() {
            evidence.push(
                Finding::warning(
                    "HUB_NOT_PROPER",
                    format!("{} is the whole suite vocabulary, not a proper module", doc.source_name),
                )
                .with_documents([doc.source_name.clone()]),
            );
        }
    }

    for i in 0..docs.len() {
        for j in i + 1..docs.len() {
            let shared: BTreeSet<Iri> = native[i]
                .intersection(&native[j])
                .chain(scopes[i].intersection(&scopes[j]))
                .cloned()
                .collect();
            if shared.is_empty() {
                continue;
            }
            evidence.push(
                Finding::violation(
                    "HUB_OVERLAP",
                    format!(
                        "{} and {} overlap in scope on {} class(es)",
                        docs[i].source_name,
                        docs[j].source_name,
                        shared.len()
                    ),
                )
                .with_entities(shared)
                .with_documents([docs[i].source_name.clone(), docs[j].source_name.clone()]),
            );
        }
    }

    Verdict::new(CriterionId::Hub, entry.id.clone(), evidence)
}
