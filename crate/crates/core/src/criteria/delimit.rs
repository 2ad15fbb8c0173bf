use crate::finding::Finding;
use crate::model::Suite;
use crate::registry::TloRegistryEntry;

use super::{declaring_documents, CriterionId, Verdict};

/// DELIMIT: every native class must ultimately extend a root class of `entry`.
///
/// Native object properties are checked against the entry's property roots,
/// when it has any, and produce warnings only.
pub fn check_delimit(suite: &Suite, entry: &TloRegistryEntry) -> Verdict {
    let graph = suite.class_graph();
    let under_root = graph.descendants_mask(entry.root_classes.iter().filter_map(|r| graph.id(r)));

    let mut evidence = Vec::new();
    for class in suite.native_classes() {
        let reaches = graph.id(class).is_some_and(|id| under_root[id]);
        if !reaches {
            evidence.push(
                Finding::violation(
                    "DELIMIT_ORPHAN",
                    format!("{class} does not ultimately extend a root class of '{}'", entry.id),
                )
                .with_entities([class.clone()])
                .with_documents(declaring_documents(suite, class)),
            );
        }
    }

    if let Some(roots) = &entry.property_roots {
        let props = suite.property_graph();
        let under = props.descendants_mask(roots.iter().filter_map(|r| props.id(r)));
        for property in suite.native_properties() {
            if !props.id(property).is_some_and(|id| under[id]) {
                evidence.push(
                    Finding::warning(
                        "DELIMIT_PROPERTY_UNROOTED",
                        format!("object property {property} does not extend a property root of '{}'", entry.id),
                    )
                    .with_entities([property.clone()])
                    .with_documents(declaring_documents(suite, property)),
                );
            }
        }
    }

    Verdict::new(CriterionId::Delimit, entry.id.clone(), evidence)
}
