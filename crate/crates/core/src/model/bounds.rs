use std::collections::BTreeSet;

use crate::iri::Iri;

use super::suite::Suite;

/// Upper and lower bound of one document under analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundProfile {
    /// Native classes of the document with no superclass declared in the same document.
    pub attachment_points: BTreeSet<Iri>,
    /// Native classes of the document with no subclass anywhere in the suite.
    pub leaf_classes: BTreeSet<Iri>,
    /// Native classes reachable downward from an attachment point over the whole suite.
    pub scope_set: BTreeSet<Iri>,
}

/// Computes the bound profile of `suite.documents()[doc_index]`.
///
/// Panics if `doc_index` is out of range.
pub fn bound_profile(suite: &Suite, doc_index: usize) -> BoundProfile {
    let graph = suite.class_graph();
    let own = suite.native_classes_of(doc_index);

    let mut attachment_points = BTreeSet::new();
    let mut leaf_classes = BTreeSet::new();
    for class in &own {
        // Declared classes are always graph nodes.
        let Some(id) = graph.id(class) else { continue };
        if !graph.parents(id).iter().any(|&p| own.contains(graph.iri(p))) {
            attachment_points.insert(class.clone());
        }
        if graph.children(id).is_empty() {
            leaf_classes.insert(class.clone());
        }
    }

    let scope_set = graph
        .descendants_of(attachment_points.iter())
        .into_iter()
        .filter(|c| suite.is_native_class(c))
        .collect();

    BoundProfile {
        attachment_points,
        leaf_classes,
        scope_set,
    }
}
