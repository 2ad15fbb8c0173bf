use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::iri::Iri;

use super::graph::Edge;
use super::suite::Suite;

/// A vocabulary `(C_M, R_M)` carved out of a parent vocabulary `(C, R)`.
///
/// Construction enforces `C_M ⊆ C` and `R_M ⊆ R`. Equality with the parent is
/// allowed; [`is_proper`](Self::is_proper) tells the two cases apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntologyModule {
    parent_classes: BTreeSet<Iri>,
    parent_relations: BTreeSet<Edge>,
    module_classes: BTreeSet<Iri>,
    module_relations: BTreeSet<Edge>,
}

impl OntologyModule {
    pub fn new(
        parent_classes: BTreeSet<Iri>,
        parent_relations: BTreeSet<Edge>,
        module_classes: BTreeSet<Iri>,
        module_relations: BTreeSet<Edge>,
    ) -> Result<Self> {
        if let Some(c) = module_classes.difference(&parent_classes).next() {
            return Err(Error::Args(format!("module class {c} is not in the parent vocabulary")));
        }
        if let Some((c, p)) = module_relations.difference(&parent_relations).next() {
            return Err(Error::Args(format!("module relation {c} ⊑ {p} is not in the parent vocabulary")));
        }
        Ok(Self {
            parent_classes,
            parent_relations,
            module_classes,
            module_relations,
        })
    }

    /// The module formed by one document under analysis, relative to the whole suite.
    pub fn of_document(suite: &Suite, doc_index: usize) -> Self {
        let graph = suite.class_graph();
        let doc = &suite.documents()[doc_index];
        Self {
            parent_classes: graph.nodes().iter().cloned().collect(),
            parent_relations: graph.edges(),
            module_classes: doc.classes.clone(),
            module_relations: doc.subclass_edges.clone(),
        }
    }

    pub fn parent_classes(&self) -> &BTreeSet<Iri> {
        &self.parent_classes
    }

    pub fn parent_relations(&self) -> &BTreeSet<Edge> {
        &self.parent_relations
    }

    pub fn classes(&self) -> &BTreeSet<Iri> {
        &self.module_classes
    }

    pub fn relations(&self) -> &BTreeSet<Edge> {
        &self.module_relations
    }

    /// True when the module is strictly smaller than its parent.
    pub fn is_proper(&self) -> bool {
        self.module_classes != self.parent_classes || self.module_relations != self.parent_relations
    }
}
