use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::iri::Iri;

use super::document::OntologyDocument;
use super::graph::{Edge, TaxonomyGraph};

/// Where a class or property is declared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DocRef {
    /// Index into [`Suite::documents`].
    Native(usize),
    /// Index into [`Suite::tlo_documents`].
    Tlo(usize),
}

/// An assembled, immutable multi-document suite.
///
/// The combined subclass graph is acyclic; assembly rejects cycles.
#[derive(Debug, Clone)]
pub struct Suite {
    documents: Vec<OntologyDocument>,
    tlo_documents: Vec<OntologyDocument>,
    unresolved_imports: BTreeSet<Iri>,
    classes: TaxonomyGraph,
    properties: TaxonomyGraph,
    declared_in: BTreeMap<Iri, BTreeSet<DocRef>>,
    native_classes: BTreeSet<Iri>,
    native_properties: BTreeSet<Iri>,
    tlo_classes: BTreeSet<Iri>,
}

/// Builds a suite from the documents under analysis and the top-level ontology
/// documents they may extend. Both lists are ordered by source name.
pub fn assemble_suite(
    mut documents: Vec<OntologyDocument>,
    mut tlo_documents: Vec<OntologyDocument>,
) -> Result<Suite> {
    if documents.is_empty() {
        return Err(Error::Empty);
    }
    documents.sort_by(|a, b| a.source_name.cmp(&b.source_name));
    tlo_documents.sort_by(|a, b| a.source_name.cmp(&b.source_name));

    let all = || documents.iter().chain(tlo_documents.iter());

    let known: BTreeSet<&Iri> = all().filter_map(|d| d.ontology_iri.as_ref()).collect();
    let unresolved_imports = all()
        .flat_map(|d| d.imports.iter())
        .filter(|i| !known.contains(i))
        .cloned()
        .collect();

    let mut declared_in: BTreeMap<Iri, BTreeSet<DocRef>> = BTreeMap::new();
    let refs = documents
        .iter()
        .enumerate()
        .map(|(i, d)| (DocRef::Native(i), d))
        .chain(tlo_documents.iter().enumerate().map(|(i, d)| (DocRef::Tlo(i), d)));
    for (r, d) in refs {
        for iri in d.classes.iter().chain(d.object_properties.iter()) {
            declared_in.entry(iri.clone()).or_default().insert(r);
        }
    }

    let tlo_classes: BTreeSet<Iri> = tlo_documents.iter().flat_map(|d| d.classes.iter().cloned()).collect();
    let tlo_properties: BTreeSet<Iri> = tlo_documents
        .iter()
        .flat_map(|d| d.object_properties.iter().cloned())
        .collect();
    let native_classes = documents
        .iter()
        .flat_map(|d| d.classes.iter())
        .filter(|c| !tlo_classes.contains(*c))
        .cloned()
        .collect();
    let native_properties = documents
        .iter()
        .flat_map(|d| d.object_properties.iter())
        .filter(|p| !tlo_properties.contains(*p))
        .cloned()
        .collect();

    let class_edges: BTreeSet<Edge> = all().flat_map(|d| d.subclass_edges.iter().cloned()).collect();
    let class_nodes: Vec<Iri> = all().flat_map(|d| d.classes.iter().cloned()).collect();
    let classes = TaxonomyGraph::new(class_nodes, &class_edges);
    if let Some(cycle) = classes.find_cycle() {
        return Err(Error::Cycle {
            cycle: cycle.iter().map(|i| i.to_string()).collect(),
        });
    }

    let property_edges: BTreeSet<Edge> = all().flat_map(|d| d.subproperty_edges.iter().cloned()).collect();
    let property_nodes: Vec<Iri> = all().flat_map(|d| d.object_properties.iter().cloned()).collect();
    let properties = TaxonomyGraph::new(property_nodes, &property_edges);

    Ok(Suite {
        documents,
        tlo_documents,
        unresolved_imports,
        classes,
        properties,
        declared_in,
        native_classes,
        native_properties,
        tlo_classes,
    })
}

impl Suite {
    /// Documents under analysis (the hub candidates), ordered by source name.
    pub fn documents(&self) -> &[OntologyDocument] {
        &self.documents
    }

    pub fn tlo_documents(&self) -> &[OntologyDocument] {
        &self.tlo_documents
    }

    pub fn document(&self, r: DocRef) -> &OntologyDocument {
        match r {
            DocRef::Native(i) => &self.documents[i],
            DocRef::Tlo(i) => &self.tlo_documents[i],
        }
    }

    pub fn unresolved_imports(&self) -> &BTreeSet<Iri> {
        &self.unresolved_imports
    }

    pub fn class_graph(&self) -> &TaxonomyGraph {
        &self.classes
    }

    pub fn property_graph(&self) -> &TaxonomyGraph {
        &self.properties
    }

    pub fn declared_in(&self, iri: &Iri) -> Option<&BTreeSet<DocRef>> {
        self.declared_in.get(iri)
    }

    /// Classes declared in a document under analysis and in no TLO document.
    pub fn native_classes(&self) -> &BTreeSet<Iri> {
        &self.native_classes
    }

    pub fn native_properties(&self) -> &BTreeSet<Iri> {
        &self.native_properties
    }

    /// Classes declared in any TLO document.
    pub fn tlo_classes(&self) -> &BTreeSet<Iri> {
        &self.tlo_classes
    }

    pub fn is_native_class(&self, iri: &Iri) -> bool {
        self.native_classes.contains(iri)
    }

    /// Native classes declared in one document under analysis.
    pub fn native_classes_of(&self, doc_index: usize) -> BTreeSet<Iri> {
        self.documents[doc_index]
            .classes
            .iter()
            .filter(|c| !self.tlo_classes.contains(*c))
            .cloned()
            .collect()
    }

    /// True iff a subclass path of length >= 0 leads from `class` to `root`.
    pub fn ultimately_extends(&self, class: &Iri, root: &Iri) -> Result<bool> {
        let from = self.classes.id(class).ok_or_else(|| Error::UnknownClass(class.to_string()))?;
        Ok(match self.classes.id(root) {
            Some(to) => self.classes.reaches(from, to),
            None => false,
        })
    }

    /// First label found for `iri`, preferring documents under analysis.
    pub fn label(&self, iri: &Iri) -> Option<&str> {
        self.documents
            .iter()
            .chain(self.tlo_documents.iter())
            .find_map(|d| d.label(iri))
    }

    /// Total opaque (uninterpreted) axioms over all documents under analysis.
    pub fn opaque_axiom_total(&self) -> usize {
        self.documents.iter().map(|d| d.opaque_axiom_count).sum()
    }
}
