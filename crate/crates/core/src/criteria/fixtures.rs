//! Small hand-built suites for unit tests.
//!
//! The top-level ontology has a root `tlo:Root`, one class `tlo:A1`..`tlo:A15`
//! per breadth area (each directly under the root), and a discouraged class
//! `tlo:Bad` with child `tlo:BadChild`.

use std::collections::BTreeSet;

use crate::iri::Iri;
use crate::model::{assemble_suite, OntologyDocument, Suite};
use crate::registry::{BreadthArea, Registry, TloRegistryEntry};

pub const TLO_ONTOLOGY: &str = "http://tlo.org/tlo.owl";

pub fn ex(name: &str) -> Iri {
    if name.contains(':') {
        Iri::from_static(name)
    } else {
        Iri::from_static(&format!("http://ex.org/{name}"))
    }
}

pub fn tlo(name: &str) -> Iri {
    Iri::from_static(&format!("http://tlo.org/{name}"))
}

pub struct OntologyDocumentBuilder(OntologyDocument);

impl OntologyDocumentBuilder {
    pub fn new(name: &str) -> Self {
        Self(OntologyDocument::new(name))
    }

    pub fn class(mut self, name: &str) -> Self {
        self.0.classes.insert(ex(name));
        self
    }

    /// Declares `child` and asserts `child ⊑ parent`.
    pub fn sub(mut self, child: &str, parent: Iri) -> Self {
        self.0.classes.insert(ex(child));
        self.0.subclass_edges.insert((ex(child), parent));
        self
    }

    pub fn property(mut self, name: &str, parent: Option<Iri>) -> Self {
        self.0.object_properties.insert(ex(name));
        if let Some(p) = parent {
            self.0.subproperty_edges.insert((ex(name), p));
        }
        self
    }

    pub fn imports(mut self, iri: &str) -> Self {
        self.0.imports.insert(Iri::from_static(iri));
        self
    }

    pub fn build(self) -> OntologyDocument {
        self.0
    }
}

pub fn area_class(i: usize) -> Iri {
    tlo(&format!("A{}", i + 1))
}

pub fn tlo_document() -> OntologyDocument {
    let mut d = OntologyDocument::new("tlo.ttl");
    d.ontology_iri = Some(Iri::from_static(TLO_ONTOLOGY));
    d.classes.insert(tlo("Root"));
    for i in 0..15 {
        d.classes.insert(area_class(i));
        d.subclass_edges.insert((area_class(i), tlo("Root")));
    }
    d.classes.insert(tlo("Bad"));
    d.classes.insert(tlo("BadChild"));
    d.subclass_edges.insert((tlo("Bad"), tlo("Root")));
    d.subclass_edges.insert((tlo("BadChild"), tlo("Bad")));
    d.object_properties.insert(tlo("relatedTo"));
    d
}

pub fn entry() -> TloRegistryEntry {
    TloRegistryEntry {
        id: "tlo".into(),
        ontology_iris: [Iri::from_static(TLO_ONTOLOGY)].into(),
        root_classes: [tlo("Root")].into(),
        lower_bound_classes: (0..15).map(area_class).collect(),
        breadth_map: BreadthArea::ALL
            .into_iter()
            .enumerate()
            .map(|(i, a)| (a, BTreeSet::from([area_class(i)])))
            .collect(),
        discouraged_classes: [tlo("Bad")].into(),
        property_roots: Some([tlo("relatedTo")].into()),
    }
}

pub fn registry() -> Registry {
    Registry::new([entry()]).unwrap()
}

/// A document with one native class `C{i}` under each area class.
/// With `bad`, also a class under the discouraged subtree.
pub fn covering_document(name: &str, bad: bool) -> OntologyDocument {
    let mut b = OntologyDocumentBuilder::new(name).imports(TLO_ONTOLOGY);
    for i in 0..15 {
        b = b.sub(&format!("C{}", i + 1), area_class(i));
    }
    if bad {
        b = b.sub("Axis", tlo("BadChild"));
    }
    b.build()
}

pub fn suite_of(documents: Vec<OntologyDocument>) -> Suite {
    assemble_suite(documents, vec![tlo_document()]).unwrap()
}
