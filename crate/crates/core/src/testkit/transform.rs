use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::iri::Iri;
use crate::model::{Edge, OntologyDocument};
use crate::registry::TloRegistryEntry;
use crate::turtle::escape_literal;

use super::Scenario;

/// A bijection on IRIs. IRIs outside the domain map to themselves.
#[derive(Debug, Clone, Default)]
pub struct Renaming(BTreeMap<Iri, Iri>);

impl Renaming {
    /// Maps every class, property and ontology IRI of `scenario` to a fresh
    /// IRI whose sort order is a random permutation of the original.
    pub fn random<R: Rng>(scenario: &Scenario, rng: &mut R) -> Self {
        let mut domain = BTreeSet::new();
        let docs = scenario.documents.iter().chain(&scenario.tlo_documents);
        for d in docs {
            domain.extend(d.ontology_iri.iter().cloned());
            domain.extend(d.imports.iter().cloned());
            domain.extend(d.classes.iter().cloned());
            domain.extend(d.object_properties.iter().cloned());
            for (c, p) in d.subclass_edges.iter().chain(&d.subproperty_edges) {
                domain.insert(c.clone());
                domain.insert(p.clone());
            }
        }
        for e in &scenario.entries {
            domain.extend(e.ontology_iris.iter().cloned());
            domain.extend(e.mapped_classes());
            domain.extend(e.root_classes.iter().cloned());
            domain.extend(e.lower_bound_classes.iter().cloned());
            domain.extend(e.discouraged_classes.iter().cloned());
            domain.extend(e.property_roots.iter().flatten().cloned());
        }
        let mut targets: Vec<usize> = (0..domain.len()).collect();
        targets.shuffle(rng);
        Self(
            domain
                .into_iter()
                .zip(targets)
                .map(|(from, k)| (from, Iri::from_static(&format!("urn:renamed:{k:05}"))))
                .collect(),
        )
    }

    pub fn iri(&self, iri: &Iri) -> Iri {
        self.0.get(iri).cloned().unwrap_or_else(|| iri.clone())
    }

    fn set(&self, s: &BTreeSet<Iri>) -> BTreeSet<Iri> {
        s.iter().map(|i| self.iri(i)).collect()
    }

    fn edges(&self, s: &BTreeSet<Edge>) -> BTreeSet<Edge> {
        s.iter().map(|(c, p)| (self.iri(c), self.iri(p))).collect()
    }

    pub fn document(&self, d: &OntologyDocument) -> OntologyDocument {
        OntologyDocument {
            ontology_iri: d.ontology_iri.as_ref().map(|i| self.iri(i)),
            source_name: d.source_name.clone(),
            imports: self.set(&d.imports),
            classes: self.set(&d.classes),
            object_properties: self.set(&d.object_properties),
            subclass_edges: self.edges(&d.subclass_edges),
            subproperty_edges: self.edges(&d.subproperty_edges),
            labels: d.labels.iter().map(|(k, v)| (self.iri(k), v.clone())).collect(),
            deprecated: self.set(&d.deprecated),
            opaque_axiom_count: d.opaque_axiom_count,
            diagnostics: d.diagnostics.clone(),
        }
    }

    pub fn entry(&self, e: &TloRegistryEntry) -> TloRegistryEntry {
        TloRegistryEntry {
            id: e.id.clone(),
            ontology_iris: self.set(&e.ontology_iris),
            root_classes: self.set(&e.root_classes),
            lower_bound_classes: self.set(&e.lower_bound_classes),
            breadth_map: e.breadth_map.iter().map(|(a, c)| (*a, self.set(c))).collect(),
            discouraged_classes: self.set(&e.discouraged_classes),
            property_roots: e.property_roots.as_ref().map(|p| self.set(p)),
        }
    }

    pub fn scenario(&self, s: &Scenario) -> Scenario {
        Scenario {
            documents: s.documents.iter().map(|d| self.document(d)).collect(),
            tlo_documents: s.tlo_documents.iter().map(|d| self.document(d)).collect(),
            entries: s.entries.iter().map(|e| self.entry(e)).collect(),
        }
    }
}

/// Adds up to `k` random subclass edges that keep the class graph acyclic.
/// Returns the augmented scenario and the edges actually added.
pub fn augment_dag<R: Rng>(scenario: &Scenario, rng: &mut R, k: usize) -> (Scenario, Vec<Edge>) {
    let mut out = scenario.clone();
    let mut added = Vec::new();
    for _ in 0..k {
        let suite = out.suite().expect("augmentation starts from an acyclic suite");
        let nodes = suite.class_graph().nodes();
        if nodes.len() < 2 {
            break;
        }
        let child = nodes.choose(rng).unwrap().clone();
        let parent = nodes.choose(rng).unwrap().clone();
        if child == parent || suite.ultimately_extends(&parent, &child).unwrap() {
            continue;
        }
        let doc = out.documents.choose_mut(rng).unwrap();
        doc.subclass_edges.insert((child.clone(), parent.clone()));
        added.push((child, parent));
    }
    (out, added)
}

/// Closes a cycle through 2 to 5 native classes, spreading the edges over
/// random documents. Returns the scenario and the cycle as injected.
pub fn inject_cycle<R: Rng>(scenario: &Scenario, rng: &mut R) -> (Scenario, Vec<Iri>) {
    let mut out = scenario.clone();
    let k = rng.gen_range(2..=5);
    let mut members: Vec<Iri> = out.documents.iter().flat_map(|d| d.classes.iter().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
    members.shuffle(rng);
    members.truncate(k);
    while members.len() < k {
        let fresh = Iri::from_static(&format!("https://native.example/Loop{}", members.len()));
        out.documents[0].classes.insert(fresh.clone());
        members.push(fresh);
    }
    for i in 0..k {
        let edge = (members[i].clone(), members[(i + 1) % k].clone());
        out.documents.choose_mut(rng).unwrap().subclass_edges.insert(edge);
    }
    (out, members)
}

/// Serializes a document in the supported Turtle subset.
pub fn to_turtle(d: &OntologyDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "@prefix owl: <http://www.w3.org/2002/07/owl#> .");
    let _ = writeln!(out, "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .");
    let _ = writeln!(out);
    if let Some(o) = &d.ontology_iri {
        let _ = writeln!(out, "<{o}> a owl:Ontology .");
        for i in &d.imports {
            let _ = writeln!(out, "<{o}> owl:imports <{i}> .");
        }
    }
    for c in &d.classes {
        let _ = writeln!(out, "<{c}> a owl:Class .");
    }
    for p in &d.object_properties {
        let _ = writeln!(out, "<{p}> a owl:ObjectProperty .");
    }
    for (c, p) in &d.subclass_edges {
        let _ = writeln!(out, "<{c}> rdfs:subClassOf <{p}> .");
    }
    for (c, p) in &d.subproperty_edges {
        let _ = writeln!(out, "<{c}> rdfs:subPropertyOf <{p}> .");
    }
    for (i, l) in &d.labels {
        let _ = writeln!(out, "<{i}> rdfs:label \"{}\" .", escape_literal(l));
    }
    out
}
