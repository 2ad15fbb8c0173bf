use std::collections::BTreeSet;

use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;

use crate::iri::Iri;
use crate::model::OntologyDocument;
use crate::registry::{BreadthArea, TloRegistryEntry};

use super::Scenario;

pub const TLO_ONTOLOGY: &str = "https://tlo.example/tlo.owl";

#[derive(Debug, Clone, Copy)]
pub struct GenParams {
    pub max_classes: usize,
    pub max_documents: usize,
    /// Upper end of the native edge density, drawn uniformly from `[0, max_density]`.
    pub max_density: f64,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            max_classes: 50,
            max_documents: 5,
            max_density: 0.3,
        }
    }
}

fn tlo(name: &str) -> Iri {
    Iri::from_static(&format!("https://tlo.example/{name}"))
}

fn native(i: usize) -> Iri {
    Iri::from_static(&format!("https://native.example/N{i}"))
}

fn native_property(i: usize) -> Iri {
    Iri::from_static(&format!("https://native.example/p{i}"))
}

/// A random TLO tree under `Root` and its registry entry.
fn random_tlo<R: Rng>(rng: &mut R) -> (OntologyDocument, TloRegistryEntry, Vec<Iri>) {
    let mut doc = OntologyDocument::new("tlo.ttl");
    doc.ontology_iri = Some(Iri::from_static(TLO_ONTOLOGY));
    let root = tlo("Root");
    doc.classes.insert(root.clone());
    let m = rng.gen_range(15..=25);
    let mut classes = vec![root.clone()];
    for i in 1..=m {
        let c = tlo(&format!("T{i}"));
        let parent = classes.choose(rng).unwrap().clone();
        doc.classes.insert(c.clone());
        doc.subclass_edges.insert((c.clone(), parent));
        classes.push(c);
    }
    let rel = tlo("rel");
    doc.object_properties.insert(rel.clone());

    let non_root = &classes[1..];
    let breadth_map = BreadthArea::ALL
        .into_iter()
        .map(|a| {
            let k = rng.gen_range(1..=2);
            (a, non_root.choose_multiple(rng, k).cloned().collect::<BTreeSet<_>>())
        })
        .collect();
    let parents: BTreeSet<&Iri> = doc.subclass_edges.iter().map(|(_, p)| p).collect();
    let leaves: Vec<Iri> = non_root.iter().filter(|c| !parents.contains(c)).cloned().collect();
    let lower_bound_classes = leaves.iter().filter(|_| rng.gen_bool(0.7)).cloned().collect::<BTreeSet<_>>();
    let lower_bound_classes = if lower_bound_classes.is_empty() {
        leaves.iter().take(1).cloned().collect()
    } else {
        lower_bound_classes
    };
    let discouraged_count = rng.gen_range(0..=2);
    let discouraged_classes = non_root.choose_multiple(rng, discouraged_count).cloned().collect();
    let entry = TloRegistryEntry {
        id: "tlo".into(),
        ontology_iris: [Iri::from_static(TLO_ONTOLOGY)].into(),
        root_classes: [root].into(),
        lower_bound_classes,
        breadth_map,
        discouraged_classes,
        property_roots: Some([rel].into()),
    };
    (doc, entry, non_root.to_vec())
}

/// Native documents over a random DAG of at most `params.max_classes` classes.
///
/// Edges only run from higher to lower class index (or into the TLO), so the
/// result is acyclic.
fn random_natives<R: Rng>(rng: &mut R, params: GenParams, tlo_classes: &[Iri]) -> Vec<OntologyDocument> {
    let n = rng.gen_range(1..=params.max_classes);
    let d = rng.gen_range(1..=params.max_documents);
    let density = rng.gen_range(0.0..=params.max_density);
    let attach = rng.gen_range(0.2..=1.0);

    let mut docs: Vec<OntologyDocument> = (0..d).map(|i| OntologyDocument::new(format!("d{i}.ttl"))).collect();
    for (i, doc) in docs.iter_mut().enumerate() {
        doc.ontology_iri = Some(Iri::from_static(&format!("https://native.example/d{i}")));
        if rng.gen_bool(0.6) {
            doc.imports.insert(Iri::from_static(TLO_ONTOLOGY));
        }
    }
    let home: Vec<usize> = (0..n).map(|_| rng.gen_range(0..d)).collect();
    for i in 0..n {
        let c = native(i);
        docs[home[i]].classes.insert(c.clone());
        if d > 1 && rng.gen_bool(0.05) {
            docs[rng.gen_range(0..d)].classes.insert(c.clone());
        }
        for j in 0..i {
            if rng.gen_bool(density) {
                docs[home[i]].subclass_edges.insert((c.clone(), native(j)));
            }
        }
        if rng.gen_bool(attach) {
            let parent = tlo_classes.choose(rng).unwrap().clone();
            docs[home[i]].subclass_edges.insert((c, parent));
        }
    }
    for doc in &mut docs {
        // Redeclaring a TLO class must not make it native.
        if rng.gen_bool(0.1) {
            doc.classes.insert(tlo_classes.choose(rng).unwrap().clone());
        }
    }
    for i in 0..rng.gen_range(0..=3) {
        let doc = docs.choose_mut(rng).unwrap();
        let p = native_property(i);
        doc.object_properties.insert(p.clone());
        if rng.gen_bool(0.5) {
            doc.subproperty_edges.insert((p, tlo("rel")));
        }
    }
    docs
}

/// A random scenario: ≤ 50 native classes in ≤ 5 documents, native edge
/// density in `[0, 0.3]`, against a random TLO with one registry entry.
pub fn random_scenario<R: Rng>(rng: &mut R, params: GenParams) -> Scenario {
    let (tlo_doc, entry, tlo_classes) = random_tlo(rng);
    Scenario {
        documents: random_natives(rng, params, &tlo_classes),
        tlo_documents: vec![tlo_doc],
        entries: vec![entry],
    }
}

/// Like [`random_scenario`], but every breadth area's mapped set intersects the
/// lower bound. About half the scenarios also extend every lower-bound class,
/// so that suites with no double-star findings actually occur.
pub fn bounded_areas_scenario<R: Rng>(rng: &mut R, params: GenParams) -> Scenario {
    let mut s = random_scenario(rng, params);
    let entry = &mut s.entries[0];
    for mapped in entry.breadth_map.values() {
        if mapped.is_disjoint(&entry.lower_bound_classes) {
            let pick = mapped.iter().choose(rng).unwrap().clone();
            entry.lower_bound_classes.insert(pick);
        }
    }
    if rng.gen_bool(0.5) {
        for (k, lower) in entry.lower_bound_classes.iter().enumerate() {
            let child = Iri::from_static(&format!("https://native.example/Below{k}"));
            let doc = s.documents.choose_mut(rng).unwrap();
            doc.classes.insert(child.clone());
            doc.subclass_edges.insert((child, lower.clone()));
        }
    }
    s
}
