//! Independent reimplementation of DELIMIT, HUB and INHERITANCE over a dense
//! reachability matrix. Shares no code with `model` or `criteria`.

use std::collections::{BTreeMap, BTreeSet};

use crate::criteria::Verdict;
use crate::finding::FindingSeverity;
use crate::iri::Iri;
use crate::model::OntologyDocument;
use crate::registry::{BreadthArea, TloRegistryEntry};

/// A finding with its message dropped.
pub type EvidenceKey = (FindingSeverity, String, Vec<Iri>, Vec<String>);

pub fn evidence_keys(verdict: &Verdict) -> BTreeSet<EvidenceKey> {
    verdict
        .evidence
        .iter()
        .map(|f| (f.severity, f.code.clone(), f.entities.clone(), f.documents.clone()))
        .collect()
}

fn key(severity: FindingSeverity, code: &str, entities: impl IntoIterator<Item = Iri>, documents: impl IntoIterator<Item = String>) -> EvidenceKey {
    let entities: BTreeSet<Iri> = entities.into_iter().collect();
    let documents: BTreeSet<String> = documents.into_iter().collect();
    (severity, code.to_string(), entities.into_iter().collect(), documents.into_iter().collect())
}

/// Reflexive-transitive closure by Floyd–Warshall.
struct Closure {
    index: BTreeMap<Iri, usize>,
    reach: Vec<Vec<bool>>,
}

impl Closure {
    #[allow(clippy::needless_range_loop)]
    fn new(nodes: BTreeSet<Iri>, edges: &BTreeSet<(Iri, Iri)>) -> Self {
        let mut nodes = nodes;
        for (c, p) in edges {
            nodes.insert(c.clone());
            nodes.insert(p.clone());
        }
        let index: BTreeMap<Iri, usize> = nodes.into_iter().enumerate().map(|(i, n)| (n, i)).collect();
        let n = index.len();
        let mut reach = vec![vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for (c, p) in edges {
            reach[index[c]][index[p]] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        Self { index, reach }
    }

    fn reaches(&self, a: &Iri, b: &Iri) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.reach[i][j],
            _ => false,
        }
    }

    fn has_cycle(&self) -> bool {
        let n = self.reach.len();
        (0..n).any(|i| (0..n).any(|j| i != j && self.reach[i][j] && self.reach[j][i]))
    }
}

pub struct Oracle {
    documents: Vec<OntologyDocument>,
    classes: Closure,
    properties: Closure,
    native_classes: BTreeSet<Iri>,
    native_properties: BTreeSet<Iri>,
    all_classes: BTreeSet<Iri>,
    all_edges: BTreeSet<(Iri, Iri)>,
}

impl Oracle {
    pub fn new(documents: &[OntologyDocument], tlo_documents: &[OntologyDocument]) -> Self {
        let mut documents = documents.to_vec();
        documents.sort_by(|a, b| a.source_name.cmp(&b.source_name));
        let all = || documents.iter().chain(tlo_documents);

        let tlo_classes: BTreeSet<Iri> = tlo_documents.iter().flat_map(|d| d.classes.clone()).collect();
        let tlo_props: BTreeSet<Iri> = tlo_documents.iter().flat_map(|d| d.object_properties.clone()).collect();
        let native_classes = documents
            .iter()
            .flat_map(|d| d.classes.clone())
            .filter(|c| !tlo_classes.contains(c))
            .collect();
        let native_properties = documents
            .iter()
            .flat_map(|d| d.object_properties.clone())
            .filter(|p| !tlo_props.contains(p))
            .collect();

        let class_edges: BTreeSet<(Iri, Iri)> = all().flat_map(|d| d.subclass_edges.clone()).collect();
        let prop_edges: BTreeSet<(Iri, Iri)> = all().flat_map(|d| d.subproperty_edges.clone()).collect();
        let class_nodes: BTreeSet<Iri> = all().flat_map(|d| d.classes.clone()).collect();
        let prop_nodes: BTreeSet<Iri> = all().flat_map(|d| d.object_properties.clone()).collect();

        let classes = Closure::new(class_nodes, &class_edges);
        let mut all_classes: BTreeSet<Iri> = classes.index.keys().cloned().collect();
        all_classes.extend(class_edges.iter().flat_map(|(c, p)| [c.clone(), p.clone()]));
        Self {
            classes,
            properties: Closure::new(prop_nodes, &prop_edges),
            native_classes,
            native_properties,
            all_classes,
            all_edges: class_edges,
            documents,
        }
    }

    pub fn reaches(&self, a: &Iri, b: &Iri) -> bool {
        self.classes.reaches(a, b)
    }

    pub fn has_cycle(&self) -> bool {
        self.classes.has_cycle()
    }

    fn declaring(&self, iri: &Iri) -> Vec<String> {
        self.documents
            .iter()
            .filter(|d| d.classes.contains(iri) || d.object_properties.contains(iri))
            .map(|d| d.source_name.clone())
            .collect()
    }

    fn own_native(&self, d: &OntologyDocument) -> BTreeSet<Iri> {
        d.classes.intersection(&self.native_classes).cloned().collect()
    }

    pub fn delimit(&self, entry: &TloRegistryEntry) -> BTreeSet<EvidenceKey> {
        let mut out = BTreeSet::new();
        for c in &self.native_classes {
            if !entry.root_classes.iter().any(|r| self.classes.reaches(c, r)) {
                out.insert(key(FindingSeverity::Violation, "DELIMIT_ORPHAN", [c.clone()], self.declaring(c)));
            }
        }
        if let Some(roots) = &entry.property_roots {
            for p in &self.native_properties {
                if !roots.iter().any(|r| self.properties.reaches(p, r)) {
                    out.insert(key(FindingSeverity::Warning, "DELIMIT_PROPERTY_UNROOTED", [p.clone()], self.declaring(p)));
                }
            }
        }
        out
    }

    fn scope_set(&self, d: &OntologyDocument) -> BTreeSet<Iri> {
        let own = self.own_native(d);
        let attachment: Vec<&Iri> = own
            .iter()
            .filter(|c| !self.all_edges.iter().any(|(x, p)| x == *c && own.contains(p)))
            .collect();
        self.native_classes
            .iter()
            .filter(|n| attachment.iter().any(|a| self.classes.reaches(n, a)))
            .cloned()
            .collect()
    }

    pub fn hub(&self) -> BTreeSet<EvidenceKey> {
        let mut out = BTreeSet::new();
        for d in &self.documents {
            let own = self.own_native(d);
            if own.is_empty() {
                out.insert(key(FindingSeverity::Violation, "HUB_EMPTY", [], [d.source_name.clone()]));
                continue;
            }
            let attachment = own
                .iter()
                .filter(|c| !self.all_edges.iter().any(|(x, p)| x == *c && own.contains(p)))
                .cloned();
            out.insert(key(FindingSeverity::Info, "HUB_ATTACHMENT", attachment, [d.source_name.clone()]));
            if d.classes == self.all_classes && d.subclass_edges == self.all_edges {
                out.insert(key(FindingSeverity::Warning, "HUB_NOT_PROPER", [], [d.source_name.clone()]));
            }
        }
        for (i, a) in self.documents.iter().enumerate() {
            for b in &self.documents[i + 1..] {
                let mut shared: BTreeSet<Iri> = self.own_native(a).intersection(&self.own_native(b)).cloned().collect();
                shared.extend(self.scope_set(a).intersection(&self.scope_set(b)).cloned());
                if !shared.is_empty() {
                    out.insert(key(
                        FindingSeverity::Violation,
                        "HUB_OVERLAP",
                        shared,
                        [a.source_name.clone(), b.source_name.clone()],
                    ));
                }
            }
        }
        out
    }

    pub fn inheritance(&self, entry: &TloRegistryEntry) -> (BTreeSet<EvidenceKey>, Vec<BreadthArea>) {
        let mut out = BTreeSet::new();
        let mut uncovered = Vec::new();
        for area in BreadthArea::ALL {
            let mapped = entry.breadth_map.get(&area).cloned().unwrap_or_default();
            let covered = self
                .native_classes
                .iter()
                .any(|n| mapped.iter().any(|m| self.classes.reaches(n, m)));
            if covered {
                out.insert(key(FindingSeverity::Info, "INHERITANCE_COVERED", mapped, []));
            } else {
                uncovered.push(area);
                out.insert(key(FindingSeverity::Violation, "INHERITANCE_UNCOVERED", mapped, []));
            }
        }
        let all_mapped: BTreeSet<Iri> = entry.breadth_map.values().flatten().cloned().collect();
        for n in &self.native_classes {
            if !all_mapped.iter().any(|m| self.classes.reaches(n, m)) {
                out.insert(key(FindingSeverity::Warning, "INHERITANCE_UNMAPPED", [n.clone()], self.declaring(n)));
            }
        }
        (out, uncovered)
    }

    /// Lower-bound classes without a strict native descendant.
    pub fn double_star(&self, entry: &TloRegistryEntry) -> BTreeSet<Iri> {
        entry
            .lower_bound_classes
            .iter()
            .filter(|l| !self.native_classes.iter().any(|n| n != *l && self.classes.reaches(n, l)))
            .cloned()
            .collect()
    }
}
