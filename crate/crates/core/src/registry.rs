//! Declarative registry of top-level ontologies.
//!
//! Whether a top-level ontology meets ISO/IEC 21838-1 is declared here, never
//! computed. Each entry names the ontology IRIs that count as adopting it, its
//! root classes, lower-bound classes, a class mapping for each of the fifteen
//! breadth areas, and classes whose extension is discouraged.
//!
//! The on-disk format is TOML:
//!
//! ```toml
//! [[entries]]
//! id = "bfo"
//! ontology-iris = ["http://purl.obolibrary.org/obo/bfo.owl"]
//! root-classes = ["http://purl.obolibrary.org/obo/BFO_0000001"]
//! lower-bound-classes = []
//! discouraged-classes = []
//! property-roots = []            # optional
//!
//! [entries.breadth-map]
//! "Space and Time" = ["http://purl.obolibrary.org/obo/BFO_0000011"]
//! # ... one key per breadth area
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finding::Finding;
use crate::iri::Iri;
use crate::model::{OntologyDocument, TaxonomyGraph};

/// The fifteen breadth areas a top-level ontology must address.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BreadthArea {
    SpaceAndTime,
    QualitiesAndOtherAttributes,
    ActualityAndPossibility,
    QuantitiesAndMathematicalEntities,
    ClassesAndTypes,
    ProcessesAndEvents,
    TimeAndChange,
    Constitution,
    PartsWholesUnityBoundaries,
    Causality,
    SpaceAndPlace,
    InformationAndReference,
    ScaleAndGranularity,
    ArtifactsSociallyConstructedEntities,
    MentalEntitiesFiction,
}

impl BreadthArea {
    pub const ALL: [BreadthArea; 15] = [
        BreadthArea::SpaceAndTime,
        BreadthArea::QualitiesAndOtherAttributes,
        BreadthArea::ActualityAndPossibility,
        BreadthArea::QuantitiesAndMathematicalEntities,
        BreadthArea::ClassesAndTypes,
        BreadthArea::ProcessesAndEvents,
        BreadthArea::TimeAndChange,
        BreadthArea::Constitution,
        BreadthArea::PartsWholesUnityBoundaries,
        BreadthArea::Causality,
        BreadthArea::SpaceAndPlace,
        BreadthArea::InformationAndReference,
        BreadthArea::ScaleAndGranularity,
        BreadthArea::ArtifactsSociallyConstructedEntities,
        BreadthArea::MentalEntitiesFiction,
    ];

    /// The area's name; also its key in registry files.
    pub fn name(self) -> &'static str {
        match self {
            BreadthArea::SpaceAndTime => "Space and Time",
            BreadthArea::QualitiesAndOtherAttributes => "Qualities and other Attributes",
            BreadthArea::ActualityAndPossibility => "Actuality and Possibility",
            BreadthArea::QuantitiesAndMathematicalEntities => "Quantities and Mathematical Entities",
            BreadthArea::ClassesAndTypes => "Classes and Types",
            BreadthArea::ProcessesAndEvents => "Processes and Events",
            BreadthArea::TimeAndChange => "Time and Change",
            BreadthArea::Constitution => "Constitution",
            BreadthArea::PartsWholesUnityBoundaries => "Parts, Wholes, Unity, Boundaries",
            BreadthArea::Causality => "Causality",
            BreadthArea::SpaceAndPlace => "Space and Place",
            BreadthArea::InformationAndReference => "Information and Reference",
            BreadthArea::ScaleAndGranularity => "Scale and Granularity",
            BreadthArea::ArtifactsSociallyConstructedEntities => "Artifacts, Socially Constructed Entities",
            BreadthArea::MentalEntitiesFiction => "Mental entities, imagined entities, fiction, mythology, and religion",
        }
    }
}

impl fmt::Display for BreadthArea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BreadthArea {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BreadthArea::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::RegistrySchema(format!("unknown breadth area '{s}'")))
    }
}

impl Serialize for BreadthArea {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for BreadthArea {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TloRegistryEntry {
    pub id: String,
    pub ontology_iris: BTreeSet<Iri>,
    pub root_classes: BTreeSet<Iri>,
    pub lower_bound_classes: BTreeSet<Iri>,
    /// Has a non-empty entry for every [`BreadthArea`].
    pub breadth_map: BTreeMap<BreadthArea, BTreeSet<Iri>>,
    pub discouraged_classes: BTreeSet<Iri>,
    pub property_roots: Option<BTreeSet<Iri>>,
}

impl TloRegistryEntry {
    pub fn area_classes(&self, area: BreadthArea) -> &BTreeSet<Iri> {
        static EMPTY: BTreeSet<Iri> = BTreeSet::new();
        self.breadth_map.get(&area).unwrap_or(&EMPTY)
    }

    /// Union of all breadth-area mappings.
    pub fn mapped_classes(&self) -> BTreeSet<Iri> {
        self.breadth_map.values().flatten().cloned().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Registry {
    entries: BTreeMap<String, TloRegistryEntry>,
}

impl Registry {
    pub fn new(entries: impl IntoIterator<Item = TloRegistryEntry>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for entry in entries {
            if map.contains_key(&entry.id) {
                return Err(Error::RegistryDup(entry.id));
            }
            check_areas(&entry)?;
            if entry.ontology_iris.is_empty() {
                return Err(Error::RegistrySchema(format!("entry '{}' has no ontology-iris", entry.id)));
            }
            if entry.root_classes.is_empty() {
                return Err(Error::RegistrySchema(format!("entry '{}' has no root-classes", entry.id)));
            }
            map.insert(entry.id.clone(), entry);
        }
        if map.is_empty() {
            return Err(Error::RegistrySchema("registry has no entries".into()));
        }
        Ok(Self { entries: map })
    }

    /// Entries ordered by id.
    pub fn entries(&self) -> impl Iterator<Item = &TloRegistryEntry> {
        self.entries.values()
    }

    pub fn get(&self, id: &str) -> Option<&TloRegistryEntry> {
        self.entries.get(id)
    }

    pub fn ids(&self) -> Vec<String> {
        self.entries.keys().cloned().collect()
    }

    pub fn to_toml(&self) -> String {
        let file = RegistryFile {
            entries: self.entries.values().map(RawEntry::from).collect(),
        };
        toml::to_string(&file).unwrap_or_default()
    }
}

fn check_areas(entry: &TloRegistryEntry) -> Result<()> {
    let missing: Vec<String> = BreadthArea::ALL
        .into_iter()
        .filter(|a| entry.breadth_map.get(a).is_none_or(BTreeSet::is_empty))
        .map(|a| a.name().to_string())
        .collect();
    if missing.is_empty() {
        Ok(())
    } else {
        Err(Error::RegistryAreas {
            entry: entry.id.clone(),
            missing,
        })
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RegistryFile {
    #[serde(default)]
    entries: Vec<RawEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct RawEntry {
    id: String,
    ontology_iris: Vec<Iri>,
    root_classes: Vec<Iri>,
    #[serde(default)]
    lower_bound_classes: Vec<Iri>,
    #[serde(default)]
    discouraged_classes: Vec<Iri>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    property_roots: Option<Vec<Iri>>,
    #[serde(default)]
    breadth_map: BTreeMap<String, Vec<Iri>>,
}

impl From<&TloRegistryEntry> for RawEntry {
    fn from(e: &TloRegistryEntry) -> Self {
        Self {
            id: e.id.clone(),
            ontology_iris: e.ontology_iris.iter().cloned().collect(),
            root_classes: e.root_classes.iter().cloned().collect(),
            lower_bound_classes: e.lower_bound_classes.iter().cloned().collect(),
            discouraged_classes: e.discouraged_classes.iter().cloned().collect(),
            property_roots: e.property_roots.as_ref().map(|p| p.iter().cloned().collect()),
            breadth_map: e
                .breadth_map
                .iter()
                .map(|(a, c)| (a.name().to_string(), c.iter().cloned().collect()))
                .collect(),
        }
    }
}

impl TryFrom<RawEntry> for TloRegistryEntry {
    type Error = Error;

    fn try_from(raw: RawEntry) -> Result<Self> {
        if raw.id.trim().is_empty() {
            return Err(Error::RegistrySchema("entry with empty id".into()));
        }
        let mut breadth_map = BTreeMap::new();
        for (name, classes) in raw.breadth_map {
            let area: BreadthArea = name.parse()?;
            breadth_map.insert(area, classes.into_iter().collect());
        }
        Ok(Self {
            id: raw.id,
            ontology_iris: raw.ontology_iris.into_iter().collect(),
            root_classes: raw.root_classes.into_iter().collect(),
            lower_bound_classes: raw.lower_bound_classes.into_iter().collect(),
            breadth_map,
            discouraged_classes: raw.discouraged_classes.into_iter().collect(),
            property_roots: raw.property_roots.map(|p| p.into_iter().collect()),
        })
    }
}

/// Parses and validates a registry document.
pub fn load_registry(text: &str) -> Result<Registry> {
    let file: RegistryFile = toml::from_str(text).map_err(|e| Error::RegistrySchema(e.message().to_string()))?;
    let mut seen = BTreeSet::new();
    let mut entries = Vec::with_capacity(file.entries.len());
    for raw in file.entries {
        if !seen.insert(raw.id.clone()) {
            return Err(Error::RegistryDup(raw.id));
        }
        entries.push(TloRegistryEntry::try_from(raw)?);
    }
    Registry::new(entries)
}

/// Checks an entry against its own top-level ontology document: every root,
/// breadth-area, lower-bound and discouraged class must be declared there,
/// and every non-root one must reach a root class through that document's
/// own subclass edges.
pub fn validate_entry_against_tlo(entry: &TloRegistryEntry, tlo_doc: &OntologyDocument) -> Vec<Finding> {
    let graph = TaxonomyGraph::new(tlo_doc.classes.iter().cloned(), &tlo_doc.subclass_edges);
    let root_ids: Vec<usize> = entry.root_classes.iter().filter_map(|r| graph.id(r)).collect();
    let under_root = graph.descendants_mask(root_ids);

    let mut roles: Vec<(String, &Iri)> = Vec::new();
    for root in &entry.root_classes {
        roles.push(("root class".into(), root));
    }
    for (area, classes) in &entry.breadth_map {
        for c in classes {
            roles.push((format!("breadth area '{area}'"), c));
        }
    }
    for c in &entry.lower_bound_classes {
        roles.push(("lower-bound class".into(), c));
    }
    for c in &entry.discouraged_classes {
        roles.push(("discouraged class".into(), c));
    }

    let mut findings = Vec::new();
    for (role, class) in roles {
        let problem = if !tlo_doc.classes.contains(class) {
            Some(("REGISTRY_UNDECLARED", format!("{role} {class} is not declared in {}", tlo_doc.source_name)))
        } else if !graph.id(class).is_some_and(|id| under_root[id]) {
            Some(("REGISTRY_UNROOTED", format!("{role} {class} does not reach a root class of '{}'", entry.id)))
        } else {
            None
        };
        if let Some((code, message)) = problem {
            findings.push(
                Finding::violation(code, message)
                    .with_entities([class.clone()])
                    .with_documents([tlo_doc.source_name.clone()]),
            );
        }
    }
    findings.sort();
    findings
}
