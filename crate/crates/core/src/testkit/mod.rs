//! Test support: a brute-force oracle, seeded random suite generators and
//! suite transformations. Enabled by the `testkit` feature; not a stable API.

mod generate;
mod oracle;
mod transform;

use crate::error::Result;
use crate::model::{assemble_suite, OntologyDocument, Suite};
use crate::registry::{Registry, TloRegistryEntry};

pub use generate::{bounded_areas_scenario, random_scenario, GenParams};
pub use oracle::{evidence_keys, EvidenceKey, Oracle};
pub use transform::{augment_dag, inject_cycle, to_turtle, Renaming};

/// Everything needed to evaluate a suite: documents, TLO documents and the
/// registry entries.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub documents: Vec<OntologyDocument>,
    pub tlo_documents: Vec<OntologyDocument>,
    pub entries: Vec<TloRegistryEntry>,
}

impl Scenario {
    pub fn suite(&self) -> Result<Suite> {
        assemble_suite(self.documents.clone(), self.tlo_documents.clone())
    }

    pub fn registry(&self) -> Result<Registry> {
        Registry::new(self.entries.clone())
    }

    pub fn oracle(&self) -> Oracle {
        Oracle::new(&self.documents, &self.tlo_documents)
    }

    /// A bundled fixture assembled against the bundled BFO registry.
    pub fn from_fixture(fixture: &crate::corpus::Fixture) -> Result<Self> {
        Ok(Self {
            documents: crate::corpus::load_files(fixture.files)?,
            tlo_documents: vec![crate::corpus::bfo_document()],
            entries: crate::corpus::registry().entries().cloned().collect(),
        })
    }
}
