//! Conformance linter for mid-level ontology suites.
//!
//! The pipeline is: [`turtle::parse_document`] → [`model::assemble_document`]
//! → [`model::assemble_suite`] → [`criteria::classify_middle_architecture`]
//! → [`report`]. A [`registry::Registry`] declares which top-level ontologies
//! count, together with their root classes, lower bound, breadth-area mapping
//! and discouraged classes.

pub mod corpus;
pub mod criteria;
pub mod error;
pub mod finding;
pub mod iri;
pub mod model;
pub mod registry;
pub mod report;
#[cfg(feature = "testkit")]
pub mod testkit;
pub mod turtle;

pub use criteria::{classify_middle_architecture, classify_with, AdvisoryOptions, CriterionId, MembershipReport, Verdict, VerdictSet};
pub use error::{Error, Position, Result};
pub use finding::{Finding, FindingSeverity};
pub use iri::Iri;
pub use model::{assemble_document, assemble_suite, bound_profile, load_document, OntologyDocument, Suite};
pub use registry::{load_registry, BreadthArea, Registry, TloRegistryEntry};
pub use report::{render_json, render_text, Report};
