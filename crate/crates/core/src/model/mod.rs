//! Ontology structure: per-document declarations, assembled suites, and
//! reachability over the asserted subclass graph.

mod bounds;
mod document;
mod graph;
mod module;
mod suite;

pub use bounds::{bound_profile, BoundProfile};
pub use document::{assemble_document, load_document, OntologyDocument};
pub use graph::{Edge, TaxonomyGraph};
pub use module::OntologyModule;
pub use suite::{assemble_suite, DocRef, Suite};

/// Free-function form of [`Suite::ultimately_extends`].
pub fn ultimately_extends(suite: &Suite, class: &crate::Iri, root: &crate::Iri) -> crate::Result<bool> {
    suite.ultimately_extends(class, root)
}
