use std::collections::{BTreeMap, BTreeSet};

use crate::iri::{vocab, Iri};
use crate::turtle::{Diagnostic, ParsedDocument, Term};

use super::graph::Edge;

/// The ontology content of one source document.
///
/// Subclass-edge endpoints need not be declared in this document; documents
/// routinely point at classes declared elsewhere in the suite.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OntologyDocument {
    pub ontology_iri: Option<Iri>,
    pub source_name: String,
    pub imports: BTreeSet<Iri>,
    pub classes: BTreeSet<Iri>,
    pub object_properties: BTreeSet<Iri>,
    pub subclass_edges: BTreeSet<Edge>,
    pub subproperty_edges: BTreeSet<Edge>,
    pub labels: BTreeMap<Iri, String>,
    /// Always a subset of `classes ∪ object_properties`.
    pub deprecated: BTreeSet<Iri>,
    /// Class expressions the model does not interpret: statements skipped for
    /// `[...]`/`(...)` plus subclass axioms whose object is a blank node.
    pub opaque_axiom_count: usize,
    pub diagnostics: Vec<Diagnostic>,
}

impl OntologyDocument {
    pub fn new(source_name: impl Into<String>) -> Self {
        Self {
            source_name: source_name.into(),
            ..Self::default()
        }
    }

    pub fn label(&self, iri: &Iri) -> Option<&str> {
        self.labels.get(iri).map(String::as_str)
    }
}

/// Parses `text` and assembles it in one step.
pub fn load_document(text: &str, source_name: &str) -> crate::Result<OntologyDocument> {
    let parsed = crate::turtle::parse_document(text, None)?;
    Ok(assemble_document(&parsed, source_name))
}

/// Extracts declarations, taxonomy edges, imports, labels and deprecation flags.
pub fn assemble_document(parsed: &ParsedDocument, source_name: &str) -> OntologyDocument {
    let mut doc = OntologyDocument::new(source_name);
    doc.diagnostics = parsed.diagnostics.clone();
    doc.opaque_axiom_count = parsed.skipped_class_expressions();
    let mut deprecated = BTreeSet::new();

    for t in &parsed.triples {
        let subject = t.subject.as_iri();
        match t.predicate.as_str() {
            vocab::RDF_TYPE => {
                let (Some(s), Some(o)) = (subject, t.object.as_iri()) else { continue };
                match o.as_str() {
                    vocab::OWL_CLASS => {
                        doc.classes.insert(s.clone());
                    }
                    vocab::OWL_OBJECT_PROPERTY => {
                        doc.object_properties.insert(s.clone());
                    }
                    vocab::OWL_ONTOLOGY if doc.ontology_iri.is_none() => {
                        doc.ontology_iri = Some(s.clone());
                    }
                    _ => {}
                }
            }
            vocab::RDFS_SUBCLASS_OF => match (subject, &t.object) {
                (Some(s), Term::Iri(o)) => {
                    doc.subclass_edges.insert((s.clone(), o.clone()));
                }
                (_, Term::BlankNode(_)) => doc.opaque_axiom_count += 1,
                _ => {}
            },
            vocab::RDFS_SUBPROPERTY_OF => {
                if let (Some(s), Some(o)) = (subject, t.object.as_iri()) {
                    doc.subproperty_edges.insert((s.clone(), o.clone()));
                }
            }
            vocab::OWL_IMPORTS => {
                if let Some(o) = t.object.as_iri() {
                    doc.imports.insert(o.clone());
                }
            }
            vocab::RDFS_LABEL => {
                if let (Some(s), Term::Literal(lit)) = (subject, &t.object) {
                    doc.labels.entry(s.clone()).or_insert_with(|| lit.lexical.clone());
                }
            }
            vocab::OWL_DEPRECATED => {
                if let (Some(s), Term::Literal(lit)) = (subject, &t.object) {
                    let boolean = lit.datatype.as_ref().is_none_or(|d| d.as_str() == vocab::XSD_BOOLEAN);
                    if boolean && lit.language.is_none() && lit.lexical == "true" {
                        deprecated.insert(s.clone());
                    }
                }
            }
            _ => {}
        }
    }
    doc.deprecated = deprecated
        .into_iter()
        .filter(|i| doc.classes.contains(i) || doc.object_properties.contains(i))
        .collect();
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::turtle::parse_document;

    const PREAMBLE: &str = "@prefix ex: <http://ex.org/> .\n\
        @prefix owl: <http://www.w3.org/2002/07/owl#> .\n\
        @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n\
        @prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n\
        @prefix obo: <http://purl.obolibrary.org/obo/> .\n";

    fn doc(body: &str) -> OntologyDocument {
        let parsed = parse_document(&format!("{PREAMBLE}{body}"), None).unwrap();
        assemble_document(&parsed, "test.ttl")
    }

    fn iri(s: &str) -> Iri {
        Iri::from_static(s)
    }

    #[test]
    fn single_class() {
        let d = doc("ex:A a owl:Class .");
        assert_eq!(d.classes, BTreeSet::from([iri("http://ex.org/A")]));
        assert!(d.subclass_edges.is_empty());
    }

    #[test]
    fn subclass_edge_to_undeclared_parent() {
        let d = doc("ex:A a owl:Class ; rdfs:subClassOf obo:BFO_0000001 .");
        assert_eq!(
            d.subclass_edges,
            BTreeSet::from([(iri("http://ex.org/A"), iri("http://purl.obolibrary.org/obo/BFO_0000001"))])
        );
    }

    #[test]
    fn ontology_header_and_imports() {
        let d = doc("ex:O a owl:Ontology ; owl:imports obo:bfo.owl .");
        assert_eq!(d.ontology_iri, Some(iri("http://ex.org/O")));
        assert_eq!(d.imports, BTreeSet::from([iri("http://purl.obolibrary.org/obo/bfo.owl")]));
    }

    #[test]
    fn labels_properties_and_deprecation() {
        let d = doc(
            "ex:A a owl:Class ; rdfs:label \"alpha\"@en , \"second\" ; owl:deprecated \"true\"^^xsd:boolean .\n\
             ex:p a owl:ObjectProperty ; rdfs:subPropertyOf ex:q ; owl:deprecated \"false\"^^xsd:boolean .\n\
             ex:Ghost owl:deprecated \"true\" .",
        );
        assert_eq!(d.label(&iri("http://ex.org/A")), Some("alpha"));
        assert_eq!(d.object_properties, BTreeSet::from([iri("http://ex.org/p")]));
        assert_eq!(d.subproperty_edges.len(), 1);
        assert_eq!(d.deprecated, BTreeSet::from([iri("http://ex.org/A")]));
    }

    #[test]
    fn opaque_axioms_are_counted() {
        let d = doc(
            "ex:A a owl:Class ; rdfs:subClassOf _:r1 .\n\
             ex:B rdfs:subClassOf [ a owl:Restriction ] .\n\
             ex:C owl:unionOf ( ex:A ex:B ) .",
        );
        assert_eq!(d.opaque_axiom_count, 3);
        assert!(d.subclass_edges.is_empty());
        assert_eq!(d.diagnostics.len(), 2);
    }
}
