//! Parsing of ontology documents written in a bounded Turtle subset.
//!
//! Supported: `@prefix` / `@base`, `subject predicate-object-list .`
//! statements with `;` and `,` lists, `a`, IRIs, prefixed names, labelled
//! blank nodes and string literals (plain, language-tagged or typed), and `#`
//! comments. Statements that use blank node property lists, collections,
//! long (triple-quoted) strings or numeric/boolean shorthand are skipped whole
//! with a warning.

mod lexer;
mod ntriples;
mod parser;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Position};
use crate::iri::Iri;

pub use ntriples::{escape_literal, term_to_ntriples, to_ntriples};
pub use parser::parse_document;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub lexical: String,
    pub language: Option<String>,
    pub datatype: Option<Iri>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Iri(Iri),
    /// A labelled blank node, stored without the `_:` prefix.
    BlankNode(String),
    Literal(Literal),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::BlankNode(_))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&term_to_ntriples(self))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub subject: Term,
    pub predicate: Iri,
    pub object: Term,
    /// Position of the object token.
    pub position: Position,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Severity {
    Warning,
    Error,
}

/// Recognized Turtle constructs that are outside the supported subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Construct {
    BlankNodePropertyList,
    Collection,
    LongString,
    Shorthand,
}

impl Construct {
    /// Whether a statement using this construct usually carries an OWL class expression.
    pub fn is_class_expression(self) -> bool {
        matches!(self, Construct::BlankNodePropertyList | Construct::Collection)
    }
}

impl fmt::Display for Construct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construct::BlankNodePropertyList => "blank node property list `[...]`",
            Construct::Collection => "collection `(...)`",
            Construct::LongString => "long string literal `\"\"\"...\"\"\"`",
            Construct::Shorthand => "numeric/boolean literal shorthand",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagnosticKind {
    /// A statement was skipped because it uses an unsupported construct.
    Unsupported(Construct),
    /// A statement was skipped because it is not well-formed.
    Malformed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub kind: DiagnosticKind,
    pub message: String,
    pub position: Position,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Warning => "warning",
            Severity::Error => "error",
        };
        write!(f, "{}: {sev}: {}", self.position, self.message)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParsedDocument {
    pub base_iri: Option<Iri>,
    pub prefixes: BTreeMap<String, Iri>,
    pub triples: Vec<Triple>,
    /// Sorted by position.
    pub diagnostics: Vec<Diagnostic>,
}

impl ParsedDocument {
    /// One N-Triples line per distinct triple, sorted.
    pub fn to_ntriples(&self) -> String {
        let mut lines: Vec<String> = self.triples.iter().map(to_ntriples).collect();
        lines.sort();
        lines.dedup();
        let mut out = String::new();
        for line in lines {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    pub fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(|d| d.severity == Severity::Error)
    }

    /// Statements skipped for constructs that usually encode class expressions.
    pub fn skipped_class_expressions(&self) -> usize {
        self.diagnostics
            .iter()
            .filter(|d| matches!(d.kind, DiagnosticKind::Unsupported(c) if c.is_class_expression()))
            .count()
    }
}

/// Expands `prefix:local` against a prefix map.
pub fn expand_prefixed_name(prefixes: &BTreeMap<String, Iri>, pname: &str) -> Result<Iri, Error> {
    let (label, local) = pname.split_once(':').ok_or_else(|| Error::Args(format!("'{pname}' is not a prefixed name")))?;
    expand(prefixes, label, local, Position::default())
}

pub(crate) fn expand(
    prefixes: &BTreeMap<String, Iri>,
    label: &str,
    local: &str,
    position: Position,
) -> Result<Iri, Error> {
    let namespace = prefixes.get(label).ok_or_else(|| Error::Prefix {
        position,
        label: label.to_string(),
    })?;
    Iri::new(format!("{namespace}{local}")).map_err(|message| Error::Parse { position, message })
}
