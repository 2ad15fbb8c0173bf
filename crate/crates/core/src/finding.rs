use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::iri::Iri;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum FindingSeverity {
    /// Makes the criterion fail.
    Violation,
    /// Reported but never fails a criterion.
    Warning,
    /// Output of a non-normative diagnostic.
    Advisory,
    /// Supporting evidence for a pass.
    Info,
}

impl fmt::Display for FindingSeverity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FindingSeverity::Violation => "VIOLATION",
            FindingSeverity::Warning => "WARNING",
            FindingSeverity::Advisory => "ADVISORY",
            FindingSeverity::Info => "INFO",
        })
    }
}

/// One piece of entity-level evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub severity: FindingSeverity,
    pub code: String,
    /// Sorted.
    pub entities: Vec<Iri>,
    /// Source names of the documents involved.
    pub documents: Vec<String>,
    pub message: String,
}

impl Finding {
    pub fn new(severity: FindingSeverity, code: &str, message: impl Into<String>) -> Self {
        Self {
            severity,
            code: code.to_string(),
            entities: Vec::new(),
            documents: Vec::new(),
            message: message.into(),
        }
    }

    pub fn violation(code: &str, message: impl Into<String>) -> Self {
        Self::new(FindingSeverity::Violation, code, message)
    }

    pub fn warning(code: &str, message: impl Into<String>) -> Self {
        Self::new(FindingSeverity::Warning, code, message)
    }

    pub fn advisory(code: &str, message: impl Into<String>) -> Self {
        Self::new(FindingSeverity::Advisory, code, message)
    }

    pub fn info(code: &str, message: impl Into<String>) -> Self {
        Self::new(FindingSeverity::Info, code, message)
    }

    pub fn with_entities(mut self, entities: impl IntoIterator<Item = Iri>) -> Self {
        self.entities.extend(entities);
        self.entities.sort();
        self.entities.dedup();
        self
    }

    pub fn with_documents<S: Into<String>>(mut self, documents: impl IntoIterator<Item = S>) -> Self {
        self.documents.extend(documents.into_iter().map(Into::into));
        self.documents.sort();
        self.documents.dedup();
        self
    }
}

impl Ord for Finding {
    /// Lexicographic by entity IRIs first, so evidence lists read in IRI order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.entities
            .cmp(&other.entities)
            .then_with(|| self.documents.cmp(&other.documents))
            .then_with(|| self.code.cmp(&other.code))
            .then_with(|| self.severity.cmp(&other.severity))
            .then_with(|| self.message.cmp(&other.message))
    }
}

impl PartialOrd for Finding {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.severity, self.code, self.message)?;
        if !self.entities.is_empty() {
            let names: Vec<&str> = self.entities.iter().map(Iri::as_str).collect();
            write!(f, " {{{}}}", names.join(", "))?;
        }
        if !self.documents.is_empty() {
            write!(f, " in {}", self.documents.join(", "))?;
        }
        Ok(())
    }
}
