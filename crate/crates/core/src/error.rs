use std::fmt;

use thiserror::Error;

/// Line/column position in a source document, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl Position {
    pub fn new(line: usize, column: usize) -> Self {
        Self { line, column }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("E_PARSE at {position}: {message}")]
    Parse { position: Position, message: String },

    #[error("E_PREFIX at {position}: undeclared prefix '{label}:'")]
    Prefix { position: Position, label: String },

    #[error("E_CYCLE: asserted subclass cycle {}", format_cycle(.cycle))]
    Cycle { cycle: Vec<String> },

    #[error("E_EMPTY: no ontology documents to check")]
    Empty,

    #[error("E_UNKNOWN_CLASS: {0} does not appear in any document")]
    UnknownClass(String),

    #[error("E_REGISTRY_SCHEMA: {0}")]
    RegistrySchema(String),

    #[error("E_REGISTRY_AREAS: entry '{entry}' has no mapping for {}", .missing.join("; "))]
    RegistryAreas { entry: String, missing: Vec<String> },

    #[error("E_REGISTRY_DUP: duplicate registry entry id '{0}'")]
    RegistryDup(String),

    #[error("E_ARGS: {0}")]
    Args(String),
}

impl Error {
    /// The stable `E_*` code of this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "E_PARSE",
            Error::Prefix { .. } => "E_PREFIX",
            Error::Cycle { .. } => "E_CYCLE",
            Error::Empty => "E_EMPTY",
            Error::UnknownClass(_) => "E_UNKNOWN_CLASS",
            Error::RegistrySchema(_) => "E_REGISTRY_SCHEMA",
            Error::RegistryAreas { .. } => "E_REGISTRY_AREAS",
            Error::RegistryDup(_) => "E_REGISTRY_DUP",
            Error::Args(_) => "E_ARGS",
        }
    }
}

fn format_cycle(cycle: &[String]) -> String {
    let mut out = cycle.join(" -> ");
    if let Some(first) = cycle.first() {
        out.push_str(" -> ");
        out.push_str(first);
    }
    out
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
