//! Reading and parsing input files.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::thread;

use midarch::model::{assemble_document, OntologyDocument};
use midarch::report::SourceDigest;
use midarch::turtle::{parse_document, Severity};

/// A failure that maps to exit code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<midarch::Error> for CliError {
    fn from(e: midarch::Error) -> Self {
        CliError(e.to_string())
    }
}

/// Name a file goes by in reports: the path as given when relative,
/// otherwise its file name. Never absolute.
pub fn source_name(path: &Path) -> String {
    let name = if path.is_absolute() {
        path.file_name().map(PathBuf::from).unwrap_or_default()
    } else {
        path.components().collect::<PathBuf>()
    };
    name.to_string_lossy().replace('\\', "/")
}

/// Expands directories to the `.ttl` files directly inside them, sorted.
pub fn expand_inputs(paths: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut files: Vec<PathBuf> = fs::read_dir(p)
                .map_err(|e| io_error(p, &e))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.extension().is_some_and(|x| x == "ttl"))
                .collect();
            files.sort();
            if files.is_empty() {
                return Err(CliError(format!("E_IO: {}: no .ttl files in directory", p.display())));
            }
            out.extend(files);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

pub fn io_error(path: &Path, e: &std::io::Error) -> CliError {
    CliError(format!("E_IO: {}: {e}", path.display()))
}

pub struct Loaded {
    pub document: OntologyDocument,
    pub digest: SourceDigest,
}

/// Reads and parses one file. Diagnostics go to stderr; any error-severity
/// diagnostic fails the load.
fn load_one(path: &Path) -> Result<Loaded, CliError> {
    let bytes = fs::read(path).map_err(|e| io_error(path, &e))?;
    let name = source_name(path);
    let text = String::from_utf8(bytes.clone()).map_err(|_| CliError(format!("E_PARSE: {name}: not valid UTF-8")))?;
    let parsed = parse_document(&text, None).map_err(|e| CliError(format!("{name}: {e}")))?;
    Ok(Loaded {
        document: assemble_document(&parsed, &name),
        digest: SourceDigest::of(name, &bytes),
    })
}

/// Loads every path, one thread per file. Diagnostics are printed in input
/// order once all files are parsed.
pub fn load_all(paths: &[PathBuf]) -> Result<Vec<Loaded>, CliError> {
    let results: Vec<Result<Loaded, CliError>> = thread::scope(|s| {
        let handles: Vec<_> = paths.iter().map(|p| s.spawn(move || load_one(p))).collect();
        handles.into_iter().map(|h| h.join().expect("parser thread panicked")).collect()
    });

    let mut loaded = Vec::with_capacity(results.len());
    let mut first_error = None;
    let mut malformed = 0usize;
    for r in results {
        match r {
            Ok(l) => {
                for d in &l.document.diagnostics {
                    eprintln!("{}:{d}", l.document.source_name);
                    if d.severity == Severity::Error {
                        malformed += 1;
                    }
                }
                loaded.push(l);
            }
            // The first error is returned to the caller; later ones are printed here.
            Err(e) => match first_error {
                None => first_error = Some(e),
                Some(_) => eprintln!("midarch: {e}"),
            },
        }
    }
    if let Some(e) = first_error {
        return Err(e);
    }
    if malformed > 0 {
        return Err(CliError(format!("E_PARSE: {malformed} malformed statement(s); see diagnostics above")));
    }
    Ok(loaded)
}
