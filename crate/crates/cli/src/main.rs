//! `midarch`: checks ontology suites against the middle-architecture criteria.
//!
//! Exit codes: 0 member (or success), 1 not a member (or fixture mismatch),
//! 2 input, parse, registry or usage error.

mod fixtures;
mod load;

use std::collections::BTreeSet;
use std::fs;
use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use midarch::corpus;
use midarch::criteria::{check_star_reuse, tlo_documents_of, AdvisoryOptions};
use midarch::model::{assemble_suite, OntologyDocument};
use midarch::registry::validate_entry_against_tlo;
use midarch::report::{render_json, render_text_styled, Report, SourceDigest, Style};
use midarch::turtle::parse_document;
use midarch::{classify_with, load_registry, CriterionId, Registry};

use load::{expand_inputs, io_error, load_all, source_name, CliError};

#[derive(Parser)]
#[command(name = "midarch", version, about = "Middle-architecture conformance linter for ontology suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Advisory {
    Star,
    DoubleStar,
    Discouraged,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a suite of documents is a member of the middle architecture.
    Check {
        /// Turtle files or directories of .ttl files.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Top-level ontology document (repeatable). Defaults to the bundled BFO miniature.
        #[arg(long = "tlo")]
        tlo: Vec<PathBuf>,
        /// TOML registry of top-level ontologies. Defaults to the bundled BFO 2020 entry.
        #[arg(long)]
        registry: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// -v for per-criterion tables, -vv for every finding.
        #[arg(short, long, action = clap::ArgAction::Count)]
        verbose: u8,
        /// Non-normative diagnostics to add to the report.
        #[arg(long, value_enum, value_delimiter = ',')]
        advisory: Vec<Advisory>,
        /// Minimum number of domain suites for the star advisory.
        #[arg(long, default_value_t = 2)]
        star_threshold: usize,
    },
    /// Print the triples of one document as sorted N-Triples.
    Parse { path: PathBuf },
    /// Print a criterion's statement and how this tool decides it.
    Explain { criterion: String },
    /// Run the bundled fixture corpus and print the verdict matrix.
    Fixtures {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Read fixtures from this directory instead of the bundled copies.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check {
            inputs,
            tlo,
            registry,
            format,
            verbose,
            advisory,
            star_threshold,
        } => check(&inputs, &tlo, registry.as_deref(), format, verbose, &advisory, star_threshold),
        Command::Parse { path } => parse(&path),
        Command::Explain { criterion } => explain(&criterion),
        Command::Fixtures { format, dir } => run_fixtures(format, dir.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("midarch: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| CliError(format!("E_IO: stdout: {e}")))
}

fn read_registry(path: Option<&Path>) -> Result<(Registry, SourceDigest), CliError> {
    match path {
        None => Ok((corpus::registry(), SourceDigest::of(corpus::BFO_REGISTRY_PATH, corpus::BFO_REGISTRY.as_bytes()))),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| io_error(p, &e))?;
            let registry = load_registry(&text).map_err(|e| CliError(format!("{}: {e}", source_name(p))))?;
            Ok((registry, SourceDigest::of(source_name(p), text.as_bytes())))
        }
    }
}

/// Merges the TLO documents belonging to each entry and checks the entry
/// against them. Entries without a TLO document cannot be checked.
fn validate_registry(registry: &Registry, suite: &midarch::Suite) -> Result<(), CliError> {
    let mut problems = 0usize;
    for entry in registry.entries() {
        let docs = tlo_documents_of(suite, entry);
        if docs.is_empty() {
            eprintln!("midarch: warning: no top-level ontology document supplied for registry entry '{}'", entry.id);
            continue;
        }
        let mut merged = OntologyDocument::new(entry.id.clone());
        for i in docs {
            let d = &suite.tlo_documents()[i];
            merged.classes.extend(d.classes.iter().cloned());
            merged.subclass_edges.extend(d.subclass_edges.iter().cloned());
        }
        for finding in validate_entry_against_tlo(entry, &merged) {
            eprintln!("midarch: {finding}");
            problems += 1;
        }
    }
    if problems > 0 {
        return Err(CliError(format!("E_REGISTRY_SCHEMA: {problems} registry problem(s) against the supplied top-level ontology")));
    }
    Ok(())
}

fn check(
    inputs: &[PathBuf],
    tlo: &[PathBuf],
    registry_path: Option<&Path>,
    format: Format,
    verbosity: u8,
    advisories: &[Advisory],
    star_threshold: usize,
) -> Result<u8, CliError> {
    let advisories: BTreeSet<Advisory> = advisories.iter().copied().collect();
    if advisories.contains(&Advisory::Star) && star_threshold < 2 {
        return Err(CliError(format!("E_ARGS: --star-threshold must be at least 2, got {star_threshold}")));
    }
    let (registry, registry_digest) = read_registry(registry_path)?;

    let inputs = expand_inputs(inputs)?;
    let loaded = load_all(&inputs)?;
    let (tlo_documents, tlo_digests) = if tlo.is_empty() {
        let digest = SourceDigest::of(corpus::BFO_MINI.path, corpus::BFO_MINI.text.as_bytes());
        (vec![corpus::bfo_document()], vec![digest])
    } else {
        let l = load_all(&expand_inputs(tlo)?)?;
        l.into_iter().map(|l| (l.document, l.digest)).unzip()
    };

    let mut digests: Vec<SourceDigest> = tlo_digests;
    digests.push(registry_digest);
    let documents: Vec<OntologyDocument> = loaded
        .into_iter()
        .map(|l| {
            digests.push(l.digest);
            l.document
        })
        .collect();

    let suite = assemble_suite(documents.clone(), tlo_documents.clone())?;
    validate_registry(&registry, &suite)?;

    let options = AdvisoryOptions {
        double_star: advisories.contains(&Advisory::DoubleStar),
        discouraged: advisories.contains(&Advisory::Discouraged),
    };
    let mut membership = classify_with(&suite, &registry, options);
    if advisories.contains(&Advisory::Star) {
        // Each input document stands for one domain suite.
        let suites = documents
            .into_iter()
            .map(|d| assemble_suite(vec![d], tlo_documents.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        membership.advisories.extend(check_star_reuse(&suites, star_threshold)?);
    }

    let report = Report::new(&suite, &registry, &membership, digests);
    let text = match format {
        Format::Json => render_json(&report),
        Format::Text => render_text_styled(&report, verbosity.min(2), text_style()),
    };
    emit(&text)?;
    Ok(if report.member { 0 } else { 1 })
}

fn text_style() -> Style {
    if std::env::var_os("MIDARCH_NO_COLOR").is_none() && std::io::stdout().is_terminal() {
        Style::Ansi
    } else {
        Style::Plain
    }
}

fn parse(path: &Path) -> Result<u8, CliError> {
    let name = source_name(path);
    let text = fs::read_to_string(path).map_err(|e| io_error(path, &e))?;
    let parsed = parse_document(&text, None).map_err(|e| CliError(format!("{name}: {e}")))?;
    for d in &parsed.diagnostics {
        eprintln!("{name}:{d}");
    }
    if parsed.has_errors() {
        return Err(CliError(format!("E_PARSE: {name}: malformed statement(s); see diagnostics above")));
    }
    emit(&parsed.to_ntriples())?;
    Ok(0)
}

fn explain(criterion: &str) -> Result<u8, CliError> {
    let id: CriterionId = criterion.parse()?;
    let mut out = format!("{id}\n\nStatement:\n");
    out.push_str(&wrap(id.statement(), 76, "  "));
    out.push_str("\nOperationalization:\n");
    out.push_str(&wrap(id.operationalization(), 76, "  "));
    emit(&out)?;
    Ok(0)
}

fn wrap(text: &str, width: usize, indent: &str) -> String {
    let mut out = String::new();
    let mut line = String::new();
    for word in text.split_whitespace() {
        if !line.is_empty() && line.len() + 1 + word.len() > width {
            out.push_str(indent);
            out.push_str(&line);
            out.push('\n');
            line.clear();
        }
        if !line.is_empty() {
            line.push(' ');
        }
        line.push_str(word);
    }
    if !line.is_empty() {
        out.push_str(indent);
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn run_fixtures(format: Format, dir: Option<&Path>) -> Result<u8, CliError> {
    let registry = corpus::registry();
    let rows = fixtures::run(dir, &registry);
    let text = match format {
        Format::Json => fixtures::render_json(&rows),
        Format::Text => fixtures::render_text(&rows),
    };
    emit(&text)?;
    Ok(if rows.iter().all(fixtures::Row::matches) { 0 } else { 1 })
}
