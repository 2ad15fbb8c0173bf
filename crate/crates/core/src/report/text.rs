use std::fmt::Write;

use crate::finding::{Finding, FindingSeverity};

use super::Report;

/// ANSI styling for text output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Plain,
    Ansi,
}

impl Style {
    fn paint(self, code: &str, s: &str) -> String {
        match self {
            Style::Plain => s.to_string(),
            Style::Ansi => format!("\x1b[{code}m{s}\x1b[0m"),
        }
    }

    fn verdict(self, pass: bool) -> String {
        if pass {
            self.paint("32", "pass")
        } else {
            self.paint("31;1", "FAIL")
        }
    }

    fn severity(self, s: FindingSeverity) -> String {
        let code = match s {
            FindingSeverity::Violation => "31",
            FindingSeverity::Warning => "33",
            FindingSeverity::Advisory => "36",
            FindingSeverity::Info => "2",
        };
        self.paint(code, &s.to_string())
    }
}

/// Plain text rendering. `verbosity` 0 is a one-line summary, 1 adds
/// per-criterion tables, 2 adds every finding.
pub fn render_text(report: &Report, verbosity: u8) -> String {
    render_text_styled(report, verbosity, Style::Plain)
}

pub fn render_text_styled(report: &Report, verbosity: u8, style: Style) -> String {
    let mut out = String::new();
    let headline = if report.member {
        style.paint("32;1", "MEMBER")
    } else {
        style.paint("31;1", "NOT A MEMBER")
    };
    let sets = report.verdict_sets();

    if verbosity == 0 {
        let decided = sets
            .iter()
            .find(|(_, vs)| vs.iter().all(|v| v.pass))
            .or(sets.first());
        let _ = write!(out, "{headline}");
        if let Some((tlo, vs)) = decided {
            let cells: Vec<String> = vs
                .iter()
                .map(|v| format!("{} {}", v.criterion, style.verdict(v.pass)))
                .collect();
            let tlo = if tlo.is_empty() { "-" } else { tlo };
            let _ = write!(out, " [{tlo}] {}", cells.join(", "));
        }
        let _ = writeln!(
            out,
            " ({}, {})",
            count(report.suite.documents, "document"),
            count(report.suite.classes, "native class")
        );
        return out;
    }

    let adopted = if report.adopted.is_empty() {
        "none".to_string()
    } else {
        report.adopted.join(", ")
    };
    let _ = writeln!(out, "{headline} of the middle architecture (adopted: {adopted})");
    let s = &report.suite;
    let _ = writeln!(
        out,
        "suite: {}, {}, {}, {}",
        count(s.documents, "document"),
        count(s.classes, "native class"),
        count(s.properties, "native property"),
        count(s.opaque_axioms, "opaque axiom")
    );

    for (tlo, verdicts) in &sets {
        let _ = writeln!(out);
        let _ = writeln!(out, "top-level ontology: {tlo}");
        let _ = writeln!(out, "  {:<12} {:<6} {:>10} {:>8}", "criterion", "result", "violations", "warnings");
        for v in verdicts {
            let count = |sev| v.evidence.iter().filter(|f| f.severity == sev).count();
            // Pad before painting so escape codes do not disturb alignment.
            let result = format!("{:<6}", if v.pass { "pass" } else { "FAIL" });
            let result = if v.pass { style.paint("32", &result) } else { style.paint("31;1", &result) };
            let _ = writeln!(
                out,
                "  {:<12} {} {:>10} {:>8}",
                v.criterion.name(),
                result,
                count(FindingSeverity::Violation),
                count(FindingSeverity::Warning)
            );
        }
        for v in verdicts {
            if let Some(areas) = v.uncovered_areas.as_ref().filter(|a| !a.is_empty()) {
                let names: Vec<&str> = areas.iter().map(|a| a.name()).collect();
                let _ = writeln!(out, "  uncovered areas: {}", names.join("; "));
            }
        }
        if verbosity >= 2 {
            for v in verdicts {
                if v.evidence.is_empty() {
                    continue;
                }
                let _ = writeln!(out, "  {} evidence:", v.criterion);
                for f in &v.evidence {
                    let _ = writeln!(out, "    {}", finding_line(f, style));
                }
            }
        }
    }

    if !report.advisories.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(out, "advisories (non-normative): {}", report.advisories.len());
        if verbosity >= 2 {
            for f in &report.advisories {
                let _ = writeln!(out, "  {}", finding_line(f, style));
            }
        }
    }
    out
}

fn count(n: usize, noun: &str) -> String {
    match (n, noun.strip_suffix('y'), noun.ends_with("ss")) {
        (1, _, _) => format!("1 {noun}"),
        (_, Some(stem), _) => format!("{n} {stem}ies"),
        (_, None, true) => format!("{n} {noun}es"),
        _ => format!("{n} {noun}s"),
    }
}

fn finding_line(f: &Finding, style: Style) -> String {
    let mut line = format!("{} {}: {}", style.severity(f.severity), f.code, f.message);
    if !f.entities.is_empty() {
        let names: Vec<&str> = f.entities.iter().map(|i| i.as_str()).collect();
        let _ = write!(line, " {{{}}}", names.join(", "));
    }
    if !f.documents.is_empty() {
        let _ = write!(line, " in {}", f.documents.join(", "));
    }
    line
}
