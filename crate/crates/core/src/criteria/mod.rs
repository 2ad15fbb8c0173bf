//! Membership criteria and advisory diagnostics.
//!
//! The four criteria are individually necessary and jointly sufficient:
//! a suite is a member iff, for at least one adopted top-level ontology,
//! EXTEND, DELIMIT, HUB and INHERITANCE all pass.

mod advisory;
mod delimit;
mod extend;
mod hub;
mod inheritance;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::finding::{Finding, FindingSeverity};
use crate::model::Suite;
use crate::registry::{BreadthArea, Registry, TloRegistryEntry};

pub use advisory::{check_discouraged, check_double_star, check_star_reuse, STAR_LABEL, DOUBLE_STAR_LABEL};
pub use delimit::check_delimit;
pub use extend::{adopted_entries, check_extend, check_extend_for, tlo_documents_of};
pub use hub::check_hub;
pub use inheritance::check_inheritance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CriterionId {
    Extend,
    Delimit,
    Hub,
    Inheritance,
}

impl CriterionId {
    pub const ALL: [CriterionId; 4] = [CriterionId::Extend, CriterionId::Delimit, CriterionId::Hub, CriterionId::Inheritance];

    pub fn name(self) -> &'static str {
        match self {
            CriterionId::Extend => "EXTEND",
            CriterionId::Delimit => "DELIMIT",
            CriterionId::Hub => "HUB",
            CriterionId::Inheritance => "INHERITANCE",
        }
    }

    /// The normative statement of the criterion.
    pub fn statement(self) -> &'static str {
        match self {
            CriterionId::Extend => {
                "Middle architecture ontologies extend from at least one ontology satisfying the requirements specified in ISO/IEC 21838:1."
            }
            CriterionId::Delimit => {
                "Middle architecture ontologies are composed of all and only content ultimately extended from the upper bound of the top-level ontology referenced in EXTEND."
            }
            CriterionId::Hub => {
                "Middle architecture ontologies are composed of all and only ontology hubs none of which overlap in scope with any other."
            }
            CriterionId::Inheritance => {
                "Middle architecture ontologies are composed of all and only content extended from each breadth area of the top-level ontology referenced in EXTEND."
            }
        }
    }

    /// How this tool decides the criterion from ontology files.
    pub fn operationalization(self) -> &'static str {
        match self {
            CriterionId::Extend => {
                "A registry entry is adopted when some document imports one of its ontology IRIs, or some native class \
                 has an asserted rdfs:subClassOf edge to a class declared in that entry's top-level ontology document. \
                 Compliance with ISO/IEC 21838:1 is declared by the registry, not computed. Passes iff at least one \
                 entry is adopted; several adopted entries are all recorded."
            }
            CriterionId::Delimit => {
                "Every native class (declared in an analyzed document and not in a top-level ontology document) must \
                 reach a root class of the adopted entry through asserted rdfs:subClassOf edges (a path of length zero \
                 or more). Each orphan is a violation. Native object properties that reach no registered property root \
                 are warnings only."
            }
            CriterionId::Hub => {
                "Every analyzed document is a hub candidate and must declare at least one native class. Scope overlap is \
                 read extensionally: two documents overlap when their declared native classes intersect OR their scope \
                 sets intersect, where a scope set is every native class reachable downward from the document's \
                 attachment points (classes with no superclass declared in the same document). A single document \
                 passes as the limit case."
            }
            CriterionId::Inheritance => {
                "For each of the fifteen breadth areas, some native class must ultimately extend a class the registry \
                 maps to that area; documentation alone never counts. Native classes that reach no mapped class are \
                 warnings (the 'only' direction) and do not fail the criterion."
            }
        }
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CriterionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CriterionId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Args(format!("unknown criterion '{s}' (expected EXTEND, DELIMIT, HUB or INHERITANCE)")))
    }
}

/// Outcome of one criterion for one top-level ontology.
///
/// `pass` is derived from the evidence: it holds iff no finding is a violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub criterion: CriterionId,
    pub pass: bool,
    /// Registry entry id the verdict was computed against.
    pub tlo: String,
    /// Sorted by entity IRI.
    pub evidence: Vec<Finding>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uncovered_areas: Option<Vec<BreadthArea>>,
}

impl Verdict {
    pub fn new(criterion: CriterionId, tlo: impl Into<String>, mut evidence: Vec<Finding>) -> Self {
        evidence.sort();
        evidence.dedup();
        let pass = !evidence.iter().any(|f| f.severity == FindingSeverity::Violation);
        Self {
            criterion,
            pass,
            tlo: tlo.into(),
            evidence,
            uncovered_areas: None,
        }
    }

    pub fn violations(&self) -> impl Iterator<Item = &Finding> {
        self.evidence.iter().filter(|f| f.severity == FindingSeverity::Violation)
    }
}

/// The four verdicts computed against one registry entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSet {
    pub tlo: String,
    /// Always EXTEND, DELIMIT, HUB, INHERITANCE in that order.
    pub verdicts: Vec<Verdict>,
}

impl VerdictSet {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn get(&self, criterion: CriterionId) -> &Verdict {
        self.verdicts
            .iter()
            .find(|v| v.criterion == criterion)
            .expect("verdict sets hold all four criteria")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    /// Adopted registry entries, or every entry when none is adopted.
    pub verdict_sets: Vec<VerdictSet>,
    pub adopted: Vec<String>,
    pub advisories: Vec<Finding>,
    /// True iff some verdict set passes all four criteria.
    pub member: bool,
}

impl MembershipReport {
    /// The verdict set that decided membership: the first all-pass set, else the first set.
    pub fn primary(&self) -> &VerdictSet {
        self.verdict_sets
            .iter()
            .find(|s| s.all_pass())
            .unwrap_or(&self.verdict_sets[0])
    }

    pub fn failing(&self) -> Vec<CriterionId> {
        self.primary().verdicts.iter().filter(|v| !v.pass).map(|v| v.criterion).collect()
    }
}

/// Which single-suite advisories to compute alongside the criteria.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AdvisoryOptions {
    pub double_star: bool,
    pub discouraged: bool,
}

impl AdvisoryOptions {
    pub fn all() -> Self {
        Self {
            double_star: true,
            discouraged: true,
        }
    }
}

/// Evaluates the four criteria without advisories.
pub fn classify_middle_architecture(suite: &Suite, registry: &Registry) -> MembershipReport {
    classify_with(suite, registry, AdvisoryOptions::default())
}

/// Evaluates the four criteria.
///
/// When EXTEND passes, the other criteria run against each adopted entry.
/// Otherwise they still run against every registry entry for diagnostic
/// value, and the suite is not a member.
pub fn classify_with(suite: &Suite, registry: &Registry, options: AdvisoryOptions) -> MembershipReport {
    let adopted: Vec<&TloRegistryEntry> = adopted_entries(suite, registry).into_iter().map(|(e, _)| e).collect();
    let evaluated: Vec<&TloRegistryEntry> = if adopted.is_empty() { registry.entries().collect() } else { adopted.clone() };

    let verdict_sets: Vec<VerdictSet> = evaluated
        .iter()
        .map(|entry| VerdictSet {
            tlo: entry.id.clone(),
            verdicts: vec![
                check_extend_for(suite, entry),
                check_delimit(suite, entry),
                check_hub(suite, entry),
                check_inheritance(suite, entry),
            ],
        })
        .collect();

    let mut advisories = Vec::new();
    for entry in &adopted {
        if options.double_star {
            // An empty lower bound is a precondition failure; nothing to report.
            if let Ok(findings) = check_double_star(suite, entry) {
                advisories.extend(findings);
            }
        }
        if options.discouraged {
            advisories.extend(check_discouraged(suite, entry));
        }
    }
    advisories.sort();
    advisories.dedup();

    let member = verdict_sets.iter().any(VerdictSet::all_pass);
    MembershipReport {
        verdict_sets,
        adopted: adopted.iter().map(|e| e.id.clone()).collect(),
        advisories,
        member,
    }
}

/// Source names of the analyzed documents declaring `iri`.
pub(crate) fn declaring_documents(suite: &Suite, iri: &crate::Iri) -> Vec<String> {
    use crate::model::DocRef;
    suite
        .declared_in(iri)
        .into_iter()
        .flatten()
        .filter_map(|r| match r {
            DocRef::Native(_) => Some(suite.document(*r).source_name.clone()),
            DocRef::Tlo(_) => None,
        })
        .collect()
}

#[cfg(test)]
pub(crate) mod fixtures;
