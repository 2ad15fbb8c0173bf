//! The bundled fixture corpus: miniature suites whose expected verdicts are
//! frozen below, the BFO miniature they extend, and the curated registry.

use crate::criteria::{classify_middle_architecture, CriterionId, MembershipReport};
use crate::error::Result;
use crate::model::{assemble_suite, load_document, OntologyDocument, Suite};
use crate::registry::{load_registry, BreadthArea, Registry};

/// A bundled file: its path relative to the fixture root, and its text.
#[derive(Debug, Clone, Copy)]
pub struct FixtureFile {
    pub path: &'static str,
    pub text: &'static str,
}

macro_rules! file {
    ($path:literal) => {
        FixtureFile {
            path: $path,
            text: include_str!(concat!("../../../fixtures/", $path)),
        }
    };
}

pub const BFO_MINI: FixtureFile = file!("bfo-mini.ttl");
pub const BFO_REGISTRY: &str = include_str!("../../../registries/bfo-2020.toml");
pub const BFO_REGISTRY_PATH: &str = "registries/bfo-2020.toml";

const MINI_CCO: &[FixtureFile] = &[
    file!("mini-cco/AgentOntology.ttl"),
    file!("mini-cco/ArtifactOntology.ttl"),
    file!("mini-cco/CurrencyUnitOntology.ttl"),
    file!("mini-cco/EventOntology.ttl"),
    file!("mini-cco/ExtendedRelationOntology.ttl"),
    file!("mini-cco/FacilityOntology.ttl"),
    file!("mini-cco/GeospatialOntology.ttl"),
    file!("mini-cco/InformationEntityOntology.ttl"),
    file!("mini-cco/QualityOntology.ttl"),
    file!("mini-cco/TimeOntology.ttl"),
    file!("mini-cco/UnitsOfMeasureOntology.ttl"),
];
const MINI_OBI: &[FixtureFile] = &[
    file!("mini-obi/obi.ttl"),
];
const MINI_IOFC: &[FixtureFile] = &[
    file!("mini-iofc/iofc.ttl"),
];
const MINI_TOVE: &[FixtureFile] = &[
    file!("mini-tove/activity.ttl"),
    file!("mini-tove/organization.ttl"),
    file!("mini-tove/resource.ttl"),
    file!("mini-tove/time.ttl"),
];
pub const REUSE_INFECTION: &[FixtureFile] = &[
    file!("reuse/covid.ttl"),
    file!("reuse/infectious-disease-core.ttl"),
    file!("reuse/malaria.ttl"),
];
pub const REUSE_VEHICLE: &[FixtureFile] = &[
    file!("reuse/accident.ttl"),
    file!("reuse/insurance.ttl"),
    file!("reuse/recycling.ttl"),
];

/// What the uncovered breadth areas of the INHERITANCE verdict must be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UncoveredExpectation {
    Exactly(&'static [BreadthArea]),
    AtLeast(&'static [BreadthArea]),
}

impl UncoveredExpectation {
    pub fn matches(&self, actual: &[BreadthArea]) -> bool {
        match self {
            UncoveredExpectation::Exactly(e) => {
                let mut a = actual.to_vec();
                let mut e = e.to_vec();
                a.sort();
                e.sort();
                a == e
            }
            UncoveredExpectation::AtLeast(e) => e.iter().all(|x| actual.contains(x)),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub id: &'static str,
    pub files: &'static [FixtureFile],
    /// EXTEND, DELIMIT, HUB, INHERITANCE.
    pub expected: [bool; 4],
    pub uncovered: UncoveredExpectation,
}

impl Fixture {
    pub fn expected_member(&self) -> bool {
        self.expected.iter().all(|&p| p)
    }

    pub fn expected_pass(&self, criterion: CriterionId) -> bool {
        self.expected[CriterionId::ALL.iter().position(|&c| c == criterion).unwrap()]
    }
}

use BreadthArea as A;

pub const FIXTURES: [Fixture; 4] = [
    Fixture {
        id: "mini-cco",
        files: MINI_CCO,
        expected: [true, true, true, true],
        uncovered: UncoveredExpectation::Exactly(&[]),
    },
    Fixture {
        id: "mini-obi",
        files: MINI_OBI,
        expected: [true, true, true, false],
        uncovered: UncoveredExpectation::Exactly(&[A::MentalEntitiesFiction]),
    },
    Fixture {
        id: "mini-iofc",
        files: MINI_IOFC,
        expected: [true, true, true, false],
        uncovered: UncoveredExpectation::AtLeast(&[A::PartsWholesUnityBoundaries, A::SpaceAndTime, A::MentalEntitiesFiction]),
    },
    Fixture {
        id: "mini-tove",
        files: MINI_TOVE,
        expected: [false, false, true, false],
        uncovered: UncoveredExpectation::Exactly(&BreadthArea::ALL),
    },
];

pub fn fixture(id: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.id == id)
}

pub fn registry() -> Registry {
    load_registry(BFO_REGISTRY).expect("bundled registry is valid")
}

pub fn bfo_document() -> OntologyDocument {
    load_document(BFO_MINI.text, BFO_MINI.path).expect("bundled BFO parses")
}

pub fn load_files(files: &[FixtureFile]) -> Result<Vec<OntologyDocument>> {
    files.iter().map(|f| load_document(f.text, f.path)).collect()
}

/// Assembles `files` against the BFO miniature.
pub fn suite_of(files: &[FixtureFile]) -> Result<Suite> {
    assemble_suite(load_files(files)?, vec![bfo_document()])
}

impl Fixture {
    pub fn suite(&self) -> Result<Suite> {
        suite_of(self.files)
    }

    pub fn classify(&self) -> Result<MembershipReport> {
        Ok(classify_middle_architecture(&self.suite()?, &registry()))
    }
}
