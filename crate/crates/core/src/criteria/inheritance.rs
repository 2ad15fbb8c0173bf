use crate::finding::Finding;
use crate::model::Suite;
use crate::registry::{BreadthArea, TloRegistryEntry};

use super::{declaring_documents, CriterionId, Verdict};

/// INHERITANCE: each breadth area is covered by at least one native class
/// that ultimately extends a class mapped to it.
///
/// Native classes reaching no mapped class are warnings.
pub fn check_inheritance(suite: &Suite, entry: &TloRegistryEntry) -> Verdict {
    let graph = suite.class_graph();
    let native_mask: Vec<bool> = graph.nodes().iter().map(|n| suite.is_native_class(n)).collect();

    let mut evidence = Vec::new();
    let mut uncovered = Vec::new();
    for area in BreadthArea::ALL {
        let mapped = entry.area_classes(area);
        let below = graph.descendants_mask(mapped.iter().filter_map(|c| graph.id(c)));
        let witnesses: Vec<_> = (0..graph.len()).filter(|&id| below[id] && native_mask[id]).collect();
        if witnesses.is_empty() {
            uncovered.push(area);
            evidence.push(
                Finding::violation(
                    "INHERITANCE_UNCOVERED",
                    format!("no native class extends the breadth area '{}'", area.name()),
                )
                .with_entities(mapped.iter().cloned()),
            );
        } else {
            evidence.push(
                Finding::info(
                    "INHERITANCE_COVERED",
                    format!("breadth area '{}' covered by {} native class(es)", area.name(), witnesses.len()),
                )
                .with_entities(mapped.iter().cloned()),
            );
        }
    }

    let all_mapped = entry.mapped_classes();
    let below_any = graph.descendants_mask(all_mapped.iter().filter_map(|c| graph.id(c)));
    for class in suite.native_classes() {
        if !graph.id(class).is_some_and(|id| below_any[id]) {
            evidence.push(
                Finding::warning(
                    "INHERITANCE_UNMAPPED",
                    format!("{class} extends no class mapped to a breadth area of '{}'", entry.id),
                )
                .with_entities([class.clone()])
                .with_documents(declaring_documents(suite, class)),
            );
        }
    }

    let mut verdict = Verdict::new(CriterionId::Inheritance, entry.id.clone(), evidence);
    verdict.uncovered_areas = Some(uncovered);
    verdict
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn full_coverage_passes() {
        let v = check_inheritance(&suite_of(vec![covering_document("hub.ttl", false)]), &entry());
        assert!(v.pass);
        assert_eq!(v.uncovered_areas, Some(vec![]));
    }

    #[test]
    fn missing_area_is_reported_exactly() {
        let mut b = OntologyDocumentBuilder::new("a.ttl");
        for i in 0..14 {
            b = b.sub(&format!("C{i}"), area_class(i));
        }
        let v = check_inheritance(&suite_of(vec![b.build()]), &entry());
        assert!(!v.pass);
        assert_eq!(v.uncovered_areas, Some(vec![BreadthArea::ALL[14]]));
        let violations: Vec<_> = v.violations().collect();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].entities, vec![area_class(14)]);
    }

    #[test]
    fn coverage_through_a_chain() {
        let mut b = covering_document("hub.ttl", false);
        b.classes.insert(ex("Deep"));
        b.subclass_edges.insert((ex("Deep"), ex("C1")));
        let v = check_inheritance(&suite_of(vec![b]), &entry());
        assert!(v.pass);
    }

    #[test]
    fn unmapped_native_class_only_warns() {
        let v = check_inheritance(&suite_of(vec![covering_document("hub.ttl", true)]), &entry());
        assert!(v.pass);
        let warnings: Vec<_> = v.evidence.iter().filter(|f| f.code == "INHERITANCE_UNMAPPED").collect();
        assert_eq!(warnings.len(), 1);
        assert_eq!(warnings[0].entities, vec![ex("Axis")]);
    }
}
