use std::collections::BTreeSet;

use midarch::corpus::FIXTURES;
use midarch::model::{bound_profile, load_document, Edge, TaxonomyGraph};
use midarch::testkit::{augment_dag, inject_cycle, random_scenario, to_turtle, GenParams, Renaming, Scenario};
use midarch::{classify_middle_architecture, Error, Iri, Registry};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn node(i: usize) -> Iri {
    Iri::from_static(&format!("http://ex.org/n{i:02}"))
}

/// Random DAG: edges only from a higher to a lower index.
fn dag() -> impl Strategy<Value = (usize, BTreeSet<Edge>)> {
    (1usize..30).prop_flat_map(|n| {
        let pairs = proptest::collection::vec((0..n, 0..n), 0..n * 2);
        pairs.prop_map(move |ps| {
            let edges = ps
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| if a > b { (node(a), node(b)) } else { (node(b), node(a)) })
                .collect();
            (n, edges)
        })
    })
}

fn brute_force(n: usize, edges: &BTreeSet<Edge>) -> Vec<Vec<bool>> {
    let idx = |i: &Iri| (0..n).find(|&k| node(k) == *i).unwrap();
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for (c, p) in edges {
        r[idx(c)][idx(p)] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

proptest! {
    #[test]
    fn reachability_matches_brute_force((n, edges) in dag()) {
        let g = TaxonomyGraph::new((0..n).map(node), &edges);
        let expected = brute_force(n, &edges);
        for (i, row) in expected.iter().enumerate() {
            for (j, &want) in row.iter().enumerate() {
                let (a, b) = (g.id(&node(i)).unwrap(), g.id(&node(j)).unwrap());
                prop_assert_eq!(g.reaches(a, b), want, "{} -> {}", i, j);
            }
        }
    }

    #[test]
    fn reachability_is_reflexive_and_transitive((n, edges) in dag()) {
        let g = TaxonomyGraph::new((0..n).map(node), &edges);
        for a in 0..n {
            prop_assert!(g.reaches(a, a));
            for b in 0..n {
                if !g.reaches(a, b) { continue; }
                for c in 0..n {
                    if g.reaches(b, c) {
                        prop_assert!(g.reaches(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn dags_have_no_cycle((n, edges) in dag()) {
        let g = TaxonomyGraph::new((0..n).map(node), &edges);
        prop_assert!(g.find_cycle().is_none());
        prop_assert_eq!(g.topological_order().map(|o| o.len()), Some(n));
    }

    #[test]
    fn back_edge_creates_a_cycle((n, edges) in dag(), pick in any::<prop::sample::Index>()) {
        let g = TaxonomyGraph::new((0..n).map(node), &edges);
        let paths: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && g.reaches(a, b))
            .collect();
        prop_assume!(!paths.is_empty());
        let (a, b) = paths[pick.index(paths.len())];
        let mut edges = edges.clone();
        edges.insert((g.iri(b).clone(), g.iri(a).clone()));
        let g = TaxonomyGraph::new((0..n).map(node), &edges);
        let cycle = g.find_cycle().expect("back edge closes a cycle");
        prop_assert_eq!(cycle.iter().min(), cycle.first());
        for w in 0..cycle.len() {
            let edge = (cycle[w].clone(), cycle[(w + 1) % cycle.len()].clone());
            prop_assert!(edges.contains(&edge));
        }
    }
}

fn seeded(seed: u64) -> Scenario {
    random_scenario(&mut ChaCha8Rng::seed_from_u64(seed), GenParams::default())
}

#[test]
fn ultimately_extends_is_reflexive_on_suites() {
    for seed in 0..20 {
        let suite = seeded(seed).suite().unwrap();
        for c in suite.class_graph().nodes() {
            assert!(suite.ultimately_extends(c, c).unwrap());
        }
    }
}

#[test]
fn edge_addition_is_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    for round in 0..100 {
        let before = seeded(1000 + round);
        let (after, _) = augment_dag(&before, &mut rng, 5);
        let (b, a) = (before.suite().unwrap(), after.suite().unwrap());
        for x in b.class_graph().nodes() {
            for y in b.class_graph().nodes() {
                if b.ultimately_extends(x, y).unwrap() {
                    assert!(a.ultimately_extends(x, y).unwrap(), "round {round}: lost {x} -> {y}");
                }
            }
        }
    }
}

#[test]
fn injected_cycles_are_rejected_and_named() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for seed in 0..20 {
        let (s, _) = inject_cycle(&seeded(2000 + seed), &mut rng);
        match s.suite() {
            Err(Error::Cycle { cycle }) => {
                let edges: BTreeSet<(String, String)> = s
                    .documents
                    .iter()
                    .flat_map(|d| d.subclass_edges.iter())
                    .map(|(c, p)| (c.to_string(), p.to_string()))
                    .collect();
                for w in 0..cycle.len() {
                    assert!(edges.contains(&(cycle[w].clone(), cycle[(w + 1) % cycle.len()].clone())));
                }
            }
            other => panic!("seed {seed}: expected E_CYCLE, got {other:?}"),
        }
    }
}

#[test]
fn scope_sets_are_closed_under_native_subclasses() {
    for seed in 0..50 {
        let suite = seeded(seed).suite().unwrap();
        let g = suite.class_graph();
        for i in 0..suite.documents().len() {
            let scope = bound_profile(&suite, i).scope_set;
            for c in &scope {
                for &child in g.children(g.id(c).unwrap()) {
                    let child = g.iri(child);
                    if suite.is_native_class(child) {
                        assert!(scope.contains(child), "seed {seed}: {child} escapes scope of {c}");
                    }
                }
            }
        }
    }
}

fn pass_flags(s: &Scenario) -> Vec<Vec<bool>> {
    let report = classify_middle_architecture(&s.suite().unwrap(), &s.registry().unwrap());
    report
        .verdict_sets
        .iter()
        .map(|set| set.verdicts.iter().map(|v| v.pass).collect())
        .collect()
}

#[test]
fn renaming_preserves_pass_flags_on_fixtures() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for fixture in &FIXTURES {
        let s = Scenario::from_fixture(fixture).unwrap();
        let expected = pass_flags(&s);
        for _ in 0..20 {
            let renamed = Renaming::random(&s, &mut rng).scenario(&s);
            assert_eq!(pass_flags(&renamed), expected, "{}", fixture.id);
        }
    }
}

#[test]
fn renaming_preserves_pass_flags_on_random_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for seed in 0..30 {
        let s = seeded(seed);
        let renamed = Renaming::random(&s, &mut rng).scenario(&s);
        assert_eq!(pass_flags(&renamed), pass_flags(&s), "seed {seed}");
    }
}

#[test]
fn registry_order_does_not_matter() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for seed in 0..20 {
        let s = seeded(seed);
        let mut entries = s.entries.clone();
        for (k, id) in ["alpha", "beta", "gamma"].iter().enumerate() {
            let mut e = s.entries[0].clone();
            e.id = id.to_string();
            e.root_classes = e.breadth_map.values().nth(k).unwrap().clone();
            entries.push(e);
        }
        let suite = s.suite().unwrap();
        let reference = classify_middle_architecture(&suite, &Registry::new(entries.clone()).unwrap());
        for _ in 0..5 {
            entries.shuffle(&mut rng);
            let report = classify_middle_architecture(&suite, &Registry::new(entries.clone()).unwrap());
            assert_eq!(report, reference, "seed {seed}");
        }
    }
}

#[test]
fn turtle_serialization_round_trips() {
    for seed in 0..20 {
        for d in &seeded(seed).documents {
            let back = load_document(&to_turtle(d), &d.source_name).unwrap();
            assert_eq!(back.classes, d.classes);
            assert_eq!(back.object_properties, d.object_properties);
            assert_eq!(back.subclass_edges, d.subclass_edges);
            assert_eq!(back.subproperty_edges, d.subproperty_edges);
            assert_eq!(back.imports, d.imports);
            assert_eq!(back.ontology_iri, d.ontology_iri);
        }
    }
}
