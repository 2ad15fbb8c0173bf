//! The criteria against the brute-force oracle in `midarch::testkit`.

use midarch::criteria::{check_delimit, check_double_star, check_hub, check_inheritance};
use midarch::testkit::{evidence_keys, random_scenario, GenParams, Scenario};
use midarch::corpus::FIXTURES;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn assert_matches_oracle(s: &Scenario, label: &str) {
    let suite = s.suite().unwrap();
    let oracle = s.oracle();
    for entry in &s.entries {
        assert_eq!(evidence_keys(&check_delimit(&suite, entry)), oracle.delimit(entry), "{label}: DELIMIT");
        assert_eq!(evidence_keys(&check_hub(&suite, entry)), oracle.hub(), "{label}: HUB");
        let inheritance = check_inheritance(&suite, entry);
        let (keys, uncovered) = oracle.inheritance(entry);
        assert_eq!(evidence_keys(&inheritance), keys, "{label}: INHERITANCE");
        assert_eq!(inheritance.uncovered_areas.unwrap(), uncovered, "{label}: uncovered areas");
        let double_star: std::collections::BTreeSet<_> = check_double_star(&suite, entry)
            .unwrap()
            .into_iter()
            .flat_map(|f| f.entities)
            .collect();
        assert_eq!(double_star, oracle.double_star(entry), "{label}: double-star");
    }
}

#[test]
fn random_suites_match_oracle() {
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_scenario(&mut rng, GenParams::default());
        assert_matches_oracle(&s, &format!("seed {seed}"));
    }
}

#[test]
fn fixtures_match_oracle() {
    for fixture in &FIXTURES {
        assert_matches_oracle(&Scenario::from_fixture(fixture).unwrap(), fixture.id);
    }
}

#[test]
fn generated_suites_exercise_every_outcome() {
    // Guards against a generator that only ever produces passing (or failing) suites.
    let mut seen = [[false; 2]; 3];
    for seed in 0..100u64 {
        let s = random_scenario(&mut ChaCha8Rng::seed_from_u64(seed), GenParams::default());
        let suite = s.suite().unwrap();
        let e = &s.entries[0];
        seen[0][check_delimit(&suite, e).pass as usize] = true;
        seen[1][check_hub(&suite, e).pass as usize] = true;
        seen[2][check_inheritance(&suite, e).pass as usize] = true;
    }
    assert_eq!(seen, [[true; 2]; 3]);
}
