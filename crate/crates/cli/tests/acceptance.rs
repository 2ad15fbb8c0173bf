//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use midarch::corpus::FIXTURES;
use midarch::criteria::{check_delimit, check_double_star, check_hub, check_inheritance};
use midarch::testkit::{
    augment_dag, evidence_keys, bounded_areas_scenario, inject_cycle, random_scenario, to_turtle, GenParams, Renaming,
    Scenario,
};
use midarch::classify_middle_architecture;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

fn midarch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_midarch"))
        .args(args)
        .current_dir(root())
        .env("MIDARCH_NO_COLOR", "1")
        .output()
        .expect("spawn midarch")
}

fn within(limit: Duration, started: Instant, detail: String) -> Outcome {
    let took = started.elapsed();
    if took < limit {
        Ok(format!("{detail}; {:.3}s", took.as_secs_f64()))
    } else {
        Err(format!("{detail}; took {:.3}s, limit {:.0?}", took.as_secs_f64(), limit))
    }
}

const MENTAL: &str = "Mental entities, imagined entities, fiction, mythology, and religion";
const PARTS: &str = "Parts, Wholes, Unity, Boundaries";
const SPACE_TIME: &str = "Space and Time";

fn verdict_matrix() -> Outcome {
    let started = Instant::now();
    let out = midarch(&["fixtures", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| format!("unreadable output: {e}"))?;
    let rows = v["fixtures"].as_array().ok_or("no fixtures array")?;
    let row = |id: &str| rows.iter().find(|r| r["id"] == id).ok_or(format!("{id} missing"));
    let flags = |r: &Value| -> Vec<bool> {
        ["EXTEND", "DELIMIT", "HUB", "INHERITANCE"]
            .iter()
            .map(|c| r["verdicts"][c].as_bool().unwrap_or(false))
            .collect()
    };
    let uncovered = |r: &Value| -> BTreeSet<String> {
        r["uncovered_areas"]
            .as_array()
            .map(|a| a.iter().filter_map(|x| x.as_str().map(String::from)).collect())
            .unwrap_or_default()
    };
    let set = |xs: &[&str]| -> BTreeSet<String> { xs.iter().map(|s| s.to_string()).collect() };

    let mut problems = Vec::new();
    let cco = row("mini-cco")?;
    if flags(cco) != [true; 4] {
        problems.push(format!("mini-cco {:?}", flags(cco)));
    }
    let obi = row("mini-obi")?;
    if flags(obi) != [true, true, true, false] || uncovered(obi) != set(&[MENTAL]) {
        problems.push(format!("mini-obi {:?} {:?}", flags(obi), uncovered(obi)));
    }
    let iofc = row("mini-iofc")?;
    if flags(iofc) != [true, true, true, false] || !uncovered(iofc).is_superset(&set(&[PARTS, SPACE_TIME, MENTAL])) {
        problems.push(format!("mini-iofc {:?} {:?}", flags(iofc), uncovered(iofc)));
    }
    let tove = row("mini-tove")?;
    if flags(tove) != [false, false, true, false] {
        problems.push(format!("mini-tove {:?}", flags(tove)));
    }
    if out.status.code() != Some(0) {
        problems.push(format!("exit code {:?}", out.status.code()));
    }
    if !problems.is_empty() {
        return Err(problems.join("; "));
    }
    within(Duration::from_secs(1), started, "4/4 fixtures exact, CCO member".into())
}

fn oracle_equivalence() -> Outcome {
    let started = Instant::now();
    let mut agreed = 0;
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let s = random_scenario(&mut ChaCha8Rng::seed_from_u64(seed), GenParams::default());
        let suite = s.suite().map_err(|e| format!("seed {seed}: {e}"))?;
        let oracle = s.oracle();
        let mut ok = true;
        for entry in &s.entries {
            let inheritance = check_inheritance(&suite, entry);
            let (keys, uncovered) = oracle.inheritance(entry);
            ok &= evidence_keys(&check_delimit(&suite, entry)) == oracle.delimit(entry);
            ok &= evidence_keys(&check_hub(&suite, entry)) == oracle.hub();
            ok &= evidence_keys(&inheritance) == keys;
            ok &= inheritance.uncovered_areas.as_ref() == Some(&uncovered);
        }
        if ok {
            agreed += 1;
        } else {
            failures.push(seed);
        }
    }
    if agreed != 100 {
        return Err(format!("{agreed}/100 seeds agree; differing seeds {failures:?}"));
    }
    within(Duration::from_secs(10), started, "100/100 seeds agree".into())
}

fn parser_conformance() -> Outcome {
    let dir = root().join("crates/core/tests/conformance");
    let mut snippets: Vec<PathBuf> = fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "ttl"))
        .collect();
    snippets.sort();
    if snippets.len() < 30 {
        return Err(format!("only {} snippets", snippets.len()));
    }
    let started = Instant::now();
    let mut failing = Vec::new();
    for ttl in &snippets {
        let golden = fs::read(ttl.with_extension("nt")).map_err(|e| format!("{}: {e}", ttl.display()))?;
        let out = midarch(&["parse", ttl.to_str().unwrap()]);
        if out.status.code() != Some(0) || out.stdout != golden {
            failing.push(ttl.file_name().unwrap().to_string_lossy().into_owned());
        }
    }
    if !failing.is_empty() {
        return Err(format!("{} of {} differ: {}", failing.len(), snippets.len(), failing.join(", ")));
    }
    within(Duration::from_secs(1), started, format!("{n}/{n} snippets byte-exact", n = snippets.len()))
}

fn pass_flags(s: &Scenario) -> Result<Vec<Vec<bool>>, String> {
    let suite = s.suite().map_err(|e| e.to_string())?;
    let registry = s.registry().map_err(|e| e.to_string())?;
    Ok(classify_middle_architecture(&suite, &registry)
        .verdict_sets
        .iter()
        .map(|set| set.verdicts.iter().map(|v| v.pass).collect())
        .collect())
}

fn invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    let mut renamings = 0;
    for fixture in &FIXTURES {
        let s = Scenario::from_fixture(fixture).map_err(|e| e.to_string())?;
        let expected = pass_flags(&s)?;
        for k in 0..20 {
            let renamed = Renaming::random(&s, &mut rng).scenario(&s);
            if pass_flags(&renamed)? != expected {
                return Err(format!("{}: renaming {k} changed pass flags", fixture.id));
            }
            renamings += 1;
        }
    }

    let mut augmentations = 0;
    for round in 0..100u64 {
        let before = random_scenario(&mut ChaCha8Rng::seed_from_u64(500 + round), GenParams::default());
        let (after, _) = augment_dag(&before, &mut rng, 5);
        let (b, a) = (before.suite().map_err(|e| e.to_string())?, after.suite().map_err(|e| e.to_string())?);
        let g = b.class_graph();
        for x in g.nodes() {
            for y in g.nodes() {
                if b.ultimately_extends(x, y).unwrap() && !a.ultimately_extends(x, y).unwrap() {
                    return Err(format!("augmentation {round} lost {x} -> {y}"));
                }
            }
        }
        augmentations += 1;
    }

    let mut checked = 0;
    for seed in 0..20u64 {
        let s = random_scenario(&mut ChaCha8Rng::seed_from_u64(900 + seed), GenParams::default());
        let suite = s.suite().map_err(|e| e.to_string())?;
        let g = suite.class_graph();
        let n = g.len();
        let reach: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| g.reaches(a, b)).collect()).collect();
        for a in 0..n {
            if !reach[a][a] {
                return Err(format!("seed {seed}: {} does not reach itself", g.iri(a)));
            }
            for b in (0..n).filter(|&b| reach[a][b]) {
                if (0..n).any(|c| reach[b][c] && !reach[a][c]) {
                    return Err(format!("seed {seed}: transitivity fails from {}", g.iri(a)));
                }
            }
        }
        checked += 1;
    }
    Ok(format!(
        "{renamings} renamings, {augmentations} augmentations, {checked} suites reflexive and transitive"
    ))
}

fn determinism() -> Outcome {
    let args = ["check", "fixtures/mini-cco", "--format", "json"];
    let (a, b) = (midarch(&args), midarch(&args));
    if a.status.code() != Some(0) {
        return Err(format!("exit code {:?}: {}", a.status.code(), String::from_utf8_lossy(&a.stderr)));
    }
    if a.stdout != b.stdout {
        return Err("outputs differ".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn double_star_implication() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let (mut held, mut antecedent) = (0, 0);
    for k in 0..50 {
        let s = bounded_areas_scenario(&mut rng, GenParams::default());
        let suite = s.suite().map_err(|e| format!("scenario {k}: {e}"))?;
        let entry = &s.entries[0];
        let findings = check_double_star(&suite, entry).map_err(|e| format!("scenario {k}: {e}"))?;
        let pass = check_inheritance(&suite, entry).pass;
        if findings.is_empty() {
            antecedent += 1;
            if !pass {
                return Err(format!("scenario {k}: no (**) findings but INHERITANCE fails"));
            }
        }
        held += 1;
    }
    Ok(format!("{held}/50 hold ({antecedent} with zero (**) findings)"))
}

fn cycle_rejection() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..20u64 {
        let base = random_scenario(&mut ChaCha8Rng::seed_from_u64(3000 + k), GenParams::default());
        let (s, _) = inject_cycle(&base, &mut rng);
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let docs = dir.path().join("suite");
        fs::create_dir(&docs).map_err(|e| e.to_string())?;
        for d in &s.documents {
            fs::write(docs.join(&d.source_name), to_turtle(d)).map_err(|e| e.to_string())?;
        }
        let tlo = dir.path().join("tlo.ttl");
        fs::write(&tlo, to_turtle(&s.tlo_documents[0])).map_err(|e| e.to_string())?;

        let out = midarch(&["check", docs.to_str().unwrap(), "--tlo", tlo.to_str().unwrap()]);
        let stderr = String::from_utf8_lossy(&out.stderr);
        if out.status.code() != Some(2) {
            return Err(format!("graph {k}: exit {:?}", out.status.code()));
        }
        let named = stderr
            .lines()
            .find_map(|l| l.split("E_CYCLE: asserted subclass cycle ").nth(1))
            .ok_or(format!("graph {k}: no E_CYCLE in {stderr:?}"))?;
        let path: Vec<&str> = named.split(" -> ").collect();
        let edges: BTreeSet<(String, String)> = s
            .documents
            .iter()
            .chain(&s.tlo_documents)
            .flat_map(|d| d.subclass_edges.iter())
            .map(|(c, p)| (c.to_string(), p.to_string()))
            .collect();
        let closed = path.len() >= 2 && path.first() == path.last();
        let valid = path.windows(2).all(|w| edges.contains(&(w[0].to_string(), w[1].to_string())));
        if !closed || !valid {
            return Err(format!("graph {k}: named cycle is not a cycle of the suite: {named}"));
        }
    }
    Ok("20/20 graphs exit 2 with E_CYCLE naming a real cycle".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("verdict matrix", verdict_matrix),
        ("oracle equivalence", oracle_equivalence),
        ("parser conformance", parser_conformance),
        ("invariance", invariance),
        ("determinism", determinism),
        ("double-star implication", double_star_implication),
        ("cycle rejection", cycle_rejection),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("acceptance {}: {name:<24} PASS  {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("acceptance {}: {name:<24} FAIL  {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 7 acceptance criteria pass");
}
