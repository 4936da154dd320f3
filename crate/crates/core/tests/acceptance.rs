//! One pass/fail line per acceptance criterion, written straight to stderr so
//! it shows without `--nocapture`.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use common::{all_sets, family_filter, Cells, Classical};
use softop::checker::Kind;
use softop::enumerate::{enumerate_topologies, shapes, topology_families};
use softop::{
    check_proposition, find_strictness_witness, replay, run_ids, run_report, CheckConfig, Conventions, PropositionId,
    SearchBudget, SoftFunction, SoftSet, SoftTopology, Universe, Verdict,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, why: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why.into())
    }
}

fn four_point() -> Outcome {
    let u = Universe::new(["w", "x", "y", "z"], ["e1", "e2"]).map_err(|e| e.to_string())?;
    let s = |e1: &[&str], e2: &[&str]| SoftSet::from_sections(&u, [("e1", e1.to_vec()), ("e2", e2.to_vec())]).unwrap();
    let f = s(&["x", "z"], &["w", "x"]);
    let g = s(&["w", "x", "y", "z"], &["y", "z"]);
    let h = s(&["x", "z"], &[]);
    let listed = [SoftSet::null(&u), f, g, h, SoftSet::absolute(&u)];
    ensure(SoftTopology::validate(&u, &listed).is_ok(), "T does not validate")?;
    let t = SoftTopology::new(&u, listed).map_err(|e| e.to_string())?;

    let y = s(&["x", "y"], &["x", "y"]);
    let (i, j, k) = (s(&["x"], &["x"]), s(&["x", "y"], &["y"]), s(&["x"], &[]));
    let sub = t.subspace(&y).map_err(|e| e.to_string())?;
    let mut expected = vec![0, i.bits(), j.bits(), k.bits(), y.bits()];
    expected.sort_unstable();
    ensure(sub.open_bits() == expected.as_slice(), "subspace over Y differs from {Φ, I, J, K, Y}")?;
    ensure(t.classify(&y).unwrap().dense, "Y is not dense over X")?;
    ensure(sub.classify(&i).unwrap().sw_open, "I is not sw-open over Y")?;
    ensure(!t.classify(&i).unwrap().sw_open, "I is sw-open over X")?;
    Ok("T validates; T_Y = {Φ, I, J, K, Y}; Y dense; I sw-open over Y only".into())
}

fn identity() -> Outcome {
    let u = Universe::new(["x", "y", "z"], ["e1", "e2"]).map_err(|e| e.to_string())?;
    let f = SoftSet::uniform(&u, ["y"]).unwrap();
    let g = SoftSet::uniform(&u, ["x", "z"]).unwrap();
    let h = SoftSet::from_sections(&u, [("e1", vec!["x", "y", "z"]), ("e2", vec!["x", "y"])]).unwrap();
    let t = SoftTopology::new(&u, [SoftSet::null(&u), f, g, SoftSet::absolute(&u)]).map_err(|e| e.to_string())?;
    let s = SoftTopology::new(&u, [SoftSet::null(&u), h, SoftSet::absolute(&u)]).map_err(|e| e.to_string())?;
    let c = SoftFunction::identity(&u).classify(&t, &s).map_err(|e| e.to_string())?;
    ensure(c.sw_continuous, "identity is not sw-continuous")?;
    ensure(!c.semicontinuous, "identity is semicontinuous")?;
    ensure(!c.continuous, "identity is continuous")?;
    Ok("sw-continuous true, semicontinuous false, continuous false".into())
}

fn oracle_equivalence() -> Outcome {
    let flat = |s: &SoftSet| -> Cells { s.flatten().0 };
    let mut mismatches = 0usize;
    let mut topologies = 0usize;
    for (e, x) in shapes(4) {
        let u = Universe::anonymous(e, x).unwrap();
        let sets = all_sets(&u);
        let tops = enumerate_topologies(&u).map_err(|e| e.to_string())?;
        ensure(tops.len() == 355, format!("{} topologies on shape {e}×{x}", tops.len()))?;
        for t in &tops {
            topologies += 1;
            let o = Classical::of(t);
            for g in &sets {
                let fg = flat(g);
                mismatches += usize::from(flat(&t.interior(g).unwrap()) != o.interior(&fg));
                mismatches += usize::from(flat(&t.closure(g).unwrap()) != o.closure(&fg));
            }
        }
    }
    let mut maps = 0usize;
    for (de, dx) in shapes(4) {
        let dom = Universe::anonymous(de, dx).unwrap();
        for (ce, cx) in shapes(4) {
            let cod = Universe::anonymous(ce, cx).unwrap();
            let codes = |n: usize, m: usize| {
                (0..m.pow(n as u32)).map(move |mut c| {
                    (0..n)
                        .map(|_| {
                            let v = c % m;
                            c /= m;
                            v
                        })
                        .collect::<Vec<_>>()
                })
            };
            for u in codes(dx, cx) {
                for p in codes(de, ce) {
                    maps += 1;
                    let f = SoftFunction::new(&dom, &cod, u.clone(), p.clone()).unwrap();
                    for a in all_sets(&dom) {
                        let image: Cells = flat(&a).iter().map(|&(e, x)| (p[e], u[x])).collect();
                        mismatches += usize::from(flat(&f.image(&a).unwrap()) != image);
                    }
                    for b in all_sets(&cod) {
                        let fb = flat(&b);
                        let pre: Cells = (0..de)
                            .flat_map(|e| (0..dx).map(move |x| (e, x)))
                            .filter(|&(e, x)| fb.contains(&(p[e], u[x])))
                            .collect();
                        mismatches += usize::from(flat(&f.preimage(&b).unwrap()) != pre);
                    }
                }
            }
        }
    }
    ensure(mismatches == 0, format!("{mismatches} mismatches"))?;
    Ok(format!("{topologies} topologies × 16 sets and {maps} (u, p) pairs, 0 mismatches"))
}

fn enumeration_counts() -> Outcome {
    let mut counts = Vec::new();
    for (cells, expected) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
        let listed = topology_families(cells).map_err(|e| e.to_string())?;
        let oracle = family_filter(cells);
        ensure(listed.len() == expected, format!("{} topologies at {cells} cells", listed.len()))?;
        ensure(
            listed.iter().cloned().collect::<std::collections::BTreeSet<_>>() == oracle,
            format!("enumerator and family filter disagree at {cells} cells"),
        )?;
        counts.push(listed.len().to_string());
    }
    Ok(format!("counts {} match the family filter", counts.join(", ")))
}

fn proposition_suite() -> Outcome {
    let ids: Vec<_> = PropositionId::ALL.iter().copied().filter(|id| id.is_proved()).collect();
    let budget = SearchBudget::default();
    ensure(budget.exhaustive_cells == 4 && budget.max_checks == 10_000_000, "unexpected default budget")?;
    let report = run_ids(&ids, &budget, &CheckConfig::default());
    let mut instances = 0u64;
    for w in &report.entries {
        match &w.verdict {
            Verdict::Confirmed {
                instances: n,
                incomplete: false,
                ..
            } => instances += n,
            Verdict::Vacuous { .. } if w.id.kind() == Kind::Vacuous => {}
            _ => return Err(format!("{}: {}", w.id, w.trace)),
        }
    }
    Ok(format!("{} ids, {instances} instances, 0 counterexamples", ids.len()))
}

fn strictness_witnesses() -> Outcome {
    let budget = SearchBudget::default();
    let config = CheckConfig::default();
    let mut notes = Vec::new();
    let required = [
        PropositionId::SD_NOT_SW,
        PropositionId::BETA_NOT_SW,
        PropositionId::SW_NOT_SEMI,
        PropositionId::INTERSECT_NOT_SW,
    ];
    let optional = [PropositionId::SW_NOT_BETA, PropositionId::SWHOMEO_NOT_T0];
    for id in required.into_iter().chain(optional) {
        let w = find_strictness_witness(id, &budget, &config);
        match w.verdict {
            Verdict::Found { cells } => {
                ensure(!required.contains(&id) || cells <= 4, format!("{id} needed {cells} cells"))?;
                let again = replay(&w, &config).map_err(|e| e.to_string())?;
                ensure(again == Some(w.clone().without_timing()), format!("{id} does not replay"))?;
                notes.push(format!("{id}@{cells}"));
            }
            Verdict::NotFound { searched_cells, .. } if optional.contains(&id) => {
                ensure(searched_cells == 6, format!("{id} stopped at {searched_cells} cells"))?;
                notes.push(format!("{id} not found within budget"));
            }
            ref other => return Err(format!("{id}: {other:?}")),
        }
    }
    Ok(notes.join(", "))
}

fn mutation_sensitivity() -> Outcome {
    let budget = SearchBudget::default();
    let ids: Vec<_> = PropositionId::ALL.iter().copied().filter(|id| id.is_proved()).collect();
    let mut notes = Vec::new();
    for (label, conventions) in [
        (
            "Φ_E not somewhere dense",
            Conventions {
                null_somewhere_dense: false,
                ..Conventions::STANDARD
            },
        ),
        (
            "Φ_E not sw-open",
            Conventions {
                null_sw_open: false,
                ..Conventions::STANDARD
            },
        ),
    ] {
        let config = CheckConfig {
            conventions,
            ..CheckConfig::default()
        };
        let caught: Vec<_> = ids
            .iter()
            .filter(|&&id| check_proposition(id, &budget, &config).is_counterexample())
            .map(|id| id.as_str())
            .collect();
        ensure(!caught.is_empty(), format!("{label}: no check fails"))?;
        notes.push(format!("{label}: {} checks fail (first {})", caught.len(), caught[0]));
    }
    Ok(notes.join("; "))
}

fn determinism() -> Outcome {
    let budget = SearchBudget {
        seed: 7,
        ..SearchBudget::default()
    };
    let parallel = run_report(&budget, &CheckConfig::default()).to_machine(false);
    let serial = run_report(
        &budget,
        &CheckConfig {
            serial: true,
            ..CheckConfig::default()
        },
    )
    .to_machine(false);
    ensure(parallel == serial, "serial and parallel reports differ")?;
    let sampled = SearchBudget {
        max_cells: 5,
        sample_count: 200,
        ..budget
    };
    let ids = [PropositionId::P3_UNION, PropositionId::P4_EQUIV, PropositionId::P5_EQUIV];
    let first = run_ids(&ids, &sampled, &CheckConfig::default()).to_machine(false);
    let second = run_ids(&ids, &sampled, &CheckConfig::default()).to_machine(false);
    ensure(first == second, "sampled reports at 5 cells differ between runs")?;
    Ok(format!("{} report bytes identical; sampled runs at 5 cells identical", parallel.len()))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("1 subspace example", Duration::from_secs(1), four_point),
        ("2 identity example", Duration::from_secs(1), identity),
        ("3 oracle equivalence", Duration::from_secs(60), oracle_equivalence),
        ("4 enumeration counts", Duration::from_secs(60), enumeration_counts),
        ("5 proposition suite", Duration::from_secs(600), proposition_suite),
        ("6 strictness witnesses", Duration::from_secs(600), strictness_witnesses),
        ("7 mutation sensitivity", Duration::from_secs(600), mutation_sensitivity),
        ("8 determinism", Duration::from_secs(600), determinism),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= limit {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        let line = match &result {
            Ok(detail) => format!("PASS  {name}: {detail} [{elapsed:.2?}]\n"),
            Err(why) => {
                failed.push(name);
                format!("FAIL  {name}: {why} [{elapsed:.2?}]\n")
            }
        };
        err.write_all(line.as_bytes()).unwrap();
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
