use proptest::prelude::*;
use softop::checker::Kind;
use softop::{
    check_proposition, find_strictness_witness, replay, run_ids, CheckConfig, Conventions, PropositionId, SearchBudget,
    SoftSet, SoftTopology, Universe, Verdict, Witness,
};

fn serial() -> CheckConfig {
    CheckConfig {
        serial: true,
        ..CheckConfig::default()
    }
}

fn status(w: &Witness) -> &'static str {
    match w.verdict {
        Verdict::Confirmed { .. } => "confirmed",
        Verdict::Vacuous { .. } => "vacuous",
        Verdict::Counterexample => "counterexample",
        Verdict::Found { .. } => "found",
        Verdict::NotFound { .. } => "not found",
    }
}

fn proved() -> Vec<PropositionId> {
    PropositionId::ALL.iter().copied().filter(|id| id.is_proved()).collect()
}

#[test]
fn symmetry_reduction_keeps_every_verdict() {
    let reduced = SearchBudget::exhaustive(3);
    let full = SearchBudget {
        symmetry: false,
        ..reduced
    };
    for id in proved() {
        let a = check_proposition(id, &reduced, &CheckConfig::default());
        let b = check_proposition(id, &full, &CheckConfig::default());
        assert_eq!(status(&a), status(&b), "{id}");
        assert_eq!(status(&a), if id.kind() == Kind::Vacuous { "vacuous" } else { "confirmed" }, "{id}");
        if let (Verdict::Confirmed { instances: n, .. }, Verdict::Confirmed { instances: m, .. }) = (&a.verdict, &b.verdict) {
            assert!(n <= m, "{id}: reduced run examined more instances");
        }
    }
}

#[test]
fn one_cell_budget_marks_vacuous_statements() {
    let report = run_ids(&proved(), &SearchBudget::exhaustive(1), &CheckConfig::default());
    assert!(!report.has_counterexample());
    let vacuous: Vec<_> = report
        .entries
        .iter()
        .filter(|w| matches!(w.verdict, Verdict::Vacuous { .. }))
        .map(|w| w.id)
        .collect();
    // The one-cell space meets every other hypothesis.
    assert_eq!(vacuous, vec![PropositionId::T4_SEPARABLE_VACUOUS]);
    assert!(report
        .entries
        .iter()
        .all(|w| matches!(w.verdict, Verdict::Confirmed { instances: 1, .. } | Verdict::Vacuous { .. })));
}

#[test]
fn dropping_the_null_somewhere_dense_convention_is_caught() {
    let config = CheckConfig {
        conventions: Conventions {
            null_somewhere_dense: false,
            ..Conventions::STANDARD
        },
        ..serial()
    };
    let w = check_proposition(PropositionId::D1_DIAGRAM, &SearchBudget::exhaustive(4), &config);
    assert!(w.is_counterexample(), "{}", w.trace);
    assert!(w.sets[0].sections.values().all(Vec::is_empty), "expected G = Φ_E");
    assert!(w.trace.contains("sw-open but not somewhere dense"));
    let again = replay(&w, &config).unwrap().unwrap();
    assert_eq!(again, w.clone().without_timing());
    // Under the standard conventions the recorded instance is no counterexample.
    let fixed = replay(&w, &serial()).unwrap().unwrap();
    assert!(matches!(fixed.verdict, Verdict::Confirmed { instances: 1, .. }), "{fixed:?}");
}

#[test]
fn dropping_the_null_sw_open_case_is_caught() {
    let config = CheckConfig {
        conventions: Conventions {
            null_sw_open: false,
            ..Conventions::STANDARD
        },
        ..serial()
    };
    let report = run_ids(
        &[PropositionId::P3_UNION, PropositionId::L3_SEMI_IFF_SW_INT],
        &SearchBudget::exhaustive(4),
        &config,
    );
    assert!(report.entries.iter().all(Witness::is_counterexample));
    for w in &report.entries {
        assert_eq!(replay(w, &config).unwrap().unwrap(), w.clone().without_timing());
    }
}

#[test]
fn serial_and_parallel_reports_are_identical() {
    let budget = SearchBudget::exhaustive(3);
    let a = run_ids(PropositionId::ALL, &budget, &serial());
    let b = run_ids(PropositionId::ALL, &budget, &CheckConfig::default());
    assert_eq!(a.to_machine(false), b.to_machine(false));
}

#[test]
fn sampled_runs_repeat_exactly() {
    let budget = SearchBudget {
        max_cells: 5,
        exhaustive_cells: 3,
        sample_count: 150,
        seed: 17,
        ..SearchBudget::default()
    };
    let ids = [PropositionId::P3_UNION, PropositionId::P4_EQUIV, PropositionId::T5_COVER_GLUE];
    let a = run_ids(&ids, &budget, &CheckConfig::default());
    let b = run_ids(&ids, &budget, &serial());
    assert_eq!(a.to_machine(false), b.to_machine(false));
    for w in &a.entries {
        match w.verdict {
            Verdict::Confirmed { samples, .. } => assert_eq!(samples, 300, "{}", w.id),
            _ => panic!("{}: {}", w.id, w.trace),
        }
    }
    let other = run_ids(&ids, &SearchBudget { seed: 18, ..budget }, &serial());
    assert_ne!(a.to_machine(false), other.to_machine(false));
}

#[test]
fn found_witnesses_replay() {
    let budget = SearchBudget::default();
    for &id in PropositionId::ALL.iter().filter(|id| id.is_search()) {
        let w = find_strictness_witness(id, &budget, &CheckConfig::default());
        assert!(matches!(w.verdict, Verdict::Found { .. }), "{id}: {}", w.trace);
        let text = serde_json::to_string(&w).unwrap();
        let parsed: Witness = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, w);
        assert_eq!(replay(&parsed, &CheckConfig::default()).unwrap().unwrap(), w.without_timing());
    }
}

#[test]
fn witnesses_are_smallest() {
    let found = |id| match find_strictness_witness(id, &SearchBudget::default(), &serial()).verdict {
        Verdict::Found { cells } => cells,
        other => panic!("{id}: {other:?}"),
    };
    assert_eq!(found(PropositionId::SD_NOT_SW), 2);
    assert_eq!(found(PropositionId::BETA_NOT_SW), 2);
    assert_eq!(found(PropositionId::SW_NOT_SEMI), 3);
    assert_eq!(found(PropositionId::INTERSECT_NOT_SW), 3);
    assert_eq!(found(PropositionId::SWHOMEO_NOT_T0), 4);
}

#[test]
fn published_example_witnesses_are_valid() {
    let u = Universe::anonymous(1, 3).unwrap();
    let set = |xs: &[&str]| SoftSet::uniform(&u, xs.iter().copied()).unwrap();
    let t = SoftTopology::generate(&u, [set(&["a", "b"])]).unwrap();
    let v = t.classify(&set(&["a"])).unwrap();
    assert!(v.somewhere_dense && !v.sw_open);
    assert!(v.beta_open);
    assert_eq!(t.interior(&set(&["a"])).unwrap(), SoftSet::null(&u));
    assert_eq!(t.closure(&set(&["a"])).unwrap(), SoftSet::absolute(&u));

    let u = Universe::anonymous(1, 4).unwrap();
    let set = |xs: &[&str]| SoftSet::uniform(&u, xs.iter().copied()).unwrap();
    let t = SoftTopology::generate(&u, [set(&["a"]), set(&["c", "d"])]).unwrap();
    let g = set(&["a", "c"]);
    assert_eq!(t.interior(&g).unwrap(), set(&["a"]));
    assert_eq!(t.closure(&set(&["a"])).unwrap(), set(&["a", "b"]));
    let v = t.classify(&g).unwrap();
    assert!(v.sw_open && !v.semiopen);
}

#[test]
fn strict_separation_has_no_finite_swhomeo_witness() {
    let config = CheckConfig {
        separation: softop::Separation::AllPoints,
        ..CheckConfig::default()
    };
    let w = find_strictness_witness(PropositionId::SWHOMEO_NOT_T0, &SearchBudget::default(), &config);
    match w.verdict {
        Verdict::NotFound {
            searched_cells,
            incomplete,
            ..
        } => {
            assert_eq!(searched_cells, 6);
            assert!(!incomplete);
        }
        other => panic!("{other:?}"),
    }
    assert!(w.trace.starts_with("not found within budget"));
    assert_eq!(replay(&w, &config).unwrap(), None);
}

#[test]
fn check_cap_marks_runs_incomplete() {
    let budget = SearchBudget {
        max_checks: 500,
        ..SearchBudget::default()
    };
    match check_proposition(PropositionId::P4_EQUIV, &budget, &serial()).verdict {
        Verdict::Confirmed {
            instances, incomplete, ..
        } => {
            assert!(incomplete);
            assert!(instances <= 500);
        }
        other => panic!("{other:?}"),
    }
    let tiny = SearchBudget {
        max_checks: 3,
        ..budget
    };
    let w = find_strictness_witness(PropositionId::SW_NOT_SEMI, &tiny, &serial());
    assert!(
        matches!(w.verdict, Verdict::NotFound { searched_cells: 2, incomplete: true, .. }),
        "{w:?}"
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn sampled_verdicts_do_not_depend_on_threads(seed in any::<u64>()) {
        let budget = SearchBudget {
            max_cells: 5,
            exhaustive_cells: 2,
            sample_count: 40,
            seed,
            ..SearchBudget::default()
        };
        let ids = [PropositionId::L3_DENSE_SUBSPACE, PropositionId::T4_CHAR];
        let a = run_ids(&ids, &budget, &CheckConfig::default());
        let b = run_ids(&ids, &budget, &serial());
        prop_assert_eq!(a.to_machine(false), b.to_machine(false));
        prop_assert!(!a.has_counterexample());
    }
}
