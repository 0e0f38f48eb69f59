use fcnlab::generators::{complete, cycle, fcn, path, RootSpec};
use fcnlab::harness::{
    self, check_bound_theorem, check_fcn_claim, check_rooted_product_membership, products, HarnessConfig,
    ProductSampling, Selection, VerdictStatus,
};
use fcnlab::{Budget, FcnLevel, Solver};

fn exhaustive() -> Solver {
    Solver::new(Budget::exhaustive())
}

fn small_config(seed: u64, instances: usize) -> HarnessConfig {
    HarnessConfig {
        seed,
        instances,
        budget: Budget::seconds(30.0),
        ..HarnessConfig::default()
    }
}

#[test]
fn fcn1_claims() {
    let s = exhaustive();
    for id in ["Thm11", "Cor19", "Thm21", "DDS", "2DS", "Thm23", "RIDS", "RTDS", "MD"] {
        let v = check_fcn_claim(id, FcnLevel(1), &s).unwrap();
        assert_eq!(v.status, VerdictStatus::Confirmed, "{id}: {:?}", v.notes);
        assert_eq!(v.claim_id, format!("{id}@l=1"));
    }
    // The connected-domination formula gives 12; an 8-vertex set verifies.
    for id in ["Thm13", "RCDS"] {
        let v = check_fcn_claim(id, FcnLevel(1), &s).unwrap();
        assert_eq!(v.status, VerdictStatus::Refuted, "{id}");
        assert_eq!(v.evidence.formula_value, Some(12));
        assert_eq!(v.evidence.oracle.as_ref().unwrap().value, Some(8));
        let w = v.evidence.witnesses.first().expect("refutation carries a witness");
        assert_eq!(w.size(), 8);
        assert!(w.verify(&fcn(FcnLevel(1))).unwrap().is_none());
    }
}

#[test]
fn total_domination_formula_fails_at_level_two() {
    let v = check_fcn_claim("Thm12", FcnLevel(2), &Solver::new(Budget::seconds(60.0))).unwrap();
    assert_eq!(v.status, VerdictStatus::Refuted, "{:?}", v.notes);
    assert_eq!(v.evidence.formula_value, Some(30));
    let w = &v.evidence.witnesses[0];
    assert!(w.size() < 30);
    assert!(w.verify(&fcn(FcnLevel(2))).unwrap().is_none());
    assert!(check_fcn_claim("Thm12", FcnLevel(1), &exhaustive()).is_err());
    assert!(check_fcn_claim("Thm21", FcnLevel(2), &exhaustive()).is_err());
}

#[test]
fn membership_on_named_products() {
    let s = exhaustive();
    let c4 = cycle(4).unwrap();
    for id in ["Thm2", "Thm20", "Thm3", "Thm4", "Thm6", "Thm7", "Thm8"] {
        let v = check_rooted_product_membership(&c4, &c4, &RootSpec::Index(0), id, &s).unwrap();
        assert_eq!(v.status, VerdictStatus::Confirmed, "{id}: {:?}", v.notes);
        assert!(!v.vacuous, "{id}");
    }
    let v = check_rooted_product_membership(&c4, &c4, &RootSpec::Index(0), "Thm6", &s).unwrap();
    assert_eq!(v.evidence.values["γ_×2(Γ∘C4)"], Some(12));
}

#[test]
fn independent_domination_membership_has_a_counterexample() {
    // Two stars joined at their centres: the centres cannot both be chosen.
    let v = check_rooted_product_membership(
        &path(2).unwrap(),
        &path(3).unwrap(),
        &RootSpec::Index(1),
        "Thm20",
        &exhaustive(),
    )
    .unwrap();
    assert_eq!(v.status, VerdictStatus::Refuted);
    assert_eq!(v.evidence.allowed, Some(vec![1, 2]));
    assert_eq!(v.evidence.values["γ_i(Γ∘Ω)"], Some(3));
    assert_eq!(v.evidence.witnesses[0].size(), 3);
}

#[test]
fn hypotheses_make_verdicts_vacuous() {
    let s = exhaustive();
    let k1 = complete(1).unwrap();
    let v = check_rooted_product_membership(&k1, &cycle(4).unwrap(), &RootSpec::Index(0), "Thm2", &s).unwrap();
    assert!(v.vacuous && v.status == VerdictStatus::Confirmed);
    let v =
        check_rooted_product_membership(&path(2).unwrap(), &path(3).unwrap(), &RootSpec::Index(0), "Thm6", &s).unwrap();
    assert!(v.vacuous, "Thm6 needs the four-cycle");
    // Thm18 on C4: no resolving independent dominating set exists.
    assert!(check_bound_theorem(&cycle(4).unwrap(), "Thm18", &s).unwrap().vacuous);
    assert!(check_bound_theorem(&fcnlab::graph::build_graph(3, &[(0, 1)], None).unwrap(), "Thm1", &s).is_err());
}

#[test]
fn bound_claims_on_named_graphs() {
    let s = exhaustive();
    for g in [
        path(5).unwrap(),
        cycle(6).unwrap(),
        complete(5).unwrap(),
        fcn(FcnLevel(1)),
    ] {
        for id in harness::BOUND_CLAIMS {
            let v = check_bound_theorem(&g, id, &s).unwrap();
            assert_eq!(
                v.status,
                VerdictStatus::Confirmed,
                "{id} on {}: {:?}",
                g.name(),
                v.notes
            );
        }
    }
}

#[test]
fn sampling_is_reproducible_and_respects_filters() {
    let sampling = ProductSampling {
        instances: 30,
        ..ProductSampling::default()
    };
    for id in harness::PRODUCT_CLAIMS {
        let a = products::sample_product_instances(id, 9, &sampling).unwrap();
        let b = products::sample_product_instances(id, 9, &sampling).unwrap();
        assert_eq!(a, b, "{id}");
        for (gamma, omega) in &a {
            assert!((2..=6).contains(&gamma.order()) && (2..=5).contains(&omega.order()));
            match id {
                "Thm4" | "Thm5" => assert!(gamma.is_connected() && omega.is_connected()),
                "Thm6" => assert_eq!((omega.order(), omega.size()), (4, 4)),
                _ => {}
            }
        }
    }
    assert_ne!(
        products::sample_product_instances("Thm2", 1, &sampling).unwrap(),
        products::sample_product_instances("Thm2", 2, &sampling).unwrap()
    );
}

#[test]
fn reports_are_byte_identical_across_runs_and_threads() {
    let config = small_config(42, 25);
    let a = harness::run(&Selection::All, &config).unwrap().to_json();
    let b = harness::run(&Selection::All, &config).unwrap().to_json();
    assert_eq!(a, b);
    let threaded = HarnessConfig { threads: 4, ..config };
    assert_eq!(harness::run(&Selection::All, &threaded).unwrap().to_json(), a);
}

#[test]
fn refuted_verdicts_carry_witnesses() {
    let report = harness::run(&Selection::All, &small_config(3, 40)).unwrap();
    for v in report.verdicts.iter().filter(|v| v.status == VerdictStatus::Refuted) {
        assert!(!v.evidence.witnesses.is_empty(), "{} has no witness", v.claim_id);
    }
    // Confirmed summaries split into substantive and vacuous counts.
    for s in &report.summaries {
        assert_eq!(s.instances, s.substantive + s.vacuous + s.refuted + s.undecided);
    }
    let thm14 = report.summaries.iter().find(|s| s.claim_id == "Thm14").unwrap();
    assert!(thm14.vacuous > 0 && thm14.substantive > 0);
}

#[test]
fn selections() {
    let config = small_config(5, 10);
    let r = harness::run(&"Thm11@l=1".parse().unwrap(), &config).unwrap();
    assert_eq!(r.verdicts.len(), 1);
    assert_eq!(r.status(), VerdictStatus::Confirmed);
    let r = harness::run(&"Thm7".parse().unwrap(), &config).unwrap();
    assert_eq!(r.verdicts.len(), 10);
    assert!(r.verdicts.windows(2).all(|w| w[0].seed_index() < w[1].seed_index()));
    let r = harness::run(&Selection::Bounds, &config).unwrap();
    assert!(r.verdicts.iter().any(|v| v.claim_id == "Fig5"));
    assert!("Thm99".parse::<Selection>().is_err());
}

#[test]
fn budget_exhaustion_is_undecided() {
    // One search node leaves the domination number of FCN(2) bracketed
    // around the formula value 22.
    let tiny = Solver::new(Budget::unlimited().with_nodes(1));
    let v = check_fcn_claim("Thm11", FcnLevel(2), &tiny).unwrap();
    assert_eq!(v.status, VerdictStatus::Undecided, "{:?}", v.evidence.oracle);
    let oracle = v.evidence.oracle.unwrap();
    assert!(oracle.lower < 22 && oracle.upper >= Some(22));
    assert_eq!(v.status.exit_code(), 3);
}
