//! One line per acceptance criterion. Runs without the libtest harness so
//! every criterion reports even when an earlier one fails; the process exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{named_graphs, random_connected, Oracle};
use fcnlab::constructions::{construct, construct_variant, formula_value, Variant};
use fcnlab::generators::{cycle, fcn, rooted_product};
use fcnlab::harness::{self, bounds, check_bound_theorem, check_fcn_claim, HarnessConfig, Selection, VerdictStatus};
use fcnlab::solver::dim_lower_bound_twins;
use fcnlab::{Budget, FcnLevel, Graph, ParameterKind, RootSpec, Solver, Status};
use ParameterKind::*;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:.2?}, limit {limit:?}"))
}

fn structure() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (l, (n, m)) in [(4, 4), (16, 20), (64, 84), (256, 340)].into_iter().enumerate() {
        let g = fcn(FcnLevel(l as u32));
        let json = g.to_json();
        ensure(!json.is_empty() && (g.order(), g.size()) == (n, m), || {
            format!("FCN({l}) has {} vertices and {} edges", g.order(), g.size())
        })?;
        seen.push(format!("{n}/{m}"));
    }
    within(start, Duration::from_secs(1), "generation")?;
    Ok(format!("orders/edges {} in {:.0?}", seen.join(" "), start.elapsed()))
}

/// `a:x ↦ a‖x` must carry the product's edge set onto FCN(l)'s exactly.
fn product_identity() -> Outcome {
    let start = Instant::now();
    let c4 = fcn(FcnLevel(0));
    for l in 1..=2u32 {
        let root = FcnLevel(l).root_suffix().unwrap();
        let product = rooted_product(&c4, &fcn(FcnLevel(l - 1)), &RootSpec::Label(root)).map_err(|e| e.to_string())?;
        let target = fcn(FcnLevel(l));
        let image: Vec<usize> = product
            .vertices()
            .map(|v| target.resolve(&product.label(v).replacen(':', "", 1)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        ensure(
            sorted.len() == target.order() && product.order() == target.order(),
            || format!("level {l}: label map is not a bijection"),
        )?;
        ensure(product.size() == target.size(), || {
            format!("level {l}: edge counts differ")
        })?;
        for (u, v) in product.edges() {
            ensure(target.has_edge(image[u], image[v]), || {
                format!("level {l}: {}-{} has no image edge", product.label(u), product.label(v))
            })?;
        }
    }
    within(start, Duration::from_secs(1), "identity check")?;
    Ok(format!("C4 o FCN(l-1) = FCN(l) for l=1,2 in {:.0?}", start.elapsed()))
}

fn fcn1_suite() -> Outcome {
    let g = fcn(FcnLevel(1));
    let solver = Solver::new(Budget::exhaustive());
    let expected = [
        (Dom, 6),
        (Idom, 6),
        (Tdom, 8),
        (Ddom, 12),
        (TwoDom, 8),
        (Dim, 4),
        (Rdom, 8),
        (Ridom, 8),
        (Rtdom, 8),
    ];
    let mut found = Vec::new();
    for (kind, want) in expected {
        let start = Instant::now();
        let r = solver.solve(&g, kind).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(60), kind.symbol())?;
        ensure(r.status == Status::Exact && r.value == Some(want), || {
            format!("{kind}: got {} ({:?}), expected {want}", r.interval(), r.status)
        })?;
        let w = r.witness.ok_or_else(|| format!("{kind}: no witness"))?;
        ensure(w.verify(&g).map_err(|e| e.to_string())?.is_none(), || {
            format!("{kind}: witness fails")
        })?;
        found.push(format!("{kind}={want}"));
    }
    for (id, kind) in [("Thm13", Cdom), ("RCDS", Rcdom)] {
        let start = Instant::now();
        let v = check_fcn_claim(id, FcnLevel(1), &solver).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(60), id)?;
        ensure(v.status != VerdictStatus::Undecided, || format!("{id} undecided"))?;
        let w = v
            .evidence
            .witnesses
            .first()
            .ok_or_else(|| format!("{id}: verdict has no witness"))?;
        ensure(w.verify(&g).map_err(|e| e.to_string())?.is_none(), || {
            format!("{id}: witness fails")
        })?;
        let proof_set = construct(kind, FcnLevel(1)).map_err(|e| e.to_string())?;
        ensure(
            proof_set.size() == 8 && proof_set.verify(&g).map_err(|e| e.to_string())?.is_none(),
            || format!("{kind}: the 8-vertex proof set does not verify"),
        )?;
        let value = v.evidence.oracle.as_ref().and_then(|o| o.value);
        found.push(format!(
            "{kind}={} vs formula {} -> {:?}",
            value.map_or("?".into(), |x| x.to_string()),
            v.evidence.formula_value.map_or("?".into(), |x| x.to_string()),
            v.status
        ));
    }
    Ok(found.join(", "))
}

fn fcn2_certificates() -> Outcome {
    let start = Instant::now();
    let g = fcn(FcnLevel(2));
    let level1_cdom = construct(Cdom, FcnLevel(1)).map_err(|e| e.to_string())?.size();
    let mut expected: BTreeMap<ParameterKind, usize> = [(Dom, 22), (Idom, 22), (Tdom, 30), (Ddom, 44), (Rtdom, 32)]
        .into_iter()
        .collect();
    for kind in [Cdom, Rcdom] {
        expected.insert(kind, 4 * level1_cdom + 4);
    }
    for (kind, want) in &expected {
        if let Some(f) = formula_value(*kind, FcnLevel(2)) {
            if ![Cdom, Rcdom].contains(kind) {
                ensure(f == *want, || format!("{kind}: formula {f}, expected {want}"))?;
            }
        }
    }

    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for kind in [Dom, Idom, Tdom, Cdom, Ddom, TwoDom, Rdom, Ridom, Rtdom, Rcdom] {
        let cert = construct(kind, FcnLevel(2)).map_err(|e| e.to_string())?;
        if let Some(violation) = cert.verify(&g).map_err(|e| e.to_string())? {
            failures.push(format!("{kind} ({}): {}", cert.size(), violation.describe(&g)));
        }
        if let Some(want) = expected.get(&kind) {
            if cert.size() != *want {
                failures.push(format!("{kind}: size {} expected {want}", cert.size()));
            }
        }
    }
    for kind in [TwoDom, Rdom, Ridom] {
        let mut row = Vec::new();
        for variant in [Variant::Literal, Variant::TwinClosure] {
            let cert = construct_variant(kind, FcnLevel(2), variant).map_err(|e| e.to_string())?;
            let ok = cert.verify(&g).map_err(|e| e.to_string())?.is_none();
            row.push((cert.size(), ok));
        }
        let formula = formula_value(kind, FcnLevel(2));
        let flagged = Some(row[0].0) != formula;
        notes.push(format!(
            "{kind} literal {}{} / twin-closure {}{}{}",
            row[0].0,
            if row[0].1 { " ok" } else { " INVALID" },
            row[1].0,
            if row[1].1 { " ok" } else { " INVALID" },
            if flagged { " [literal differs from formula]" } else { "" }
        ));
        if (kind == TwoDom || kind == Rdom) && (row[0].0, row[1].0) != (36, 32) {
            failures.push(format!("{kind}: variant sizes {} / {}", row[0].0, row[1].0));
        }
        if !row[1].1 {
            failures.push(format!("{kind}: twin-closure set does not verify"));
        }
    }
    within(start, Duration::from_secs(10), "level-2 certificates")?;
    if failures.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(format!("{}; {}", failures.join("; "), notes.join("; ")))
    }
}

fn twin_bound() -> Outcome {
    let mut out = Vec::new();
    for (l, budget) in [(1u32, Budget::exhaustive()), (2, Budget::seconds(120.0))] {
        let g = fcn(FcnLevel(l));
        let want = 4usize.pow(l);
        let bound = dim_lower_bound_twins(&g);
        ensure(bound == want, || {
            format!("level {l}: twin bound {bound}, expected {want}")
        })?;
        let start = Instant::now();
        let r = Solver::new(budget).solve(&g, Dim).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(120), "resolving search")?;
        let w = r.witness.ok_or_else(|| format!("level {l}: no resolving set found"))?;
        ensure(w.size() == want, || {
            format!("level {l}: best resolving set has {} vertices", w.size())
        })?;
        ensure(w.verify(&g).map_err(|e| e.to_string())?.is_none(), || {
            format!("level {l}: set does not resolve")
        })?;
        out.push(format!(
            "dim(FCN({l}))={want} ({:?}, {:.1?})",
            r.status,
            start.elapsed()
        ));
    }
    Ok(out.join(", "))
}

fn acceptance_config() -> HarnessConfig {
    HarnessConfig {
        seed: 7,
        instances: 200,
        budget: Budget::seconds(60.0),
        ..HarnessConfig::default()
    }
}

fn product_theorems() -> Outcome {
    let start = Instant::now();
    let report = harness::run(&Selection::Products, &acceptance_config()).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(600), "product sampling")?;
    let line = report
        .summaries
        .iter()
        .map(|s| format!("{} {}/{} refuted", s.claim_id, s.refuted, s.instances))
        .collect::<Vec<_>>()
        .join(", ");
    let bad: usize = report.summaries.iter().map(|s| s.refuted + s.undecided).sum();
    let counted: usize = report.summaries.iter().map(|s| s.instances).sum();
    ensure(counted == 8 * 200, || format!("{counted} instances checked"))?;
    if bad == 0 {
        Ok(format!("{line} in {:.1?}", start.elapsed()))
    } else {
        let first = report
            .verdicts
            .iter()
            .find(|v| v.status != VerdictStatus::Confirmed)
            .map(|v| format!("{}#{}", v.claim_id, v.seed_index()))
            .unwrap_or_default();
        Err(format!("{bad} violations ({line}); first {first}"))
    }
}

fn bound_theorems() -> Outcome {
    let start = Instant::now();
    let report = harness::run(&Selection::Bounds, &acceptance_config()).map_err(|e| e.to_string())?;
    let bad: Vec<String> = report
        .summaries
        .iter()
        .filter(|s| s.status != VerdictStatus::Confirmed)
        .map(|s| format!("{} {:?}", s.claim_id, s.status))
        .collect();
    ensure(bad.is_empty(), || bad.join(", "))?;

    let v = check_bound_theorem(&bounds::figure_graph(), "Fig5", &Solver::new(Budget::exhaustive()))
        .map_err(|e| e.to_string())?;
    let get = |k: &str| v.evidence.values.get(k).copied().flatten();
    let (r, rt, rc) = (get("γ_r"), get("γ_rt"), get("γ_rc"));
    ensure(
        v.status == VerdictStatus::Confirmed && (r, rt, rc) == (Some(2), Some(4), Some(4)),
        || format!("P2 o K3: γ_r {r:?}, γ_rt {rt:?}, γ_rc {rc:?}, {:?}", v.status),
    )?;
    Ok(format!(
        "{} claims x 200 graphs hold; P2 o K3 γ_r=2 γ_rt=4 γ_rc=4 in {:.1?}",
        report.summaries.len() - 1,
        start.elapsed()
    ))
}

fn mismatches(g: &Graph, solver: &Solver) -> Vec<String> {
    let oracle = Oracle::new(g);
    let mut out = Vec::new();
    for kind in ParameterKind::ALL {
        if kind.is_resolving() && !oracle.is_connected() {
            continue;
        }
        let want = if kind == Qddom {
            if g.has_isolated_vertex() {
                continue;
            }
            Some(oracle.min_quasi())
        } else {
            oracle.min_set(kind).map(|(k, _)| k)
        };
        let got = match solver.solve(g, kind) {
            Ok(r) if r.status == Status::Exact || r.status == Status::Infeasible => r.value,
            Ok(r) => {
                out.push(format!("{kind} on {}: {:?}", g.name(), r.status));
                continue;
            }
            Err(e) => {
                out.push(format!("{kind} on {}: {e}", g.name()));
                continue;
            }
        };
        if got != want {
            out.push(format!("{kind} on {}: {got:?} vs {want:?}", g.name()));
        }
    }
    out
}

fn oracle_equivalence() -> Outcome {
    let solver = Solver::new(Budget::exhaustive());
    let mut graphs = named_graphs(8);
    let named = graphs.len();
    graphs.extend(random_connected(2024, 100, 2, 8));
    let bad: Vec<String> = graphs.iter().flat_map(|g| mismatches(g, &solver)).collect();
    ensure(bad.is_empty(), || {
        format!("{} mismatches, first: {}", bad.len(), bad[0])
    })?;
    Ok(format!("{named} named + 100 random graphs, 12 kinds, 0 mismatches"))
}

fn determinism() -> Outcome {
    let config = HarnessConfig {
        instances: 50,
        threads: 1,
        ..acceptance_config()
    };
    let a = harness::run(&Selection::All, &config)
        .map_err(|e| e.to_string())?
        .to_json();
    let b = harness::run(&Selection::All, &config)
        .map_err(|e| e.to_string())?
        .to_json();
    ensure(a == b, || "reports differ between runs".into())?;

    let solver = Solver::new(Budget::exhaustive());
    let g = fcn(FcnLevel(1));
    let mut certs = 0;
    for kind in ParameterKind::SET_KINDS {
        let x = solver
            .solve(&g, kind)
            .map_err(|e| e.to_string())?
            .witness
            .map(|w| w.to_json());
        let y = solver
            .solve(&g, kind)
            .map_err(|e| e.to_string())?
            .witness
            .map(|w| w.to_json());
        ensure(x == y, || format!("{kind} solver certificate differs"))?;
        certs += 1;
    }
    for kind in [Dom, Idom, Tdom, Cdom, Ddom, TwoDom, Rdom, Ridom, Rtdom, Rcdom] {
        let x = construct(kind, FcnLevel(2)).map_err(|e| e.to_string())?.to_json();
        let y = construct(kind, FcnLevel(2)).map_err(|e| e.to_string())?.to_json();
        ensure(x == y, || format!("{kind} construction certificate differs"))?;
        certs += 1;
    }
    let c5 = cycle(5).map_err(|e| e.to_string())?;
    ensure(c5.to_json() == cycle(5).map_err(|e| e.to_string())?.to_json(), || {
        "graph export differs".into()
    })?;
    Ok(format!(
        "report of {} bytes and {certs} certificates byte-identical",
        a.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("structure", structure),
        ("rooted-product identity", product_identity),
        ("FCN(1) exact suite", fcn1_suite),
        ("FCN(2) certificates", fcn2_certificates),
        ("twin lower bound", twin_bound),
        ("product membership", product_theorems),
        ("bound theorems", bound_theorems),
        ("oracle equivalence", oracle_equivalence),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
