//! Inequalities between domination and resolving parameters of one graph.

use std::collections::BTreeMap;

use super::random::{sample, stream, RandomGraphSpec};
use super::verdict::{Instance, Verdict, VerdictStatus};
use crate::error::{Error, Result};
use crate::generators::{complete, path, rooted_product, RootSpec};
use crate::graph::Graph;
use crate::kind::ParameterKind::{self, *};
use crate::solver::{dim_lower_bound_twins, Solver, Status};

pub const BOUND_CLAIMS: [&str; 10] = [
    "Thm1", "Thm18", "Thm9", "Thm10", "Thm14", "Thm15", "Thm16", "Thm17", "Chain", "Thm22",
];

/// The single-instance claim about the two-triangle graph.
pub const FIGURE_CLAIM: &str = "Fig5";

const KINDS: [ParameterKind; 9] = [Dom, Idom, Tdom, Cdom, Dim, Rdom, Ridom, Rtdom, Rcdom];

pub fn is_bound_claim(id: &str) -> bool {
    id.eq_ignore_ascii_case(FIGURE_CLAIM) || BOUND_CLAIMS.iter().any(|c| c.eq_ignore_ascii_case(id))
}

fn canonical_id(id: &str) -> Result<&'static str> {
    if id.eq_ignore_ascii_case(FIGURE_CLAIM) {
        return Ok(FIGURE_CLAIM);
    }
    BOUND_CLAIMS
        .iter()
        .copied()
        .find(|c| c.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownKind(format!("claim {id}")))
}

/// Exact values of every parameter the bound claims mention.
#[derive(Clone, Debug, Default)]
pub struct Params {
    /// `None` inside means no set has the property.
    pub values: BTreeMap<ParameterKind, Option<usize>>,
    pub twin_excess: usize,
    /// Parameters the budget left unpinned, with their intervals.
    pub unpinned: Vec<(ParameterKind, String)>,
}

impl Params {
    pub fn compute(g: &Graph, solver: &Solver) -> Result<Self> {
        let mut p = Params {
            twin_excess: dim_lower_bound_twins(g),
            ..Default::default()
        };
        for kind in KINDS {
            let r = solver.solve(g, kind)?;
            match r.status {
                Status::Exact => {
                    p.values.insert(kind, r.value);
                }
                Status::Infeasible => {
                    p.values.insert(kind, None);
                }
                Status::BoundsOnly => p.unpinned.push((kind, r.interval())),
            }
        }
        Ok(p)
    }

    fn get(&self, kind: ParameterKind) -> Option<usize> {
        self.values.get(&kind).copied().flatten()
    }
}

/// Computes every parameter on `g` and checks one claim.
pub fn check_bound_theorem(g: &Graph, theorem_id: &str, solver: &Solver) -> Result<Verdict> {
    if !g.is_connected() {
        return Err(Error::Disconnected("bound claims"));
    }
    let params = Params::compute(g, solver)?;
    evaluate(theorem_id, &params)
}

/// `lo ≤ mid ≤ hi`, with a note on failure.
fn sandwich(v: &mut Verdict, lo: usize, mid: usize, hi: usize, what: &str) -> bool {
    let ok = lo <= mid && mid <= hi;
    if !ok {
        v.note(format!("{what}: {lo} ≤ {mid} ≤ {hi} fails"));
    }
    ok
}

/// Checks one claim against precomputed parameters.
pub fn evaluate(theorem_id: &str, p: &Params) -> Result<Verdict> {
    let id = canonical_id(theorem_id)?;
    let mut v = Verdict::new(id, VerdictStatus::Confirmed);
    for (kind, value) in &p.values {
        v.evidence.values.insert(kind.symbol().to_owned(), *value);
    }
    v.evidence.values.insert("twin excess".to_owned(), Some(p.twin_excess));
    if !p.unpinned.is_empty() {
        for (kind, interval) in &p.unpinned {
            v.note(format!("{} not pinned: {interval}", kind.symbol()));
        }
        v.status = VerdictStatus::Undecided;
        return Ok(v);
    }

    let need = |kind: ParameterKind| p.get(kind);
    let (dom, idom, tdom, cdom, dim) = (need(Dom), need(Idom), need(Tdom), need(Cdom), need(Dim));
    let (r, ri, rt, rc) = (need(Rdom), need(Ridom), need(Rtdom), need(Rcdom));

    // A claim about a parameter that does not exist on this graph says nothing.
    let undefined = |v: Verdict, what: &str| {
        let mut out = Verdict::vacuous(id, format!("{what} undefined on this graph"));
        out.evidence = v.evidence;
        out
    };

    let holds = match id {
        "Thm1" => match (dom, dim, r) {
            (Some(d), Some(m), Some(r)) => sandwich(&mut v, d.max(m), r, d + m, "max(γ, dim) ≤ γ_r ≤ γ + dim"),
            _ => return Ok(undefined(v, "γ_r")),
        },
        "Thm18" => match (idom, dim, ri) {
            (Some(i), Some(m), Some(ri)) => sandwich(&mut v, i.max(m), ri, i + m, "max(γ_i, dim) ≤ γ_ri ≤ γ_i + dim"),
            _ => return Ok(undefined(v, "γ_ri")),
        },
        "Thm9" | "Thm14" | "Thm15" => match (tdom, dim, rt) {
            (Some(t), Some(m), Some(rt)) => {
                let applies = match id {
                    "Thm14" => t >= m,
                    "Thm15" => t <= m,
                    _ => true,
                };
                if !applies {
                    let mut out = Verdict::vacuous(id, "condition on γ_t and dim fails");
                    out.evidence = v.evidence;
                    return Ok(out);
                }
                let lo = match id {
                    "Thm14" => t,
                    "Thm15" => m,
                    _ => t.max(m),
                };
                sandwich(&mut v, lo, rt, t + m, "γ_rt bounds")
            }
            _ => return Ok(undefined(v, "γ_rt")),
        },
        "Thm10" | "Thm16" | "Thm17" => match (cdom, dim, rc) {
            (Some(c), Some(m), Some(rc)) => {
                let applies = match id {
                    "Thm16" => c >= m,
                    "Thm17" => c <= m,
                    _ => true,
                };
                if !applies {
                    let mut out = Verdict::vacuous(id, "condition on γ_c and dim fails");
                    out.evidence = v.evidence;
                    return Ok(out);
                }
                let lo = match id {
                    "Thm16" => c,
                    "Thm17" => m,
                    _ => c.max(m),
                };
                sandwich(&mut v, lo, rc, c + m, "γ_rc bounds")
            }
            _ => return Ok(undefined(v, "γ_rc")),
        },
        "Chain" => match (r, rt, rc) {
            (Some(r), Some(rt), Some(rc)) => sandwich(&mut v, r, rt, rc, "γ_r ≤ γ_rt ≤ γ_rc"),
            _ => return Ok(undefined(v, "γ_r, γ_rt or γ_rc")),
        },
        "Thm22" => match dim {
            Some(m) => sandwich(&mut v, p.twin_excess, m, usize::MAX, "twin excess ≤ dim"),
            None => return Ok(undefined(v, "dim")),
        },
        "Fig5" => match (dom, tdom, cdom, dim, r, rt, rc) {
            (Some(d), Some(t), Some(c), Some(m), Some(r), Some(rt), Some(rc)) => {
                let mut ok = true;
                if rt != t + m {
                    v.note(format!("γ_rt = {rt}, upper bound γ_t + dim = {}", t + m));
                    ok = false;
                }
                if rc != c + m {
                    v.note(format!("γ_rc = {rc}, upper bound γ_c + dim = {}", c + m));
                    ok = false;
                }
                if r != d.max(m) {
                    v.note(format!("γ_r = {r}, lower bound max(γ, dim) = {}", d.max(m)));
                    ok = false;
                }
                ok
            }
            _ => return Ok(undefined(v, "a parameter")),
        },
        _ => unreachable!(),
    };
    if !holds {
        v.status = VerdictStatus::Refuted;
    }
    Ok(v)
}

/// The connected graphs shared by every bound claim.
pub fn sample_bound_graphs(seed: u64, instances: usize, order: (usize, usize)) -> Result<Vec<Graph>> {
    let mut rng = stream(seed, 100);
    let spec = RandomGraphSpec::new(order.0, order.1, seed).connected();
    (0..instances).map(|_| sample(&spec, &mut rng)).collect()
}

/// `P2 ∘ K3`: two triangles joined at one vertex each.
pub fn figure_graph() -> Graph {
    rooted_product(&path(2).expect("P2"), &complete(3).expect("K3"), &RootSpec::Index(0)).expect("valid root")
}

/// All bound claims on one graph, tagged with its sample index.
pub fn check_bound_instance(ids: &[&str], seed_index: usize, g: &Graph, solver: &Solver) -> Result<Vec<Verdict>> {
    let params = Params::compute(g, solver)?;
    ids.iter()
        .map(|id| {
            let mut v = evaluate(id, &params)?;
            v.instance = Some(Instance {
                seed_index,
                gamma: g.to_json_model(),
                omega: None,
                root: None,
            });
            Ok(v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;
    use crate::solver::Budget;

    #[test]
    fn figure_narrative() {
        let solver = Solver::new(Budget::exhaustive());
        let v = check_bound_theorem(&figure_graph(), "Fig5", &solver).unwrap();
        assert_eq!(v.status, VerdictStatus::Confirmed, "{:?}", v.notes);
        assert_eq!(v.evidence.values["γ_rt"], Some(4));
        assert_eq!(v.evidence.values["γ_rc"], Some(4));
        assert_eq!(v.evidence.values["γ_r"], Some(2));
    }

    #[test]
    fn c4_bounds() {
        let solver = Solver::new(Budget::exhaustive());
        let g = cycle(4).unwrap();
        for id in BOUND_CLAIMS {
            let v = check_bound_theorem(&g, id, &solver).unwrap();
            assert_eq!(v.status, VerdictStatus::Confirmed, "{id}: {:?}", v.notes);
        }
        // No resolving independent dominating set on C4.
        assert!(check_bound_theorem(&g, "Thm18", &solver).unwrap().vacuous);
    }
}
