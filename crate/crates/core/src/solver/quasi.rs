//! Quasi-double domination: the least `|U| + |V|` over disjoint pairs where
//! `U ∪ V` is 2-dominating and `V` double dominates `G - U`.
//!
//! Any such `S = U ∪ V` is 2-dominating, so sizes start at γ_2. For each size
//! the 2-dominating sets are enumerated and every split of them is tried.
//! `U = V(G)` with `V = ∅` always qualifies, so the answer is at most `n`.

use std::time::Instant;

use super::{ParameterKind, Run, Solver, SolverResult, Status};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{is_2_dominating, Certificate};

/// Splits are tried for sets up to this size; the 2^t enumeration is the cost.
const MAX_SPLIT: usize = 40;

pub(super) fn solve(solver: &Solver, g: &Graph) -> Result<SolverResult> {
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertex("quasi-double domination"));
    }
    let start = Instant::now();
    let n = g.order();

    let gamma2 = Solver::new(solver.budget().clone())
        .canonical_witness(false)
        .solve(g, ParameterKind::TwoDom)?;
    let run = Run::new(solver, start);
    run.count_nodes(gamma2.nodes_explored);
    let mut lower = gamma2.lower.min(n);

    let mut found = None;
    let mut aborted = false;
    for t in lower..=n {
        if t > MAX_SPLIT {
            aborted = true;
            break;
        }
        let mut enumerator = Enumerator {
            g,
            run: &run,
            target: t,
            chosen: Vec::with_capacity(t),
            found: None,
            aborted: false,
            visited: 0,
        };
        enumerator.subsets(0);
        run.count_nodes(enumerator.visited);
        if let Some(pair) = enumerator.found {
            found = Some(pair);
            break;
        }
        if enumerator.aborted {
            aborted = true;
            break;
        }
        lower = t + 1;
    }

    let mut out = SolverResult {
        kind: ParameterKind::Qddom,
        status: Status::Exact,
        value: None,
        lower,
        upper: None,
        witness: None,
        nodes_explored: 0,
        elapsed: start.elapsed(),
    };
    match found {
        Some((u, v)) if !aborted => {
            let size = u.len() + v.len();
            out.value = Some(size);
            out.lower = size;
            out.upper = Some(size);
            out.witness = Some(Certificate::quasi(g, &u, &v));
        }
        _ => {
            // Trivial pair: everything in U.
            out.status = Status::BoundsOnly;
            out.upper = Some(n);
            out.witness = Some(Certificate::quasi(g, &VertexSet::full(n), &VertexSet::new(n)));
        }
    }
    out.nodes_explored = run.nodes();
    out.elapsed = start.elapsed();
    Ok(out)
}

struct Enumerator<'a, 'r> {
    g: &'a Graph,
    run: &'a Run<'r>,
    target: usize,
    chosen: Vec<usize>,
    found: Option<(VertexSet, VertexSet)>,
    aborted: bool,
    visited: u64,
}

impl Enumerator<'_, '_> {
    /// Walks the `target`-subsets of `from..n` in lexicographic order.
    fn subsets(&mut self, from: usize) -> bool {
        self.visited += 1;
        if self.visited % 1024 == 0 && self.run.out_of_time() {
            self.aborted = true;
        }
        if self.aborted {
            return true;
        }
        let n = self.g.order();
        if self.chosen.len() == self.target {
            return self.try_splits();
        }
        let missing = self.target - self.chosen.len();
        for v in from..=n.saturating_sub(missing) {
            self.chosen.push(v);
            let done = self.subsets(v + 1);
            self.chosen.pop();
            if done {
                return true;
            }
        }
        false
    }

    fn try_splits(&mut self) -> bool {
        let g = self.g;
        let n = g.order();
        let s = VertexSet::from_indices(n, self.chosen.iter().copied());
        if !is_2_dominating(g, &s) {
            return false;
        }
        let t = self.chosen.len();
        for mask in 0u64..(1u64 << t) {
            let mut u = VertexSet::new(n);
            let mut v = VertexSet::new(n);
            for (i, &x) in self.chosen.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    u.insert(x);
                } else {
                    v.insert(x);
                }
            }
            let doubled = g
                .vertices()
                .filter(|&w| !u.contains(w))
                .all(|w| g.adjacency(w).intersection_count(&v) + usize::from(v.contains(w)) >= 2);
            if doubled {
                self.found = Some((u, v));
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
pub(crate) fn exact(g: &Graph) -> Option<usize> {
    solve(&Solver::new(super::Budget::exhaustive()), g).ok()?.value
}
