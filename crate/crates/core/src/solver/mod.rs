//! Exact minimisation of every parameter kind.
//!
//! Set kinds run an iterative-deepening branch and bound (see [`search`])
//! seeded with a greedy upper bound. Quasi-double domination, whose witness is
//! a pair of sets, has its own enumeration in [`quasi`].

mod model;
mod quasi;
mod search;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{twin_partition, Graph};
use crate::kind::ParameterKind;
use crate::verify::Certificate;

pub use crate::verify::codes;
use model::Model;
use search::{greedy, Limits, Search};

/// Largest order accepted when an exhaustive answer is required.
pub const DEFAULT_CEILING: usize = 20;

/// Resource limits for one solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
    /// Run to completion regardless of the limits above, but refuse graphs
    /// with more than `ceiling` vertices.
    pub exhaustive_required: bool,
    pub ceiling: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            time_limit: None,
            node_limit: None,
            exhaustive_required: false,
            ceiling: DEFAULT_CEILING,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn seconds(secs: f64) -> Self {
        Self {
            time_limit: Some(Duration::from_secs_f64(secs.max(0.0))),
            ..Self::default()
        }
    }

    pub fn exhaustive() -> Self {
        Self {
            exhaustive_required: true,
            ..Self::default()
        }
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.node_limit = Some(nodes);
        self
    }

    fn admit(&self, g: &Graph) -> Result<()> {
        if self.exhaustive_required && g.order() > self.ceiling {
            return Err(Error::ExhaustiveCeiling {
                n: g.order(),
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// The optimum is known and `witness` attains it.
    Exact,
    /// The budget ran out; `lower..=upper` brackets the optimum.
    BoundsOnly,
    /// No set of any size has the property.
    Infeasible,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolverResult {
    pub kind: ParameterKind,
    pub status: Status,
    pub value: Option<usize>,
    /// Proven lower bound. For infeasible instances this is `n + 1`.
    pub lower: usize,
    /// Size of the best set found.
    pub upper: Option<usize>,
    pub witness: Option<Certificate>,
    pub nodes_explored: u64,
    #[serde(rename = "elapsed_secs", serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SolverResult {
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    /// `(lower, upper)` as a display string: `v`, `[lo,hi]`, or `none`.
    pub fn interval(&self) -> String {
        match (self.status, self.value, self.upper) {
            (Status::Exact, Some(v), _) => v.to_string(),
            (Status::Infeasible, ..) => "none".into(),
            (_, _, Some(hi)) => format!("[{},{}]", self.lower, hi),
            (_, _, None) => format!("[{},?]", self.lower),
        }
    }
}

/// Configurable solver. `min_param` is the one-shot form.
#[derive(Clone, Debug)]
pub struct Solver {
    budget: Budget,
    threads: usize,
    canonical: bool,
}

impl Solver {
    pub fn new(budget: Budget) -> Self {
        Self {
            budget,
            threads: 1,
            canonical: true,
        }
    }

    /// Worker threads for the search; 1 keeps everything on the caller.
    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    /// Whether to refine an optimal witness to the lexicographically least
    /// one. On by default; costs extra searches at the optimum.
    pub fn canonical_witness(mut self, on: bool) -> Self {
        self.canonical = on;
        self
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn solve(&self, g: &Graph, kind: ParameterKind) -> Result<SolverResult> {
        self.budget.admit(g)?;
        if kind == ParameterKind::Qddom {
            return quasi::solve(self, g);
        }
        let start = Instant::now();
        let model = Model::new(g, kind)?;
        let run = Run::new(self, start);
        let mut result = run.minimise(&model);
        result.elapsed = start.elapsed();
        Ok(result)
    }
}

/// Minimum of `kind` on `g`: exact when the budget allows, bounds otherwise.
pub fn min_param(g: &Graph, kind: ParameterKind, budget: Budget) -> Result<SolverResult> {
    Solver::new(budget).solve(g, kind)
}

/// γ_q×2 with a `(U, V)` witness.
pub fn quasi_double_domination_number(g: &Graph, budget: Budget) -> Result<SolverResult> {
    Solver::new(budget).solve(g, ParameterKind::Qddom)
}

/// Every resolving set holds all but one vertex of each twin class.
pub fn dim_lower_bound_twins(g: &Graph) -> usize {
    twin_partition(g).excess()
}

/// Shared bookkeeping for one solve.
pub(crate) struct Run<'s> {
    solver: &'s Solver,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    nodes: AtomicU64,
    stop: AtomicBool,
}

impl<'s> Run<'s> {
    pub fn new(solver: &'s Solver, start: Instant) -> Self {
        let exhaustive = solver.budget.exhaustive_required;
        Self {
            solver,
            deadline: solver.budget.time_limit.filter(|_| !exhaustive).map(|t| start + t),
            node_limit: solver.budget.node_limit.filter(|_| !exhaustive),
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
        }
    }

    fn limits(&self) -> Limits<'_> {
        Limits {
            deadline: self.deadline,
            node_limit: self.node_limit,
            nodes: &self.nodes,
            stop: &self.stop,
        }
    }

    pub fn out_of_time(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
            || self.node_limit.is_some_and(|l| self.nodes.load(Ordering::Relaxed) >= l)
    }

    pub fn count_nodes(&self, n: u64) {
        self.nodes.fetch_add(n, Ordering::Relaxed);
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    fn result(&self, kind: ParameterKind, status: Status) -> SolverResult {
        SolverResult {
            kind,
            status,
            value: None,
            lower: 0,
            upper: None,
            witness: None,
            nodes_explored: 0,
            elapsed: Duration::ZERO,
        }
    }

    fn minimise(&self, m: &Model) -> SolverResult {
        let g = m.graph;
        let n = g.order();
        let mut out = self.result(m.kind, Status::Infeasible);
        if m.infeasible {
            out.lower = n + 1;
            return out;
        }

        let heuristic = greedy(m);
        let root = Search::new(m);
        let mut k = root.lower_bound(n);
        // Sizes below `k` are ruled out; `heuristic` caps the search.
        let cap = heuristic.as_ref().map_or(n, |h| h.len().saturating_sub(1));
        let mut found = None;
        let mut aborted = false;
        while k <= cap {
            match self.feasible_at(m, k) {
                Probe::Found(set) => {
                    found = Some(set);
                    break;
                }
                Probe::None => k += 1,
                Probe::Aborted => {
                    aborted = true;
                    break;
                }
            }
        }
        if found.is_none() && !aborted {
            found = heuristic.clone();
            if let Some(h) = &found {
                k = h.len();
            }
        }

        out.nodes_explored = self.nodes();
        match found {
            Some(set) if !aborted => {
                let set = if self.solver.canonical {
                    self.canonical(m, set)
                } else {
                    set
                };
                out.status = Status::Exact;
                out.value = Some(set.len());
                out.lower = set.len();
                out.upper = Some(set.len());
                out.witness = Some(Certificate::new(m.kind, g, &set));
            }
            None if !aborted => out.lower = n + 1,
            _ => {
                out.status = Status::BoundsOnly;
                out.lower = k;
                if let Some(h) = heuristic {
                    out.upper = Some(h.len());
                    out.witness = Some(Certificate::new(m.kind, g, &h));
                }
            }
        }
        out.nodes_explored = self.nodes();
        out
    }

    /// Is there a valid set of size at most `k`?
    fn feasible_at(&self, m: &Model, k: usize) -> Probe {
        let limits = self.limits();
        let mut root = Search::new(m);
        if self.solver.threads > 1 {
            if let Some(cands) = root.root_candidates() {
                return self.feasible_parallel(m, k, &cands);
            }
        }
        let ok = root.dfs(k, &limits);
        root.flush(&limits);
        if ok {
            Probe::Found(root.solution.take().expect("solution stored"))
        } else if root.aborted {
            Probe::Aborted
        } else {
            Probe::None
        }
    }

    /// Splits the root branching across a thread pool. Branch `i` includes
    /// candidate `i` and excludes the ones before it, as the serial search would.
    fn feasible_parallel(&self, m: &Model, k: usize, cands: &[usize]) -> Probe {
        use rayon::prelude::*;

        let pool = match rayon::ThreadPoolBuilder::new().num_threads(self.solver.threads).build() {
            Ok(pool) => pool,
            Err(_) => return self.feasible_serial_fallback(m, k),
        };
        let local_stop = AtomicBool::new(false);
        let outcomes: Vec<Probe> = pool.install(|| {
            (0..cands.len())
                .into_par_iter()
                .map(|i| {
                    if local_stop.load(Ordering::Relaxed) {
                        return Probe::None;
                    }
                    let limits = Limits {
                        deadline: self.deadline,
                        node_limit: self.node_limit,
                        nodes: &self.nodes,
                        stop: &local_stop,
                    };
                    let mut s = Search::new(m);
                    for &v in &cands[..i] {
                        if !s.is_decided(v) && !s.exclude(v) {
                            return Probe::None;
                        }
                    }
                    if s.is_decided(cands[i]) || !s.include(cands[i]) {
                        return Probe::None;
                    }
                    let ok = s.dfs(k, &limits);
                    s.flush(&limits);
                    if ok {
                        local_stop.store(true, Ordering::Relaxed);
                        Probe::Found(s.solution.take().expect("solution stored"))
                    } else if s.aborted && !local_stop.load(Ordering::Relaxed) {
                        Probe::Aborted
                    } else {
                        Probe::None
                    }
                })
                .collect()
        });
        let mut aborted = false;
        for p in outcomes {
            match p {
                Probe::Found(s) => return Probe::Found(s),
                Probe::Aborted => aborted = true,
                Probe::None => {}
            }
        }
        if aborted {
            Probe::Aborted
        } else {
            Probe::None
        }
    }

    fn feasible_serial_fallback(&self, m: &Model, k: usize) -> Probe {
        let limits = self.limits();
        let mut root = Search::new(m);
        let ok = root.dfs(k, &limits);
        root.flush(&limits);
        match (ok, root.aborted) {
            (true, _) => Probe::Found(root.solution.take().expect("solution stored")),
            (false, true) => Probe::Aborted,
            _ => Probe::None,
        }
    }

    /// Fixes vertices in index order, keeping each one whenever an optimal
    /// set containing it exists. The result is the lexicographically least
    /// optimal set. Falls back to `fallback` if the budget runs out.
    fn canonical(&self, m: &Model, fallback: VertexSet) -> VertexSet {
        let k = fallback.len();
        let limits = self.limits();
        let mut s = Search::new(m);
        for v in 0..m.order() {
            if s.unmet() == 0 && s.n_chosen() == k && m.is_valid(&s.chosen) {
                break;
            }
            if s.is_decided(v) {
                continue;
            }
            let mark = s.mark();
            if s.n_chosen() < k && s.include(v) {
                if s.dfs(k, &limits) {
                    continue;
                }
            }
            s.undo_to(mark);
            if s.aborted {
                s.flush(&limits);
                return fallback;
            }
            if !s.exclude(v) {
                // Cannot happen when `fallback` is valid; keep it regardless.
                s.flush(&limits);
                return fallback;
            }
        }
        s.flush(&limits);
        if s.n_chosen() == k && m.is_valid(&s.chosen) {
            s.chosen.clone()
        } else {
            fallback
        }
    }
}

enum Probe {
    Found(VertexSet),
    None,
    Aborted,
}
