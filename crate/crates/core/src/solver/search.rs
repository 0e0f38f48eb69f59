//! Depth-first branch and bound over a [`Model`].
//!
//! A node holds a partial decision: vertices chosen, vertices excluded, the
//! rest undecided. At each node the solver finds the unmet constraint with the
//! fewest undecided members and branches on which of them to include next,
//! excluding the ones already tried. With at most `k` picks allowed, a node is
//! cut when any of these exceed the picks left:
//!
//! * the residual need of a single constraint,
//! * a greedy packing of unmet constraints with disjoint candidate sets,
//! * the number of top-gain picks needed to cover the total residual demand,
//! * the twin bound: all but one vertex of every twin class.
//!
//! All state changes go through a trail so that every call to [`Search::dfs`]
//! leaves the state exactly as it found it.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use super::model::Model;
use crate::bitset::VertexSet;

pub(crate) struct Limits<'a> {
    pub deadline: Option<Instant>,
    pub node_limit: Option<u64>,
    pub nodes: &'a AtomicU64,
    pub stop: &'a AtomicBool,
}

#[derive(Clone)]
pub(crate) struct Search<'m, 'g> {
    m: &'m Model<'g>,
    pub chosen: VertexSet,
    pub excluded: VertexSet,
    n_chosen: usize,
    count: Vec<u32>,
    potential: Vec<u32>,
    unmet: usize,
    trail: Vec<(usize, bool)>,
    local_nodes: u64,
    pub aborted: bool,
    pub solution: Option<VertexSet>,
}

const CHECK_EVERY: u64 = 256;

impl<'m, 'g> Search<'m, 'g> {
    pub fn new(m: &'m Model<'g>) -> Self {
        let n = m.order();
        let count = vec![0; m.constraints.len()];
        let potential = m
            .constraints
            .iter()
            .map(|c| c.members.len() as u32 + u32::from(c.heavy.is_some()))
            .collect();
        Self {
            m,
            chosen: VertexSet::new(n),
            excluded: VertexSet::new(n),
            n_chosen: 0,
            count,
            potential,
            unmet: m.constraints.len(),
            trail: Vec::with_capacity(n),
            local_nodes: 0,
            aborted: false,
            solution: None,
        }
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn n_chosen(&self) -> usize {
        self.n_chosen
    }

    pub fn is_decided(&self, v: usize) -> bool {
        self.chosen.contains(v) || self.excluded.contains(v)
    }

    /// Adds `u` to the set. Returns false if some constraint became
    /// unsatisfiable (only possible through independence exclusions).
    pub fn include(&mut self, u: usize) -> bool {
        debug_assert!(!self.is_decided(u));
        self.chosen.insert(u);
        self.n_chosen += 1;
        self.trail.push((u, true));
        for &(c, w) in &self.m.incidence[u] {
            let c = c as usize;
            let need = self.m.constraints[c].need;
            let before = self.count[c];
            self.count[c] += w;
            self.potential[c] -= w;
            if before < need && before + w >= need {
                self.unmet -= 1;
            }
        }
        let mut ok = true;
        if self.m.independent {
            for &w in self.m.graph.neighbors(u) {
                if self.chosen.contains(w) {
                    ok = false;
                } else if !self.excluded.contains(w) {
                    ok &= self.exclude(w);
                }
            }
        }
        ok
    }

    /// Rules `u` out. Returns false if some constraint can no longer be met.
    pub fn exclude(&mut self, u: usize) -> bool {
        debug_assert!(!self.is_decided(u));
        self.excluded.insert(u);
        self.trail.push((u, false));
        let mut ok = true;
        for &(c, w) in &self.m.incidence[u] {
            let c = c as usize;
            self.potential[c] -= w;
            if self.count[c] + self.potential[c] < self.m.constraints[c].need {
                ok = false;
            }
        }
        ok
    }

    pub fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (u, included) = self.trail.pop().unwrap();
            if included {
                self.chosen.remove(u);
                self.n_chosen -= 1;
                for &(c, w) in &self.m.incidence[u] {
                    let c = c as usize;
                    let need = self.m.constraints[c].need;
                    let after = self.count[c];
                    self.count[c] -= w;
                    self.potential[c] += w;
                    if after >= need && after - w < need {
                        self.unmet += 1;
                    }
                }
            } else {
                self.excluded.remove(u);
                for &(c, w) in &self.m.incidence[u] {
                    self.potential[c as usize] += w;
                }
            }
        }
    }

    fn undecided_members(&self, c: usize) -> VertexSet {
        let mut s = self.m.constraints[c].members.clone();
        s.difference_with(&self.chosen);
        s.difference_with(&self.excluded);
        s
    }

    /// Fewest picks that could close constraint `c`'s residual.
    fn picks_needed(&self, c: usize, undecided: &VertexSet) -> usize {
        let con = &self.m.constraints[c];
        let residual = con.need.saturating_sub(self.count[c]) as usize;
        if residual == 0 {
            return 0;
        }
        match con.heavy {
            Some(h) if undecided.contains(h) => 1 + residual.saturating_sub(2),
            _ => residual,
        }
    }

    fn tick(&mut self, limits: &Limits) -> bool {
        self.local_nodes += 1;
        if self.local_nodes % CHECK_EVERY == 0 {
            let total = limits.nodes.fetch_add(CHECK_EVERY, Ordering::Relaxed) + CHECK_EVERY;
            if limits.stop.load(Ordering::Relaxed)
                || limits.node_limit.is_some_and(|l| total >= l)
                || limits.deadline.is_some_and(|d| Instant::now() >= d)
            {
                self.aborted = true;
            }
        }
        !self.aborted
    }

    /// Flushes the locally counted nodes into the shared counter.
    pub fn flush(&mut self, limits: &Limits) {
        limits
            .nodes
            .fetch_add(self.local_nodes % CHECK_EVERY, Ordering::Relaxed);
        self.local_nodes -= self.local_nodes % CHECK_EVERY;
    }

    /// Lower bound on the picks still needed from the current node.
    pub fn lower_bound(&self, cap: usize) -> usize {
        let m = self.m;

        // Packing of unmet constraints with pairwise disjoint candidates.
        let mut used = VertexSet::new(m.order());
        let mut packing = 0;
        for c in 0..m.constraints.len() {
            if self.count[c] >= m.constraints[c].need {
                continue;
            }
            let cand = self.undecided_members(c);
            if !cand.intersects(&used) {
                packing += self.picks_needed(c, &cand);
                if packing > cap {
                    return packing;
                }
                used.union_with(&cand);
            }
        }

        // Twin classes keep at most one vertex outside the set.
        let twin: usize = m
            .twins
            .iter()
            .map(|t| {
                let outside = t.len() - t.intersection_count(&self.chosen);
                outside.saturating_sub(1)
            })
            .sum();

        // Top-gain picks against the total residual domination demand.
        let mut residual_total = 0u64;
        let mut gains: Vec<u32> = Vec::new();
        let has_dom = m.dom_incidence.iter().any(|v| !v.is_empty());
        if has_dom {
            for c in 0..m.constraints.len() {
                let con = &m.constraints[c];
                if !con.separation && self.count[c] < con.need {
                    residual_total += u64::from(con.need - self.count[c]);
                }
            }
            if residual_total > 0 {
                for v in 0..m.order() {
                    if self.is_decided(v) {
                        continue;
                    }
                    let gain: u32 = m.dom_incidence[v]
                        .iter()
                        .map(|&(c, w)| {
                            let c = c as usize;
                            w.min(m.constraints[c].need.saturating_sub(self.count[c]))
                        })
                        .sum();
                    if gain > 0 {
                        gains.push(gain);
                    }
                }
                gains.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        let mut capacity = 0;
        if residual_total > 0 {
            let mut acc = 0u64;
            capacity = gains.len() + 1;
            for (i, &g) in gains.iter().enumerate() {
                acc += u64::from(g);
                if acc >= residual_total {
                    capacity = i + 1;
                    break;
                }
            }
        }

        packing.max(twin).max(capacity)
    }

    /// Every chosen vertex can still be joined through undecided vertices.
    fn connectable(&self) -> bool {
        let Some(start) = self.chosen.first() else {
            return true;
        };
        let g = self.m.graph;
        let mut seen = VertexSet::new(g.order());
        seen.insert(start);
        let mut stack = vec![start];
        let mut reached_chosen = 1;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !self.excluded.contains(w) && seen.insert(w) {
                    if self.chosen.contains(w) {
                        reached_chosen += 1;
                    }
                    stack.push(w);
                }
            }
        }
        reached_chosen == self.n_chosen
    }

    /// Searches for a valid set of size at most `k` extending the current
    /// decisions. On success the set is stored in `self.solution`.
    pub fn dfs(&mut self, k: usize, limits: &Limits) -> bool {
        if !self.tick(limits) {
            return false;
        }
        if self.n_chosen > k {
            return false;
        }
        let picks = k - self.n_chosen;
        if self.unmet == 0 {
            return self.finish(k, limits);
        }
        if picks == 0 {
            return false;
        }

        let mut best: Option<(usize, VertexSet, usize)> = None;
        for c in 0..self.m.constraints.len() {
            if self.count[c] >= self.m.constraints[c].need {
                continue;
            }
            let cand = self.undecided_members(c);
            if self.picks_needed(c, &cand) > picks {
                return false;
            }
            let size = cand.len();
            if size == 0 {
                return false;
            }
            if best.as_ref().map_or(true, |b| size < b.2) {
                best = Some((c, cand, size));
                if size == 1 {
                    break;
                }
            }
        }
        if self.lower_bound(picks) > picks {
            return false;
        }
        if self.m.connected && !self.connectable() {
            return false;
        }
        let (_, cand, _) = best.expect("unmet constraint exists");
        self.branch(&cand, k, limits)
    }

    fn branch(&mut self, cand: &VertexSet, k: usize, limits: &Limits) -> bool {
        let outer = self.mark();
        let mut found = false;
        for &v in &self.m.order {
            if !cand.contains(v) || self.is_decided(v) {
                continue;
            }
            let mark = self.mark();
            if self.include(v) && self.dfs(k, limits) {
                found = true;
                break;
            }
            self.undo_to(mark);
            if self.aborted || !self.exclude(v) {
                break;
            }
        }
        self.undo_to(outer);
        found
    }

    /// All constraints are met; settle the connectivity side condition.
    fn finish(&mut self, k: usize, limits: &Limits) -> bool {
        let g = self.m.graph;
        if self.m.connected && !g.induces_connected(&self.chosen) {
            if self.n_chosen >= k || self.chosen.is_empty() {
                return false;
            }
            // Some vertex adjacent to the first component must join the set.
            let start = self.chosen.first().unwrap();
            let mut comp = VertexSet::new(g.order());
            comp.insert(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in g.neighbors(u) {
                    if self.chosen.contains(w) && comp.insert(w) {
                        stack.push(w);
                    }
                }
            }
            let mut frontier = VertexSet::new(g.order());
            for u in &comp {
                frontier.union_with(g.adjacency(u));
            }
            frontier.difference_with(&self.chosen);
            frontier.difference_with(&self.excluded);
            if frontier.is_empty() || !self.connectable() {
                return false;
            }
            return self.branch(&frontier, k, limits);
        }
        // The constraints encode everything but the empty-set rule.
        if !self.m.is_valid(&self.chosen) {
            return false;
        }
        self.solution = Some(self.chosen.clone());
        true
    }

    /// The undecided candidates of the constraint the root would branch on.
    pub fn root_candidates(&self) -> Option<Vec<usize>> {
        if self.unmet == 0 {
            return None;
        }
        let (c, _) = (0..self.m.constraints.len())
            .filter(|&c| self.count[c] < self.m.constraints[c].need)
            .map(|c| (c, self.undecided_members(c).len()))
            .min_by_key(|&(c, size)| (size, c))?;
        let cand = self.undecided_members(c);
        Some(self.m.order.iter().copied().filter(|&v| cand.contains(v)).collect())
    }

    pub fn unmet(&self) -> usize {
        self.unmet
    }
}

/// Greedy feasible set: repeatedly take the vertex with the largest residual
/// gain, join components if needed, then drop redundant vertices.
pub(crate) fn greedy(m: &Model) -> Option<VertexSet> {
    if m.infeasible {
        return None;
    }
    let n = m.order();
    let mut s = Search::new(m);
    let mut gain = vec![0u32; n];
    while s.unmet > 0 {
        gain.iter_mut().for_each(|g| *g = 0);
        for (c, con) in m.constraints.iter().enumerate() {
            let residual = con.need.saturating_sub(s.count[c]);
            if residual == 0 {
                continue;
            }
            for v in &con.members {
                if !s.is_decided(v) {
                    gain[v] += con.weight(v).min(residual);
                }
            }
        }
        let pick = m
            .order
            .iter()
            .copied()
            .filter(|&v| !s.is_decided(v) && gain[v] > 0)
            .max_by_key(|&v| (gain[v], std::cmp::Reverse(v)))?;
        s.include(pick);
    }
    let mut set = s.chosen.clone();

    if m.connected {
        connect_components(m, &mut set)?;
    }

    // Reverse delete.
    for v in set.to_vec().into_iter().rev() {
        set.remove(v);
        if !m.is_valid(&set) {
            set.insert(v);
        }
    }
    m.is_valid(&set).then_some(set)
}

/// Adds shortest connecting paths until `set` induces a connected subgraph.
fn connect_components(m: &Model, set: &mut VertexSet) -> Option<()> {
    let g = m.graph;
    while !g.induces_connected(set) {
        let start = set.first()?;
        // BFS from the component of `start` to the nearest other member.
        let mut comp = VertexSet::new(g.order());
        comp.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if set.contains(w) && comp.insert(w) {
                    stack.push(w);
                }
            }
        }
        let mut parent = vec![usize::MAX; g.order()];
        let mut queue: std::collections::VecDeque<usize> = comp.iter().collect();
        let mut seen = comp.clone();
        let mut target = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if seen.insert(w) {
                    parent[w] = u;
                    if set.contains(w) {
                        target = Some(w);
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        let mut v = parent[target?];
        while !comp.contains(v) {
            set.insert(v);
            v = parent[v];
        }
    }
    Some(())
}
