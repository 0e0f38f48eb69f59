//! Naive reference implementations, written from the definitions and sharing
//! nothing with the library beyond reading the edge list.
#![allow(dead_code)]

use std::collections::VecDeque;

use fcnlab::generators::{complete, cycle, path};
use fcnlab::harness::{random_graph, RandomGraphSpec};
use fcnlab::{Graph, ParameterKind};

pub struct Oracle {
    pub n: usize,
    adj: Vec<u64>,
    dist: Option<Vec<Vec<u32>>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        assert!(n <= 64, "oracle handles at most 64 vertices");
        let mut adj = vec![0u64; n];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let dist = bfs_all(&adj);
        let connected = dist.iter().all(|row| row.iter().all(|&d| d != u32::MAX));
        Oracle {
            n,
            adj,
            dist: connected.then_some(dist),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.dist.is_some()
    }

    fn closed(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    fn induces_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let mut next = self.adj[u] & mask & !seen;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                seen |= 1 << w;
                stack.push(w);
            }
        }
        seen == mask
    }

    fn resolves(&self, mask: u64) -> bool {
        let dist = self.dist.as_ref().expect("resolving needs a connected graph");
        let landmarks: Vec<usize> = (0..self.n).filter(|&i| mask >> i & 1 == 1).collect();
        let codes: Vec<Vec<u32>> = (0..self.n)
            .map(|v| landmarks.iter().map(|&r| dist[v][r]).collect())
            .collect();
        (0..self.n).all(|u| (u + 1..self.n).all(|v| codes[u] != codes[v]))
    }

    /// Whether `mask` has the property `kind`, straight from the definitions.
    pub fn holds(&self, kind: ParameterKind, mask: u64) -> bool {
        use ParameterKind::*;
        if mask == 0 {
            return kind == Dim && self.n <= 1;
        }
        let all = |f: &dyn Fn(usize) -> bool| (0..self.n).all(f);
        let dominating = || all(&|v| self.closed(v) & mask != 0);
        let independent = || all(&|v| mask >> v & 1 == 0 || self.adj[v] & mask == 0);
        let total = || all(&|v| self.adj[v] & mask != 0);
        let connected = || dominating() && self.induces_connected(mask);
        match kind {
            Dom => dominating(),
            Idom => dominating() && independent(),
            Tdom => total(),
            Cdom => connected(),
            Ddom => all(&|v| (self.closed(v) & mask).count_ones() >= 2),
            TwoDom => all(&|v| mask >> v & 1 == 1 || (self.adj[v] & mask).count_ones() >= 2),
            Dim => self.resolves(mask),
            Rdom => dominating() && self.resolves(mask),
            Ridom => dominating() && independent() && self.resolves(mask),
            Rtdom => total() && self.resolves(mask),
            Rcdom => connected() && self.resolves(mask),
            Qddom => panic!("quasi-double domination is a property of pairs"),
        }
    }

    /// Smallest size and the lexicographically least set of that size.
    pub fn min_set(&self, kind: ParameterKind) -> Option<(usize, Vec<usize>)> {
        (0..=self.n).find_map(|k| {
            combinations(self.n, k)
                .find(|c| self.holds(kind, to_mask(c)))
                .map(|c| (k, c))
        })
    }

    /// Minimum of |U| + |V| over all 3^n assignments.
    pub fn min_quasi(&self) -> usize {
        assert!(self.n <= 12);
        let mut best = usize::MAX;
        let mut assignment = vec![0u8; self.n];
        loop {
            let (mut u, mut v) = (0u64, 0u64);
            for (i, &a) in assignment.iter().enumerate() {
                match a {
                    1 => u |= 1 << i,
                    2 => v |= 1 << i,
                    _ => {}
                }
            }
            let size = (u | v).count_ones() as usize;
            if size < best && self.is_quasi_pair(u, v) {
                best = size;
            }
            // Next assignment in base 3.
            let mut i = 0;
            while i < self.n && assignment[i] == 2 {
                assignment[i] = 0;
                i += 1;
            }
            if i == self.n {
                break;
            }
            assignment[i] += 1;
        }
        best
    }

    pub fn is_quasi_pair(&self, u: u64, v: u64) -> bool {
        let both = u | v;
        u & v == 0
            && both != 0
            && self.holds(ParameterKind::TwoDom, both)
            && (0..self.n)
                .filter(|&w| u >> w & 1 == 0)
                .all(|w| (self.closed(w) & !u & v).count_ones() >= 2)
    }

    /// Vertices sharing an open or closed neighbourhood with another vertex,
    /// counted as class size minus one.
    pub fn twin_excess(&self) -> usize {
        let mut class = vec![usize::MAX; self.n];
        let mut excess = 0;
        for u in 0..self.n {
            if class[u] != usize::MAX {
                continue;
            }
            class[u] = u;
            for v in u + 1..self.n {
                let twins = self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u);
                if class[v] == usize::MAX && twins {
                    class[v] = u;
                    excess += 1;
                }
            }
        }
        excess
    }
}

fn bfs_all(adj: &[u64]) -> Vec<Vec<u32>> {
    let n = adj.len();
    (0..n)
        .map(|s| {
            let mut d = vec![u32::MAX; n];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for w in 0..n {
                    if adj[u] >> w & 1 == 1 && d[w] == u32::MAX {
                        d[w] = d[u] + 1;
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn to_mask(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

/// k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let c = current.as_mut().unwrap();
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Cycles, paths and complete graphs up to `max_n` vertices.
pub fn named_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(path(n).unwrap());
        out.push(complete(n).unwrap());
        if n >= 3 {
            out.push(cycle(n).unwrap());
        }
    }
    out
}

/// Seeded connected random graphs with `min_n..=max_n` vertices.
pub fn random_connected(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    (0..count as u64)
        .map(|i| random_graph(&RandomGraphSpec::new(min_n, max_n, seed.wrapping_add(i)).connected()).unwrap())
        .collect()
}
