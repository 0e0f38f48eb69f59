//! Immutable simple undirected graphs.
//!
//! Vertices are indices `0..n`. When a graph carries labels, index order is
//! lexicographic label order, so two graphs with the same labelled edge set
//! always get the same indices.

mod distance;
mod io;
mod twins;

use std::collections::{BTreeSet, HashMap, VecDeque};

pub use distance::{all_pairs_distances, DistanceMatrix};
pub use io::{ExportFormat, GraphJson};
pub use twins::{twin_partition, TwinClass, TwinKind, TwinPartition};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Graph {
    name: String,
    neighbors: Vec<Vec<usize>>,
    adjacency: Vec<VertexSet>,
    labels: Option<Vec<String>>,
    label_index: HashMap<String, usize>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.order())
            .field("m", &self.edge_count)
            .finish()
    }
}

impl PartialEq for Graph {
    /// Structural equality: same order, labels and edge set. Names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.labels == other.labels && self.neighbors == other.neighbors
    }
}

impl Eq for Graph {}

/// Builds a graph from an edge list.
///
/// Edge endpoints index into `labels` (when given) in the order supplied; the
/// resulting graph is reindexed so that index order matches sorted label order.
/// Duplicate edges collapse.
pub fn build_graph(n: usize, edges: &[(usize, usize)], labels: Option<Vec<String>>) -> Result<Graph> {
    for &(i, j) in edges {
        if i == j {
            return Err(Error::SelfLoop(i));
        }
        for index in [i, j] {
            if index >= n {
                return Err(Error::VertexOutOfRange { index, n });
            }
        }
    }

    let (labels, remap) = match labels {
        None => (None, (0..n).collect::<Vec<_>>()),
        Some(labels) => {
            if labels.len() != n {
                return Err(Error::LabelCount {
                    expected: n,
                    got: labels.len(),
                });
            }
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
            for pair in order.windows(2) {
                if labels[pair[0]] == labels[pair[1]] {
                    return Err(Error::DuplicateLabel(labels[pair[0]].clone()));
                }
            }
            let mut remap = vec![0; n];
            for (new, &old) in order.iter().enumerate() {
                remap[old] = new;
            }
            let sorted = order.iter().map(|&old| labels[old].clone()).collect();
            (Some(sorted), remap)
        }
    };

    let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(i, j) in edges {
        let (a, b) = (remap[i], remap[j]);
        sets[a].insert(b);
        sets[b].insert(a);
    }
    Ok(Graph::from_sorted_neighbors(
        String::new(),
        sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        labels,
    ))
}

/// Builds a graph from `(label, label)` pairs plus any isolated labels.
pub fn build_labeled<S: AsRef<str>>(vertices: impl IntoIterator<Item = S>, edges: &[(S, S)]) -> Result<Graph> {
    let labels: Vec<String> = vertices.into_iter().map(|s| s.as_ref().to_owned()).collect();
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let lookup = |s: &S| {
        index
            .get(s.as_ref())
            .copied()
            .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_owned()))
    };
    let edges = edges
        .iter()
        .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
        .collect::<Result<Vec<_>>>()?;
    build_graph(labels.len(), &edges, Some(labels))
}

impl Graph {
    fn from_sorted_neighbors(name: String, neighbors: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Self {
        let n = neighbors.len();
        let adjacency = neighbors
            .iter()
            .map(|ns| VertexSet::from_indices(n, ns.iter().copied()))
            .collect();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        let label_index = labels
            .as_ref()
            .map(|ls| ls.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect())
            .unwrap_or_default();
        Self {
            name,
            neighbors,
            adjacency,
            labels,
            label_index,
            edge_count,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.neighbors.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_labeled(&self) -> bool {
        self.labels.is_some()
    }

    /// The label of `v`, or its decimal index when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    /// Resolves a vertex reference: a label on labelled graphs, otherwise
    /// (or as a fallback) a decimal index.
    pub fn resolve(&self, reference: &str) -> Result<usize> {
        if let Some(v) = self.index_of(reference) {
            return Ok(v);
        }
        if !self.is_labeled() {
            if let Ok(v) = reference.parse::<usize>() {
                return if v < self.order() {
                    Ok(v)
                } else {
                    Err(Error::VertexOutOfRange {
                        index: v,
                        n: self.order(),
                    })
                };
            }
        }
        Err(Error::UnknownLabel(reference.to_owned()))
    }

    pub fn resolve_all<S: AsRef<str>>(&self, refs: impl IntoIterator<Item = S>) -> Result<Vec<usize>> {
        refs.into_iter().map(|r| self.resolve(r.as_ref())).collect()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Open neighbourhood as a bitset.
    #[inline]
    pub fn adjacency(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = self.adjacency[v].clone();
        set.insert(v);
        set
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.vertices().any(|v| self.degree(v) == 0)
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_count() == 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Whether `set` induces a connected subgraph. The empty set does not.
    pub fn induces_connected(&self, set: &VertexSet) -> bool {
        let Some(start) = set.first() else {
            return false;
        };
        let mut reached = VertexSet::new(self.order());
        reached.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if set.contains(w) && reached.insert(w) {
                    stack.push(w);
                }
            }
        }
        reached.len() == set.len()
    }

    /// Subgraph induced by `subset`, reindexed in ascending original order.
    /// Labels carry over.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut keep = VertexSet::new(n);
        for &v in subset {
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, n });
            }
            keep.insert(v);
        }
        let kept = keep.to_vec();
        let mut new_index = vec![usize::MAX; n];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let neighbors = kept
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter(|&&w| keep.contains(w))
                    .map(|&w| new_index[w])
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|ls| kept.iter().map(|&v| ls[v].clone()).collect());
        Ok(Graph::from_sorted_neighbors(
            format!("{}[induced]", self.name),
            neighbors,
            labels,
        ))
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange {
                index: v,
                n: self.order(),
            });
        }
        let rest: Vec<usize> = self.vertices().filter(|&u| u != v).collect();
        self.induced_subgraph(&rest)
    }

    /// `G - S` for a set of vertices.
    pub fn remove_vertices(&self, removed: &VertexSet) -> Graph {
        let rest: Vec<usize> = self.vertices().filter(|&u| !removed.contains(u)).collect();
        self.induced_subgraph(&rest)
            .expect("indices drawn from the graph itself")
    }

    /// Replaces labels via `f`, re-canonicalising index order.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Graph> {
        let labels: Vec<String> = self.vertices().map(|v| f(&self.label(v))).collect();
        let edges: Vec<(usize, usize)> = self.edges().collect();
        Ok(build_graph(self.order(), &edges, Some(labels))?.with_name(self.name.clone()))
    }

    /// Drops labels, keeping the current index order.
    pub fn unlabeled(&self) -> Graph {
        Graph::from_sorted_neighbors(self.name.clone(), self.neighbors.clone(), None)
    }

    /// Formats a set of vertices as labels (or indices), in index order.
    pub fn describe_set(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.label(v)).collect()
    }

    pub fn vertex_set(&self, indices: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_indices(self.order(), indices)
    }
}
