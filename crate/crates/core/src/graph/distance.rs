use std::collections::VecDeque;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::Graph;

/// All-pairs hop distances. Unreachable pairs hold a sentinel and read back
/// as `None`; in JSON they serialize as `null`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

const UNREACHABLE: u32 = u32::MAX;

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Raw row; the sentinel is `u32::MAX`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }

    pub fn diameter(&self) -> Option<u32> {
        if !self.is_connected() {
            return None;
        }
        self.dist.iter().copied().max().or(Some(0))
    }
}

impl Serialize for DistanceMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut rows = serializer.serialize_seq(Some(self.n))?;
        for u in 0..self.n {
            let row: Vec<Option<u32>> = (0..self.n).map(|v| self.get(u, v)).collect();
            rows.serialize_element(&row)?;
        }
        rows.end()
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for source in 0..n {
        let row = &mut dist[source * n..(source + 1) * n];
        row[source] = 0;
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = row[u] + 1;
            for &w in g.neighbors(u) {
                if row[w] == UNREACHABLE {
                    row[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, dist }
}
