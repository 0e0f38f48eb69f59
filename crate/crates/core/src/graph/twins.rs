use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::bitset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwinKind {
    /// False twins: `N(u) = N(v)`.
    Open,
    /// True twins: `N[u] = N[v]`.
    Closed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinClass {
    pub kind: TwinKind,
    pub members: Vec<usize>,
}

/// Maximal twin classes of size at least two. A vertex cannot have both a
/// false twin and a true twin, so the classes are disjoint.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
}

impl TwinPartition {
    /// `Σ (|T| - 1)` over all classes.
    pub fn excess(&self) -> usize {
        self.classes.iter().map(|c| c.members.len() - 1).sum()
    }

    pub fn class_of(&self, v: usize) -> Option<&TwinClass> {
        self.classes.iter().find(|c| c.members.contains(&v))
    }
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let mut classes = Vec::new();
    for kind in [TwinKind::Open, TwinKind::Closed] {
        let mut groups: HashMap<VertexSet, Vec<usize>> = HashMap::new();
        for v in g.vertices() {
            let key = match kind {
                TwinKind::Open => g.adjacency(v).clone(),
                TwinKind::Closed => g.closed_neighborhood(v),
            };
            groups.entry(key).or_default().push(v);
        }
        classes.extend(
            groups
                .into_values()
                .filter(|members| members.len() >= 2)
                .map(|members| TwinClass { kind, members }),
        );
    }
    classes.sort_by_key(|c| c.members[0]);
    TwinPartition { classes }
}
