//! Every set kind as a family of covering constraints plus side conditions.
//!
//! A constraint asks for `Σ_{u ∈ D} weight(u) >= need` over its members, where
//! each member weighs 1 except an optional `heavy` member weighing 2. That one
//! shape covers all domination kinds:
//!
//! | kind    | per vertex `v`                         |
//! |---------|----------------------------------------|
//! | dom     | `N[v]`, need 1                         |
//! | tdom    | `N(v)`, need 1                         |
//! | ddom    | `N[v]`, need 2                         |
//! | 2dom    | `N[v]` with `v` heavy, need 2          |
//!
//! and the resolving condition becomes one need-1 constraint per vertex pair,
//! whose members are the vertices at different distances from the two.

use std::collections::HashSet;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, twin_partition, DistanceMatrix, Graph};
use crate::kind::ParameterKind;
use crate::verify::violation_with;

/// Above this many need-1 constraints, subsumption pruning is skipped.
const SUBSUMPTION_LIMIT: usize = 4000;

#[derive(Clone, Debug)]
pub(crate) struct Constraint {
    pub members: VertexSet,
    pub heavy: Option<usize>,
    pub need: u32,
    pub separation: bool,
}

impl Constraint {
    #[inline]
    pub fn weight(&self, v: usize) -> u32 {
        if self.heavy == Some(v) {
            2
        } else {
            1
        }
    }

    fn total_weight(&self) -> u32 {
        self.members.len() as u32 + u32::from(self.heavy.is_some())
    }
}

pub(crate) struct Model<'g> {
    pub graph: &'g Graph,
    pub kind: ParameterKind,
    pub constraints: Vec<Constraint>,
    /// Per vertex: `(constraint, weight)` for every constraint it belongs to.
    pub incidence: Vec<Vec<(u32, u32)>>,
    /// Like `incidence` but restricted to domination constraints.
    pub dom_incidence: Vec<Vec<(u32, u32)>>,
    pub independent: bool,
    pub connected: bool,
    /// Twin classes, for the "all but one member" bound.
    pub twins: Vec<VertexSet>,
    /// Static branching preference: non-increasing degree, then index.
    pub order: Vec<usize>,
    pub distances: Option<DistanceMatrix>,
    /// Some constraint cannot be met even by the whole vertex set, or a side
    /// condition can never hold.
    pub infeasible: bool,
}

impl<'g> Model<'g> {
    pub fn new(graph: &'g Graph, kind: ParameterKind) -> Result<Self> {
        use ParameterKind::*;

        if kind == Qddom {
            return Err(Error::UnsupportedKind {
                kind,
                operation: "the set solver",
            });
        }
        let n = graph.order();
        let distances = if kind.is_resolving() {
            if !graph.is_connected() {
                return Err(Error::Disconnected("the resolving property"));
            }
            Some(all_pairs_distances(graph))
        } else {
            None
        };

        let mut constraints = Vec::new();
        if let Some(part) = kind.domination_part() {
            for v in graph.vertices() {
                let closed = graph.closed_neighborhood(v);
                let (members, heavy, need) = match part {
                    Dom | Idom | Cdom => (closed, None, 1),
                    Tdom => (graph.adjacency(v).clone(), None, 1),
                    Ddom => (closed, None, 2),
                    TwoDom => (closed, Some(v), 2),
                    other => unreachable!("{other} is not a domination kind"),
                };
                constraints.push(Constraint {
                    members,
                    heavy,
                    need,
                    separation: false,
                });
            }
        }
        if let Some(dm) = &distances {
            for x in 0..n {
                for y in x + 1..n {
                    let (rx, ry) = (dm.row(x), dm.row(y));
                    let members = VertexSet::from_indices(n, (0..n).filter(|&w| rx[w] != ry[w]));
                    constraints.push(Constraint {
                        members,
                        heavy: None,
                        need: 1,
                        separation: true,
                    });
                }
            }
        }

        let mut infeasible = constraints.iter().any(|c| c.total_weight() < c.need);
        let connected = matches!(kind, Cdom | Rcdom);
        if connected && !graph.is_connected() {
            infeasible = true;
        }
        let constraints = reduce(constraints);

        let mut incidence = vec![Vec::new(); n];
        let mut dom_incidence = vec![Vec::new(); n];
        for (ci, c) in constraints.iter().enumerate() {
            for v in &c.members {
                incidence[v].push((ci as u32, c.weight(v)));
                if !c.separation {
                    dom_incidence[v].push((ci as u32, c.weight(v)));
                }
            }
        }

        let twins = if kind.is_resolving() {
            twin_partition(graph)
                .classes
                .into_iter()
                .map(|c| VertexSet::from_indices(n, c.members))
                .collect()
        } else {
            Vec::new()
        };

        let mut order: Vec<usize> = graph.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));

        Ok(Self {
            graph,
            kind,
            constraints,
            incidence,
            dom_incidence,
            independent: matches!(kind, Idom | Ridom),
            connected,
            twins,
            order,
            distances,
            infeasible,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Full definition check, independent of the constraint encoding.
    pub fn is_valid(&self, set: &VertexSet) -> bool {
        violation_with(self.kind, self.graph, self.distances.as_ref(), set).is_none()
    }
}

/// Drops duplicate need-1 constraints and those that contain another need-1
/// constraint: hitting the smaller one hits the larger. Weighted constraints
/// are kept as they are. Smallest constraints come first.
fn reduce(constraints: Vec<Constraint>) -> Vec<Constraint> {
    let (mut simple, weighted): (Vec<_>, Vec<_>) =
        constraints.into_iter().partition(|c| c.need == 1 && c.heavy.is_none());

    let mut seen = HashSet::new();
    simple.retain(|c| seen.insert(c.members.clone()));
    simple.sort_by_key(|c| (c.members.len(), c.separation));

    let kept = if simple.len() <= SUBSUMPTION_LIMIT {
        let mut kept: Vec<Constraint> = Vec::with_capacity(simple.len());
        for c in simple {
            if !kept.iter().any(|k| k.members.is_subset(&c.members)) {
                kept.push(c);
            }
        }
        kept
    } else {
        simple
    };

    let mut out = weighted;
    out.extend(kept);
    out.sort_by_key(|c| c.members.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, fcn, path, FcnLevel};

    #[test]
    fn path_domination_model() {
        let g = path(4).unwrap();
        let m = Model::new(&g, ParameterKind::Dom).unwrap();
        // N[0] ⊆ N[1] and N[3] ⊆ N[2], so the two middle constraints go.
        assert_eq!(m.constraints.len(), 2);
        assert!(!m.infeasible);
    }

    #[test]
    fn twins_reduce_separation() {
        let g = fcn(FcnLevel(1));
        let m = Model::new(&g, ParameterKind::Dim).unwrap();
        let pairs = m.constraints.iter().filter(|c| c.members.len() == 2).count();
        assert_eq!(pairs, 4);
        assert_eq!(m.twins.len(), 4);
    }

    #[test]
    fn infeasibility_flags() {
        let g = crate::graph::build_graph(3, &[(0, 1)], None).unwrap();
        assert!(Model::new(&g, ParameterKind::Tdom).unwrap().infeasible);
        assert!(Model::new(&g, ParameterKind::Ddom).unwrap().infeasible);
        assert!(Model::new(&g, ParameterKind::Cdom).unwrap().infeasible);
        assert!(!Model::new(&g, ParameterKind::Dom).unwrap().infeasible);
        assert!(Model::new(&g, ParameterKind::Dim).is_err());
        assert!(
            !Model::new(&cycle(5).unwrap(), ParameterKind::TwoDom)
                .unwrap()
                .infeasible
        );
    }
}
