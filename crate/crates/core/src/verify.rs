//! Set-property predicates. Each one is a direct reading of its definition;
//! the empty set fails all of them, except that it resolves a graph with at
//! most one vertex.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::kind::ParameterKind;

pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    !d.is_empty() && g.vertices().all(|v| d.contains(v) || g.adjacency(v).intersects(d))
}

pub fn is_independent(g: &Graph, d: &VertexSet) -> bool {
    !d.is_empty() && d.iter().all(|v| !g.adjacency(v).intersects(d))
}

/// Every vertex, members of `d` included, has a neighbour in `d`.
pub fn is_total_dominating(g: &Graph, d: &VertexSet) -> bool {
    !d.is_empty() && g.vertices().all(|v| g.adjacency(v).intersects(d))
}

/// Dominating and inducing a connected subgraph; a single vertex counts as
/// connected.
pub fn is_connected_dominating(g: &Graph, d: &VertexSet) -> bool {
    is_dominating(g, d) && g.induces_connected(d)
}

/// `|N[v] ∩ D| >= 2` for every vertex.
pub fn is_double_dominating(g: &Graph, d: &VertexSet) -> bool {
    !d.is_empty()
        && g.vertices()
            .all(|v| g.adjacency(v).intersection_count(d) + usize::from(d.contains(v)) >= 2)
}

/// `|N(v) ∩ D| >= 2` for every vertex outside `D`.
pub fn is_2_dominating(g: &Graph, d: &VertexSet) -> bool {
    !d.is_empty()
        && g.vertices()
            .all(|v| d.contains(v) || g.adjacency(v).intersection_count(d) >= 2)
}

/// Distance vector of one vertex against an ordered landmark list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CodeVector(pub Vec<u32>);

/// Code of every vertex, in index order, with respect to `landmarks`.
pub fn codes(g: &Graph, landmarks: &[usize]) -> Result<Vec<CodeVector>> {
    if !g.is_connected() {
        return Err(Error::Disconnected("a distance code"));
    }
    for &r in landmarks {
        if r >= g.order() {
            return Err(Error::VertexOutOfRange { index: r, n: g.order() });
        }
    }
    let dm = all_pairs_distances(g);
    Ok(codes_from(&dm, landmarks))
}

pub(crate) fn codes_from(dm: &DistanceMatrix, landmarks: &[usize]) -> Vec<CodeVector> {
    (0..dm.order())
        .map(|v| CodeVector(landmarks.iter().map(|&r| dm.get(v, r).expect("connected")).collect()))
        .collect()
}

/// First pair of vertices with equal codes, if any.
fn code_clash(dm: &DistanceMatrix, r: &VertexSet) -> Option<(usize, usize, CodeVector)> {
    let landmarks = r.to_vec();
    let mut seen: HashMap<CodeVector, usize> = HashMap::with_capacity(dm.order());
    for (v, code) in codes_from(dm, &landmarks).into_iter().enumerate() {
        if let Some(&u) = seen.get(&code) {
            return Some((u, v, code));
        }
        seen.insert(code, v);
    }
    None
}

pub fn is_resolving(g: &Graph, r: &VertexSet) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected("the resolving property"));
    }
    Ok(g.order() <= 1 || (!r.is_empty() && code_clash(&all_pairs_distances(g), r).is_none()))
}

/// Checks `d` against the definition of `kind`. Resolving-family kinds need a
/// connected graph. Quasi-double domination is a property of a pair, not a
/// set, and is rejected here; see [`is_quasi_double_pair`].
pub fn check(kind: ParameterKind, g: &Graph, d: &VertexSet) -> Result<bool> {
    Ok(find_violation(kind, g, d)?.is_none())
}

/// `(U, V)` disjoint, `U ∪ V` 2-dominating in `G`, and `V` double dominating
/// in `G - U`.
pub fn is_quasi_double_pair(g: &Graph, u: &VertexSet, v: &VertexSet) -> bool {
    if u.intersects(v) {
        return false;
    }
    let mut union = u.clone();
    union.union_with(v);
    is_2_dominating(g, &union)
        && g.vertices()
            .filter(|&w| !u.contains(w))
            .all(|w| g.adjacency(w).intersection_count(v) + usize::from(v.contains(w)) >= 2)
}

/// Why a set fails a property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Violation {
    EmptySet,
    /// `vertex` sees fewer than `need` members of the set (counting itself
    /// when the property uses closed neighbourhoods).
    Undercovered {
        vertex: usize,
        have: usize,
        need: usize,
    },
    AdjacentMembers {
        u: usize,
        v: usize,
    },
    DisconnectedSet {
        components: usize,
    },
    CodeClash {
        u: usize,
        v: usize,
        code: CodeVector,
    },
    NotQuasiPair,
}

impl Violation {
    pub fn describe(&self, g: &Graph) -> String {
        match self {
            Violation::EmptySet => "the set is empty".into(),
            Violation::Undercovered { vertex, have, need } => {
                format!("vertex {} is covered {have} time(s), needs {need}", g.label(*vertex))
            }
            Violation::AdjacentMembers { u, v } => {
                format!("members {} and {} are adjacent", g.label(*u), g.label(*v))
            }
            Violation::DisconnectedSet { components } => {
                format!("the set induces {components} components")
            }
            Violation::CodeClash { u, v, code } => format!(
                "vertices {} and {} share the code {:?}",
                g.label(*u),
                g.label(*v),
                code.0
            ),
            Violation::NotQuasiPair => "the (U, V) split is not a quasi-double dominating pair".into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn first_undercovered(g: &Graph, need: usize, coverage: impl Fn(usize) -> Option<usize>) -> Option<Violation> {
    g.vertices().find_map(|v| {
        coverage(v)
            .filter(|&have| have < need)
            .map(|have| Violation::Undercovered { vertex: v, have, need })
    })
}

/// First violation of `kind` by `d`, or `None` when `d` has the property.
pub fn find_violation(kind: ParameterKind, g: &Graph, d: &VertexSet) -> Result<Option<Violation>> {
    if kind == ParameterKind::Qddom {
        return Err(Error::UnsupportedKind {
            kind,
            operation: "set verification",
        });
    }
    let dm = if kind.is_resolving() {
        if !g.is_connected() {
            return Err(Error::Disconnected("the resolving property"));
        }
        Some(all_pairs_distances(g))
    } else {
        None
    };
    Ok(violation_with(kind, g, dm.as_ref(), d))
}

pub(crate) fn violation_with(
    kind: ParameterKind,
    g: &Graph,
    dm: Option<&DistanceMatrix>,
    d: &VertexSet,
) -> Option<Violation> {
    use ParameterKind::*;

    if d.is_empty() && !(kind == Dim && g.order() <= 1) {
        return Some(Violation::EmptySet);
    }
    let closed = |v: usize| g.adjacency(v).intersection_count(d) + usize::from(d.contains(v));
    let open = |v: usize| g.adjacency(v).intersection_count(d);

    let domination = match kind.domination_part() {
        None => None,
        Some(Dom) => first_undercovered(g, 1, |v| Some(closed(v))),
        Some(Idom) => first_undercovered(g, 1, |v| Some(closed(v))).or_else(|| {
            d.iter().find_map(|u| {
                g.adjacency(u)
                    .iter()
                    .find(|&w| d.contains(w))
                    .map(|v| Violation::AdjacentMembers { u, v })
            })
        }),
        Some(Tdom) => first_undercovered(g, 1, |v| Some(open(v))),
        Some(Cdom) => first_undercovered(g, 1, |v| Some(closed(v))).or_else(|| {
            (!g.induces_connected(d)).then(|| Violation::DisconnectedSet {
                components: g
                    .induced_subgraph(&d.to_vec())
                    .map(|h| h.component_count())
                    .unwrap_or(0),
            })
        }),
        Some(Ddom) => first_undercovered(g, 2, |v| Some(closed(v))),
        Some(TwoDom) => first_undercovered(g, 2, |v| (!d.contains(v)).then(|| open(v))),
        Some(other) => unreachable!("{other} has no domination part"),
    };
    if domination.is_some() || !kind.is_resolving() {
        return domination;
    }
    let dm = dm.expect("distances supplied for resolving kinds");
    if dm.order() <= 1 {
        return None;
    }
    code_clash(dm, d).map(|(u, v, code)| Violation::CodeClash { u, v, code })
}

/// A vertex reference inside a certificate: a label, or an index for
/// unlabeled graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexRef {
    Index(usize),
    Label(String),
}

impl VertexRef {
    fn of(g: &Graph, v: usize) -> Self {
        if g.is_labeled() {
            VertexRef::Label(g.label(v))
        } else {
            VertexRef::Index(v)
        }
    }

    fn resolve(&self, g: &Graph) -> Result<usize> {
        match self {
            VertexRef::Index(v) if *v < g.order() => Ok(*v),
            VertexRef::Index(v) => Err(Error::VertexOutOfRange {
                index: *v,
                n: g.order(),
            }),
            VertexRef::Label(l) => g.resolve(l),
        }
    }
}

/// The `(U, V)` split of a quasi-double dominating pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiSplit {
    pub u: Vec<VertexRef>,
    pub v: Vec<VertexRef>,
}

/// A vertex set claimed to have a property, pinned to one graph by digest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: ParameterKind,
    pub vertices: Vec<VertexRef>,
    pub graph_digest: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<QuasiSplit>,
}

impl Certificate {
    pub fn new(kind: ParameterKind, g: &Graph, set: &VertexSet) -> Self {
        Self {
            kind,
            vertices: set.iter().map(|v| VertexRef::of(g, v)).collect(),
            graph_digest: g.digest(),
            split: None,
        }
    }

    pub fn quasi(g: &Graph, u: &VertexSet, v: &VertexSet) -> Self {
        let mut all = u.clone();
        all.union_with(v);
        let mut cert = Self::new(ParameterKind::Qddom, g, &all);
        cert.split = Some(QuasiSplit {
            u: u.iter().map(|x| VertexRef::of(g, x)).collect(),
            v: v.iter().map(|x| VertexRef::of(g, x)).collect(),
        });
        cert
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices
            .iter()
            .map(|r| match r {
                VertexRef::Index(i) => i.to_string(),
                VertexRef::Label(l) => l.clone(),
            })
            .collect()
    }

    /// Resolves the vertex list against `g`, refusing a stale digest.
    pub fn vertex_set(&self, g: &Graph) -> Result<VertexSet> {
        let digest = g.digest();
        if digest != self.graph_digest {
            return Err(Error::DigestMismatch {
                expected: digest,
                found: self.graph_digest.clone(),
            });
        }
        let mut set = VertexSet::new(g.order());
        for r in &self.vertices {
            set.insert(r.resolve(g)?);
        }
        Ok(set)
    }

    /// Re-checks the certificate on `g`.
    pub fn verify(&self, g: &Graph) -> Result<Option<Violation>> {
        let set = self.vertex_set(g)?;
        if self.kind != ParameterKind::Qddom {
            return find_violation(self.kind, g, &set);
        }
        let split = self.split.as_ref().ok_or(Error::UnsupportedKind {
            kind: ParameterKind::Qddom,
            operation: "verification without a (U, V) split",
        })?;
        let resolve = |refs: &[VertexRef]| -> Result<VertexSet> {
            let mut s = VertexSet::new(g.order());
            for r in refs {
                s.insert(r.resolve(g)?);
            }
            Ok(s)
        };
        let (u, v) = (resolve(&split.u)?, resolve(&split.v)?);
        Ok((!is_quasi_double_pair(g, &u, &v)).then_some(Violation::NotQuasiPair))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
