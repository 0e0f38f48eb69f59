//! Named graph families and the rooted product.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};

/// Dimension of a fractal cubic network.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FcnLevel(pub u32);

impl FcnLevel {
    pub fn order(self) -> usize {
        4usize.pow(self.0 + 1)
    }

    pub fn label_len(self) -> usize {
        2 * self.0 as usize + 2
    }

    /// `10(01)^(l-1)`: the copy-local label of the root vertex used when
    /// building level `l` from four copies of level `l - 1`. `None` at level 0.
    pub fn root_suffix(self) -> Option<String> {
        (self.0 >= 1).then(|| format!("10{}", "01".repeat(self.0 as usize - 1)))
    }
}

/// Designated root of the second rooted-product factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RootSpec {
    Index(usize),
    Label(String),
}

impl RootSpec {
    pub fn resolve(&self, omega: &Graph) -> Result<usize> {
        match self {
            RootSpec::Index(v) if *v < omega.order() => Ok(*v),
            RootSpec::Index(v) => Err(Error::InvalidRoot(format!(
                "index {v} not in a graph of order {}",
                omega.order()
            ))),
            RootSpec::Label(l) => omega
                .resolve(l)
                .map_err(|_| Error::InvalidRoot(format!("no vertex {l:?}"))),
        }
    }
}

impl From<&str> for RootSpec {
    fn from(s: &str) -> Self {
        RootSpec::Label(s.to_owned())
    }
}

fn padded_labels(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("{i:0width$}")).collect()
}

fn check_min(family: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::BelowMinimum { family, min, got: n });
    }
    Ok(())
}

pub fn cycle(n: usize) -> Result<Graph> {
    check_min("cycle", n, 3)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build_graph(n, &edges, Some(padded_labels(n)))?.with_name(format!("C{n}")))
}

pub fn path(n: usize) -> Result<Graph> {
    check_min("path", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build_graph(n, &edges, Some(padded_labels(n)))?.with_name(format!("P{n}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    check_min("complete", n, 1)?;
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok(build_graph(n, &edges, Some(padded_labels(n)))?.with_name(format!("K{n}")))
}

/// `Q^d` on `d`-bit strings, adjacent at Hamming distance one.
pub fn hypercube(d: u32) -> Result<Graph> {
    let n = 1usize << d;
    let labels: Vec<String> = (0..n)
        .map(|i| (0..d).rev().map(|b| if i >> b & 1 == 1 { '1' } else { '0' }).collect())
        .collect();
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (0..d).map(move |b| (i, i ^ (1 << b))).filter(|&(i, j)| i < j))
        .collect();
    Ok(build_graph(n, &edges, Some(labels))?.with_name(format!("Q{d}")))
}

/// Fractal cubic network `FCN(l)`.
///
/// Level 0 is the cycle `00-01-11-10`. Level `l` takes four copies of level
/// `l - 1` prefixed with `11`, `01`, `10`, `00` and joins the copies' roots
/// `p‖10(01)^(l-1)` in the cycle `00 - 10 - 11 - 01 - 00`.
pub fn fcn(level: FcnLevel) -> Graph {
    let mut labels: Vec<String> = ["00", "01", "11", "10"].map(String::from).to_vec();
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (2, 3), (3, 0)];

    for l in 1..=level.0 {
        let size = labels.len();
        let root = FcnLevel(l).root_suffix().expect("l >= 1");
        let local_root = labels.iter().position(|x| *x == root).expect("root exists");
        let prefixes = ["11", "01", "10", "00"];
        let mut next_labels = Vec::with_capacity(size * 4);
        let mut next_edges = Vec::with_capacity(edges.len() * 4 + 4);
        for (copy, prefix) in prefixes.iter().enumerate() {
            let offset = copy * size;
            next_labels.extend(labels.iter().map(|x| format!("{prefix}{x}")));
            next_edges.extend(edges.iter().map(|&(a, b)| (a + offset, b + offset)));
        }
        let root_of = |prefix: &str| {
            let copy = prefixes.iter().position(|p| *p == prefix).unwrap();
            copy * size + local_root
        };
        for (a, b) in [("00", "10"), ("10", "11"), ("11", "01"), ("01", "00")] {
            next_edges.push((root_of(a), root_of(b)));
        }
        labels = next_labels;
        edges = next_edges;
    }

    build_graph(labels.len(), &edges, Some(labels))
        .expect("fcn construction is well formed")
        .with_name(format!("FCN({})", level.0))
}

/// Rooted product `Γ ∘_v Ω`: one copy of `Ω` per vertex of `Γ`, with copy
/// `i`'s root merged into vertex `i` of `Γ`. Vertices are labelled
/// `"γ-label:ω-label"`.
pub fn rooted_product(gamma: &Graph, omega: &Graph, root: &RootSpec) -> Result<Graph> {
    if omega.order() == 0 {
        return Err(Error::InvalidRoot("Ω has no vertices".into()));
    }
    let root = root.resolve(omega)?;
    let k = omega.order();
    let id = |i: usize, w: usize| i * k + w;

    let mut edges = Vec::with_capacity(gamma.size() + gamma.order() * omega.size());
    for i in gamma.vertices() {
        edges.extend(omega.edges().map(|(a, b)| (id(i, a), id(i, b))));
    }
    edges.extend(gamma.edges().map(|(i, j)| (id(i, root), id(j, root))));

    let labels = gamma
        .vertices()
        .flat_map(|i| omega.vertices().map(move |w| (i, w)))
        .map(|(i, w)| format!("{}:{}", gamma.label(i), omega.label(w)))
        .collect();
    let name = format!("{} o_{} {}", gamma.name(), omega.label(root), omega.name());
    Ok(build_graph(gamma.order() * k, &edges, Some(labels))?.with_name(name))
}

/// `FCN(l)` rebuilt as `FCN(0) ∘_r FCN(l-1)` and renamed by `ab:x ↦ ab‖x`.
pub fn fcn_as_rooted_product(level: FcnLevel) -> Result<Graph> {
    let root = level
        .root_suffix()
        .ok_or_else(|| Error::InvalidRoot("level 0 is not a rooted product".into()))?;
    let product = rooted_product(&fcn(FcnLevel(0)), &fcn(FcnLevel(level.0 - 1)), &RootSpec::Label(root))?;
    Ok(product
        .relabel(|l| l.replacen(':', "", 1))?
        .with_name(format!("FCN({})", level.0)))
}
