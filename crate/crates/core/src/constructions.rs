//! Explicit witness sets on `FCN(l)` and the closed-form values they claim.
//!
//! Every rule is a string recursion: take the level `l - 1` set in all four
//! prefixed copies, then add or drop a few strings built from the root suffix
//! `10(01)^(l-1)`. Validity is never assumed here; callers verify.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{fcn, FcnLevel};
use crate::kind::ParameterKind;
use crate::verify::Certificate;

/// Reading of the neighbourhood rule used for 2dom, rdom and ridom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Union of `N(v)` over every `v` whose label ends in `01`.
    Literal,
    /// Every degree-2 twin: labels ending in `00` or `11`.
    TwinClosure,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Literal => "literal",
            Variant::TwinClosure => "twin-closure",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "literal" => Ok(Variant::Literal),
            "twin-closure" | "twin_closure" | "twins" => Ok(Variant::TwinClosure),
            other => Err(format!("unknown variant {other:?}; expected literal or twin-closure")),
        }
    }
}

/// Kinds whose two variants can differ.
pub fn has_variants(kind: ParameterKind) -> bool {
    matches!(kind, ParameterKind::TwoDom | ParameterKind::Rdom | ParameterKind::Ridom)
}

const PREFIXES: [&str; 4] = ["00", "01", "10", "11"];

const DOM_BASE: [&str; 6] = ["1101", "1010", "1001", "0110", "0101", "0001"];
const TDOM_BASE: [&str; 8] = ["1111", "1110", "1011", "1010", "0111", "0110", "0011", "0010"];
const DDOM_BASE: [&str; 12] = [
    "1111", "1110", "1101", "1011", "1010", "1001", "0111", "0110", "0101", "0011", "0010", "0001",
];

type Labels = BTreeSet<String>;

fn owned(base: &[&str]) -> Labels {
    base.iter().map(|s| s.to_string()).collect()
}

fn expand(set: &Labels) -> Labels {
    PREFIXES
        .iter()
        .flat_map(|p| set.iter().map(move |x| format!("{p}{x}")))
        .collect()
}

/// `p ‖ 10(01)^(l-1)` for each prefix given.
fn roots(level: u32, prefixes: &[&str]) -> Vec<String> {
    let r = FcnLevel(level).root_suffix().expect("level >= 1");
    prefixes.iter().map(|p| format!("{p}{r}")).collect()
}

/// `(p)(01)^(l-2)(11)` for the four root-side prefixes.
fn root_twins(level: u32) -> Vec<String> {
    let mid = "01".repeat(level as usize - 2);
    ["1010", "1110", "0110", "0010"]
        .iter()
        .map(|p| format!("{p}{mid}11"))
        .collect()
}

fn recurse(level: u32, base: &[&str], step: impl Fn(u32, Labels) -> Labels) -> Labels {
    let mut set = owned(base);
    for l in 2..=level {
        set = step(l, expand(&set));
    }
    set
}

fn dom_step(l: u32, mut set: Labels) -> Labels {
    for x in roots(l, &["11", "00"]) {
        set.remove(&x);
    }
    set
}

fn tdom_step(l: u32, mut set: Labels) -> Labels {
    set.extend(roots(l, &["10", "11"]));
    for x in root_twins(l) {
        set.remove(&x);
    }
    set
}

fn cdom_step(l: u32, mut set: Labels) -> Labels {
    set.extend(roots(l, &["00", "01", "10", "11"]));
    set
}

fn ddom_step(l: u32, mut set: Labels) -> Labels {
    for x in root_twins(l) {
        set.remove(&x);
    }
    set
}

fn neighbourhood_rule(level: FcnLevel, variant: Variant) -> Labels {
    let g = fcn(level);
    match variant {
        Variant::Literal => g
            .vertices()
            .filter(|&v| g.label(v).ends_with("01"))
            .flat_map(|v| g.neighbors(v).iter().map(|&w| g.label(w)).collect::<Vec<_>>())
            .collect(),
        Variant::TwinClosure => g
            .vertices()
            .map(|v| g.label(v))
            .filter(|l| l.ends_with("00") || l.ends_with("11"))
            .collect(),
    }
}

/// The labels of the constructed set, sorted.
pub fn construction_labels(kind: ParameterKind, level: FcnLevel, variant: Variant) -> Result<Vec<String>> {
    use ParameterKind::*;
    if level.0 < 1 {
        return Err(Error::LevelOutOfRange {
            kind,
            level: level.0,
            min: 1,
        });
    }
    let l = level.0;
    let set = match kind {
        Dom | Idom => recurse(l, &DOM_BASE, dom_step),
        Tdom => recurse(l, &TDOM_BASE, tdom_step),
        Cdom | Rcdom => recurse(l, &TDOM_BASE, cdom_step),
        Ddom => recurse(l, &DDOM_BASE, ddom_step),
        Rtdom => recurse(l, &TDOM_BASE, |_, s| s),
        TwoDom | Rdom | Ridom => neighbourhood_rule(level, variant),
        Dim | Qddom => {
            return Err(Error::UnsupportedKind {
                kind,
                operation: "construction",
            })
        }
    };
    Ok(set.into_iter().collect())
}

/// The constructed set as a certificate on `fcn(level)`.
pub fn construct(kind: ParameterKind, level: FcnLevel) -> Result<Certificate> {
    construct_variant(kind, level, Variant::Literal)
}

pub fn construct_variant(kind: ParameterKind, level: FcnLevel, variant: Variant) -> Result<Certificate> {
    let labels = construction_labels(kind, level, variant)?;
    let g = fcn(level);
    let set = g.vertex_set(g.resolve_all(&labels)?);
    Ok(Certificate::new(kind, &g, &set))
}

/// The value the stated recursions give at `level`, iterated from their
/// anchors. Level-0 anchors are the exact values on the 4-cycle. `None` where
/// no recursion or anchor applies.
pub fn formula_value(kind: ParameterKind, level: FcnLevel) -> Option<usize> {
    use ParameterKind::*;
    let l = level.0;
    let iterate = |anchor: usize, from: u32, step: fn(usize) -> usize| -> Option<usize> {
        (l >= from).then(|| (from..l).fold(anchor, |v, _| step(v)))
    };
    let pow4 = |e: u32| 4usize.checked_pow(e);
    match kind {
        Dom | Idom => iterate(2, 0, |v| 4 * v - 2),
        Tdom if l == 0 => Some(2),
        Tdom => iterate(8, 1, |v| 4 * v - 2),
        Cdom | Rcdom => iterate(2, 0, |v| 4 * (v + 1)),
        Ddom if l == 0 => Some(3),
        Ddom => iterate(12, 1, |v| 4 * (v - 1)),
        TwoDom => iterate(2, 0, |v| 4 * v),
        Dim if l == 0 => Some(2),
        Dim => pow4(l),
        // Four times γ_2 one level down.
        Rdom if l == 0 => Some(2),
        Rdom | Ridom => (l >= 1).then(|| 4 * formula_value(TwoDom, FcnLevel(l - 1)).unwrap()),
        Rtdom if l == 0 => Some(2),
        Rtdom => iterate(8, 1, |v| 4 * v),
        Qddom => None,
    }
}
