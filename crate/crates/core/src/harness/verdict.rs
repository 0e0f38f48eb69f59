use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::GraphJson;
use crate::solver::{SolverResult, Status};
use crate::verify::Certificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum VerdictStatus {
    Confirmed,
    Refuted,
    Undecided,
}

impl VerdictStatus {
    /// Refuted beats Undecided beats Confirmed.
    pub fn combine(self, other: Self) -> Self {
        use VerdictStatus::*;
        match (self, other) {
            (Refuted, _) | (_, Refuted) => Refuted,
            (Undecided, _) | (_, Undecided) => Undecided,
            _ => Confirmed,
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            VerdictStatus::Confirmed => 0,
            VerdictStatus::Refuted => 1,
            VerdictStatus::Undecided => 3,
        }
    }
}

/// Solver output stripped of timing, so reports stay reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleEvidence {
    pub status: Status,
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: Option<usize>,
}

impl From<&SolverResult> for OracleEvidence {
    fn from(r: &SolverResult) -> Self {
        Self {
            status: r.status,
            value: r.value,
            lower: r.lower,
            upper: r.upper,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionEvidence {
    pub variant: String,
    pub size: usize,
    pub verifies: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Evidence {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_size: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub constructions: Vec<ConstructionEvidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleEvidence>,
    /// Exactly computed parameters, keyed by symbol.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, Option<usize>>,
    /// Right-hand side of a membership claim.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub allowed: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Certificate>,
}

/// The sampled input behind one instance verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub seed_index: usize,
    pub gamma: GraphJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<GraphJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub claim_id: String,
    pub status: VerdictStatus,
    /// Confirmed only because the claim's hypothesis failed.
    pub vacuous: bool,
    pub evidence: Evidence,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<Instance>,
}

impl Verdict {
    pub fn new(claim_id: impl Into<String>, status: VerdictStatus) -> Self {
        Self {
            claim_id: claim_id.into(),
            status,
            vacuous: false,
            evidence: Evidence::default(),
            notes: Vec::new(),
            instance: None,
        }
    }

    pub fn vacuous(claim_id: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut v = Self::new(claim_id, VerdictStatus::Confirmed);
        v.vacuous = true;
        v.notes.push(reason.into());
        v
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn seed_index(&self) -> usize {
        self.instance.as_ref().map_or(0, |i| i.seed_index)
    }
}

/// Per-claim roll-up of instance verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub claim_id: String,
    pub status: VerdictStatus,
    pub instances: usize,
    pub substantive: usize,
    pub vacuous: usize,
    pub refuted: usize,
    pub undecided: usize,
}

pub fn summarize(verdicts: &[Verdict]) -> Vec<ClaimSummary> {
    let mut by_claim: BTreeMap<&str, ClaimSummary> = BTreeMap::new();
    for v in verdicts {
        let s = by_claim.entry(&v.claim_id).or_insert_with(|| ClaimSummary {
            claim_id: v.claim_id.clone(),
            status: VerdictStatus::Confirmed,
            instances: 0,
            substantive: 0,
            vacuous: 0,
            refuted: 0,
            undecided: 0,
        });
        s.instances += 1;
        s.status = s.status.combine(v.status);
        match v.status {
            VerdictStatus::Refuted => s.refuted += 1,
            VerdictStatus::Undecided => s.undecided += 1,
            VerdictStatus::Confirmed if v.vacuous => s.vacuous += 1,
            VerdictStatus::Confirmed => s.substantive += 1,
        }
    }
    by_claim.into_values().collect()
}
