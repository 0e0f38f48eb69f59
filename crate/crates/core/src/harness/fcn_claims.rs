//! Value claims on `FCN(l)`: formula, constructed set and exact solver, side
//! by side.

use crate::constructions::{construction_labels, formula_value, has_variants, Variant};
use crate::error::{Error, Result};
use crate::generators::{fcn, FcnLevel};
use crate::kind::ParameterKind;
use crate::solver::{Solver, Status};
use crate::verify::{find_violation, Certificate};

use super::verdict::{ConstructionEvidence, OracleEvidence, Verdict, VerdictStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FcnClaim {
    pub id: &'static str,
    pub kind: ParameterKind,
    pub min_level: u32,
    /// Claims stated for a single level only.
    pub max_level: Option<u32>,
    pub statement: &'static str,
}

impl FcnClaim {
    pub fn applies_to(&self, level: u32) -> bool {
        level >= self.min_level && self.max_level.map_or(true, |m| level <= m)
    }
}

pub const FCN_CLAIMS: [FcnClaim; 12] = [
    FcnClaim {
        id: "Thm11",
        kind: ParameterKind::Dom,
        min_level: 1,
        max_level: None,
        statement: "γ(FCN(l)) = 4γ(FCN(l-1)) - 2",
    },
    FcnClaim {
        id: "Cor19",
        kind: ParameterKind::Idom,
        min_level: 1,
        max_level: None,
        statement: "γ_i(FCN(l)) = 4γ_i(FCN(l-1)) - 2",
    },
    FcnClaim {
        id: "Thm21",
        kind: ParameterKind::Tdom,
        min_level: 1,
        max_level: Some(1),
        statement: "γ_t(FCN(1)) = 8",
    },
    FcnClaim {
        id: "Thm12",
        kind: ParameterKind::Tdom,
        min_level: 2,
        max_level: None,
        statement: "γ_t(FCN(l)) = 4γ_t(FCN(l-1)) - 2",
    },
    FcnClaim {
        id: "Thm13",
        kind: ParameterKind::Cdom,
        min_level: 1,
        max_level: None,
        statement: "γ_c(FCN(l)) = 4(γ_c(FCN(l-1)) + 1)",
    },
    FcnClaim {
        id: "DDS",
        kind: ParameterKind::Ddom,
        min_level: 1,
        max_level: None,
        statement: "γ_×2(FCN(1)) = 12, γ_×2(FCN(l)) = 4(γ_×2(FCN(l-1)) - 1)",
    },
    FcnClaim {
        id: "2DS",
        kind: ParameterKind::TwoDom,
        min_level: 1,
        max_level: None,
        statement: "γ_2(FCN(l)) = 4γ_2(FCN(l-1))",
    },
    FcnClaim {
        id: "Thm23",
        kind: ParameterKind::Rdom,
        min_level: 1,
        max_level: None,
        statement: "γ_r(FCN(l)) = 4γ_2(FCN(l-1))",
    },
    FcnClaim {
        id: "RIDS",
        kind: ParameterKind::Ridom,
        min_level: 1,
        max_level: None,
        statement: "γ_ri(FCN(l)) = 4γ_2(FCN(l-1))",
    },
    FcnClaim {
        id: "RTDS",
        kind: ParameterKind::Rtdom,
        min_level: 1,
        max_level: None,
        statement: "γ_rt(FCN(1)) = 8, γ_rt(FCN(l)) = 4γ_rt(FCN(l-1))",
    },
    FcnClaim {
        id: "RCDS",
        kind: ParameterKind::Rcdom,
        min_level: 1,
        max_level: None,
        statement: "γ_rc(FCN(l)) = 4(γ_c(FCN(l-1)) + 1)",
    },
    FcnClaim {
        id: "MD",
        kind: ParameterKind::Dim,
        min_level: 1,
        max_level: None,
        statement: "dim(FCN(l)) = 4^l",
    },
];

pub fn fcn_claim(id: &str) -> Option<&'static FcnClaim> {
    FCN_CLAIMS.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

pub fn claim_label(id: &str, level: u32) -> String {
    format!("{id}@l={level}")
}

/// Compares formula, construction and solver on `fcn(level)`.
///
/// Confirmed when the optimum is pinned and equals the formula. Refuted when
/// the optimum is pinned elsewhere, a verified set beats the formula, or the
/// proven lower bound exceeds it. Undecided otherwise.
pub fn check_fcn_claim(id: &str, level: FcnLevel, solver: &Solver) -> Result<Verdict> {
    let claim = fcn_claim(id).ok_or_else(|| Error::UnknownKind(format!("claim {id}")))?;
    if !claim.applies_to(level.0) {
        return Err(Error::LevelOutOfRange {
            kind: claim.kind,
            level: level.0,
            min: claim.min_level,
        });
    }
    let kind = claim.kind;
    let g = fcn(level);
    let formula = formula_value(kind, level);
    let mut verdict = Verdict::new(claim_label(claim.id, level.0), VerdictStatus::Undecided);
    verdict.evidence.formula_value = formula;

    // Constructed sets, each checked against the definition.
    let mut best: Option<Certificate> = None;
    let variants: &[Variant] = if has_variants(kind) {
        &[Variant::Literal, Variant::TwinClosure]
    } else {
        &[Variant::Literal]
    };
    if kind != ParameterKind::Dim {
        for &variant in variants {
            let labels = construction_labels(kind, level, variant)?;
            let set = g.vertex_set(g.resolve_all(&labels)?);
            let violation = find_violation(kind, &g, &set)?;
            let verifies = violation.is_none();
            if variant == Variant::Literal {
                verdict.evidence.certificate_size = Some(set.len());
            }
            if let (true, Some(f)) = (verifies, formula) {
                if set.len() != f {
                    verdict.note(format!("{} set has {} vertices, formula gives {f}", variant, set.len()));
                }
            }
            if !verifies {
                verdict.note(format!("{variant} set fails the definition"));
            }
            verdict.evidence.constructions.push(ConstructionEvidence {
                variant: variant.name().to_owned(),
                size: set.len(),
                verifies,
                violation: violation.map(|v| v.describe(&g)),
            });
            if verifies && best.as_ref().map_or(true, |b| set.len() < b.size()) {
                best = Some(Certificate::new(kind, &g, &set));
            }
        }
        if variants.len() == 2 {
            let sizes: Vec<usize> = verdict.evidence.constructions.iter().map(|c| c.size).collect();
            if sizes[0] != sizes[1] {
                verdict.note(format!(
                    "literal and twin-closure readings differ: {} vs {}",
                    sizes[0], sizes[1]
                ));
            }
        }
    }

    let oracle = solver.solve(&g, kind)?;
    verdict.evidence.oracle = Some(OracleEvidence::from(&oracle));
    if let Some(w) = &oracle.witness {
        if best.as_ref().map_or(true, |b| w.size() < b.size()) {
            best = Some(w.clone());
        }
    }

    let lower = oracle.lower;
    let upper = best.as_ref().map(Certificate::size);
    verdict.status = match (formula, oracle.status) {
        (None, _) => {
            verdict.note("no formula value at this level");
            VerdictStatus::Undecided
        }
        (Some(_), Status::Infeasible) => {
            verdict.note("no set with this property exists");
            VerdictStatus::Refuted
        }
        (Some(f), _) => match upper {
            Some(u) if u == lower && u == f => VerdictStatus::Confirmed,
            Some(u) if u == lower => {
                verdict.note(format!("exact value {u} differs from formula {f}"));
                VerdictStatus::Refuted
            }
            Some(u) if u < f => {
                verdict.note(format!("verified set of size {u} beats formula {f}"));
                VerdictStatus::Refuted
            }
            _ if lower > f => {
                verdict.note(format!("proven lower bound {lower} exceeds formula {f}"));
                VerdictStatus::Refuted
            }
            _ => VerdictStatus::Undecided,
        },
    };
    verdict.evidence.witnesses.extend(best);
    Ok(verdict)
}
