//! Formula, constructed set and solver output per level and kind.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::constructions::{construction_labels, formula_value, has_variants, Variant};
use crate::error::Result;
use crate::generators::{fcn, FcnLevel};
use crate::harness::verdict::OracleEvidence;
use crate::kind::ParameterKind;
use crate::solver::{Solver, Status};
use crate::verify::find_violation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub formula: Option<usize>,
    pub constructed_size: Option<usize>,
    pub constructed_valid: Option<bool>,
    /// The twin-closure reading, where it exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twin_closure_size: Option<usize>,
    pub oracle: OracleEvidence,
    /// All present entries coincide. An interval oracle agrees when the other
    /// entries are equal and lie inside it.
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub level: u32,
    pub cells: BTreeMap<ParameterKind, Cell>,
}

pub fn build_table(levels: &[u32], solver: &Solver) -> Result<Vec<TableRow>> {
    levels.iter().map(|&l| build_row(FcnLevel(l), solver)).collect()
}

fn build_row(level: FcnLevel, solver: &Solver) -> Result<TableRow> {
    let g = fcn(level);
    let mut cells = BTreeMap::new();
    for kind in ParameterKind::ALL {
        let formula = formula_value(kind, level);
        let constructed = if level.0 >= 1 && kind != ParameterKind::Dim && kind != ParameterKind::Qddom {
            let labels = construction_labels(kind, level, Variant::Literal)?;
            let set = g.vertex_set(g.resolve_all(&labels)?);
            Some((set.len(), find_violation(kind, &g, &set)?.is_none()))
        } else {
            None
        };
        let twin_closure_size = if level.0 >= 1 && has_variants(kind) {
            Some(construction_labels(kind, level, Variant::TwinClosure)?.len())
        } else {
            None
        };
        let r = solver.solve(&g, kind)?;
        let oracle = OracleEvidence::from(&r);

        let mut entries: Vec<usize> = formula.into_iter().collect();
        entries.extend(constructed.map(|c| c.0));
        let agree = match r.status {
            Status::Exact => {
                let v = r.value.expect("exact value");
                entries.iter().all(|&e| e == v)
            }
            Status::Infeasible => entries.is_empty(),
            Status::BoundsOnly => {
                let hi = r.upper.unwrap_or(usize::MAX);
                entries.windows(2).all(|w| w[0] == w[1]) && entries.iter().all(|&e| r.lower <= e && e <= hi)
            }
        };
        cells.insert(
            kind,
            Cell {
                formula,
                constructed_size: constructed.map(|c| c.0),
                constructed_valid: constructed.map(|c| c.1),
                twin_closure_size,
                oracle,
                agree,
            },
        );
    }
    Ok(TableRow { level: level.0, cells })
}

fn oracle_text(o: &OracleEvidence) -> String {
    match o.status {
        Status::Exact => o.value.map_or("-".into(), |v| v.to_string()),
        Status::Infeasible => "none".into(),
        Status::BoundsOnly => match o.upper {
            Some(hi) => format!("[{},{}]", o.lower, hi),
            None => format!("[{},?]", o.lower),
        },
    }
}

/// Plain-text rendering: one line per level and kind.
pub fn render_table(rows: &[TableRow]) -> String {
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>2}  {:<6} {:>7} {:>11} {:>7} {:>9}  agree",
        "l", "kind", "formula", "constructed", "twins", "oracle"
    );
    for row in rows {
        for (kind, c) in &row.cells {
            let constructed = match (c.constructed_size, c.constructed_valid) {
                (Some(s), Some(true)) => s.to_string(),
                (Some(s), _) => format!("{s}(bad)"),
                _ => "-".into(),
            };
            let _ = writeln!(
                out,
                "{:>2}  {:<6} {:>7} {:>11} {:>7} {:>9}  {}",
                row.level,
                kind.name(),
                opt(c.formula),
                constructed,
                opt(c.twin_closure_size),
                oracle_text(&c.oracle),
                if c.agree { "yes" } else { "NO" }
            );
        }
    }
    out
}
