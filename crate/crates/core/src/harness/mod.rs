//! Claim adjudication: FCN value claims against the exact solver, and
//! general-graph claims against seeded random samples.

pub mod bounds;
pub mod fcn_claims;
pub mod products;
pub mod random;
pub mod verdict;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::FcnLevel;
use crate::graph::Graph;
use crate::solver::{Budget, Solver};

pub use bounds::{check_bound_theorem, BOUND_CLAIMS, FIGURE_CLAIM};
pub use fcn_claims::{check_fcn_claim, FcnClaim, FCN_CLAIMS};
pub use products::{check_rooted_product_membership, ProductSampling, PRODUCT_CLAIMS};
pub use random::{random_graph, RandomGraphSpec};
pub use verdict::{summarize, ClaimSummary, Evidence, Verdict, VerdictStatus};

/// What to run and with which inputs.
#[derive(Clone, Debug)]
pub struct HarnessConfig {
    pub seed: u64,
    pub levels: Vec<u32>,
    /// Samples per general-graph claim.
    pub instances: usize,
    pub budget: Budget,
    pub threads: usize,
    pub products: ProductSampling,
    /// Vertex range of the graphs behind the bound claims.
    pub bound_order: (usize, usize),
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            levels: vec![0, 1],
            instances: 200,
            budget: Budget::default(),
            threads: 1,
            products: ProductSampling::default(),
            bound_order: (3, 8),
        }
    }
}

/// A claim selector: `all`, a group (`fcn`, `products`, `bounds`), a claim id
/// such as `Thm2`, or one FCN level such as `Thm11@l=1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Fcn,
    Products,
    Bounds,
    Claim { id: String, level: Option<u32> },
}

impl std::str::FromStr for Selection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sel = match s.to_ascii_lowercase().as_str() {
            "all" => Selection::All,
            "fcn" => Selection::Fcn,
            "products" => Selection::Products,
            "bounds" => Selection::Bounds,
            _ => {
                let (id, level) = match s.split_once("@l=") {
                    Some((id, l)) => {
                        let level = l.parse().map_err(|_| Error::UnknownKind(format!("claim {s}")))?;
                        (id, Some(level))
                    }
                    None => (s, None),
                };
                let known =
                    fcn_claims::fcn_claim(id).is_some() || products::is_product_claim(id) || bounds::is_bound_claim(id);
                if !known || (level.is_some() && fcn_claims::fcn_claim(id).is_none()) {
                    return Err(Error::UnknownKind(format!("claim {s}")));
                }
                Selection::Claim {
                    id: id.to_owned(),
                    level,
                }
            }
        };
        Ok(sel)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub seed: u64,
    pub levels: Vec<u32>,
    pub instances: usize,
    pub budget_secs: Option<f64>,
    pub summaries: Vec<ClaimSummary>,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    /// Worst status over every verdict.
    pub fn status(&self) -> VerdictStatus {
        self.summaries
            .iter()
            .fold(VerdictStatus::Confirmed, |acc, s| acc.combine(s.status))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per claim.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<12} {:<10} {:>9} {:>11} {:>7} {:>7} {:>9}",
            "claim", "status", "instances", "substantive", "vacuous", "refuted", "undecided"
        );
        for s in &self.summaries {
            let _ = writeln!(
                out,
                "{:<12} {:<10} {:>9} {:>11} {:>7} {:>7} {:>9}",
                s.claim_id,
                format!("{:?}", s.status),
                s.instances,
                s.substantive,
                s.vacuous,
                s.refuted,
                s.undecided
            );
        }
        out
    }
}

fn pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Io(std::io::Error::new(std::io::ErrorKind::Other, e)))
}

/// Runs the selected claims. Verdicts come out ordered by claim id, then by
/// sample index, whatever the thread count.
pub fn run(selection: &Selection, config: &HarnessConfig) -> Result<Report> {
    let canonical = Solver::new(config.budget.clone());
    let fast = Solver::new(config.budget.clone()).canonical_witness(false);
    let pool = pool(config.threads)?;

    let (fcn, product_ids, bound_ids): (Vec<(&str, u32)>, Vec<&str>, Vec<&str>) = match selection {
        Selection::All => (fcn_jobs(None, &config.levels), PRODUCT_CLAIMS.to_vec(), all_bounds()),
        Selection::Fcn => (fcn_jobs(None, &config.levels), vec![], vec![]),
        Selection::Products => (vec![], PRODUCT_CLAIMS.to_vec(), vec![]),
        Selection::Bounds => (vec![], vec![], all_bounds()),
        Selection::Claim { id, level } => {
            if let Some(claim) = fcn_claims::fcn_claim(id) {
                let levels = match level {
                    Some(l) => vec![*l],
                    None => config.levels.clone(),
                };
                (fcn_jobs(Some(claim.id), &levels), vec![], vec![])
            } else if products::is_product_claim(id) {
                let id = PRODUCT_CLAIMS
                    .iter()
                    .copied()
                    .find(|c| c.eq_ignore_ascii_case(id))
                    .unwrap();
                (vec![], vec![id], vec![])
            } else {
                let id = all_bounds().into_iter().find(|c| c.eq_ignore_ascii_case(id)).unwrap();
                (vec![], vec![], vec![id])
            }
        }
    };

    let mut verdicts = Vec::new();

    let fcn_verdicts: Vec<Result<Verdict>> = pool.install(|| {
        fcn.par_iter()
            .map(|&(id, l)| check_fcn_claim(id, FcnLevel(l), &canonical))
            .collect()
    });
    for v in fcn_verdicts {
        verdicts.push(v?);
    }

    for id in product_ids {
        let pairs = products::sample_product_instances(
            id,
            config.seed,
            &ProductSampling {
                instances: config.instances,
                ..config.products.clone()
            },
        )?;
        let out: Vec<Result<Verdict>> = pool.install(|| {
            pairs
                .par_iter()
                .enumerate()
                .map(|(i, (gamma, omega))| products::check_product_instance(id, i, gamma, omega, &fast))
                .collect()
        });
        for v in out {
            verdicts.push(v?);
        }
    }

    let (figure, sampled): (Vec<&str>, Vec<&str>) = bound_ids.into_iter().partition(|id| *id == FIGURE_CLAIM);
    if !figure.is_empty() {
        let g = bounds::figure_graph();
        verdicts.extend(bounds::check_bound_instance(&figure, 0, &g, &canonical)?);
    }
    if !sampled.is_empty() {
        let graphs: Vec<Graph> = bounds::sample_bound_graphs(config.seed, config.instances, config.bound_order)?;
        let out: Vec<Result<Vec<Verdict>>> = pool.install(|| {
            graphs
                .par_iter()
                .enumerate()
                .map(|(i, g)| bounds::check_bound_instance(&sampled, i, g, &fast))
                .collect()
        });
        for v in out {
            verdicts.extend(v?);
        }
    }

    verdicts.sort_by(|a, b| a.claim_id.cmp(&b.claim_id).then(a.seed_index().cmp(&b.seed_index())));
    Ok(Report {
        seed: config.seed,
        levels: config.levels.clone(),
        instances: config.instances,
        budget_secs: config.budget.time_limit.map(|d| d.as_secs_f64()),
        summaries: summarize(&verdicts),
        verdicts,
    })
}

fn all_bounds() -> Vec<&'static str> {
    let mut ids = BOUND_CLAIMS.to_vec();
    ids.push(FIGURE_CLAIM);
    ids
}

fn fcn_jobs(only: Option<&'static str>, levels: &[u32]) -> Vec<(&'static str, u32)> {
    FCN_CLAIMS
        .iter()
        .filter(|c| only.map_or(true, |id| c.id == id))
        .flat_map(|c| levels.iter().filter(|&&l| c.applies_to(l)).map(move |&l| (c.id, l)))
        .collect()
}
