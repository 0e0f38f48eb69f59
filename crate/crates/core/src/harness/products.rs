//! Membership claims for parameters of rooted products `Γ ∘_v Ω`, with
//! `n = |V(Γ)|`.

use std::collections::BTreeSet;

use rand_chacha::ChaCha8Rng;

use super::random::{sample, stream, RandomGraphSpec};
use super::verdict::{Instance, Verdict, VerdictStatus};
use crate::error::{Error, Result};
use crate::generators::{cycle, rooted_product, RootSpec};
use crate::graph::Graph;
use crate::kind::ParameterKind::{self, *};
use crate::solver::{Solver, SolverResult, Status};

pub const PRODUCT_CLAIMS: [&str; 8] = ["Thm2", "Thm20", "Thm3", "Thm4", "Thm5", "Thm6", "Thm7", "Thm8"];

/// Factor sizes and sample count for the product claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSampling {
    pub instances: usize,
    pub gamma_order: (usize, usize),
    pub omega_order: (usize, usize),
}

impl Default for ProductSampling {
    fn default() -> Self {
        Self {
            instances: 200,
            gamma_order: (2, 6),
            omega_order: (2, 5),
        }
    }
}

pub fn is_product_claim(id: &str) -> bool {
    PRODUCT_CLAIMS.iter().any(|c| c.eq_ignore_ascii_case(id))
}

fn canonical_id(id: &str) -> Result<&'static str> {
    PRODUCT_CLAIMS
        .iter()
        .copied()
        .find(|c| c.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownKind(format!("claim {id}")))
}

/// Outcome of one exact computation inside a claim.
enum Value {
    Known(Option<usize>),
    Unknown,
}

struct Ctx<'a> {
    solver: &'a Solver,
    verdict: Verdict,
    undecided: bool,
}

impl Ctx<'_> {
    /// Exact value of `kind` on `g`, recorded under `name`. `None` inside
    /// `Known` means no set has the property.
    fn value(&mut self, name: &str, g: &Graph, kind: ParameterKind) -> Result<Option<usize>> {
        let r: SolverResult = self.solver.solve(g, kind)?;
        let v = match r.status {
            Status::Exact => Value::Known(r.value),
            Status::Infeasible => Value::Known(None),
            Status::BoundsOnly => Value::Unknown,
        };
        match v {
            Value::Known(x) => {
                self.verdict.evidence.values.insert(name.to_owned(), x);
                Ok(x)
            }
            Value::Unknown => {
                self.undecided = true;
                self.verdict.note(format!("{name} not pinned: {}", r.interval()));
                Ok(None)
            }
        }
    }
}

/// Checks one theorem on `Γ ∘_root Ω`.
pub fn check_rooted_product_membership(
    gamma: &Graph,
    omega: &Graph,
    root: &RootSpec,
    theorem_id: &str,
    solver: &Solver,
) -> Result<Verdict> {
    let id = canonical_id(theorem_id)?;
    let root = root.resolve(omega)?;
    let n = gamma.order();
    let product = rooted_product(gamma, omega, &RootSpec::Index(root))?;

    let hypothesis = match id {
        "Thm2" | "Thm20" | "Thm6" | "Thm8" => (n >= 2 && !gamma.has_isolated_vertex() && omega.order() >= 2)
            .then_some(())
            .ok_or("Γ must be isolate-free with n ≥ 2 and |V(Ω)| ≥ 2"),
        "Thm3" => (!gamma.has_isolated_vertex() && !omega.has_isolated_vertex())
            .then_some(())
            .ok_or("Γ and Ω must be isolate-free"),
        "Thm4" => (n >= 2 && gamma.is_connected() && omega.order() >= 2 && omega.is_connected())
            .then_some(())
            .ok_or("γ_c needs connected factors, n ≥ 2 and |V(Ω)| ≥ 2"),
        "Thm5" => (n >= 2 && gamma.is_connected() && omega.order() >= 2 && omega.is_connected())
            .then_some(())
            .ok_or("Γ and Ω must be connected with at least two vertices"),
        _ => Ok(()),
    };
    if let Err(reason) = hypothesis {
        return Ok(Verdict::vacuous(id, reason));
    }
    if id == "Thm6" && !is_c4(omega) {
        return Ok(Verdict::vacuous(id, "Ω must be the 4-cycle"));
    }

    let mut ctx = Ctx {
        solver,
        verdict: Verdict::new(id, VerdictStatus::Confirmed),
        undecided: false,
    };
    let outcome: Option<bool> = match id {
        "Thm2" | "Thm20" | "Thm4" => {
            let (kind, sym) = match id {
                "Thm2" => (Dom, "γ"),
                "Thm20" => (Idom, "γ_i"),
                _ => (Cdom, "γ_c"),
            };
            let left = ctx.value(&format!("{sym}(Γ∘Ω)"), &product, kind)?;
            let om = ctx.value(&format!("{sym}(Ω)"), omega, kind)?;
            let allowed = if id == "Thm4" {
                om.map(|o| vec![n * o, n * o + n])
            } else {
                let ga = ctx.value(&format!("{sym}(Γ)"), gamma, kind)?;
                om.zip(ga).map(|(o, g)| vec![n * o, n * o - n + g])
            };
            membership(&mut ctx, left, allowed)
        }
        "Thm3" => {
            let left = ctx.value("γ_t(Γ∘Ω)", &product, Tdom)?;
            let ot = ctx.value("γ_t(Ω)", omega, Tdom)?;
            let gd = ctx.value("γ(Γ)", gamma, Dom)?;
            let gt = ctx.value("γ_t(Γ)", gamma, Tdom)?;
            let allowed = match (ot, gd, gt) {
                (Some(o), Some(d), Some(t)) => Some(vec![n * o - n, d + n * o - n, t + n * o - n, n * o]),
                _ => None,
            };
            membership(&mut ctx, left, allowed)
        }
        "Thm5" => {
            let left = ctx.value("γ_×2(Γ∘Ω)", &product, Ddom)?;
            let ox = ctx.value("γ_×2(Ω)", omega, Ddom)?;
            let gq = ctx.value("γ_q×2(Γ)", gamma, Qddom)?;
            let g2 = ctx.value("γ_2(Γ)", gamma, TwoDom)?;
            let gd = ctx.value("γ(Γ)", gamma, Dom)?;
            let gx = ctx.value("γ_×2(Γ)", gamma, Ddom)?;
            let allowed = match (ox, gq, g2, gd, gx) {
                (Some(x), Some(q), Some(t), Some(d), Some(gx)) => {
                    let base = n * x;
                    Some(vec![
                        base,
                        q + base - n,
                        t + base - n,
                        d + base - n,
                        base - n,
                        (gx + base).saturating_sub(2 * n),
                    ])
                }
                _ => None,
            };
            membership(&mut ctx, left, allowed)
        }
        "Thm6" => {
            let left = ctx.value("γ_×2(Γ∘C4)", &product, Ddom)?;
            let c4 = ctx.value("γ_×2(C4)", omega, Ddom)?;
            membership(&mut ctx, left, c4.map(|c| vec![n * c]))
        }
        "Thm7" => {
            let left = ctx.value("γ_2(Γ∘Ω)", &product, TwoDom)?;
            let o2 = ctx.value("γ_2(Ω)", omega, TwoDom)?;
            let gd = ctx.value("γ(Γ)", gamma, Dom)?;
            let g2 = ctx.value("γ_2(Γ)", gamma, TwoDom)?;
            let allowed = match (o2, gd, g2) {
                (Some(o), Some(d), Some(t)) => Some(vec![d + n * o - n, t + n * o - n, n * o]),
                _ => None,
            };
            membership(&mut ctx, left, allowed)
        }
        "Thm8" => {
            let g2 = ctx.value("γ_2(Γ)", gamma, TwoDom)?;
            if g2.is_some_and(|g2| g2 >= n) {
                return Ok(Verdict::vacuous(id, "needs γ_2(Γ) < n"));
            }
            let left = ctx.value("γ_2(Γ∘Ω)", &product, TwoDom)?;
            let o2 = ctx.value("γ_2(Ω)", omega, TwoDom)?;
            let minus = omega.remove_vertex(root)?;
            let om = ctx.value("γ_2(Ω−v)", &minus, TwoDom)?;
            match (left, o2, om) {
                (Some(p), Some(o), Some(m)) if !ctx.undecided => {
                    let a = p == n * o;
                    let b = m >= o;
                    if a != b {
                        ctx.verdict.note(format!("(a) is {a} but (b) is {b}"));
                    }
                    Some(a == b)
                }
                _ => None,
            }
        }
        _ => unreachable!(),
    };

    let mut verdict = ctx.verdict;
    verdict.status = match outcome {
        Some(true) => VerdictStatus::Confirmed,
        Some(false) => {
            // The optimum on the product is the machine-checkable evidence.
            let kind = match id {
                "Thm2" => Dom,
                "Thm20" => Idom,
                "Thm3" => Tdom,
                "Thm4" => Cdom,
                "Thm5" | "Thm6" => Ddom,
                _ => TwoDom,
            };
            if let Some(w) = solver.solve(&product, kind)?.witness {
                verdict.evidence.witnesses.push(w);
            }
            VerdictStatus::Refuted
        }
        None => VerdictStatus::Undecided,
    };
    Ok(verdict)
}

fn is_c4(g: &Graph) -> bool {
    g.order() == 4 && g.size() == 4 && g.is_connected() && g.degree_sequence() == [2, 2, 2, 2]
}

fn membership(ctx: &mut Ctx, left: Option<usize>, allowed: Option<Vec<usize>>) -> Option<bool> {
    if ctx.undecided {
        return None;
    }
    let allowed: BTreeSet<usize> = allowed?.into_iter().collect();
    let left = left?;
    ctx.verdict.evidence.allowed = Some(allowed.iter().copied().collect());
    if !allowed.contains(&left) {
        ctx.verdict.note(format!("{left} is not in {allowed:?}"));
    }
    Some(allowed.contains(&left))
}

/// The factor pairs for one claim, reproducible from `seed`.
pub fn sample_product_instances(
    theorem_id: &str,
    seed: u64,
    sampling: &ProductSampling,
) -> Result<Vec<(Graph, Graph)>> {
    let id = canonical_id(theorem_id)?;
    let stream_id = PRODUCT_CLAIMS.iter().position(|c| *c == id).unwrap() as u64 + 1;
    let mut rng: ChaCha8Rng = stream(seed, stream_id);
    let (g_lo, g_hi) = sampling.gamma_order;
    let (o_lo, o_hi) = sampling.omega_order;
    let mut gamma_spec = RandomGraphSpec::new(g_lo.max(2), g_hi.max(2), seed);
    let mut omega_spec = RandomGraphSpec::new(o_lo.max(2), o_hi.max(2), seed);
    match id {
        "Thm2" | "Thm20" | "Thm6" | "Thm8" => gamma_spec = gamma_spec.isolate_free(),
        "Thm3" => {
            gamma_spec = gamma_spec.isolate_free();
            omega_spec = omega_spec.isolate_free();
        }
        "Thm4" | "Thm5" => {
            gamma_spec = gamma_spec.connected();
            omega_spec = omega_spec.connected();
        }
        _ => {}
    }
    let c4 = cycle(4)?.unlabeled();
    (0..sampling.instances)
        .map(|_| {
            let gamma = sample(&gamma_spec, &mut rng)?;
            let omega = if id == "Thm6" {
                c4.clone()
            } else {
                sample(&omega_spec, &mut rng)?
            };
            Ok((gamma, omega))
        })
        .collect()
}

/// Every root of one sampled pair, merged into a single instance verdict.
pub fn check_product_instance(
    theorem_id: &str,
    seed_index: usize,
    gamma: &Graph,
    omega: &Graph,
    solver: &Solver,
) -> Result<Verdict> {
    let id = canonical_id(theorem_id)?;
    let mut merged = Verdict::new(id, VerdictStatus::Confirmed);
    let mut all_vacuous = true;
    for root in omega.vertices() {
        let v = check_rooted_product_membership(gamma, omega, &RootSpec::Index(root), id, solver)?;
        merged.status = merged.status.combine(v.status);
        all_vacuous &= v.vacuous;
        for (k, x) in v.evidence.values {
            let key = if k.contains('∘') || k.contains('−') {
                format!("root {root}: {k}")
            } else {
                k
            };
            merged.evidence.values.insert(key, x);
        }
        if merged.evidence.allowed.is_none() {
            merged.evidence.allowed = v.evidence.allowed;
        }
        merged.evidence.witnesses.extend(v.evidence.witnesses);
        for note in v.notes {
            let note = format!("root {root}: {note}");
            if !merged.notes.contains(&note) {
                merged.notes.push(note);
            }
        }
    }
    merged.vacuous = all_vacuous && merged.status == VerdictStatus::Confirmed;
    if merged.vacuous {
        // Same hypothesis failure at every root; keep one copy.
        merged.notes.truncate(1);
        if let Some(note) = merged.notes.first_mut() {
            *note = note.split_once(": ").map_or(note.clone(), |(_, r)| r.to_owned());
        }
    }
    merged.instance = Some(Instance {
        seed_index,
        gamma: gamma.to_json_model(),
        omega: Some(omega.to_json_model()),
        root: None,
    });
    Ok(merged)
}
