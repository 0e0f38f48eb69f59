//! Command-line front end. Exit codes: 0 success or confirmed, 1 failed
//! verification or refuted, 2 usage or input error, 3 undecided within budget.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructions::{construct_variant, formula_value, has_variants, Variant};
use crate::generators::{complete, cycle, fcn, hypercube, path, rooted_product, FcnLevel, RootSpec};
use crate::graph::{ExportFormat, Graph};
use crate::harness::{self, HarnessConfig, Selection};
use crate::kind::ParameterKind;
use crate::solver::{Budget, Solver, Status};
use crate::table::{build_table, render_table};
use crate::verify::Certificate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "fcnlab",
    version,
    about = "Fractal cubic networks and exact domination parameters"
)]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for solver and harness.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph.
    Generate(GenerateArgs),
    /// Rooted product of two graph files.
    Product(ProductArgs),
    /// Minimum of a parameter.
    Solve(SolveArgs),
    /// Check a certificate against a graph.
    Verify(VerifyArgs),
    /// Build the explicit witness set for FCN(l).
    Construct(ConstructArgs),
    /// Adjudicate claims.
    Check(CheckArgs),
    /// Formula, construction and solver per level.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Fcn,
    Cycle,
    Path,
    Complete,
    Hypercube,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// FCN level, or hypercube dimension.
    #[arg(long)]
    level: Option<u32>,
    /// Vertex count for cycle, path and complete.
    #[arg(long, short)]
    n: Option<usize>,
    #[arg(long, default_value = "json")]
    format: ExportFormat,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ProductArgs {
    #[arg(long)]
    gamma: PathBuf,
    #[arg(long)]
    omega: PathBuf,
    /// Root of Ω, by label or index.
    #[arg(long)]
    root: String,
    #[arg(long, default_value = "json")]
    format: ExportFormat,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct BudgetArgs {
    /// Wall-clock limit in seconds per solve.
    #[arg(long, env = "FCNLAB_BUDGET_SECS", default_value_t = 60.0)]
    budget: f64,
    /// Node limit per solve.
    #[arg(long)]
    nodes: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self, exhaustive: bool) -> Budget {
        let mut b = if exhaustive {
            Budget::exhaustive()
        } else {
            Budget::seconds(self.budget)
        };
        b.node_limit = self.nodes;
        b
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    param: ParameterKind,
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Require an exact answer; refuses graphs above the size ceiling.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long)]
    emit_cert: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    param: ParameterKind,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    cert: PathBuf,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long)]
    param: ParameterKind,
    #[arg(long)]
    level: u32,
    #[arg(long, default_value = "literal")]
    variant: Variant,
    #[arg(long)]
    emit_cert: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Claim id (`Thm11`, `Thm11@l=1`), group (`fcn`, `products`, `bounds`) or `all`.
    #[arg(long, default_value = "all")]
    claim: Selection,
    #[arg(long, default_value = "0..1")]
    levels: Levels,
    #[arg(long)]
    seed: u64,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Samples per general-graph claim.
    #[arg(long, default_value_t = 200)]
    instances: usize,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, default_value = "0..1")]
    levels: Levels,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

/// `a..b` (inclusive), `a,b,c`, or a single level.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Levels(Vec<u32>);

impl std::str::FromStr for Levels {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("invalid levels {s:?}; use 0..2, 0,1,2 or 1");
        let levels = if let Some((a, b)) = s.split_once("..") {
            let b = b.trim_start_matches('=');
            let (a, b): (u32, u32) = (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            );
            if a > b {
                return Err(bad());
            }
            (a..=b).collect()
        } else {
            s.split(',')
                .map(|x| x.trim().parse().map_err(|_| bad()))
                .collect::<Result<Vec<u32>, String>>()?
        };
        Ok(Levels(levels))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli) -> anyhow::Result<i32> {
    match &cli.command {
        Command::Generate(a) => generate(a),
        Command::Product(a) => product(a),
        Command::Solve(a) => solve(cli, a),
        Command::Verify(a) => verify(cli, a),
        Command::Construct(a) => construct(cli, a),
        Command::Check(a) => check(cli, a),
        Command::Table(a) => table(cli, a),
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse_any(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    emit(None, &s)
}

fn generate(a: &GenerateArgs) -> anyhow::Result<i32> {
    let need_n = || a.n.context("--n is required for this family");
    let g = match a.family {
        Family::Fcn => fcn(FcnLevel(a.level.context("--level is required for fcn")?)),
        Family::Hypercube => hypercube(
            a.level
                .or(a.n.map(|n| n as u32))
                .context("--level is required for hypercube")?,
        )?,
        Family::Cycle => cycle(need_n()?)?,
        Family::Path => path(need_n()?)?,
        Family::Complete => complete(need_n()?)?,
    };
    emit(a.out.as_deref(), &g.export(a.format))?;
    Ok(EXIT_OK)
}

fn product(a: &ProductArgs) -> anyhow::Result<i32> {
    let gamma = read_graph(&a.gamma)?;
    let omega = read_graph(&a.omega)?;
    let root = RootSpec::from(a.root.as_str());
    let g = rooted_product(&gamma, &omega, &root)?;
    emit(a.out.as_deref(), &g.export(a.format))?;
    Ok(EXIT_OK)
}

fn solve(cli: &Cli, a: &SolveArgs) -> anyhow::Result<i32> {
    let g = read_graph(&a.graph)?;
    let solver = Solver::new(a.budget.budget(a.exhaustive)).threads(cli.threads);
    let r = solver.solve(&g, a.param)?;
    if let (Some(path), Some(w)) = (&a.emit_cert, &r.witness) {
        fs::write(path, w.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    if cli.json {
        print_json(&r)?;
    } else {
        let mut line = format!(
            "{} = {}  ({:?}, {} nodes)",
            a.param.symbol(),
            r.interval(),
            r.status,
            r.nodes_explored
        );
        if let Some(w) = &r.witness {
            line.push_str(&format!("\nwitness: {{{}}}", w.labels().join(", ")));
        }
        emit(None, &format!("{line}\n"))?;
    }
    Ok(match r.status {
        Status::Exact | Status::Infeasible => EXIT_OK,
        Status::BoundsOnly => EXIT_UNDECIDED,
    })
}

#[derive(Serialize)]
struct VerifyOutput {
    kind: ParameterKind,
    size: usize,
    valid: bool,
    violation: Option<String>,
}

fn verify(cli: &Cli, a: &VerifyArgs) -> anyhow::Result<i32> {
    let g = read_graph(&a.graph)?;
    let text = fs::read_to_string(&a.cert).with_context(|| format!("reading {}", a.cert.display()))?;
    let cert = Certificate::from_json(&text).with_context(|| format!("parsing {}", a.cert.display()))?;
    if cert.kind != a.param {
        bail!("certificate is for {}, not {}", cert.kind, a.param);
    }
    let (valid, violation) = match cert.verify(&g) {
        Ok(None) => (true, None),
        Ok(Some(v)) => (false, Some(v.describe(&g))),
        Err(e @ crate::Error::DigestMismatch { .. }) => (false, Some(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    if cli.json {
        print_json(&VerifyOutput {
            kind: cert.kind,
            size: cert.size(),
            valid,
            violation: violation.clone(),
        })?;
    } else if valid {
        emit(None, &format!("valid {} set of size {}\n", cert.kind, cert.size()))?;
    } else {
        emit(None, &format!("invalid: {}\n", violation.unwrap_or_default()))?;
    }
    Ok(if valid { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct ConstructOutput {
    kind: ParameterKind,
    level: u32,
    variant: Variant,
    size: usize,
    formula_value: Option<usize>,
    valid: bool,
    violation: Option<String>,
    certificate: Certificate,
}

fn construct(cli: &Cli, a: &ConstructArgs) -> anyhow::Result<i32> {
    let level = FcnLevel(a.level);
    if a.variant != Variant::Literal && !has_variants(a.param) {
        bail!(
            "{} has a single construction; --variant applies to 2dom, rdom and ridom",
            a.param
        );
    }
    let cert = construct_variant(a.param, level, a.variant)?;
    let g = fcn(level);
    let violation = cert.verify(&g)?.map(|v| v.describe(&g));
    if let Some(path) = &a.emit_cert {
        fs::write(path, cert.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    let out = ConstructOutput {
        kind: a.param,
        level: a.level,
        variant: a.variant,
        size: cert.size(),
        formula_value: formula_value(a.param, level),
        valid: violation.is_none(),
        violation,
        certificate: cert,
    };
    if cli.json {
        print_json(&out)?;
    } else {
        let formula = out.formula_value.map_or("-".into(), |v| v.to_string());
        emit(
            None,
            &format!(
                "{} on FCN({}) [{}]: size {}, formula {}, {}\n{{{}}}\n",
                out.kind,
                out.level,
                out.variant,
                out.size,
                formula,
                match &out.violation {
                    None => "valid".to_string(),
                    Some(v) => format!("INVALID ({v})"),
                },
                out.certificate.labels().join(", ")
            ),
        )?;
    }
    Ok(if out.valid { EXIT_OK } else { EXIT_FAILED })
}

fn check(cli: &Cli, a: &CheckArgs) -> anyhow::Result<i32> {
    let config = HarnessConfig {
        seed: a.seed,
        levels: a.levels.0.clone(),
        instances: a.instances,
        budget: a.budget.budget(false),
        threads: cli.threads,
        ..HarnessConfig::default()
    };
    let report = harness::run(&a.claim, &config)?;
    if let Some(path) = &a.report {
        fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    if cli.json {
        emit(None, &report.to_json())?;
    } else {
        emit(None, &report.render_table())?;
    }
    Ok(report.status().exit_code())
}

fn table(cli: &Cli, a: &TableArgs) -> anyhow::Result<i32> {
    let solver = Solver::new(a.budget.budget(false)).threads(cli.threads);
    let rows = build_table(&a.levels.0, &solver)?;
    let text = if cli.json {
        let mut s = serde_json::to_string_pretty(&rows)?;
        s.push('\n');
        s
    } else {
        render_table(&rows)
    };
    emit(a.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}
