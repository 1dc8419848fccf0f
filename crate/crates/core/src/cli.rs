//! The `simpath` command line.
//!
//! Exit status: 0 when a solve or check finds a feasible solution or a
//! generator succeeds, 1 for an infeasible instance or solution, 2 for
//! invalid input, 3 when a size cap or search budget is exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::approx::k_union_approx;
use crate::dagdp::{solve_dag, DagDpConfig, DEFAULT_MAX_STATES};
use crate::error::{Error, Result};
use crate::fpt::{
    solve_exact_existence_fpt, solve_superset_fpt, ExistenceConfig, FptConfig, DEFAULT_MAX_ELL,
    DEFAULT_MAX_EXISTENCE_ELL, DEFAULT_MAX_SEARCH_NODES,
};
use crate::laminar::{analyze_color_family, solve_laminar};
use crate::model::{
    multi_colored_arcs, parse_arc_list, parse_instance, serialize_instance, serialize_solution,
    validate_instance, validate_solution, ColoredNetwork, SolutionReport, Variant, Vertex,
};
use crate::oracle::{brute_force_solve, CnfFormula, CoverSystem, DEFAULT_MAX_ORACLE_ARCS};
use crate::paths::topological_order_with;
use crate::reductions::{self, random, Digraph, Generated};

pub const EXIT_FEASIBLE: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Largest number of colors for which `auto` tries the product-state DP.
pub const DEFAULT_MAX_DAG_K: u32 = 6;

#[derive(Parser, Debug)]
#[command(
    name = "simpath",
    version,
    about = "Simultaneous s-t paths over colored arc classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve an instance.
    Solve(SolveArgs),
    /// Check a solution against an instance.
    Check(CheckArgs),
    /// Generate an instance from one of the hardness constructions.
    Generate(GenerateArgs),
    /// Solve by exhaustive enumeration (same as `solve --algorithm oracle`).
    Oracle(OracleArgs),
    /// Decide whether an exact solution exists.
    Existence(ExistenceArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Auto,
    DagDp,
    Fpt,
    Laminar,
    Approx,
    Oracle,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Exact,
    Superset,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Exact => Variant::Exact,
            VariantArg::Superset => Variant::Superset,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct Limits {
    /// Product-state budget for dag-dp.
    #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
    max_states: usize,
    /// Cap on the number of multi-colored arcs for fpt.
    #[arg(long)]
    max_ell: Option<usize>,
    /// Cap on the number of arcs for the oracle.
    #[arg(long, default_value_t = DEFAULT_MAX_ORACLE_ARCS)]
    max_oracle_arcs: usize,
    /// Largest k for which `auto` tries dag-dp.
    #[arg(long, default_value_t = DEFAULT_MAX_DAG_K)]
    max_dag_k: u32,
    /// Worker threads for fpt (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
    algorithm: Algorithm,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[arg(long)]
    input: PathBuf,
    /// Solution document or bare JSON array of arc ids.
    #[arg(long)]
    solution: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Reduction {
    TwoDisjoint,
    Inapprox,
    CnfSuperset,
    CnfExactDag,
    Setcover,
    TightApprox,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    reduction: Reduction,
    /// DIMACS formula for the cnf reductions.
    #[arg(long)]
    cnf: Option<PathBuf>,
    /// Cover system JSON for setcover.
    #[arg(long)]
    cover: Option<PathBuf>,
    /// Digraph JSON `{"num_vertices", "arcs", "terminals": [s1, t1, s2, t2]}`
    /// for two-disjoint and inapprox.
    #[arg(long)]
    digraph: Option<PathBuf>,
    /// Number of colors for tight-approx.
    #[arg(long)]
    k: Option<u32>,
    /// Seed for a random source instance when no input file is given.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Forget arc orientations in the output.
    #[arg(long)]
    undirect: bool,
    /// Where to write the vertex-name map.
    #[arg(long)]
    metadata: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ExistenceAlgorithm {
    Fpt,
}

#[derive(Args, Debug)]
struct ExistenceArgs {
    #[arg(long, value_enum, default_value_t = ExistenceAlgorithm::Fpt)]
    algorithm: ExistenceAlgorithm,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_EXISTENCE_ELL)]
    max_ell: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_SEARCH_NODES)]
    max_search_nodes: u64,
}

/// Entry point for the binary.
pub fn main_from_env() -> i32 {
    run_cli(std::env::args())
}

/// Runs one command with the process's stdout and stderr.
pub fn run_cli<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one command, writing documents to `out` and diagnostics to `err`.
pub fn run_cli_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_FEASIBLE
            };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_budget() {
                EXIT_BUDGET
            } else {
                EXIT_INVALID
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Solve(args) => {
            let net = load_instance(&args.input)?;
            let report = solve(&net, args.variant.into(), args.algorithm, &args.limits)?;
            emit_report(&report, args.output.as_deref(), out)
        }
        Command::Oracle(args) => {
            let net = load_instance(&args.input)?;
            let report = solve(&net, args.variant.into(), Algorithm::Oracle, &args.limits)?;
            emit_report(&report, args.output.as_deref(), out)
        }
        Command::Check(args) => {
            let net = load_instance(&args.input)?;
            let arcs = parse_arc_list(&read(&args.solution)?)?;
            net.check_arc_set(&arcs)?;
            let report = validate_solution(&net, args.variant.into(), &arcs);
            emit_report(&report, args.output.as_deref(), out)
        }
        Command::Existence(args) => {
            let net = load_instance(&args.input)?;
            let config = ExistenceConfig {
                max_ell: args.max_ell,
                max_search_nodes: args.max_search_nodes,
            };
            let report = match args.algorithm {
                ExistenceAlgorithm::Fpt => {
                    solve_exact_existence_fpt(&net, &config)?.to_report(&net)
                }
            };
            emit_report(&report, args.output.as_deref(), out)
        }
        Command::Generate(args) => {
            let generated = generate(&args)?;
            let net = if args.undirect {
                reductions::forget_orientation(&generated.network)?
            } else {
                generated.network
            };
            if let Some(path) = &args.metadata {
                write_file(path, &generated.metadata.to_json())?;
            }
            emit(&serialize_instance(&net), args.output.as_deref(), out)?;
            Ok(EXIT_FEASIBLE)
        }
    }
}

fn solve(
    net: &ColoredNetwork,
    variant: Variant,
    algorithm: Algorithm,
    limits: &Limits,
) -> Result<SolutionReport> {
    let dag = DagDpConfig {
        max_states: limits.max_states,
    };
    let fpt = FptConfig {
        max_ell: limits.max_ell.unwrap_or(DEFAULT_MAX_ELL),
        threads: limits.threads,
    };
    match algorithm {
        Algorithm::DagDp => solve_dag(net, variant, &dag),
        Algorithm::Laminar => solve_laminar(net, variant),
        Algorithm::Oracle => brute_force_solve(net, variant, limits.max_oracle_arcs),
        Algorithm::Fpt => match variant {
            Variant::Superset => solve_superset_fpt(net, &fpt),
            Variant::Exact => Err(Error::Malformed(
                "fpt optimizes the superset variant; use `existence` for exact feasibility".into(),
            )),
        },
        Algorithm::Approx => match variant {
            Variant::Superset => k_union_approx(net),
            Variant::Exact => Err(Error::Malformed(
                "approx applies to the superset variant only".into(),
            )),
        },
        Algorithm::Auto => solve_auto(net, variant, &dag, &fpt, limits),
    }
}

/// laminar, then dag-dp, then fpt (superset only), then the oracle.
fn solve_auto(
    net: &ColoredNetwork,
    variant: Variant,
    dag: &DagDpConfig,
    fpt: &FptConfig,
    limits: &Limits,
) -> Result<SolutionReport> {
    if analyze_color_family(net).laminar {
        return solve_laminar(net, variant);
    }
    if net.directed()
        && net.k() <= limits.max_dag_k
        && topological_order_with(net, |_| true).is_some()
    {
        match solve_dag(net, variant, dag) {
            Err(Error::StateBudgetExceeded { .. }) => {}
            other => return other,
        }
    }
    if variant == Variant::Superset && multi_colored_arcs(net).len() <= fpt.max_ell {
        return solve_superset_fpt(net, fpt);
    }
    if net.num_arcs() <= limits.max_oracle_arcs {
        return brute_force_solve(net, variant, limits.max_oracle_arcs);
    }
    Err(Error::NoApplicableSolver)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TwoDisjointDocument {
    num_vertices: usize,
    arcs: Vec<(Vertex, Vertex)>,
    terminals: [Vertex; 4],
}

fn generate(args: &GenerateArgs) -> Result<Generated> {
    let mut rng = random::seeded(args.seed);
    match args.reduction {
        Reduction::TwoDisjoint | Reduction::Inapprox => {
            let (digraph, [s1, t1, s2, t2]) = match &args.digraph {
                Some(path) => {
                    let doc: TwoDisjointDocument = serde_json::from_str(&read(path)?)?;
                    let digraph = Digraph {
                        num_vertices: doc.num_vertices,
                        arcs: doc.arcs,
                    };
                    (digraph, doc.terminals)
                }
                None => (random::random_digraph(&mut rng, 6, 8), [0, 1, 2, 3]),
            };
            let generated = reductions::gen_two_disjoint(&digraph, s1, t1, s2, t2)?;
            if args.reduction == Reduction::TwoDisjoint {
                return Ok(generated);
            }
            Ok(Generated {
                network: reductions::gen_inapprox_gadget(&generated.network)?,
                metadata: generated.metadata,
            })
        }
        Reduction::CnfSuperset => {
            let formula = match &args.cnf {
                Some(path) => CnfFormula::parse_dimacs(&read(path)?)?,
                None => random::random_2sat3(&mut rng, 3),
            };
            reductions::gen_cnf_superset(&formula)
        }
        Reduction::CnfExactDag => {
            let formula = match &args.cnf {
                Some(path) => CnfFormula::parse_dimacs(&read(path)?)?,
                None => random::random_3sat3(&mut rng, 3),
            };
            reductions::gen_cnf_exact_dag(&formula)
        }
        Reduction::Setcover => {
            let system = match &args.cover {
                Some(path) => CoverSystem::parse(&read(path)?)?,
                None => random::random_cover_system(&mut rng, 4, 4),
            };
            reductions::gen_setcover_dag(&system)
        }
        Reduction::TightApprox => {
            let k = args
                .k
                .ok_or_else(|| Error::InvalidGeneratorInput("tight-approx needs --k".into()))?;
            reductions::gen_tight_approx(k)
        }
    }
}

fn load_instance(path: &Path) -> Result<ColoredNetwork> {
    let net = parse_instance(&read(path)?)?;
    validate_instance(&net)?;
    Ok(net)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(path) => write_file(path, text),
        None => Ok(writeln!(out, "{text}")?),
    }
}

fn emit_report(report: &SolutionReport, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    emit(&serialize_solution(report), path, out)?;
    Ok(if report.feasible {
        EXIT_FEASIBLE
    } else {
        EXIT_INFEASIBLE
    })
}
