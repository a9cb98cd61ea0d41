//! `latcov`: exact covering numbers of lattice subsets by coordinate
//! subspaces, constructive restriction extraction, slice ranks of sparse
//! tensors, and the theorem-verification harness.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use latcov::harness::{
    counterexample_hunt, run_all, run_suite, search_constant, GeneratorKind, GeneratorSpec,
    HuntTarget, SuiteConfig, SuiteName,
};
use latcov::independence::{independence_exact, independence_greedy, IndependenceResult};
use latcov::io;
use latcov::lattice::{LatticeShape, LatticeSubset};
use latcov::pattern::PatternFamily;
use latcov::restrict::{restrict_linear, restrict_offdiagonal, restrict_same_cover};
use latcov::solver::{
    covering_number_exact, covering_number_greedy, enumerate_min_decompositions, SolverConfig,
};
use latcov::tensor::{slice_rank_antichain, slice_rank_oracle, OracleConfig, SliceRankWitness};

mod render;

const BUDGET_ENV: &str = "LATCOV_BUDGET";

#[derive(Parser)]
#[command(name = "latcov", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance file: {"shape": [...], "points": [[...], ...]}, 1-based
    #[arg(long)]
    input: PathBuf,
    /// Family: slices | points | lines | full, or a family file path
    #[arg(long)]
    family: String,
    /// Exact-solver instance cap
    #[arg(long, default_value_t = 64)]
    solver_cap: usize,
    /// Emit machine-readable JSON
    #[arg(long)]
    json: bool,
}

impl InstanceArgs {
    fn load(&self) -> Result<(LatticeSubset, PatternFamily, SolverConfig)> {
        let (subset, warnings) = io::read_instance(&self.input)
            .with_context(|| format!("reading {}", self.input.display()))?;
        for w in warnings {
            eprintln!("warning: {w}");
        }
        let family = io::family_from_spec(&self.family, subset.order())?;
        Ok((subset, family, SolverConfig::with_cap(self.solver_cap)))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Covering number of an instance
    Cover {
        #[command(flatten)]
        common: InstanceArgs,
        /// Force the exact solver (the default)
        #[arg(long, conflicts_with = "greedy")]
        exact: bool,
        /// Use the greedy upper-bound solver instead
        #[arg(long)]
        greedy: bool,
        /// Also enumerate the minimal-length decompositions
        #[arg(long)]
        enumerate: bool,
        /// Emission cap for enumerated decompositions
        #[arg(long, default_value_t = 100)]
        cap: usize,
    },
    /// Independence number of an instance
    Independence {
        #[command(flatten)]
        common: InstanceArgs,
        /// Exact maximum independent set instead of the greedy construction
        #[arg(long)]
        exact: bool,
    },
    /// Enumerate minimal-length covering decompositions
    Decomps {
        #[command(flatten)]
        common: InstanceArgs,
        /// Emission cap
        #[arg(long, default_value_t = 100)]
        cap: usize,
    },
    /// Extract a restriction certificate
    Restrict {
        #[command(flatten)]
        common: InstanceArgs,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        /// Target lower bound; derived from the hypothesis when omitted
        #[arg(long)]
        l: Option<u32>,
        /// Also report a seeded sampled coloring for comparison (offdiag)
        #[arg(long)]
        seed: Option<u64>,
        /// Write the descent tree as JSON (same-cover only)
        #[arg(long)]
        emit_tree: Option<PathBuf>,
    },
    /// Slice rank of a tensor file
    Slicerank {
        /// Tensor file: {"shape": [...], "p": prime, "entries": [...]}
        #[arg(long)]
        input: PathBuf,
        /// Force the exhaustive oracle
        #[arg(long, conflicts_with = "bridge")]
        oracle: bool,
        /// Force the antichain bridge
        #[arg(long)]
        bridge: bool,
        #[arg(long, default_value_t = 64)]
        solver_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run theorem-verification suites
    Verify {
        /// Suite name or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        /// Override shape, e.g. 3,3,3
        #[arg(long)]
        shape: Option<String>,
        /// Override family where the suite accepts one
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instance-count budget (also via LATCOV_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Empirical search for the independence/covering ratio constant
    SearchC {
        #[arg(long)]
        family: String,
        /// Shape, e.g. 2,2
        #[arg(long)]
        shape: String,
        /// Random-frame instance count; an exhaustive frame is used when the
        /// subset space fits the cap
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 64)]
        solver_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Hunt for sets whose small restrictions all lose covering number
    Hunt {
        #[arg(long)]
        family: String,
        #[arg(long)]
        shape: String,
        /// Required covering number of the full set
        #[arg(long)]
        value: u32,
        /// Per-axis restriction size cap
        #[arg(long)]
        cap_size: usize,
        /// Restricted covering number must not exceed this
        #[arg(long)]
        restricted_cap: u32,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 64)]
        solver_cap: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Linear,
    Offdiag,
    SameCover,
}

fn env_budget() -> Option<u64> {
    std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse().ok())
}

fn parse_shape(spec: &str) -> Result<LatticeShape> {
    let dims: Vec<u32> = spec
        .split(',')
        .map(|s| s.trim().parse().with_context(|| format!("bad shape component {s:?}")))
        .collect::<Result<_>>()?;
    Ok(LatticeShape::new(&dims)?)
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes instead of panicking
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Cover { common, greedy, enumerate, cap, .. } => {
            let (a, m, solver) = common.load()?;
            let result = if greedy {
                covering_number_greedy(&a, &m)?
            } else {
                covering_number_exact(&a, &m, &solver)?
            };
            let kind = if greedy { "greedy" } else { "exact" };
            if common.json {
                let mut doc = serde_json::to_value(io::CoverRecord::from(&result))?;
                doc["solver"] = kind.into();
                if enumerate {
                    let e = enumerate_min_decompositions(&a, &m, cap, &solver)?;
                    doc["decompositions"] = decomps_json(&e);
                }
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                render::print_cover_result(kind, &result);
                if enumerate {
                    let e = enumerate_min_decompositions(&a, &m, cap, &solver)?;
                    print_decomps(&e);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Independence { common, exact } => {
            let (a, m, solver) = common.load()?;
            let result: IndependenceResult = if exact {
                independence_exact(&a, &m, &solver)?
            } else {
                independence_greedy(&a, &m)
            };
            if common.json {
                let doc = serde_json::json!({
                    "value": result.value,
                    "method": if exact { "exact" } else { "greedy" },
                    "witness": result.witness.iter()
                        .map(|p| p.coords().to_vec()).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                println!("method: {}", if exact { "exact" } else { "greedy" });
                println!("value: {}", result.value);
                println!("witness: {:?}", result.witness);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decomps { common, cap } => {
            let (a, m, solver) = common.load()?;
            let e = enumerate_min_decompositions(&a, &m, cap, &solver)?;
            if common.json {
                println!("{}", serde_json::to_string_pretty(&decomps_json(&e))?);
            } else {
                print_decomps(&e);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Restrict { common, theorem, l, seed, emit_tree } => {
            let (a, m, solver) = common.load()?;
            let (cert, tree, bound) = match theorem {
                TheoremArg::Linear => {
                    let mc = covering_number_exact(&a, &m, &solver)?.value;
                    let l = l.unwrap_or(mc / m.len() as u32);
                    (restrict_linear(&a, &m, l, &solver)?, None, None)
                }
                TheoremArg::Offdiag => {
                    let off = a.off_diagonal_part();
                    let mc0 = covering_number_exact(&off, &m, &solver)?.value;
                    let dd = (a.order() as u64).pow(a.order() as u32);
                    let l = l.unwrap_or((mc0 as u64 / (dd * m.len() as u64)) as u32);
                    let cert = restrict_offdiagonal(&a, &m, l, &solver)?;
                    if let Some(seed) = seed {
                        let sampled = latcov::coloring::disjoint_coloring(
                            &off,
                            latcov::coloring::ColoringStrategy::Seeded { seed, trials: 64 },
                        );
                        eprintln!(
                            "seeded coloring comparison: captured {} of guarantee {}",
                            sampled.captured().len(),
                            sampled.guarantee
                        );
                    }
                    (cert, None, None)
                }
                TheoremArg::SameCover => {
                    let out = restrict_same_cover(&a, &m, &solver)?;
                    (out.certificate, Some(out.tree), Some(out.axis_size_bound))
                }
            };
            if let (Some(path), Some(tree)) = (&emit_tree, &tree) {
                let record = io::TreeRecord::from(tree);
                std::fs::write(path, serde_json::to_string_pretty(&record)?)?;
                eprintln!("descent tree written to {}", path.display());
            }
            if common.json {
                let mut doc = serde_json::to_value(io::CertificateRecord::from(&cert))?;
                if let Some(b) = bound {
                    doc["axis_size_bound"] = b.to_string().into();
                }
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                println!("theorem: {:?}", cert.theorem);
                println!("claimed_lower_bound: {}", cert.claimed_lower_bound);
                println!("verified_value: {}", cert.verified_value);
                if let Some(b) = bound {
                    println!("axis_size_bound: {b}");
                }
                println!("restriction:");
                render::print_restriction(&cert.restriction);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Slicerank { input, oracle, bridge, solver_cap, json } => {
            let t = io::read_tensor(&input)?;
            let solver = SolverConfig::with_cap(solver_cap);
            // default route: the bridge whenever the support qualifies
            let use_bridge =
                bridge || (!oracle && t.order() >= 2 && t.support().is_antichain());
            let result = if use_bridge {
                slice_rank_antichain(&t, &solver)?
            } else {
                slice_rank_oracle(&t, &OracleConfig::default())?
            };
            if json {
                let witness = match &result.witness {
                    Some(SliceRankWitness::Split { axis_ranks }) => {
                        serde_json::json!({"split_axis_ranks": axis_ranks})
                    }
                    Some(SliceRankWitness::Cover { decomposition }) => {
                        serde_json::to_value(io::DecompositionRecord::from(decomposition))?
                    }
                    None => serde_json::Value::Null,
                };
                let doc = serde_json::json!({
                    "value": result.value,
                    "method": format!("{:?}", result.method),
                    "witness": witness,
                });
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                println!("method: {:?}", result.method);
                println!("value: {}", result.value);
                match &result.witness {
                    Some(SliceRankWitness::Split { axis_ranks }) => {
                        println!("split_axis_ranks: {axis_ranks:?}");
                    }
                    Some(SliceRankWitness::Cover { decomposition }) => {
                        println!("cover_witness:");
                        for s in decomposition.subspaces() {
                            println!("  {}", render::subspace_line(s));
                        }
                    }
                    None => {}
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, shape, family, seed, budget, json } => {
            let shape = shape.as_deref().map(parse_shape).transpose()?;
            let family = match (&family, &shape) {
                (Some(spec), Some(s)) => Some(io::family_from_spec(spec, s.order())?),
                (Some(_), None) => {
                    bail!("--family override requires --shape to fix the order")
                }
                (None, _) => None,
            };
            let cfg = SuiteConfig {
                seed,
                budget: budget.or_else(env_budget),
                shape,
                family,
            };
            let reports = if suite == "all" {
                run_all(&cfg)?
            } else {
                vec![run_suite(suite.parse::<SuiteName>()?, &cfg)?]
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    render::print_verification_report(r);
                }
            }
            let failed = reports.iter().any(|r| !r.passed());
            Ok(if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
        Command::SearchC { family, shape, budget, seed, density, solver_cap, json } => {
            let shape = parse_shape(&shape)?;
            let m = io::family_from_spec(&family, shape.order())?;
            let solver = SolverConfig::with_cap(solver_cap);
            let budget = budget.or_else(env_budget).unwrap_or(500);
            let kind = if shape.volume() <= 16 {
                GeneratorKind::Exhaustive
            } else {
                GeneratorKind::Random { density, count: budget as usize }
            };
            let frame = GeneratorSpec { kind, shape, seed };
            match search_constant(&m, &frame, &solver)? {
                Some(out) => {
                    if json {
                        println!("{}", serde_json::to_string_pretty(&out)?);
                    } else {
                        println!("min_ratio: {}/{}", out.min_num, out.min_den);
                        println!(
                            "witness: I={} Mc={} points={:?}",
                            out.independence, out.covering, out.witness_points
                        );
                        println!(
                            "instances: {} exhaustive: {}",
                            out.instances, out.exhaustive
                        );
                    }
                }
                None => println!("no instance with positive covering number in the frame"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hunt {
            family,
            shape,
            value,
            cap_size,
            restricted_cap,
            budget,
            seed,
            density,
            solver_cap,
            json,
        } => {
            let shape = parse_shape(&shape)?;
            let m = io::family_from_spec(&family, shape.order())?;
            let solver = SolverConfig::with_cap(solver_cap);
            let budget = budget.or_else(env_budget).unwrap_or(200);
            let frame = GeneratorSpec {
                kind: GeneratorKind::Random { density, count: budget as usize },
                shape,
                seed,
            };
            let target = HuntTarget { full_value: value, cap_size, restricted_cap };
            let out = counterexample_hunt(&m, &frame, target, 1 << 20, &solver)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!(
                    "checked: {} qualifying: {} findings: {}",
                    out.checked,
                    out.qualifying,
                    out.findings.len()
                );
                for f in &out.findings {
                    println!("  finding: {f:?}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_decomps(e: &latcov::solver::MinDecompositions) {
    println!("length: {}", e.length);
    println!(
        "count: {}{}",
        e.count,
        if e.count_exact { "" } else { " (limit reached, inexact)" }
    );
    println!("bound: {}", e.bound);
    println!("truncated: {}", e.truncated);
    for (i, t) in e.tuples.iter().enumerate() {
        println!("tuple {}:", i + 1);
        for s in t.subspaces() {
            println!("  {}", render::subspace_line(s));
        }
    }
}

fn decomps_json(e: &latcov::solver::MinDecompositions) -> serde_json::Value {
    serde_json::json!({
        "length": e.length,
        "count": e.count.to_string(),
        "count_exact": e.count_exact,
        "bound": e.bound.to_string(),
        "truncated": e.truncated,
        "tuples": e.tuples.iter().map(io::DecompositionRecord::from).collect::<Vec<_>>(),
    })
}
