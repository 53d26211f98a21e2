//! `dskp`: solve, generate, reduce and benchmark DSKP instances.
//!
//! Exit codes: 0 for a yes answer (or success), 1 for a no answer (or an
//! unsound reduction check), 2 for any error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use dskp::bench::{run_bench, to_csv, BenchConfig};
use dskp::decomposition::parse_td;
use dskp::generate::{generate, Family, GenParams};
use dskp::oracle::oracle_pareto;
use dskp::reductions::{
    check_reduction_soundness, parse_graph, parse_knapsack, reduce_dskp_to_bipartite, reduce_dskp_to_wcs,
    reduce_ds_to_dskp, reduce_ds_to_kdskp, reduce_knapsack_to_star, reduce_uds_to_minimal_dskp,
    BipartiteWeights, ReductionRule, SizeBounds, UdsWeights,
};
use dskp::solver::{solve, Algorithm, SolveOptions};
use dskp::vc_dp::cover_from_list;
use dskp::{parse_instance, write_instance, DskpInstance, Graph};

/// Largest instance `--verify` will cross-check against the oracle.
const VERIFY_LIMIT: usize = 20;

#[derive(Parser)]
#[command(name = "dskp", version, about = "Exact solvers for Dominating Set Knapsack")]
struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print the decision.
    Solve(SolveArgs),
    /// Write a generated instance to stdout.
    Gen(GenArgs),
    /// Transform an instance along one of the hardness reductions.
    Reduce(ReduceArgs),
    /// Randomized soundness check of a reduction.
    Check(CheckArgs),
    /// Time solvers over a sweep of sizes and capacities; CSV on stdout.
    Bench(BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, default_value = "oracle")]
    algo: Algorithm,
    #[arg(long)]
    input: PathBuf,
    /// Tree decomposition in PACE .td format (treewidth solver).
    #[arg(long)]
    td: Option<PathBuf>,
    /// Vertex cover as a comma-separated list (vertex-cover solver).
    #[arg(long, value_delimiter = ',')]
    vc: Option<Vec<usize>>,
    /// Print the whole Pareto frontier.
    #[arg(long)]
    pareto: bool,
    /// Print a solution's vertices.
    #[arg(long)]
    witness: bool,
    #[arg(long)]
    json: bool,
    /// Cross-check against the oracle (instances up to 20 vertices).
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: Family,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = 10)]
    wmax: u64,
    #[arg(long, default_value_t = 10)]
    amax: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    rule: ReductionRule,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: Option<usize>,
    /// bip: zero-weight X copies. uds2min: seeded 0/1 weights (seed 0).
    #[arg(long)]
    paper_weights: bool,
    /// uds2min: all-unit weights.
    #[arg(long, conflicts_with = "paper_weights")]
    unit_weights: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    rule: ReductionRule,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, default_value_t = 6)]
    max_weight: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    paper_weights: bool,
    #[arg(long, conflicts_with = "paper_weights")]
    unit_weights: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value = "random-tree")]
    family: Family,
    #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000")]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "50")]
    s: Vec<u64>,
    #[arg(long, value_delimiter = ',', default_value = "tree")]
    algo: Vec<Algorithm>,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = 10)]
    wmax: u64,
    #[arg(long, default_value_t = 10)]
    amax: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    repeats: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Gen(a) => cmd_gen(a).map(|()| true),
        Command::Reduce(a) => cmd_reduce(a).map(|()| true),
        Command::Check(a) => cmd_check(a),
        Command::Bench(a) => cmd_bench(a).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_instance(path: &Path) -> Result<DskpInstance> {
    parse_instance(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn cmd_solve(a: SolveArgs) -> Result<bool> {
    let inst = read_instance(&a.input)?;
    let mut options = SolveOptions {
        witnesses: a.witness,
        ..SolveOptions::default()
    };
    if let Some(path) = &a.td {
        let td = parse_td(&read(path)?, &inst.graph).with_context(|| format!("decomposition {}", path.display()))?;
        options.td = Some(td);
    }
    if let Some(list) = &a.vc {
        options.cover = Some(cover_from_list(inst.n(), list).context("vertex cover")?);
    }
    let sol = solve(&inst, a.algo, &options)?;
    for note in &sol.notes {
        eprintln!("warning: {note}");
    }

    if a.verify {
        if inst.n() > VERIFY_LIMIT {
            eprintln!("warning: --verify skipped above {VERIFY_LIMIT} vertices");
        } else {
            let expected = oracle_pareto(&inst)?;
            if expected.pairs() != sol.frontier.pairs() {
                bail!(
                    "verification failed: {} frontier {:?}, oracle {:?}",
                    a.algo.name(),
                    sol.frontier.pairs(),
                    expected.pairs()
                );
            }
        }
    }

    let witness = match (&sol.decision.witness, a.witness) {
        (Some(set), true) => {
            if !inst.satisfies_variant(set) || !inst.is_solution(set) {
                bail!("internal error: witness {:?} is not a solution", set);
            }
            Some(set.to_vec())
        }
        _ => None,
    };
    let optimum = sol.optimum(&inst);

    if a.json {
        let mut out = json!({
            "result": yes_no(sol.decision.yes),
            "optimum": optimum.map(|(w, p)| json!([w, p])),
        });
        if a.pareto {
            out["pareto"] = json!(sol.frontier.pairs());
        }
        if a.witness {
            out["witness"] = json!(witness);
        }
        println!("{out}");
    } else {
        println!("RESULT {}", yes_no(sol.decision.yes));
        match optimum {
            Some((w, p)) => println!("OPTIMUM {w} {p}"),
            None => println!("OPTIMUM none"),
        }
        if a.pareto {
            let pairs: Vec<String> = sol.frontier.iter().map(|p| format!("({},{})", p.weight, p.profit)).collect();
            println!("PARETO {}", pairs.join(" "));
        }
        if let Some(ids) = &witness {
            let ids: Vec<String> = ids.iter().map(|v| v.to_string()).collect();
            println!("WITNESS {}", ids.join(" "));
        }
    }
    Ok(sol.decision.yes)
}

fn cmd_gen(a: GenArgs) -> Result<()> {
    let inst = generate(&GenParams {
        family: a.family,
        n: a.n,
        p: a.p,
        wmax: a.wmax,
        amax: a.amax,
        seed: a.seed,
        capacity: a.s,
        target: a.d,
    })?;
    print!("{}", write_instance(&inst));
    Ok(())
}

/// Graph-only rules accept either a `p graph` file or a DSKP instance file,
/// whose weights and bounds are then ignored.
fn read_graph(path: &Path) -> Result<Graph> {
    let text = read(path)?;
    match parse_graph(&text) {
        Ok(g) => Ok(g),
        Err(graph_err) => match parse_instance(&text) {
            Ok(inst) => Ok(inst.graph),
            Err(_) => Err(graph_err).with_context(|| format!("parsing {}", path.display())),
        },
    }
}

fn need_k(k: Option<usize>) -> Result<usize> {
    k.context("this rule needs --k")
}

fn uds_weights(paper: bool, unit: bool) -> UdsWeights {
    if paper {
        UdsWeights::Split(0)
    } else if unit {
        UdsWeights::Unit
    } else {
        UdsWeights::Zero
    }
}

fn cmd_reduce(a: ReduceArgs) -> Result<()> {
    let text = match a.rule {
        ReductionRule::DsToDskp => write_instance(&reduce_ds_to_dskp(&read_graph(&a.input)?, need_k(a.k)?)?),
        ReductionRule::DsToKdskp => write_instance(&reduce_ds_to_kdskp(&read_graph(&a.input)?, need_k(a.k)?)?),
        ReductionRule::UdsToMinimal(_) => write_instance(&reduce_uds_to_minimal_dskp(
            &read_graph(&a.input)?,
            need_k(a.k)?,
            uds_weights(a.paper_weights, a.unit_weights),
        )?),
        ReductionRule::Bipartite(_) => {
            let mode = if a.paper_weights {
                BipartiteWeights::Zero
            } else {
                BipartiteWeights::Guarded
            };
            write_instance(&reduce_dskp_to_bipartite(&read_instance(&a.input)?, mode)?)
        }
        ReductionRule::KnapsackToStar => {
            let k = parse_knapsack(&read(&a.input)?).with_context(|| format!("parsing {}", a.input.display()))?;
            write_instance(&reduce_knapsack_to_star(&k.items, k.capacity, k.target)?)
        }
        ReductionRule::DskpToWcs => {
            let inst = read_instance(&a.input)?;
            let k = a.k.unwrap_or(inst.capacity as usize);
            reduce_dskp_to_wcs(&inst, k)?.to_text()
        }
    };
    print!("{text}");
    Ok(())
}

fn cmd_check(a: CheckArgs) -> Result<bool> {
    let rule = match a.rule {
        ReductionRule::Bipartite(_) if a.paper_weights => ReductionRule::Bipartite(BipartiteWeights::Zero),
        ReductionRule::UdsToMinimal(_) => {
            ReductionRule::UdsToMinimal(uds_weights(a.paper_weights, a.unit_weights))
        }
        other => other,
    };
    let report = check_reduction_soundness(
        rule,
        a.trials,
        SizeBounds {
            max_n: a.max_n,
            max_weight: a.max_weight,
        },
        a.seed,
    )?;
    println!(
        "RULE {} trials {} seed {} mismatches {}",
        rule.name(),
        report.trials,
        report.seed,
        report.mismatches.len()
    );
    for m in &report.mismatches {
        println!(
            "MISMATCH trial {} source {} target {}: {}",
            m.trial,
            yes_no(m.source_answer),
            yes_no(m.target_answer),
            m.detail
        );
        for line in m.source.lines() {
            println!("  {line}");
        }
    }
    Ok(report.is_sound())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_bench(a: BenchArgs) -> Result<()> {
    let rows = run_bench(&BenchConfig {
        family: a.family,
        ns: a.n,
        ss: a.s,
        algos: a.algo,
        p: a.p,
        wmax: a.wmax,
        amax: a.amax,
        seed: a.seed,
        repeats: a.repeats,
    })?;
    print!("{}", to_csv(&rows));
    Ok(())
}
