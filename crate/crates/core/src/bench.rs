//! Timing sweeps over generated instances, reported as CSV.

use std::fmt::Write as _;
use std::time::Instant;

use crate::error::Result;
use crate::generate::{generate, Family, GenParams};
use crate::solver::{solve, Algorithm, SolveOptions};

pub const CSV_HEADER: &str = "family,n,s,algo,millis,frontier_size";

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: Family,
    pub ns: Vec<usize>,
    pub ss: Vec<u64>,
    pub algos: Vec<Algorithm>,
    pub p: f64,
    pub wmax: u64,
    pub amax: u64,
    pub seed: u64,
    /// Each cell reports the fastest of this many runs.
    pub repeats: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            family: Family::RandomTree,
            ns: vec![1000, 2000, 4000],
            ss: vec![50],
            algos: vec![Algorithm::Tree],
            p: 0.3,
            wmax: 10,
            amax: 10,
            seed: 0,
            repeats: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub s: u64,
    pub algo: &'static str,
    pub millis: f64,
    pub frontier_size: usize,
}

pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::Star => "star",
        Family::Path => "path",
        Family::RandomTree => "random-tree",
        Family::Gnp => "gnp",
        Family::Split => "split",
        Family::Figure1 => "figure1",
    }
}

/// One row per `(n, s, algo)`. The instance for a given `n` is the same for
/// every `s`; only the capacity changes.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &n in &config.ns {
        let base = generate(&GenParams {
            family: config.family,
            n,
            p: config.p,
            wmax: config.wmax,
            amax: config.amax,
            seed: config.seed,
            capacity: Some(0),
            target: Some(0),
        })?;
        for &s in &config.ss {
            let inst = base.clone().with_budget(s, 0);
            for &algo in &config.algos {
                let mut best = f64::INFINITY;
                let mut frontier_size = 0;
                for _ in 0..config.repeats.max(1) {
                    let start = Instant::now();
                    let sol = solve(&inst, algo, &SolveOptions::default())?;
                    best = best.min(start.elapsed().as_secs_f64() * 1000.0);
                    frontier_size = sol.frontier.len();
                }
                rows.push(BenchRow {
                    family: family_name(config.family).to_string(),
                    n: inst.n(),
                    s,
                    algo: algo.name(),
                    millis: best,
                    frontier_size,
                });
            }
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{:.3},{}",
            r.family, r.n, r.s, r.algo, r.millis, r.frontier_size
        )
        .unwrap();
    }
    out
}
