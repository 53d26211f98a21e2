//! Randomized soundness checks: generate a small source instance, answer it
//! with a source-side oracle, reduce it, answer the target with the DSKP (or
//! circuit) oracle, and record every disagreement.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    reduce_dskp_to_bipartite, reduce_dskp_to_wcs, reduce_ds_to_dskp, reduce_ds_to_kdskp,
    reduce_knapsack_to_star, reduce_uds_to_minimal_dskp, write_graph, write_knapsack, BipartiteWeights,
    Knapsack, UdsWeights,
};
use crate::error::{Error, Result};
use crate::generate::gnp;
use crate::graph::Graph;
use crate::instance::{write_instance, DskpInstance, Variant};
use crate::oracle::{
    knapsack_01, oracle_decide, oracle_min_dominating_set, oracle_pareto, oracle_upper_domination,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionRule {
    DsToDskp,
    DsToKdskp,
    Bipartite(BipartiteWeights),
    KnapsackToStar,
    UdsToMinimal(UdsWeights),
    DskpToWcs,
}

impl ReductionRule {
    pub fn name(&self) -> &'static str {
        match self {
            ReductionRule::DsToDskp => "ds2dskp",
            ReductionRule::DsToKdskp => "ds2kdskp",
            ReductionRule::Bipartite(_) => "bip",
            ReductionRule::KnapsackToStar => "star",
            ReductionRule::UdsToMinimal(_) => "uds2min",
            ReductionRule::DskpToWcs => "wcs",
        }
    }

    /// Every rule in its default (answer-preserving) form.
    pub fn all() -> [ReductionRule; 6] {
        [
            ReductionRule::DsToDskp,
            ReductionRule::DsToKdskp,
            ReductionRule::Bipartite(BipartiteWeights::Guarded),
            ReductionRule::KnapsackToStar,
            ReductionRule::UdsToMinimal(UdsWeights::Zero),
            ReductionRule::DskpToWcs,
        ]
    }
}

impl std::str::FromStr for ReductionRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReductionRule::all()
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown reduction rule `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeBounds {
    pub max_n: usize,
    pub max_weight: u64,
}

impl Default for SizeBounds {
    fn default() -> Self {
        Self {
            max_n: 8,
            max_weight: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub trial: usize,
    /// The source instance, in its text format, with `k` as a comment line.
    pub source: String,
    pub source_answer: bool,
    pub target_answer: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoundnessReport {
    pub rule: ReductionRule,
    pub trials: usize,
    pub seed: u64,
    pub mismatches: Vec<Mismatch>,
}

impl SoundnessReport {
    pub fn is_sound(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

pub fn check_reduction_soundness(
    rule: ReductionRule,
    trials: usize,
    bounds: SizeBounds,
    seed: u64,
) -> Result<SoundnessReport> {
    if bounds.max_weight == 0 {
        return Err(Error::InvalidParameter("max_weight must be at least 1".into()));
    }
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|trial| run_trial(rule, trial, bounds, trial_seed(seed, trial)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SoundnessReport {
        rule,
        trials,
        seed,
        mismatches: outcomes.into_iter().flatten().collect(),
    })
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n.max(1));
    let p = [0.2, 0.4, 0.6][rng.gen_range(0..3)];
    gnp(n, p, rng)
}

fn random_instance(rng: &mut ChaCha8Rng, bounds: SizeBounds) -> DskpInstance {
    let g = random_graph(rng, bounds.max_n);
    let n = g.n();
    let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=bounds.max_weight)).collect();
    let profits: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=bounds.max_weight)).collect();
    let s = rng.gen_range(0..=weights.iter().sum::<u64>());
    let d = rng.gen_range(0..=profits.iter().sum::<u64>());
    DskpInstance::new(g, weights, profits, s, d, Variant::Plain).expect("generated instance is valid")
}

fn with_k(text: String, k: usize) -> String {
    format!("c k = {k}\n{text}")
}

fn run_trial(rule: ReductionRule, trial: usize, bounds: SizeBounds, seed: u64) -> Result<Option<Mismatch>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut detail = String::new();
    let (source, source_answer, target_answer) = match rule {
        ReductionRule::DsToDskp | ReductionRule::DsToKdskp | ReductionRule::DskpToWcs => {
            let g = random_graph(&mut rng, bounds.max_n);
            let lo = usize::from(rule == ReductionRule::DsToKdskp);
            let k = rng.gen_range(lo..=g.n());
            let source_answer = oracle_min_dominating_set(&g)? <= k;
            let target_answer = match rule {
                ReductionRule::DsToDskp => oracle_decide(&reduce_ds_to_dskp(&g, k)?)?.yes,
                ReductionRule::DsToKdskp => oracle_decide(&reduce_ds_to_kdskp(&g, k)?)?.yes,
                _ => reduce_dskp_to_wcs(&reduce_ds_to_dskp(&g, k)?, k)?
                    .weighted_satisfying(k)?
                    .is_some(),
            };
            (with_k(write_graph(&g), k), source_answer, target_answer)
        }
        ReductionRule::Bipartite(mode) => {
            // the target has 2n + 1 vertices and must stay within oracle range
            let small = SizeBounds {
                max_n: bounds.max_n.min(11),
                ..bounds
            };
            let inst = random_instance(&mut rng, small);
            let target = reduce_dskp_to_bipartite(&inst, mode)?;
            if !target.graph.is_bipartite() {
                detail = "target graph is not bipartite".into();
            }
            (write_instance(&inst), oracle_decide(&inst)?.yes, oracle_decide(&target)?.yes)
        }
        ReductionRule::KnapsackToStar => {
            let count = rng.gen_range(0..bounds.max_n.max(1));
            let items: Vec<(u64, u64)> = (0..count)
                .map(|_| {
                    (
                        rng.gen_range(1..=bounds.max_weight),
                        rng.gen_range(1..=bounds.max_weight),
                    )
                })
                .collect();
            let b = rng.gen_range(0..=items.iter().map(|i| i.0).sum::<u64>());
            let q = rng.gen_range(0..=items.iter().map(|i| i.1).sum::<u64>());
            let weights: Vec<u64> = items.iter().map(|i| i.0).collect();
            let profits: Vec<u64> = items.iter().map(|i| i.1).collect();
            let knap = knapsack_01(&weights, &profits, b);
            let target = reduce_knapsack_to_star(&items, b, q)?;
            let star = oracle_pareto(&target)?;
            if star.pairs() != knap.pairs() {
                detail = format!("frontiers differ: star {:?}, knapsack {:?}", star.pairs(), knap.pairs());
            }
            let source = write_knapsack(&Knapsack {
                items,
                capacity: b,
                target: q,
            });
            (
                source,
                knap.first_reaching(b, q).is_some(),
                star.first_reaching(b, q).is_some(),
            )
        }
        ReductionRule::UdsToMinimal(weights) => {
            let g = random_graph(&mut rng, bounds.max_n);
            let k = rng.gen_range(0..=g.n());
            let source_answer = oracle_upper_domination(&g)? >= k;
            let target_answer = oracle_decide(&reduce_uds_to_minimal_dskp(&g, k, weights)?)?.yes;
            (with_k(write_graph(&g), k), source_answer, target_answer)
        }
    };
    if source_answer != target_answer && detail.is_empty() {
        detail = "answers differ".into();
    }
    Ok((!detail.is_empty()).then_some(Mismatch {
        trial,
        source,
        source_answer,
        target_answer,
        detail,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_rules_are_sound() {
        for rule in ReductionRule::all() {
            let report = check_reduction_soundness(rule, 40, SizeBounds::default(), 11).unwrap();
            assert!(report.is_sound(), "{}: {:?}", rule.name(), report.mismatches.first());
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let rule = ReductionRule::UdsToMinimal(UdsWeights::Unit);
        let a = check_reduction_soundness(rule, 60, SizeBounds::default(), 5).unwrap();
        let b = check_reduction_soundness(rule, 60, SizeBounds::default(), 5).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_sound());
        assert!(a.mismatches.iter().all(|m| m.source_answer && !m.target_answer));
    }

    #[test]
    fn rule_names_parse() {
        for rule in ReductionRule::all() {
            assert_eq!(rule.name().parse::<ReductionRule>().unwrap(), rule);
        }
        assert!("ds".parse::<ReductionRule>().is_err());
    }
}
