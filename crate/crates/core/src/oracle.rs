//! Exhaustive ground truth: every DP in this crate is tested against these.
//!
//! Subsets are visited in Gray-code order with incremental per-vertex
//! domination counters. The mask space is split on its high bits and the
//! chunks are scanned in parallel; results are combined with a fixed
//! tie-break (smaller mask wins), so output does not depend on scheduling.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{DskpInstance, Variant};
use crate::pareto::{ParetoSet, WpPair};
use crate::vertex_set::VertexSet;

pub const DEFAULT_MAX_VERTICES: usize = 24;
const HARD_MAX_VERTICES: usize = 40;

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub max_vertices: usize,
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
            parallel: true,
        }
    }
}

impl OracleConfig {
    fn check(&self, n: usize) -> Result<()> {
        let cap = self.max_vertices.min(HARD_MAX_VERTICES);
        if n > cap {
            return Err(Error::InstanceTooLarge { n, cap });
        }
        Ok(())
    }
}

/// Domination bookkeeping for the subset currently visited.
struct DomState<'g> {
    graph: &'g Graph,
    count: Vec<u32>,
    undominated: usize,
}

impl<'g> DomState<'g> {
    fn new(graph: &'g Graph) -> Self {
        Self {
            graph,
            count: vec![0; graph.n()],
            undominated: graph.n(),
        }
    }

    fn add(&mut self, v: usize) {
        self.bump(v);
        for &u in self.graph.neighbors(v) {
            self.bump(u);
        }
    }

    fn remove(&mut self, v: usize) {
        self.drop_one(v);
        for &u in self.graph.neighbors(v) {
            self.drop_one(u);
        }
    }

    fn bump(&mut self, v: usize) {
        if self.count[v] == 0 {
            self.undominated -= 1;
        }
        self.count[v] += 1;
    }

    fn drop_one(&mut self, v: usize) {
        self.count[v] -= 1;
        if self.count[v] == 0 {
            self.undominated += 1;
        }
    }

    fn dominating(&self) -> bool {
        self.undominated == 0
    }

    /// Assumes the current subset is dominating.
    fn minimal(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let private = self.count[v] == 1
                || self.graph.neighbors(v).iter().any(|&u| self.count[u] == 1);
            if !private {
                return false;
            }
        }
        true
    }
}

/// Visits every subset of `0..n` once. Returns one accumulator per chunk, in
/// chunk order.
fn scan_subsets<T, I, V>(graph: &Graph, parallel: bool, init: I, visit: V) -> Vec<T>
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, u64, &DomState) + Sync,
{
    let n = graph.n();
    let high = if parallel { n.min(4) } else { 0 };
    let low = n - high;
    let run_chunk = |h: u64| {
        let mut acc = init();
        let mut state = DomState::new(graph);
        let base = h << low;
        for v in 0..high {
            if h >> v & 1 == 1 {
                state.add(low + v);
            }
        }
        let mut mask = base;
        visit(&mut acc, mask, &state);
        for i in 1u64..(1u64 << low) {
            let bit = i.trailing_zeros() as usize;
            mask ^= 1 << bit;
            if mask >> bit & 1 == 1 {
                state.add(bit);
            } else {
                state.remove(bit);
            }
            visit(&mut acc, mask, &state);
        }
        acc
    };
    let chunks = 0..(1u64 << high);
    if parallel {
        chunks.into_par_iter().map(run_chunk).collect()
    } else {
        chunks.map(run_chunk).collect()
    }
}

fn variant_holds(variant: Variant, mask: u64, state: &DomState) -> bool {
    if !state.dominating() {
        return false;
    }
    match variant {
        Variant::Plain => true,
        Variant::ExactK(k) => mask.count_ones() as usize == k,
        Variant::Minimal => state.minimal(mask),
    }
}

pub fn oracle_pareto(inst: &DskpInstance) -> Result<ParetoSet> {
    oracle_pareto_with(inst, &OracleConfig::default())
}

/// Exact frontier over all vertex subsets meeting the variant predicate with
/// weight at most `s`. Every pair carries a witness.
pub fn oracle_pareto_with(inst: &DskpInstance, config: &OracleConfig) -> Result<ParetoSet> {
    let n = inst.n();
    config.check(n)?;
    let parts = scan_subsets(
        &inst.graph,
        config.parallel,
        HashMap::<u64, (u64, u64)>::new,
        |best, mask, state| {
            if !variant_holds(inst.variant, mask, state) {
                return;
            }
            let (w, a) = mask_totals(inst, mask);
            if w > inst.capacity {
                return;
            }
            let entry = best.entry(w).or_insert((a, mask));
            if a > entry.0 || (a == entry.0 && mask < entry.1) {
                *entry = (a, mask);
            }
        },
    );
    let mut merged: HashMap<u64, (u64, u64)> = HashMap::new();
    for part in parts {
        for (w, (a, mask)) in part {
            let entry = merged.entry(w).or_insert((a, mask));
            if a > entry.0 || (a == entry.0 && mask < entry.1) {
                *entry = (a, mask);
            }
        }
    }
    let pairs = merged
        .into_iter()
        .map(|(w, (a, mask))| WpPair::with_witness(w, a, VertexSet::from_mask(n, mask)))
        .collect();
    Ok(ParetoSet::from_pairs(pairs))
}

fn mask_totals(inst: &DskpInstance, mask: u64) -> (u64, u64) {
    let mut rest = mask;
    let (mut w, mut a) = (0, 0);
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        w += inst.weights[v];
        a += inst.profits[v];
    }
    (w, a)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub yes: bool,
    pub witness: Option<VertexSet>,
}

pub fn oracle_decide(inst: &DskpInstance) -> Result<Decision> {
    let frontier = oracle_pareto(inst)?;
    Ok(decide_from_frontier(inst, &frontier))
}

/// Yes iff some frontier pair fits in `s` and reaches `d`; the lightest such
/// pair supplies the witness.
pub fn decide_from_frontier(inst: &DskpInstance, frontier: &ParetoSet) -> Decision {
    match frontier.first_reaching(inst.capacity, inst.target) {
        Some(p) => Decision {
            yes: true,
            witness: p.witness.clone(),
        },
        None => Decision {
            yes: false,
            witness: None,
        },
    }
}

/// Minimum size of a dominating set (the domination number).
pub fn oracle_min_dominating_set(g: &Graph) -> Result<usize> {
    OracleConfig::default().check(g.n())?;
    let parts = scan_subsets(g, true, || usize::MAX, |best, mask, state| {
        if state.dominating() {
            *best = (*best).min(mask.count_ones() as usize);
        }
    });
    Ok(parts.into_iter().min().unwrap_or(0))
}

/// Largest size of a minimal dominating set (the upper domination number).
pub fn oracle_upper_domination(g: &Graph) -> Result<usize> {
    OracleConfig::default().check(g.n())?;
    let parts = scan_subsets(g, true, || 0usize, |best, mask, state| {
        if state.dominating() && state.minimal(mask) {
            *best = (*best).max(mask.count_ones() as usize);
        }
    });
    Ok(parts.into_iter().max().unwrap_or(0))
}

/// Exact 0/1 knapsack frontier by capacity-indexed DP. Witnesses index items.
pub fn knapsack_01(weights: &[u64], profits: &[u64], capacity: u64) -> ParetoSet {
    assert_eq!(weights.len(), profits.len());
    let items = weights.len();
    let span = capacity.min(weights.iter().sum()) as usize;
    // best[w]: max profit and a witness over subsets of exact weight w
    let mut best: Vec<Option<(u64, VertexSet)>> = vec![None; span + 1];
    best[0] = Some((0, VertexSet::new(items)));
    for (i, (&w, &p)) in weights.iter().zip(profits).enumerate() {
        if w as usize > span {
            continue;
        }
        let w = w as usize;
        for c in (w..=span).rev() {
            if let Some((prev, set)) = &best[c - w] {
                let cand = prev + p;
                if best[c].as_ref().is_none_or(|(cur, _)| cand > *cur) {
                    let mut set = set.clone();
                    set.insert(i);
                    best[c] = Some((cand, set));
                }
            }
        }
    }
    ParetoSet::from_pairs(
        best.into_iter()
            .enumerate()
            .filter_map(|(w, e)| e.map(|(p, set)| WpPair::with_witness(w as u64, p, set)))
            .collect(),
    )
}

/// A minimum-cardinality vertex cover; ties go to the numerically smallest mask.
pub fn min_vertex_cover(g: &Graph) -> Result<VertexSet> {
    OracleConfig::default().check(g.n())?;
    let n = g.n();
    let edges: Vec<u64> = g.edges().map(|(u, v)| (1u64 << u) | (1u64 << v)).collect();
    for size in 0..=n as u32 {
        let found = (0u64..(1u64 << n))
            .filter(|m| m.count_ones() == size)
            .find(|m| edges.iter().all(|e| e & m != 0));
        if let Some(mask) = found {
            return Ok(VertexSet::from_mask(n, mask));
        }
    }
    unreachable!("the full vertex set is always a cover")
}
