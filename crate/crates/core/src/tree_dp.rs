//! Pseudo-polynomial DSKP solver on trees.
//!
//! Every vertex `u` keeps three frontiers over partial solutions inside its
//! subtree:
//!
//! * `included`: `u` is selected and the whole subtree is dominated.
//! * `dominated`: `u` is not selected but is dominated by one of its children,
//!   and the whole subtree is dominated.
//! * `free`: `u` is not selected and not yet dominated; every other subtree
//!   vertex is dominated. Only the parent can still rescue `u`.
//!
//! Children are folded in one at a time. A child in its `free` state is only
//! admissible under a selected parent; a child in its `included` state is what
//! moves the parent from `free` to `dominated`.

use crate::error::{Error, Result};
use crate::instance::{DskpInstance, Variant};
use crate::pareto::{ParetoSet, WpPair};
use crate::vertex_set::VertexSet;

/// Witnesses are tracked by default up to this many vertices.
pub const WITNESS_LIMIT: usize = 1024;

#[derive(Debug, Clone, Default)]
pub struct TreeDpState {
    pub included: ParetoSet,
    pub dominated: ParetoSet,
    pub free: ParetoSet,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TreeDpStats {
    /// Pair-sum evaluations charged to each vertex, i.e. `Σ |a|·|b|` over its folds.
    pub pair_ops: Vec<u64>,
    /// Largest frontier seen in any state.
    pub max_frontier: usize,
}

impl TreeDpStats {
    pub fn total_pair_ops(&self) -> u64 {
        self.pair_ops.iter().sum()
    }
}

pub fn tree_dp_pareto(inst: &DskpInstance, root: usize) -> Result<ParetoSet> {
    tree_dp_with(inst, root, inst.n() <= WITNESS_LIMIT).map(|(frontier, _)| frontier)
}

pub fn tree_dp_with(
    inst: &DskpInstance,
    root: usize,
    witnesses: bool,
) -> Result<(ParetoSet, TreeDpStats)> {
    let (frontier, stats, _) = run(inst, root, witnesses, false)?;
    Ok((frontier, stats))
}

fn run(
    inst: &DskpInstance,
    root: usize,
    witnesses: bool,
    keep_states: bool,
) -> Result<(ParetoSet, TreeDpStats, Vec<Option<TreeDpState>>)> {
    if inst.variant != Variant::Plain {
        return Err(Error::UnsupportedVariant);
    }
    let g = &inst.graph;
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.n();
    if root >= n {
        return Err(Error::VertexOutOfRange { id: root, n });
    }
    let cap = inst.capacity;
    let universe = witnesses.then_some(n);

    // preorder with parents, no recursion
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }

    let mut stats = TreeDpStats {
        pair_ops: vec![0; n],
        max_frontier: 0,
    };
    // states are indexed by preorder position, which keeps a vertex's
    // children close to it in memory
    let mut position = vec![0; n];
    for (i, &u) in order.iter().enumerate() {
        position[u] = i;
    }
    let mut states: Vec<Option<TreeDpState>> = vec![None; n];

    for &u in order.iter().rev() {
        let mut ops = 0u64;
        let mut sum = |a: &ParetoSet, b: &ParetoSet| {
            ops += (a.len() * b.len()) as u64;
            a.cross_sum(b, cap)
        };

        let mut included = if inst.weights[u] <= cap {
            ParetoSet::singleton(WpPair {
                weight: inst.weights[u],
                profit: inst.profits[u],
                witness: universe.map(|len| VertexSet::from_vertices(len, [u])),
            })
        } else {
            ParetoSet::new()
        };
        let mut free = ParetoSet::unit(universe);
        let mut dominated = ParetoSet::new();

        for &c in g.neighbors(u) {
            if c == parent[u] {
                continue;
            }
            let child = if keep_states {
                states[position[c]].clone()
            } else {
                states[position[c]].take()
            }
            .expect("children are processed first");
            let child_settled = child.included.merge(&child.dominated);
            if !included.is_empty() {
                let any = child_settled.merge(&child.free);
                included = sum(&included, &any);
            }
            let mut next_dominated = sum(&dominated, &child_settled);
            next_dominated.merge_into(&sum(&free, &child.included));
            free = sum(&free, &child.dominated);
            dominated = next_dominated;
        }

        stats.pair_ops[u] = ops;
        stats.max_frontier = stats
            .max_frontier
            .max(included.len())
            .max(dominated.len())
            .max(free.len());
        states[position[u]] = Some(TreeDpState {
            included,
            dominated,
            free,
        });
    }

    let top = states[0].as_ref().expect("root state");
    let frontier = top.included.merge(&top.dominated);
    let mut by_vertex = vec![None; if keep_states { n } else { 0 }];
    if keep_states {
        for (i, &u) in order.iter().enumerate() {
            by_vertex[u] = states[i].take();
        }
    }
    Ok((frontier, stats, by_vertex))
}

/// Every vertex's three frontiers for the tree rooted at `root`, with witnesses.
pub fn tree_dp_states(inst: &DskpInstance, root: usize) -> Result<Vec<TreeDpState>> {
    let (_, _, states) = run(inst, root, true, true)?;
    Ok(states.into_iter().map(|s| s.expect("every vertex visited")).collect())
}
