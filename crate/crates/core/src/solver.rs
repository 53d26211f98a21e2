//! One entry point over the four exact solvers.

use crate::decomposition::{heuristic_td, make_nice, TreeDecomposition};
use crate::error::{Error, Result};
use crate::instance::DskpInstance;
use crate::oracle::{decide_from_frontier, min_vertex_cover, oracle_pareto, Decision};
use crate::pareto::ParetoSet;
use crate::tree_dp::{tree_dp_with, WITNESS_LIMIT};
use crate::treewidth_dp::tw_dp_with;
use crate::vc_dp::vck_with;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Oracle,
    Tree,
    Treewidth,
    Vck,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Oracle => "oracle",
            Algorithm::Tree => "tree",
            Algorithm::Treewidth => "treewidth",
            Algorithm::Vck => "vck",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "oracle" => Algorithm::Oracle,
            "tree" => Algorithm::Tree,
            "treewidth" => Algorithm::Treewidth,
            "vck" => Algorithm::Vck,
            other => return Err(Error::InvalidParameter(format!("unknown algorithm `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    /// Used by the treewidth solver; a min-degree heuristic decomposition otherwise.
    pub td: Option<TreeDecomposition>,
    /// Used by the vertex-cover solver; a minimum vertex cover otherwise.
    pub cover: Option<VertexSet>,
    /// Track witness sets (ignored above the witness vertex limit; the oracle
    /// always tracks them).
    pub witnesses: bool,
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub frontier: ParetoSet,
    pub decision: Decision,
    /// Human-readable remarks, such as fallbacks taken.
    pub notes: Vec<String>,
}

impl Solution {
    /// The pair with the largest profit within capacity, if any.
    pub fn optimum(&self, inst: &DskpInstance) -> Option<(u64, u64)> {
        self.frontier
            .best_pair(inst.capacity)
            .map(|p| (p.weight, p.profit))
    }
}

pub fn solve(inst: &DskpInstance, algo: Algorithm, options: &SolveOptions) -> Result<Solution> {
    let witnesses = options.witnesses && inst.n() <= WITNESS_LIMIT;
    let mut notes = Vec::new();
    let frontier = match algo {
        Algorithm::Oracle => oracle_pareto(inst)?,
        Algorithm::Tree => tree_dp_with(inst, 0, witnesses)?.0,
        Algorithm::Treewidth => {
            let td = match &options.td {
                Some(td) => {
                    td.validate(&inst.graph)?;
                    td.clone()
                }
                None => {
                    let td = heuristic_td(&inst.graph);
                    notes.push(format!("no decomposition given; heuristic width {}", td.width()));
                    td
                }
            };
            tw_dp_with(inst, &make_nice(&td), witnesses)?.0
        }
        Algorithm::Vck => {
            let cover = match &options.cover {
                Some(c) => c.clone(),
                None => {
                    let c = min_vertex_cover(&inst.graph)?;
                    notes.push(format!("no cover given; minimum cover of size {}", c.count()));
                    c
                }
            };
            vck_with(inst, &cover, witnesses, None)?.0
        }
    };
    let decision = decide_from_frontier(inst, &frontier);
    Ok(Solution {
        frontier,
        decision,
        notes,
    })
}
