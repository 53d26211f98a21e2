//! DSKP parameterized by a vertex cover `S`.
//!
//! For each subset `S_c ⊆ S` of selected cover vertices: independent vertices
//! with no neighbor in `S_c` are forced into the solution; cover vertices left
//! undominated form a residual set `R`, which the optional independent
//! vertices must cover. The optional vertices are folded as a subset-cover DP
//! whose state is the still-uncovered part of `R`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::instance::{DskpInstance, Variant};
use crate::pareto::ParetoSet;
use crate::vertex_set::VertexSet;

pub const MAX_COVER: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcSplit {
    pub cover: VertexSet,
    pub independent: VertexSet,
}

impl VcSplit {
    pub fn new(inst: &DskpInstance, cover: &VertexSet) -> Result<Self> {
        let n = inst.n();
        if cover.universe() != n {
            return Err(Error::InvalidParameter(format!(
                "cover universe {} does not match {n} vertices",
                cover.universe()
            )));
        }
        if let Some((u, v)) = inst
            .graph
            .edges()
            .find(|&(u, v)| !cover.contains(u) && !cover.contains(v))
        {
            return Err(Error::NotAVertexCover(u, v));
        }
        let independent = VertexSet::from_vertices(n, (0..n).filter(|&v| !cover.contains(v)));
        Ok(Self {
            cover: cover.clone(),
            independent,
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VckStats {
    /// Cover subsets examined; always `2^|S|`.
    pub subsets: u64,
    /// Subset-cover DP states touched, summed over all subsets.
    pub states: u64,
}

pub fn vck_pareto(inst: &DskpInstance, cover: &VertexSet) -> Result<ParetoSet> {
    vck_with(inst, cover, inst.n() <= crate::tree_dp::WITNESS_LIMIT, None).map(|(f, _)| f)
}

/// `order` overrides the fold order of optional independent vertices (it
/// must list every independent vertex); by default they are folded by
/// decreasing number of residual neighbors.
pub fn vck_with(
    inst: &DskpInstance,
    cover: &VertexSet,
    witnesses: bool,
    order: Option<&[usize]>,
) -> Result<(ParetoSet, VckStats)> {
    if inst.variant != Variant::Plain {
        return Err(Error::UnsupportedVariant);
    }
    let split = VcSplit::new(inst, cover)?;
    let cover_list = split.cover.to_vec();
    if cover_list.len() > MAX_COVER {
        return Err(Error::CoverTooLarge {
            size: cover_list.len(),
            cap: MAX_COVER,
        });
    }
    let independent = split.independent.to_vec();
    let g = &inst.graph;
    let n = inst.n();
    let cap = inst.capacity;
    let universe = witnesses.then_some(n);

    // neighbors of each independent vertex, as a bitmask over cover positions
    let mut cover_pos = vec![usize::MAX; n];
    for (i, &v) in cover_list.iter().enumerate() {
        cover_pos[v] = i;
    }
    let mask_of = |vs: &[usize]| -> u64 {
        vs.iter()
            .filter(|&&u| cover_pos[u] != usize::MAX)
            .fold(0, |m, &u| m | 1 << cover_pos[u])
    };
    let ind_nbrs: Vec<u64> = (0..n).map(|v| mask_of(g.neighbors(v))).collect();
    // closed neighborhood within the cover, for cover vertices
    let cover_closed: Vec<u64> = cover_list
        .iter()
        .enumerate()
        .map(|(i, &v)| mask_of(g.neighbors(v)) | 1 << i)
        .collect();

    let mut stats = VckStats::default();
    let mut frontier = ParetoSet::new();
    let k = cover_list.len();

    for chosen in 0u64..(1u64 << k) {
        stats.subsets += 1;
        let mut dominated = 0u64;
        let mut base = (0u64, 0u64);
        let mut base_set = universe.map(VertexSet::new);
        let mut take = |v: usize, base: &mut (u64, u64)| {
            base.0 += inst.weights[v];
            base.1 += inst.profits[v];
            if let Some(s) = base_set.as_mut() {
                s.insert(v);
            }
        };
        for (i, &v) in cover_list.iter().enumerate() {
            if chosen >> i & 1 == 1 {
                dominated |= cover_closed[i];
                take(v, &mut base);
            }
        }
        let mut optional = Vec::new();
        for &v in &independent {
            if ind_nbrs[v] & chosen == 0 {
                dominated |= ind_nbrs[v];
                take(v, &mut base);
            } else {
                optional.push(v);
            }
        }
        if base.0 > cap {
            continue;
        }
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let residual = full & !dominated;

        match order {
            Some(custom) => optional.sort_by_key(|v| custom.iter().position(|x| x == v)),
            None => optional.sort_by_key(|&v| std::cmp::Reverse((ind_nbrs[v] & residual).count_ones())),
        }

        let budget = cap - base.0;
        let mut states: BTreeMap<u64, ParetoSet> = BTreeMap::new();
        states.insert(residual, ParetoSet::unit(universe));
        for &v in &optional {
            let covers = ind_nbrs[v] & residual;
            let extra = universe.map(|len| VertexSet::from_vertices(len, [v]));
            let mut next = states.clone();
            for (&uncovered, set) in &states {
                stats.states += 1;
                let moved = set.shifted(inst.weights[v], inst.profits[v], extra.as_ref(), budget);
                if moved.is_empty() {
                    continue;
                }
                next.entry(uncovered & !covers)
                    .or_default()
                    .merge_into(&moved);
            }
            states = next;
        }
        if let Some(done) = states.get(&0) {
            let shifted = done.shifted(base.0, base.1, base_set.as_ref(), cap);
            frontier.merge_into(&shifted);
        }
    }
    Ok((frontier, stats))
}

/// Convenience for callers holding a plain vertex list.
pub fn cover_from_list(n: usize, vertices: &[usize]) -> Result<VertexSet> {
    if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { id: v, n });
    }
    Ok(VertexSet::from_vertices(n, vertices.iter().copied()))
}
