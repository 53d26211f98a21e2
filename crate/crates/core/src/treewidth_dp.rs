//! DSKP over a nice tree decomposition with coloring-indexed frontiers.
//!
//! Each node keeps one [`ParetoSet`] per coloring of its bag. For a node `i`
//! with subgraph vertices `V_i` (everything in bags at or below `i`), the cell
//! for coloring `c` holds the undominated `(w, α)` of sets `P ⊆ V_i` such that
//!
//! * `P ∩ X_i` is exactly the BLACK bag vertices,
//! * every vertex of `V_i \ X_i` is dominated by `P`,
//! * every WHITE bag vertex is dominated by `P`,
//! * GRAY bag vertices carry no requirement.
//!
//! Colorings are indexed base 3 in bag order (position `t` has weight `3^t`).

use crate::decomposition::{NiceTreeDecomposition, NodeKind};
use crate::error::{Error, Result};
use crate::instance::{DskpInstance, Variant};
use crate::pareto::{ParetoSet, WpPair};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    /// Not selected, dominated.
    White = 0,
    /// Selected.
    Black = 1,
    /// Not selected, domination not required yet.
    Gray = 2,
}

impl Color {
    const ALL: [Color; 3] = [Color::White, Color::Black, Color::Gray];

    fn from_digit(d: usize) -> Color {
        Self::ALL[d]
    }
}

pub type Coloring = Vec<Color>;

pub fn coloring_index(coloring: &[Color]) -> usize {
    coloring.iter().rev().fold(0, |acc, &c| acc * 3 + c as usize)
}

pub fn decode_coloring(mut index: usize, len: usize) -> Coloring {
    (0..len)
        .map(|_| {
            let c = Color::from_digit(index % 3);
            index /= 3;
            c
        })
        .collect()
}

fn pow3(k: usize) -> usize {
    3usize.pow(k as u32)
}

fn digit(index: usize, pos: usize) -> usize {
    index / pow3(pos) % 3
}

fn remove_digit(index: usize, pos: usize) -> usize {
    let low = index % pow3(pos);
    let high = index / pow3(pos + 1);
    low + high * pow3(pos)
}

fn insert_digit(index: usize, pos: usize, d: usize) -> usize {
    let low = index % pow3(pos);
    let high = index / pow3(pos);
    low + d * pow3(pos) + high * pow3(pos + 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwTable {
    /// Sorted bag.
    pub bag: Vec<usize>,
    /// Indexed by [`coloring_index`].
    pub cells: Vec<ParetoSet>,
}

impl TwTable {
    pub fn get(&self, coloring: &[Color]) -> &ParetoSet {
        assert_eq!(coloring.len(), self.bag.len());
        &self.cells[coloring_index(coloring)]
    }
}

/// Work done at one node, for checking enumeration bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeWork {
    pub kind: NodeKind,
    pub bag_len: usize,
    /// Colorings of the node's bag that were filled.
    pub colorings: u64,
    /// `(c, c', c'')` triples visited; join nodes only.
    pub join_triples: u64,
}

struct Ctx<'a> {
    inst: &'a DskpInstance,
    universe: Option<usize>,
}

impl Ctx<'_> {
    fn black_totals(&self, bag: &[usize], index: usize) -> (u64, u64) {
        bag.iter()
            .enumerate()
            .filter(|&(t, _)| digit(index, t) == Color::Black as usize)
            .fold((0, 0), |(w, a), (_, &v)| {
                (w + self.inst.weights[v], a + self.inst.profits[v])
            })
    }

    fn has_black_neighbor(&self, bag: &[usize], index: usize, v: usize) -> bool {
        bag.iter().enumerate().any(|(t, &u)| {
            digit(index, t) == Color::Black as usize && self.inst.graph.has_edge(u, v)
        })
    }
}

/// Leaf with an arbitrary bag: a coloring is valid iff each WHITE vertex has a
/// BLACK neighbor inside the bag.
pub fn leaf_case(inst: &DskpInstance, bag: &[usize], witnesses: bool) -> TwTable {
    let ctx = Ctx {
        inst,
        universe: witnesses.then_some(inst.n()),
    };
    leaf(&ctx, bag)
}

fn leaf(ctx: &Ctx, bag: &[usize]) -> TwTable {
    let cells = (0..pow3(bag.len()))
        .map(|c| {
            let valid = bag.iter().enumerate().all(|(t, &v)| {
                digit(c, t) != Color::White as usize || ctx.has_black_neighbor(bag, c, v)
            });
            let (w, a) = ctx.black_totals(bag, c);
            if !valid || w > ctx.inst.capacity {
                return ParetoSet::new();
            }
            let witness = ctx.universe.map(|n| {
                VertexSet::from_vertices(
                    n,
                    bag.iter()
                        .enumerate()
                        .filter(|&(t, _)| digit(c, t) == Color::Black as usize)
                        .map(|(_, &v)| v),
                )
            });
            ParetoSet::singleton(WpPair {
                weight: w,
                profit: a,
                witness,
            })
        })
        .collect();
    TwTable {
        bag: bag.to_vec(),
        cells,
    }
}

pub fn introduce_case(inst: &DskpInstance, child: &TwTable, v: usize, witnesses: bool) -> TwTable {
    let ctx = Ctx {
        inst,
        universe: witnesses.then_some(inst.n()),
    };
    introduce(&ctx, child, v)
}

fn introduce(ctx: &Ctx, child: &TwTable, v: usize) -> TwTable {
    let mut bag = child.bag.clone();
    let pos = bag.partition_point(|&x| x < v);
    bag.insert(pos, v);
    let extra = ctx.universe.map(|n| VertexSet::from_vertices(n, [v]));
    let g = &ctx.inst.graph;
    let cells = (0..pow3(bag.len()))
        .map(|c| {
            let rest = remove_digit(c, pos);
            match Color::from_digit(digit(c, pos)) {
                Color::Gray => child.cells[rest].clone(),
                Color::White => {
                    if ctx.has_black_neighbor(&bag, c, v) {
                        child.cells[rest].clone()
                    } else {
                        ParetoSet::new()
                    }
                }
                Color::Black => {
                    // WHITE neighbors of v may owe their domination to v alone
                    let mut source = rest;
                    for (t, &u) in child.bag.iter().enumerate() {
                        if digit(rest, t) == Color::White as usize && g.has_edge(u, v) {
                            source += (Color::Gray as usize - Color::White as usize) * pow3(t);
                        }
                    }
                    child.cells[source].shifted(
                        ctx.inst.weights[v],
                        ctx.inst.profits[v],
                        extra.as_ref(),
                        ctx.inst.capacity,
                    )
                }
            }
        })
        .collect();
    TwTable { bag, cells }
}

/// A forgotten vertex must be BLACK or WHITE; GRAY would stay undominated.
pub fn forget_case(child: &TwTable, v: usize) -> TwTable {
    let pos = child
        .bag
        .binary_search(&v)
        .expect("forgotten vertex is in the child bag");
    let mut bag = child.bag.clone();
    bag.remove(pos);
    let cells = (0..pow3(bag.len()))
        .map(|c| {
            let black = &child.cells[insert_digit(c, pos, Color::Black as usize)];
            let white = &child.cells[insert_digit(c, pos, Color::White as usize)];
            black.merge(white)
        })
        .collect();
    TwTable { bag, cells }
}

pub fn join_case(inst: &DskpInstance, left: &TwTable, right: &TwTable) -> (TwTable, u64) {
    let ctx = Ctx {
        inst,
        universe: None,
    };
    join(&ctx, left, right)
}

/// Consistent pairs: BLACK from (BLACK, BLACK), GRAY from (GRAY, GRAY), WHITE
/// from (WHITE, GRAY) or (GRAY, WHITE). The BLACK bag vertices are counted on
/// both sides and subtracted once.
fn join(ctx: &Ctx, left: &TwTable, right: &TwTable) -> (TwTable, u64) {
    assert_eq!(left.bag, right.bag, "join children share a bag");
    let bag = left.bag.clone();
    let k = bag.len();
    let mut triples = 0u64;
    let cells = (0..pow3(k))
        .map(|c| {
            let whites: Vec<usize> = (0..k)
                .filter(|&t| digit(c, t) == Color::White as usize)
                .collect();
            // with every WHITE turned GRAY on both sides
            let base = whites
                .iter()
                .fold(c, |acc, &t| acc + (Color::Gray as usize) * pow3(t));
            let (bw, ba) = ctx.black_totals(&bag, c);
            let mut out = ParetoSet::new();
            for choice in 0u64..(1u64 << whites.len()) {
                triples += 1;
                let (mut lc, mut rc) = (base, base);
                for (bit, &t) in whites.iter().enumerate() {
                    let delta = (Color::Gray as usize - Color::White as usize) * pow3(t);
                    if choice >> bit & 1 == 1 {
                        lc -= delta;
                    } else {
                        rc -= delta;
                    }
                }
                let sum =
                    left.cells[lc].cross_sum_offset(&right.cells[rc], bw, ba, ctx.inst.capacity);
                out.merge_into(&sum);
            }
            out
        })
        .collect();
    (TwTable { bag, cells }, triples)
}

pub fn tw_dp_pareto(inst: &DskpInstance, ntd: &NiceTreeDecomposition) -> Result<ParetoSet> {
    let witnesses = inst.n() <= crate::tree_dp::WITNESS_LIMIT;
    tw_dp_with(inst, ntd, witnesses).map(|(frontier, _)| frontier)
}

pub fn tw_dp_with(
    inst: &DskpInstance,
    ntd: &NiceTreeDecomposition,
    witnesses: bool,
) -> Result<(ParetoSet, Vec<NodeWork>)> {
    let (tables, work) = run(inst, ntd, witnesses, false)?;
    let root = tables.into_iter().last().flatten().expect("root table");
    debug_assert!(root.bag.is_empty());
    Ok((root.cells.into_iter().next().unwrap_or_default(), work))
}

/// Every node's table, for white-box checks on small inputs.
pub fn tw_dp_tables(inst: &DskpInstance, ntd: &NiceTreeDecomposition) -> Result<Vec<TwTable>> {
    let (tables, _) = run(inst, ntd, true, true)?;
    Ok(tables.into_iter().map(|t| t.expect("kept")).collect())
}

fn run(
    inst: &DskpInstance,
    ntd: &NiceTreeDecomposition,
    witnesses: bool,
    keep: bool,
) -> Result<(Vec<Option<TwTable>>, Vec<NodeWork>)> {
    if inst.variant != Variant::Plain {
        return Err(Error::UnsupportedVariant);
    }
    ntd.validate(&inst.graph)?;
    let ctx = Ctx {
        inst,
        universe: witnesses.then_some(inst.n()),
    };
    let mut tables: Vec<Option<TwTable>> = vec![None; ntd.nodes.len()];
    let mut work = Vec::with_capacity(ntd.nodes.len());
    for (i, node) in ntd.nodes.iter().enumerate() {
        let mut take = |j: usize| -> TwTable {
            if keep {
                tables[j].clone()
            } else {
                tables[j].take()
            }
            .expect("child table computed")
        };
        let mut triples = 0;
        let table = match node.kind {
            NodeKind::Leaf => leaf(&ctx, &node.bag),
            NodeKind::Introduce(v) => introduce(&ctx, &take(node.children[0]), v),
            NodeKind::Forget(v) => forget_case(&take(node.children[0]), v),
            NodeKind::Join => {
                let left = take(node.children[0]);
                let right = take(node.children[1]);
                let (t, n) = join(&ctx, &left, &right);
                triples = n;
                t
            }
        };
        work.push(NodeWork {
            kind: node.kind,
            bag_len: node.bag.len(),
            colorings: table.cells.len() as u64,
            join_triples: triples,
        });
        tables[i] = Some(table);
    }
    Ok((tables, work))
}
