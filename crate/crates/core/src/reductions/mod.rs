//! Hardness reductions as instance transformers.
//!
//! Each transformer has a soundness check in [`soundness`] that compares the
//! source and target answers using independent oracles.

pub mod circuit;
pub mod soundness;

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;
use crate::instance::{DskpInstance, Variant};
pub use circuit::{parse_circuit, Circuit, Gate, GateKind, Operand};
pub use soundness::{check_reduction_soundness, Mismatch, ReductionRule, SizeBounds, SoundnessReport};

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k > g.n() {
        return Err(Error::InvalidParameter(format!(
            "k = {k} exceeds the {} vertices",
            g.n()
        )));
    }
    Ok(())
}

/// Dominating Set `(G, k)` to DSKP: unit weights and profits, `s = d = k`.
pub fn reduce_ds_to_dskp(g: &Graph, k: usize) -> Result<DskpInstance> {
    check_k(g, k)?;
    let n = g.n();
    DskpInstance::new(g.clone(), vec![1; n], vec![1; n], k as u64, k as u64, Variant::Plain)
}

/// Dominating Set `(G, k)` to k-DSKP: as above with the exact-size variant.
pub fn reduce_ds_to_kdskp(g: &Graph, k: usize) -> Result<DskpInstance> {
    check_k(g, k)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = g.n();
    DskpInstance::new(g.clone(), vec![1; n], vec![1; n], k as u64, k as u64, Variant::ExactK(k))
}

/// Weights on the X copies in the bipartite construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BipartiteWeights {
    /// X copies weigh `s + 1`, so no solution can afford one and the Y copies
    /// must dominate X on their own.
    #[default]
    Guarded,
    /// X copies weigh 0. Any instance with a knapsack-feasible vertex subset
    /// then becomes a yes-instance (select all of X, `z`, and that subset), so
    /// this form is not answer-preserving.
    Zero,
}

/// Vertex layout of [`reduce_dskp_to_bipartite`]: X copy of `i` is `i`, the Y
/// copy is `n + i`, and the hub `z` is `2n`.
pub fn reduce_dskp_to_bipartite(inst: &DskpInstance, mode: BipartiteWeights) -> Result<DskpInstance> {
    if inst.variant != Variant::Plain {
        return Err(Error::UnsupportedVariant);
    }
    let n = inst.n();
    let x_weight = match mode {
        BipartiteWeights::Guarded => inst
            .capacity
            .checked_add(1)
            .ok_or_else(|| Error::InvalidParameter("capacity too large to guard".into()))?,
        BipartiteWeights::Zero => 0,
    };
    let z = 2 * n;
    let mut edges = Vec::with_capacity(n + 2 * inst.graph.m() + n);
    for i in 0..n {
        edges.push((i, n + i));
        edges.push((z, n + i));
    }
    for (i, j) in inst.graph.edges() {
        edges.push((i, n + j));
        edges.push((n + i, j));
    }
    let graph = Graph::from_edges(2 * n + 1, edges)?;
    let mut weights = vec![x_weight; n];
    weights.extend_from_slice(&inst.weights);
    weights.push(0);
    let mut profits = vec![0; n];
    profits.extend_from_slice(&inst.profits);
    profits.push(0);
    DskpInstance::new(graph, weights, profits, inst.capacity, inst.target, Variant::Plain)
}

/// Knapsack `(θ, p, b, q)` to DSKP on a star: zero-weight center, one leaf per item.
pub fn reduce_knapsack_to_star(items: &[(u64, u64)], b: u64, q: u64) -> Result<DskpInstance> {
    let n = items.len() + 1;
    let graph = Graph::from_edges(n, (1..n).map(|i| (0, i)))?;
    let mut weights = vec![0];
    let mut profits = vec![0];
    for &(w, p) in items {
        weights.push(w);
        profits.push(p);
    }
    DskpInstance::new(graph, weights, profits, b, q, Variant::Plain)
}

/// Vertex weights for the Upper Dominating Set reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UdsWeights {
    /// All zero: a minimal dominating set qualifies iff it has at least `k`
    /// vertices, which is exactly the upper-domination question.
    #[default]
    Zero,
    /// All one: only minimal dominating sets of size exactly `k` qualify. Not
    /// answer-preserving when minimal dominating set sizes skip `k`
    /// (e.g. `K_{1,3}` with `k = 2`).
    Unit,
    /// A seeded 0/1 split, for experimentation.
    Split(u64),
}

/// Upper Dominating Set `(G, k)` to minimal-DSKP: unit profits, `s = d = k`.
pub fn reduce_uds_to_minimal_dskp(g: &Graph, k: usize, weights: UdsWeights) -> Result<DskpInstance> {
    check_k(g, k)?;
    let n = g.n();
    let w = match weights {
        UdsWeights::Zero => vec![0; n],
        UdsWeights::Unit => vec![1; n],
        UdsWeights::Split(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n).map(|_| u64::from(rng.gen_bool(0.5))).collect()
        }
    };
    DskpInstance::new(g.clone(), w, vec![1; n], k as u64, k as u64, Variant::Minimal)
}

/// Unit-weight DSKP with `s = d = k` to weighted circuit satisfiability.
///
/// Gates `0..n` are `D_i = OR(x_i, x_b for b in N(u_i))`, gate `n` is
/// `D_out = AND(D_i)`, gate `n + 1` is `S_out = EXACTLY k (x_1..x_n)`, and the
/// output gate `n + 2` is `F_out = AND(D_out, S_out)`.
pub fn reduce_dskp_to_wcs(inst: &DskpInstance, k: usize) -> Result<Circuit> {
    let n = inst.n();
    if inst.weights.iter().any(|&w| w != 1) || inst.profits.iter().any(|&a| a != 1) {
        return Err(Error::InvalidParameter("circuit reduction needs unit weights and profits".into()));
    }
    if inst.capacity != k as u64 || inst.target != k as u64 {
        return Err(Error::InvalidParameter(format!("circuit reduction needs s = d = k = {k}")));
    }
    check_k(&inst.graph, k)?;
    let mut gates: Vec<Gate> = (0..n)
        .map(|i| {
            let mut operands = vec![Operand::Input(i)];
            operands.extend(inst.graph.neighbors(i).iter().map(|&b| Operand::Input(b)));
            Gate {
                kind: GateKind::Or,
                operands,
            }
        })
        .collect();
    gates.push(Gate {
        kind: GateKind::And,
        operands: (0..n).map(Operand::Gate).collect(),
    });
    gates.push(Gate {
        kind: GateKind::Exactly(k),
        operands: (0..n).map(Operand::Input).collect(),
    });
    gates.push(Gate {
        kind: GateKind::And,
        operands: vec![Operand::Gate(n), Operand::Gate(n + 1)],
    });
    let circuit = Circuit {
        inputs: n,
        gates,
        output: n + 2,
    };
    circuit.validate()?;
    Ok(circuit)
}

/// Parses a bare graph: `p graph <n> <m>` then `e <u> <v>` lines.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        let num = |t: &str| -> Result<usize> {
            t.parse().map_err(|_| parse_err(line, format!("bad number `{t}`")))
        };
        match toks.as_slice() {
            [] | ["c", ..] => {}
            ["p", "graph", n, m] if header.is_none() => header = Some((num(n)?, num(m)?)),
            ["e", u, v] if header.is_some() => edges.push((num(u)?, num(v)?)),
            _ => return Err(parse_err(line, "expected `p graph n m` or `e u v`")),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p graph` header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p graph {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// A 0/1 knapsack instance: item `(weight, profit)` pairs, capacity, target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Knapsack {
    pub items: Vec<(u64, u64)>,
    pub capacity: u64,
    pub target: u64,
}

/// Parses `p knapsack <items> <b> <q>` then one `i <weight> <profit>` line per item.
pub fn parse_knapsack(text: &str) -> Result<Knapsack> {
    let mut header: Option<(usize, u64, u64)> = None;
    let mut items = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        let num = |t: &str| -> Result<u64> {
            t.parse().map_err(|_| parse_err(line, format!("bad number `{t}`")))
        };
        match toks.as_slice() {
            [] | ["c", ..] => {}
            ["p", "knapsack", k, b, q] if header.is_none() => {
                header = Some((num(k)? as usize, num(b)?, num(q)?))
            }
            ["i", w, p] if header.is_some() => items.push((num(w)?, num(p)?)),
            _ => return Err(parse_err(line, "expected `p knapsack k b q` or `i w p`")),
        }
    }
    let (count, capacity, target) = header.ok_or_else(|| parse_err(0, "missing `p knapsack` header"))?;
    if items.len() != count {
        return Err(parse_err(0, format!("header declares {count} items, found {}", items.len())));
    }
    Ok(Knapsack {
        items,
        capacity,
        target,
    })
}

pub fn write_knapsack(k: &Knapsack) -> String {
    let mut out = format!("p knapsack {} {} {}\n", k.items.len(), k.capacity, k.target);
    for (w, p) in &k.items {
        writeln!(out, "i {w} {p}").unwrap();
    }
    out
}

pub fn eval_circuit(c: &Circuit, assignment: &[bool]) -> Result<bool> {
    c.eval(assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{figure1, star_graph};
    use crate::oracle::{knapsack_01, oracle_decide, oracle_pareto};

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn yes(inst: &DskpInstance) -> bool {
        oracle_decide(inst).unwrap().yes
    }

    #[test]
    fn ds_examples() {
        let t = reduce_ds_to_dskp(&k3(), 1).unwrap();
        assert_eq!((t.capacity, t.target), (1, 1));
        assert!(yes(&t));
        let t = reduce_ds_to_dskp(&p3(), 1).unwrap();
        assert_eq!(oracle_decide(&t).unwrap().witness.unwrap().to_vec(), vec![1]);
        assert!(!yes(&reduce_ds_to_dskp(&Graph::empty(3), 2).unwrap()));
        assert!(reduce_ds_to_dskp(&k3(), 4).is_err());
    }

    #[test]
    fn kds_examples() {
        assert!(yes(&reduce_ds_to_kdskp(&k3(), 1).unwrap()));
        assert!(yes(&reduce_ds_to_kdskp(&p3(), 2).unwrap()));
        let t = reduce_ds_to_kdskp(&Graph::empty(3), 2).unwrap();
        assert_eq!(t.variant, Variant::ExactK(2));
        assert!(!yes(&t));
        assert!(reduce_ds_to_kdskp(&k3(), 0).is_err());
    }

    #[test]
    fn bipartite_examples() {
        let fig = figure1();
        let b = reduce_dskp_to_bipartite(&fig, BipartiteWeights::Guarded).unwrap();
        assert_eq!(b.n(), 13);
        assert!(b.graph.is_bipartite());
        assert!(!yes(&fig));
        assert!(!yes(&b));

        let tri = reduce_ds_to_dskp(&k3(), 1).unwrap();
        let b = reduce_dskp_to_bipartite(&tri, BipartiteWeights::Guarded).unwrap();
        assert!(b.graph.is_bipartite());
        assert!(yes(&tri) && yes(&b));
    }

    #[test]
    fn zero_weight_bipartite_form_breaks_figure1() {
        // all of X plus z plus four unit leaves: weight 4, profit 4
        let b = reduce_dskp_to_bipartite(&figure1(), BipartiteWeights::Zero).unwrap();
        assert!(yes(&b));
    }

    #[test]
    fn star_examples() {
        let t = reduce_knapsack_to_star(&[(2, 3), (3, 4)], 5, 7).unwrap();
        assert!(yes(&t));
        assert_eq!(oracle_pareto(&t).unwrap().pairs(), knapsack_01(&[2, 3], &[3, 4], 5).pairs());
        let t = reduce_knapsack_to_star(&[], 0, 0).unwrap();
        assert_eq!(t.n(), 1);
        assert!(yes(&t));
        assert!(!yes(&reduce_knapsack_to_star(&[(7, 9)], 5, 1).unwrap()));
    }

    #[test]
    fn uds_examples() {
        let t = reduce_uds_to_minimal_dskp(&p3(), 2, UdsWeights::default()).unwrap();
        assert_eq!(t.variant, Variant::Minimal);
        assert!(yes(&t));
        assert!(!yes(&reduce_uds_to_minimal_dskp(&k3(), 2, UdsWeights::default()).unwrap()));
        assert!(yes(&reduce_uds_to_minimal_dskp(&star_graph(4), 3, UdsWeights::default()).unwrap()));
        // same three with unit weights agree
        assert!(yes(&reduce_uds_to_minimal_dskp(&p3(), 2, UdsWeights::Unit).unwrap()));
        assert!(!yes(&reduce_uds_to_minimal_dskp(&k3(), 2, UdsWeights::Unit).unwrap()));
        assert!(yes(&reduce_uds_to_minimal_dskp(&star_graph(4), 3, UdsWeights::Unit).unwrap()));
    }

    #[test]
    fn unit_weight_uds_form_misses_skipped_sizes() {
        // K_{1,3}: minimal dominating sets have sizes 1 and 3, upper domination is 3
        let star = star_graph(4);
        assert_eq!(crate::oracle::oracle_upper_domination(&star).unwrap(), 3);
        assert!(!yes(&reduce_uds_to_minimal_dskp(&star, 2, UdsWeights::Unit).unwrap()));
        assert!(yes(&reduce_uds_to_minimal_dskp(&star, 2, UdsWeights::Zero).unwrap()));
    }

    fn satisfying_weight_k(c: &Circuit, k: usize) -> Vec<Vec<bool>> {
        (0u64..1 << c.inputs)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..c.inputs).map(|i| m >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|a| eval_circuit(c, a).unwrap())
            .collect()
    }

    #[test]
    fn wcs_examples() {
        let c = reduce_dskp_to_wcs(&reduce_ds_to_dskp(&k3(), 1).unwrap(), 1).unwrap();
        assert_eq!(satisfying_weight_k(&c, 1).len(), 3);
        assert!(c.weft() <= 2);

        let c = reduce_dskp_to_wcs(&reduce_ds_to_dskp(&p3(), 1).unwrap(), 1).unwrap();
        assert_eq!(satisfying_weight_k(&c, 1), vec![vec![false, true, false]]);

        let c = reduce_dskp_to_wcs(&reduce_ds_to_dskp(&Graph::empty(2), 1).unwrap(), 1).unwrap();
        assert!(satisfying_weight_k(&c, 1).is_empty());
    }

    #[test]
    fn text_formats_round_trip() {
        let g = p3();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert!(parse_graph("p graph 2 1\n").is_err());
        let k = Knapsack {
            items: vec![(2, 3), (3, 4)],
            capacity: 5,
            target: 7,
        };
        assert_eq!(parse_knapsack(&write_knapsack(&k)).unwrap(), k);
        assert!(parse_knapsack("p knapsack 1 5 5\ni 1\n").is_err());
    }

    #[test]
    fn wcs_preconditions() {
        let fig = figure1();
        assert!(reduce_dskp_to_wcs(&fig, 4).is_err());
        let unit = reduce_ds_to_dskp(&k3(), 1).unwrap();
        assert!(reduce_dskp_to_wcs(&unit, 2).is_err());
    }
}
