#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use dskp::decomposition::TreeDecomposition;
use dskp::{DskpInstance, Graph, ParetoSet, Variant};

pub fn weighted<R: Rng>(g: Graph, rng: &mut R, max_w: u64, max_a: u64, max_s: u64) -> DskpInstance {
    let n = g.n();
    let weights = (0..n).map(|_| rng.gen_range(0..=max_w)).collect();
    let profits = (0..n).map(|_| rng.gen_range(0..=max_a)).collect();
    let s = rng.gen_range(0..=max_s);
    DskpInstance::new(g, weights, profits, s, 0, Variant::Plain).unwrap()
}

/// Every witness must be a dominating set whose totals match its pair.
pub fn check_witnesses(inst: &DskpInstance, frontier: &ParetoSet) {
    for pair in frontier {
        let set = pair.witness.as_ref().expect("witness tracked");
        assert!(inst.graph.is_dominating_set(set), "{set:?} does not dominate");
        assert_eq!(inst.totals(set), (pair.weight, pair.profit));
    }
}

/// A random valid decomposition of a random graph: each vertex occupies a
/// random connected subtree of a random bag tree, and edges are drawn only
/// between vertices sharing a bag.
pub fn random_decomposition<R: Rng>(rng: &mut R, n: usize, bags: usize) -> (Graph, TreeDecomposition) {
    let bags = bags.max(1);
    let tree_edges: Vec<(usize, usize)> = (1..bags).map(|b| (rng.gen_range(0..b), b)).collect();
    let mut adj = vec![Vec::new(); bags];
    for &(a, b) in &tree_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut contents = vec![Vec::new(); bags];
    for v in 0..n {
        let start = rng.gen_range(0..bags);
        let mut occupied = vec![start];
        let grow = rng.gen_range(0..3);
        for _ in 0..grow {
            let &from = occupied.choose(rng).unwrap();
            let &to = match adj[from].choose(rng) {
                Some(t) => t,
                None => continue,
            };
            if !occupied.contains(&to) {
                occupied.push(to);
            }
        }
        for b in occupied {
            contents[b].push(v);
        }
    }
    let mut edges = std::collections::BTreeSet::new();
    for bag in &contents {
        for (i, &u) in bag.iter().enumerate() {
            for &v in &bag[i + 1..] {
                if rng.gen_bool(0.5) {
                    edges.insert((u.min(v), u.max(v)));
                }
            }
        }
    }
    let g = Graph::from_edges(n, edges).unwrap();
    let td = TreeDecomposition::new(contents, &tree_edges).unwrap();
    (g, td)
}
