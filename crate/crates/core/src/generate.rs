//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{DskpInstance, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Star,
    Path,
    RandomTree,
    Gnp,
    Split,
    Figure1,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "star" => Family::Star,
            "path" => Family::Path,
            "random-tree" => Family::RandomTree,
            "gnp" => Family::Gnp,
            "split" => Family::Split,
            "figure1" => Family::Figure1,
            other => return Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        })
    }
}

#[derive(Debug, Clone)]
pub struct GenParams {
    pub family: Family,
    pub n: usize,
    pub p: f64,
    pub wmax: u64,
    pub amax: u64,
    pub seed: u64,
    /// Defaults to half the total weight.
    pub capacity: Option<u64>,
    /// Defaults to a quarter of the total profit.
    pub target: Option<u64>,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            family: Family::Gnp,
            n: 10,
            p: 0.3,
            wmax: 10,
            amax: 10,
            seed: 0,
            capacity: None,
            target: None,
        }
    }
}

/// The 6-vertex star: center of weight and profit 5, five unit leaves, `s = d = 4`.
pub fn figure1() -> DskpInstance {
    let g = star_graph(6);
    let mut weights = vec![1; 6];
    weights[0] = 5;
    DskpInstance::new(g, weights.clone(), weights, 4, 4, Variant::Plain).expect("valid star")
}

pub fn generate(params: &GenParams) -> Result<DskpInstance> {
    if params.family == Family::Figure1 {
        return Ok(figure1());
    }
    if params.wmax == 0 || params.amax == 0 {
        return Err(Error::InvalidParameter("wmax and amax must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&params.p) {
        return Err(Error::InvalidParameter(format!("edge probability {} outside [0, 1]", params.p)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = params.n;
    let graph = match params.family {
        Family::Star => star_graph(n),
        Family::Path => path_graph(n),
        Family::RandomTree => random_tree(n, &mut rng),
        Family::Gnp => gnp(n, params.p, &mut rng),
        Family::Split => split_graph(n, params.p, &mut rng),
        Family::Figure1 => unreachable!(),
    };
    let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=params.wmax)).collect();
    let profits: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=params.amax)).collect();
    let s = params.capacity.unwrap_or(weights.iter().sum::<u64>() / 2);
    let d = params.target.unwrap_or(profits.iter().sum::<u64>() / 4);
    DskpInstance::new(graph, weights, profits, s, d, Variant::Plain)
}

/// Vertex 0 joined to every other vertex.
pub fn star_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (0, i))).expect("star edges are valid")
}

pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

/// Uniform random labelled tree via a Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return path_graph(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(std::cmp::Reverse(c));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a tree")
}

pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("gnp edges are valid")
}

/// G(n, p) resampled until connected.
pub fn connected_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let g = gnp(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Clique on the first half, independent set on the rest; each independent
/// vertex joins each clique vertex with probability `p`, and at least one.
pub fn split_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let clique = n.div_ceil(2);
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in u + 1..clique {
            edges.push((u, v));
        }
    }
    for v in clique..n {
        let mut any = false;
        for u in 0..clique {
            if rng.gen_bool(p) {
                edges.push((u, v));
                any = true;
            }
        }
        if !any {
            edges.push((rng.gen_range(0..clique), v));
        }
    }
    Graph::from_edges(n, edges).expect("split edges are valid")
}

/// A uniformly random vertex cover containing `base`: each other vertex is
/// added with probability one half.
pub fn random_cover_superset<R: Rng>(base: &[usize], n: usize, rng: &mut R) -> Vec<usize> {
    let mut out: Vec<usize> = base.to_vec();
    let mut rest: Vec<usize> = (0..n).filter(|v| !base.contains(v)).collect();
    rest.shuffle(rng);
    out.extend(rest.into_iter().filter(|_| rng.gen_bool(0.5)));
    out.sort_unstable();
    out
}
