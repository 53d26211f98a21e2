//! Tree decompositions: PACE `.td` ingestion, validation, a min-degree
//! heuristic, and conversion to nice form.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Sorted vertex lists.
    pub bags: Vec<Vec<usize>>,
    /// Adjacency over bag indices.
    pub tree: Vec<Vec<usize>>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<usize>>, tree_edges: &[(usize, usize)]) -> Result<Self> {
        let mut tree = vec![Vec::new(); bags.len()];
        for &(a, b) in tree_edges {
            if a >= bags.len() || b >= bags.len() || a == b {
                return Err(Error::BagTreeInvalid);
            }
            tree[a].push(b);
            tree[b].push(a);
        }
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Ok(Self { bags, tree })
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    fn tree_is_valid(&self) -> bool {
        let k = self.bags.len();
        if k == 0 {
            return false;
        }
        let edges: usize = self.tree.iter().map(Vec::len).sum::<usize>() / 2;
        edges == k - 1 && connected(&self.tree, 0, |_| true) == k
    }

    /// Checks the three decomposition properties, each reported distinctly.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if !self.tree_is_valid() {
            return Err(Error::BagTreeInvalid);
        }
        let n = g.n();
        let mut holders = vec![Vec::new(); n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return Err(Error::VertexOutOfRange { id: v, n });
                }
                holders[v].push(i);
            }
        }
        if let Some(v) = holders.iter().position(Vec::is_empty) {
            return Err(Error::VertexNotCovered(v));
        }
        for (u, v) in g.edges() {
            let covered = holders[u]
                .iter()
                .any(|&i| self.bags[i].binary_search(&v).is_ok());
            if !covered {
                return Err(Error::EdgeNotCovered(u, v));
            }
        }
        let mut member = vec![false; self.bags.len()];
        for (v, held) in holders.iter().enumerate() {
            for &i in held {
                member[i] = true;
            }
            if connected(&self.tree, held[0], |i| member[i]) != held.len() {
                return Err(Error::DisconnectedOccurrence(v));
            }
            for &i in held {
                member[i] = false;
            }
        }
        Ok(())
    }

    /// PACE 2017 text form (1-based ids on the wire).
    pub fn to_pace(&self, n: usize) -> String {
        let mut out = String::new();
        writeln!(out, "s td {} {} {}", self.bags.len(), self.max_bag_size(), n).unwrap();
        for (i, bag) in self.bags.iter().enumerate() {
            write!(out, "b {}", i + 1).unwrap();
            for v in bag {
                write!(out, " {}", v + 1).unwrap();
            }
            out.push('\n');
        }
        for (a, list) in self.tree.iter().enumerate() {
            for &b in list.iter().filter(|&&b| a < b) {
                writeln!(out, "{} {}", a + 1, b + 1).unwrap();
            }
        }
        out
    }
}

/// Number of nodes reachable from `start` through nodes accepted by `allow`.
fn connected(adj: &[Vec<usize>], start: usize, allow: impl Fn(usize) -> bool) -> usize {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(a) = queue.pop_front() {
        for &b in &adj[a] {
            if !seen[b] && allow(b) {
                seen[b] = true;
                count += 1;
                queue.push_back(b);
            }
        }
    }
    count
}

/// Parses a PACE `.td` file and validates it against `g`.
pub fn parse_td(text: &str, g: &Graph) -> Result<TreeDecomposition> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() || toks[0] == "c" {
            continue;
        }
        let num = |t: &str| -> Result<usize> {
            t.parse()
                .map_err(|_| parse_err(line, format!("bad number `{t}`")))
        };
        match toks[0] {
            "s" => {
                if header.is_some() || toks.len() != 5 || toks[1] != "td" {
                    return Err(parse_err(line, "expected `s td <bags> <width+1> <n>`"));
                }
                let h = (num(toks[2])?, num(toks[3])?, num(toks[4])?);
                bags = vec![None; h.0];
                header = Some(h);
            }
            "b" => {
                if header.is_none() {
                    return Err(parse_err(line, "bag before header"));
                }
                let id = num(toks.get(1).ok_or_else(|| parse_err(line, "missing bag id"))?)?;
                if id == 0 || id > bags.len() {
                    return Err(parse_err(line, format!("bag id {id} out of range")));
                }
                if bags[id - 1].is_some() {
                    return Err(parse_err(line, format!("duplicate bag {id}")));
                }
                let mut bag = Vec::new();
                for t in &toks[2..] {
                    let v = num(t)?;
                    if v == 0 {
                        return Err(parse_err(line, "vertex ids are 1-based"));
                    }
                    bag.push(v - 1);
                }
                bags[id - 1] = Some(bag);
            }
            _ => {
                if header.is_none() {
                    return Err(parse_err(line, "tree edge before header"));
                }
                if toks.len() != 2 {
                    return Err(parse_err(line, "expected a tree edge `<bag> <bag>`"));
                }
                let (a, b) = (num(toks[0])?, num(toks[1])?);
                if a == 0 || b == 0 || a > bags.len() || b > bags.len() {
                    return Err(parse_err(line, "tree edge references unknown bag"));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (_, declared, n) = header.ok_or_else(|| parse_err(0, "missing `s td` header"))?;
    if n != g.n() {
        return Err(Error::InvalidDecomposition(format!(
            "decomposition is for {n} vertices, graph has {}",
            g.n()
        )));
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse_err(0, format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let td = TreeDecomposition::new(bags, &edges)?;
    if td.max_bag_size() != declared {
        return Err(Error::InvalidDecomposition(format!(
            "header declares max bag size {declared}, found {}",
            td.max_bag_size()
        )));
    }
    td.validate(g)?;
    Ok(td)
}

/// Decomposition from a min-degree elimination ordering (ties to the smallest id).
pub fn heuristic_td(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition {
            bags: vec![Vec::new()],
            tree: vec![Vec::new()],
        };
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: BTreeSet<(usize, usize)> = (0..n).map(|v| (adj[v].len(), v)).collect();
    let mut position = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut bags = Vec::with_capacity(n);

    while let Some((_, v)) = alive.pop_first() {
        position[v] = order.len();
        order.push(v);
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        let mut bag = nbrs.clone();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        for &a in &nbrs {
            alive.remove(&(adj[a].len(), a));
            adj[a].remove(&v);
        }
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &nbrs {
            alive.insert((adj[a].len(), a));
        }
    }

    // bag i belongs to order[i]; its parent is the bag of the earliest-eliminated
    // later neighbor, or simply the next bag when it has none
    let mut edges = Vec::with_capacity(n - 1);
    for (i, bag) in bags.iter().enumerate().take(n - 1) {
        let parent = bag
            .iter()
            .map(|&u| position[u])
            .filter(|&p| p > i)
            .min()
            .unwrap_or(i + 1);
        edges.push((i, parent));
    }
    TreeDecomposition::new(bags, &edges).expect("elimination tree is well formed")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NodeKind,
    /// Sorted.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Rooted nice decomposition. Nodes are stored children-first; the root is
/// the last node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
}

impl NiceTreeDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn count(&self, pred: impl Fn(&NodeKind) -> bool) -> usize {
        self.nodes.iter().filter(|n| pred(&n.kind)).count()
    }

    /// Node-type invariants, empty root and leaf bags, and the underlying
    /// decomposition properties with respect to `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |i: usize, what: &str| {
            Err(Error::InvalidDecomposition(format!("nice node {i}: {what}")))
        };
        if self.nodes.is_empty() {
            return Err(Error::InvalidDecomposition("no nodes".into()));
        }
        if !self.nodes[self.root()].bag.is_empty() {
            return bad(self.root(), "root bag is not empty");
        }
        let mut parents = vec![0usize; self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            if node.children.iter().any(|&c| c >= i) {
                return bad(i, "child does not precede its parent");
            }
            for &c in &node.children {
                parents[c] += 1;
            }
            let child_bag = |k: usize| &self.nodes[node.children[k]].bag;
            match node.kind {
                NodeKind::Leaf => {
                    if !node.children.is_empty() || !node.bag.is_empty() {
                        return bad(i, "leaf must be childless with an empty bag");
                    }
                }
                NodeKind::Introduce(v) | NodeKind::Forget(v) => {
                    if node.children.len() != 1 {
                        return bad(i, "introduce/forget needs exactly one child");
                    }
                    let (big, small) = if matches!(node.kind, NodeKind::Introduce(_)) {
                        (&node.bag, child_bag(0))
                    } else {
                        (child_bag(0), &node.bag)
                    };
                    let mut expected = small.clone();
                    expected.push(v);
                    expected.sort_unstable();
                    if small.contains(&v) || *big != expected {
                        return bad(i, "bag does not differ from its child by exactly the vertex");
                    }
                }
                NodeKind::Join => {
                    if node.children.len() != 2
                        || *child_bag(0) != node.bag
                        || *child_bag(1) != node.bag
                    {
                        return bad(i, "join needs two children with identical bags");
                    }
                }
            }
        }
        let root = self.root();
        if parents[root] != 0 || parents[..root].iter().any(|&p| p != 1) {
            return Err(Error::InvalidDecomposition("node parent structure is not a tree".into()));
        }
        self.as_tree_decomposition().validate(g)
    }

    pub fn as_tree_decomposition(&self) -> TreeDecomposition {
        let edges: Vec<(usize, usize)> = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.children.iter().map(move |&c| (i, c)))
            .collect();
        TreeDecomposition::new(self.nodes.iter().map(|n| n.bag.clone()).collect(), &edges)
            .expect("node edges are in range")
    }
}

struct NiceBuilder {
    nodes: Vec<NiceNode>,
}

impl NiceBuilder {
    fn push(&mut self, kind: NodeKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    /// Walks from node `from` to a node whose bag is `target`, forgetting first.
    fn morph(&mut self, mut from: usize, target: &[usize]) -> usize {
        let current = self.nodes[from].bag.clone();
        let mut bag = current.clone();
        for &v in current.iter().filter(|v| target.binary_search(v).is_err()) {
            bag.retain(|&x| x != v);
            from = self.push(NodeKind::Forget(v), bag.clone(), vec![from]);
        }
        for &v in target.iter().filter(|v| current.binary_search(v).is_err()) {
            let pos = bag.partition_point(|&x| x < v);
            bag.insert(pos, v);
            from = self.push(NodeKind::Introduce(v), bag.clone(), vec![from]);
        }
        from
    }
}

/// Converts `td`, rooted at its first bag, into nice form of the same width.
/// Root and leaf bags are empty; between bags, forgets precede introduces.
pub fn make_nice(td: &TreeDecomposition) -> NiceTreeDecomposition {
    let k = td.bags.len();
    assert!(k > 0, "a decomposition has at least one bag");
    let mut parent = vec![usize::MAX; k];
    let mut order = Vec::with_capacity(k);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(t) = stack.pop() {
        order.push(t);
        for &c in &td.tree[t] {
            if parent[c] == usize::MAX {
                parent[c] = t;
                stack.push(c);
            }
        }
    }

    let mut b = NiceBuilder { nodes: Vec::new() };
    let mut top = vec![usize::MAX; k];
    for &t in order.iter().rev() {
        let bag = &td.bags[t];
        let branches: Vec<usize> = td.tree[t]
            .iter()
            .filter(|&&c| parent[c] == t && c != t)
            .map(|&c| b.morph(top[c], bag))
            .collect();
        top[t] = match branches.split_first() {
            None => {
                let leaf = b.push(NodeKind::Leaf, Vec::new(), Vec::new());
                b.morph(leaf, bag)
            }
            Some((&first, rest)) => rest.iter().fold(first, |acc, &other| {
                b.push(NodeKind::Join, bag.clone(), vec![acc, other])
            }),
        };
    }
    b.morph(top[0], &[]);
    NiceTreeDecomposition { nodes: b.nodes }
}
