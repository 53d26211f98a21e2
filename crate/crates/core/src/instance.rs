//! DSKP instances and their line-oriented text format.
//!
//! ```text
//! c optional comments anywhere
//! p dskp <n> <m> <s> <d>
//! k <k>            (exact-size variant) | minimal (minimal variant)
//! v <id> <weight> <profit>    n lines
//! e <u> <v>                   m lines
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    /// Any dominating set.
    Plain,
    /// Dominating sets of exactly `k` vertices.
    ExactK(usize),
    /// Minimal dominating sets.
    Minimal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DskpInstance {
    pub graph: Graph,
    pub weights: Vec<u64>,
    pub profits: Vec<u64>,
    pub capacity: u64,
    pub target: u64,
    pub variant: Variant,
}

impl DskpInstance {
    pub fn new(
        graph: Graph,
        weights: Vec<u64>,
        profits: Vec<u64>,
        capacity: u64,
        target: u64,
        variant: Variant,
    ) -> Result<Self> {
        let inst = Self {
            graph,
            weights,
            profits,
            capacity,
            target,
            variant,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.graph.n();
        if self.weights.len() != n || self.profits.len() != n {
            return Err(Error::InvalidInstance(format!(
                "{} weights and {} profits for {} vertices",
                self.weights.len(),
                self.profits.len(),
                n
            )));
        }
        if let Variant::ExactK(k) = self.variant {
            if k == 0 || k > n {
                return Err(Error::InvalidInstance(format!(
                    "exact size k = {k} outside 1..={n}"
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn total_profit(&self) -> u64 {
        self.profits.iter().sum()
    }

    /// `(Σw, Σα)` over `set`.
    pub fn totals(&self, set: &VertexSet) -> (u64, u64) {
        set.iter()
            .fold((0, 0), |(w, a), v| (w + self.weights[v], a + self.profits[v]))
    }

    /// Checks the variant predicate plus both knapsack conditions.
    pub fn is_solution(&self, set: &VertexSet) -> bool {
        let (w, a) = self.totals(set);
        w <= self.capacity && a >= self.target && self.satisfies_variant(set)
    }

    pub fn satisfies_variant(&self, set: &VertexSet) -> bool {
        match self.variant {
            Variant::Plain => self.graph.is_dominating_set(set),
            Variant::ExactK(k) => set.count() == k && self.graph.is_dominating_set(set),
            Variant::Minimal => self.graph.is_minimal_dominating_set(set),
        }
    }

    pub fn with_budget(mut self, capacity: u64, target: u64) -> Self {
        self.capacity = capacity;
        self.target = target;
        self
    }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

fn non_negative(tok: Option<&str>, line: usize, what: &'static str, vertex: usize) -> Result<u64> {
    let value: i128 = field(tok, line, what)?;
    if value < 0 {
        return Err(Error::Negative { what, vertex });
    }
    u64::try_from(value).map_err(|_| parse_err(line, format!("{what} too large")))
}

pub fn parse_instance(text: &str) -> Result<DskpInstance> {
    let mut header: Option<(usize, usize, u64, u64)> = None;
    let mut variant = Variant::Plain;
    let mut variant_seen = false;
    let mut body_started = false;
    let mut weights: Vec<Option<(u64, u64)>> = Vec::new();
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        if kind == "c" {
            continue;
        }
        if header.is_none() && kind != "p" {
            return Err(parse_err(line, "expected `p dskp` header"));
        }
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                if toks.next() != Some("dskp") {
                    return Err(parse_err(line, "header must start with `p dskp`"));
                }
                let n: usize = field(toks.next(), line, "vertex count")?;
                let m: usize = field(toks.next(), line, "edge count")?;
                let s: i128 = field(toks.next(), line, "capacity s")?;
                let d: i128 = field(toks.next(), line, "target d")?;
                if s < 0 || d < 0 {
                    return Err(parse_err(line, "s and d must be non-negative"));
                }
                header = Some((n, m, s as u64, d as u64));
                weights = vec![None; n];
            }
            "k" | "minimal" => {
                if variant_seen || body_started {
                    return Err(parse_err(line, "variant line must directly follow the header"));
                }
                variant_seen = true;
                variant = if kind == "k" {
                    Variant::ExactK(field(toks.next(), line, "k")?)
                } else {
                    Variant::Minimal
                };
            }
            "v" => {
                body_started = true;
                let n = weights.len();
                let id: usize = field(toks.next(), line, "vertex id")?;
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
                if weights[id].is_some() {
                    return Err(Error::DuplicateVertex(id));
                }
                let w = non_negative(toks.next(), line, "weight", id)?;
                let a = non_negative(toks.next(), line, "profit", id)?;
                weights[id] = Some((w, a));
            }
            "e" => {
                body_started = true;
                let u: usize = field(toks.next(), line, "edge endpoint")?;
                let v: usize = field(toks.next(), line, "edge endpoint")?;
                edges.push((u, v));
            }
            other => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }

    let (n, m, s, d) = header.ok_or_else(|| parse_err(0, "missing `p dskp` header"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let graph = Graph::from_edges(n, edges)?;
    let mut ws = Vec::with_capacity(n);
    let mut ps = Vec::with_capacity(n);
    for (v, entry) in weights.into_iter().enumerate() {
        let (w, a) = entry.ok_or(Error::MissingVertex(v))?;
        ws.push(w);
        ps.push(a);
    }
    DskpInstance::new(graph, ws, ps, s, d, variant)
}

/// Canonical text form; `parse_instance(&write_instance(x)) == x`.
pub fn write_instance(inst: &DskpInstance) -> String {
    let mut out = String::new();
    let g = &inst.graph;
    writeln!(out, "p dskp {} {} {} {}", g.n(), g.m(), inst.capacity, inst.target).unwrap();
    match inst.variant {
        Variant::Plain => {}
        Variant::ExactK(k) => writeln!(out, "k {k}").unwrap(),
        Variant::Minimal => out.push_str("minimal\n"),
    }
    for v in 0..g.n() {
        writeln!(out, "v {} {} {}", v, inst.weights[v], inst.profits[v]).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}
