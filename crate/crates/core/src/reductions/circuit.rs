//! Boolean circuits with OR, AND and exactly-k threshold gates.
//!
//! Text form:
//!
//! ```text
//! inputs <n>
//! gate <id> OR|AND: <operands>
//! gate <id> EXACTLY <k>: <operands>
//! output <id>
//! ```
//!
//! Operands are `x<i>` for inputs and bare gate ids. Gates are listed in
//! topological order with ids `0, 1, 2, ...`.

use std::fmt::Write as _;

use crate::error::{parse_err, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    Input(usize),
    Gate(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateKind {
    Or,
    And,
    Exactly(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    pub kind: GateKind,
    pub operands: Vec<Operand>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub inputs: usize,
    pub gates: Vec<Gate>,
    pub output: usize,
}

/// Gates with more than this many operands count as large for weft.
pub const SMALL_FAN_IN: usize = 2;

impl Circuit {
    pub fn validate(&self) -> Result<()> {
        if self.output >= self.gates.len() {
            return Err(Error::InvalidCircuit(format!("output gate {} missing", self.output)));
        }
        for (id, gate) in self.gates.iter().enumerate() {
            for op in &gate.operands {
                match *op {
                    Operand::Input(i) if i >= self.inputs => {
                        return Err(Error::InvalidCircuit(format!("gate {id} reads x{i}")));
                    }
                    Operand::Gate(j) if j >= id => {
                        return Err(Error::InvalidCircuit(format!(
                            "gate {id} reads gate {j}, which does not precede it"
                        )));
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// Gate-by-gate evaluation; `assignment.len()` must equal `inputs`.
    pub fn eval(&self, assignment: &[bool]) -> Result<bool> {
        if assignment.len() != self.inputs {
            return Err(Error::InvalidParameter(format!(
                "assignment has {} bits, circuit has {} inputs",
                assignment.len(),
                self.inputs
            )));
        }
        let mut values = Vec::with_capacity(self.gates.len());
        for gate in &self.gates {
            let read = |op: &Operand| match *op {
                Operand::Input(i) => assignment[i],
                Operand::Gate(j) => values[j],
            };
            let value = match gate.kind {
                GateKind::Or => gate.operands.iter().any(read),
                GateKind::And => gate.operands.iter().all(read),
                GateKind::Exactly(k) => gate.operands.iter().filter(|op| read(op)).count() == k,
            };
            values.push(value);
        }
        Ok(values[self.output])
    }

    /// Largest number of large gates on an input-to-output path.
    pub fn weft(&self) -> usize {
        self.path_metric(|g| usize::from(g.operands.len() > SMALL_FAN_IN))
    }

    /// Longest input-to-output path, counted in gates.
    pub fn depth(&self) -> usize {
        self.path_metric(|_| 1)
    }

    fn path_metric(&self, cost: impl Fn(&Gate) -> usize) -> usize {
        let mut best = Vec::with_capacity(self.gates.len());
        for gate in &self.gates {
            let below = gate
                .operands
                .iter()
                .map(|op| match *op {
                    Operand::Input(_) => 0,
                    Operand::Gate(j) => best[j],
                })
                .max()
                .unwrap_or(0);
            best.push(below + cost(gate));
        }
        best[self.output]
    }

    /// Some satisfying assignment with exactly `k` true inputs, by enumeration.
    pub fn weighted_satisfying(&self, k: usize) -> Result<Option<Vec<bool>>> {
        if self.inputs > 30 {
            return Err(Error::InstanceTooLarge {
                n: self.inputs,
                cap: 30,
            });
        }
        for mask in 0u64..(1u64 << self.inputs) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let assignment: Vec<bool> = (0..self.inputs).map(|i| mask >> i & 1 == 1).collect();
            if self.eval(&assignment)? {
                return Ok(Some(assignment));
            }
        }
        Ok(None)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("inputs {}\n", self.inputs);
        for (id, gate) in self.gates.iter().enumerate() {
            match gate.kind {
                GateKind::Or => write!(out, "gate {id} OR:").unwrap(),
                GateKind::And => write!(out, "gate {id} AND:").unwrap(),
                GateKind::Exactly(k) => write!(out, "gate {id} EXACTLY {k}:").unwrap(),
            }
            for op in &gate.operands {
                match op {
                    Operand::Input(i) => write!(out, " x{i}").unwrap(),
                    Operand::Gate(j) => write!(out, " {j}").unwrap(),
                }
            }
            out.push('\n');
        }
        writeln!(out, "output {}", self.output).unwrap();
        out
    }
}

pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let mut inputs = None;
    let mut gates = Vec::new();
    let mut output = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('c') {
            continue;
        }
        let num = |t: &str| -> Result<usize> {
            t.parse().map_err(|_| parse_err(line, format!("bad number `{t}`")))
        };
        let (head, tail) = match raw.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (raw, None),
        };
        let toks: Vec<&str> = head.split_whitespace().collect();
        match (toks.as_slice(), tail) {
            (["inputs", n], None) => inputs = Some(num(n)?),
            (["output", id], None) => output = Some(num(id)?),
            (["gate", id, kind @ ..], Some(ops)) => {
                if num(id)? != gates.len() {
                    return Err(parse_err(line, "gate ids must be consecutive from 0"));
                }
                let kind = match kind {
                    ["OR"] => GateKind::Or,
                    ["AND"] => GateKind::And,
                    ["EXACTLY", k] => GateKind::Exactly(num(k)?),
                    _ => return Err(parse_err(line, "unknown gate kind")),
                };
                let operands = ops
                    .split_whitespace()
                    .map(|t| match t.strip_prefix('x') {
                        Some(i) => num(i).map(Operand::Input),
                        None => num(t).map(Operand::Gate),
                    })
                    .collect::<Result<Vec<_>>>()?;
                gates.push(Gate { kind, operands });
            }
            _ => return Err(parse_err(line, "unrecognized circuit line")),
        }
    }
    let circuit = Circuit {
        inputs: inputs.ok_or_else(|| parse_err(0, "missing `inputs` line"))?,
        gates,
        output: output.ok_or_else(|| parse_err(0, "missing `output` line"))?,
    };
    circuit.validate()?;
    Ok(circuit)
}
