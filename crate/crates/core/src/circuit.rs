// SPDX-License-Identifier: Apache-2.0

//! Reversible circuits over Fredkin and Toffoli gates.
//!
//! Wires are numbered from 0. The text format is line oriented:
//!
//! ```text
//! # comment
//! circuit 3
//! fredkin 0 1 2
//! toffoli 0 1 2
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::bitstate::BitState;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    /// Swap `a` and `b` when `control` is 1.
    Fredkin { control: usize, a: usize, b: usize },
    /// Flip `target` when both controls are 1.
    Toffoli {
        control1: usize,
        control2: usize,
        target: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Fredkin,
    Toffoli,
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GateKind::Fredkin => "fredkin",
            GateKind::Toffoli => "toffoli",
        })
    }
}

impl Gate {
    pub fn fredkin(control: usize, a: usize, b: usize) -> Result<Self> {
        Self::checked(Gate::Fredkin { control, a, b })
    }

    pub fn toffoli(control1: usize, control2: usize, target: usize) -> Result<Self> {
        Self::checked(Gate::Toffoli {
            control1,
            control2,
            target,
        })
    }

    fn checked(gate: Gate) -> Result<Self> {
        let [x, y, z] = gate.wires();
        if x == y || y == z || x == z {
            return Err(Error::InvalidGate(format!("`{gate}` repeats a wire")));
        }
        Ok(gate)
    }

    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Fredkin { .. } => GateKind::Fredkin,
            Gate::Toffoli { .. } => GateKind::Toffoli,
        }
    }

    pub fn wires(&self) -> [usize; 3] {
        match *self {
            Gate::Fredkin { control, a, b } => [control, a, b],
            Gate::Toffoli {
                control1,
                control2,
                target,
            } => [control1, control2, target],
        }
    }

    pub fn apply(&self, state: &mut BitState) {
        match *self {
            Gate::Fredkin { control, a, b } => {
                if state.get(control) {
                    state.swap(a, b);
                }
            }
            Gate::Toffoli {
                control1,
                control2,
                target,
            } => {
                if state.get(control1) && state.get(control2) {
                    state.flip(target);
                }
            }
        }
    }

    /// Apply to 64 states at once; `words[w]` holds wire `w` of every lane.
    #[inline]
    pub fn apply_words(&self, words: &mut [u64]) {
        match *self {
            Gate::Fredkin { control, a, b } => {
                let diff = (words[a] ^ words[b]) & words[control];
                words[a] ^= diff;
                words[b] ^= diff;
            }
            Gate::Toffoli {
                control1,
                control2,
                target,
            } => {
                words[target] ^= words[control1] & words[control2];
            }
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.wires();
        write!(f, "{} {x} {y} {z}", self.kind())
    }
}

/// An ordered gate list on a fixed number of wires.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
}

/// Gate counts for a circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitStats {
    pub gate_count: usize,
    pub width: usize,
    pub per_kind: BTreeMap<GateKind, usize>,
}

impl CircuitStats {
    pub fn count(&self, kind: GateKind) -> usize {
        self.per_kind.get(&kind).copied().unwrap_or(0)
    }
}

impl Circuit {
    pub fn new(width: usize, gates: Vec<Gate>) -> Result<Self> {
        let mut c = Circuit::empty(width);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn empty(width: usize) -> Self {
        Circuit {
            width,
            gates: Vec::new(),
        }
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        let gate = Gate::checked(gate)?;
        if let Some(&w) = gate.wires().iter().find(|&&w| w >= self.width) {
            return Err(Error::InvalidGate(format!(
                "`{gate}` uses wire {w} on a width-{} circuit",
                self.width
            )));
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn simulate(&self, input: &BitState) -> Result<BitState> {
        input.expect_len(self.width)?;
        let mut state = input.clone();
        for g in &self.gates {
            g.apply(&mut state);
        }
        Ok(state)
    }

    /// Bit-sliced simulation of up to 64 inputs; `words.len()` must equal the width.
    pub fn simulate_words(&self, words: &mut [u64]) {
        assert_eq!(words.len(), self.width, "one word per wire");
        for g in &self.gates {
            g.apply_words(words);
        }
    }

    /// Both gate kinds are self-inverse, so reversing the list inverts the circuit.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            width: self.width,
            gates: self.gates.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, next: &Circuit) -> Result<Circuit> {
        if self.width != next.width {
            return Err(Error::WidthMismatch(self.width, next.width));
        }
        let mut gates = self.gates.clone();
        gates.extend_from_slice(&next.gates);
        Ok(Circuit {
            width: self.width,
            gates,
        })
    }

    /// Replace each Fredkin gate by three Toffoli gates sharing its control.
    pub fn fredkin_to_toffoli(&self) -> Result<Circuit> {
        let mut gates = Vec::with_capacity(self.gates.len() * 3);
        for g in &self.gates {
            match *g {
                Gate::Fredkin { control, a, b } => {
                    let t = |c2, t| Gate::Toffoli {
                        control1: control,
                        control2: c2,
                        target: t,
                    };
                    gates.extend([t(b, a), t(a, b), t(b, a)]);
                }
                Gate::Toffoli { .. } => return Err(Error::UnsupportedGate(g.to_string())),
            }
        }
        Ok(Circuit {
            width: self.width,
            gates,
        })
    }

    pub fn stats(&self) -> CircuitStats {
        let mut per_kind = BTreeMap::new();
        for g in &self.gates {
            *per_kind.entry(g.kind()).or_insert(0) += 1;
        }
        CircuitStats {
            gate_count: self.gates.len(),
            width: self.width,
            per_kind,
        }
    }

    /// Text form with leading `#` comment lines.
    pub fn to_text_with_comments(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            for line in c.lines() {
                out.push_str("# ");
                out.push_str(line);
                out.push('\n');
            }
        }
        out.push_str(&self.to_string());
        out
    }
}

pub fn simulate(circuit: &Circuit, input: &BitState) -> Result<BitState> {
    circuit.simulate(input)
}

pub fn invert_circuit(circuit: &Circuit) -> Circuit {
    circuit.inverse()
}

pub fn fredkin_to_toffoli(circuit: &Circuit) -> Result<Circuit> {
    circuit.fredkin_to_toffoli()
}

pub fn concat(first: &Circuit, second: &Circuit) -> Result<Circuit> {
    first.concat(second)
}

pub fn stats(circuit: &Circuit) -> CircuitStats {
    circuit.stats()
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "circuit {}", self.width)?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut circuit: Option<Circuit> = None;
        for (idx, raw) in s.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let Some(c) = circuit.as_mut() else {
                if fields.len() != 2 || fields[0] != "circuit" {
                    return Err(Error::parse(line_no, "expected `circuit <width>`"));
                }
                let width = fields[1]
                    .parse()
                    .map_err(|_| Error::parse(line_no, "bad width"))?;
                circuit = Some(Circuit::empty(width));
                continue;
            };
            if fields.len() != 4 {
                return Err(Error::parse(line_no, "expected `<kind> <w> <w> <w>`"));
            }
            let mut w = [0usize; 3];
            for (slot, tok) in w.iter_mut().zip(&fields[1..]) {
                *slot = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad wire `{tok}`")))?;
            }
            let gate = match fields[0] {
                "fredkin" => Gate::Fredkin {
                    control: w[0],
                    a: w[1],
                    b: w[2],
                },
                "toffoli" => Gate::Toffoli {
                    control1: w[0],
                    control2: w[1],
                    target: w[2],
                },
                other => return Err(Error::parse(line_no, format!("unknown gate `{other}`"))),
            };
            c.push(gate)
                .map_err(|e| Error::parse(line_no, e.to_string()))?;
        }
        circuit.ok_or_else(|| Error::parse(1, "missing `circuit <width>` header"))
    }
}
