// SPDX-License-Identifier: Apache-2.0

//! Branching programs to Fredkin circuits, and the CNF identity gadget.
//!
//! A program on `n` inputs runs on `n + 6` wires: five permutation wires
//! (`0..5`), the inputs (`5..5 + n`), and a control wire at `n + 5` that the
//! construction assumes holds 1. Permutation element `k` lives on wire
//! `k - 1`, and applying `σ` moves the bit on wire `j - 1` to wire `σ(j) - 1`.
//!
//! The control wire is only ever used as a Fredkin control, so no gate can
//! change it, whatever it holds.

use crate::bitstate::BitState;
use crate::bp::{barrington_compile_with_inputs, BranchingProgram, Instruction};
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::formula::{cnf_to_formula, CnfFormula};
use crate::perm5::{Perm5, Transposition};

/// Upper bound on Fredkin gates emitted per instruction by [`triple_to_gates`]:
/// four transpositions for the 1-branch, plus two gates for each of at most
/// four transpositions of the 0-branch.
pub const GATES_PER_INSTRUCTION: usize = 12;

/// The 5-cycle the gadget compiles toward.
pub fn gadget_cycle() -> Perm5 {
    Perm5::cycle(&[1, 2, 3, 4, 5]).expect("valid cycle")
}

/// Wire assignment for a program with `n` inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WireLayout {
    num_inputs: usize,
}

impl WireLayout {
    pub fn new(num_inputs: usize) -> Self {
        WireLayout { num_inputs }
    }

    pub fn num_inputs(&self) -> usize {
        self.num_inputs
    }

    pub fn width(&self) -> usize {
        self.num_inputs + 6
    }

    /// Wire carrying permutation element `label` (1-based).
    pub fn perm_wire(&self, label: u8) -> usize {
        usize::from(label) - 1
    }

    pub fn perm_wires(&self) -> std::ops::Range<usize> {
        0..5
    }

    /// Wire carrying program input `i` (1-based).
    pub fn input_wire(&self, input: usize) -> Result<usize> {
        if input == 0 || input > self.num_inputs {
            return Err(Error::IndexOutOfRange {
                index: input,
                bound: self.num_inputs,
            });
        }
        Ok(4 + input)
    }

    pub fn input_wires(&self) -> std::ops::Range<usize> {
        5..5 + self.num_inputs
    }

    pub fn one_wire(&self) -> usize {
        self.num_inputs + 5
    }

    /// Full circuit state from its three parts.
    pub fn state(&self, perm_bits: [bool; 5], inputs: &BitState, one: bool) -> Result<BitState> {
        inputs.expect_len(self.num_inputs)?;
        let mut bits = Vec::with_capacity(self.width());
        bits.extend_from_slice(&perm_bits);
        bits.extend_from_slice(inputs.bits());
        bits.push(one);
        Ok(BitState::from_bits(bits))
    }

    /// The five permutation-wire bits of `state`.
    pub fn perm_bits(&self, state: &BitState) -> [bool; 5] {
        std::array::from_fn(|k| state.get(k))
    }

    /// `bits` after moving the bit on wire `j - 1` to wire `σ(j) - 1`.
    pub fn permute(perm: &Perm5, bits: [bool; 5]) -> [bool; 5] {
        let mut out = [false; 5];
        for (j, &b) in bits.iter().enumerate() {
            out[perm.apply0(j)] = b;
        }
        out
    }

    /// Comment lines describing the layout, for circuit file headers.
    pub fn describe(&self) -> String {
        let inputs = if self.num_inputs == 0 {
            "none".to_string()
        } else {
            format!("{}..{}", 5, 4 + self.num_inputs)
        };
        format!(
            "layout perm_wires=0..4 input_wires={inputs} one_wire={}",
            self.one_wire()
        )
    }
}

fn swap_gate(control: usize, layout: &WireLayout, t: Transposition) -> Gate {
    Gate::Fredkin {
        control,
        a: layout.perm_wire(t.a()),
        b: layout.perm_wire(t.b()),
    }
}

/// Fredkin gates realizing one instruction `(i, α, β)`.
///
/// The `β` part swaps each transposition of `β` under input `i`. The `α`
/// part follows each input-controlled swap of `α` with the same swap under
/// the one-wire, which nets a swap exactly when input `i` is 0.
pub fn triple_to_gates(ins: &Instruction, layout: &WireLayout) -> Result<Vec<Gate>> {
    let input = layout.input_wire(ins.input())?;
    let one = layout.one_wire();
    let mut gates = Vec::new();
    for t in ins.if_one().to_transpositions() {
        gates.push(swap_gate(input, layout, t));
    }
    for t in ins.if_zero().to_transpositions() {
        gates.push(swap_gate(input, layout, t));
        gates.push(swap_gate(one, layout, t));
    }
    Ok(gates)
}

/// A width `n + 6` Fredkin circuit that permutes the five permutation
/// wires by the program's value whenever the one-wire holds 1.
pub fn bp_to_fredkin(program: &BranchingProgram) -> (Circuit, WireLayout) {
    let layout = WireLayout::new(program.num_inputs());
    let mut circuit = Circuit::empty(layout.width());
    for ins in program.instructions() {
        let gates =
            triple_to_gates(ins, &layout).expect("program inputs are in range by construction");
        for g in gates {
            circuit.push(g).expect("layout wires are in range");
        }
    }
    (circuit, layout)
}

/// The identity gadget for a CNF, together with what it was built from.
#[derive(Debug, Clone)]
pub struct UnsatGadget {
    pub circuit: Circuit,
    pub layout: WireLayout,
    pub program: BranchingProgram,
    /// The controlled-cycle subcircuit, used forwards and then reversed.
    pub controlled_cycle: Circuit,
}

impl UnsatGadget {
    pub fn build(cnf: &CnfFormula) -> Result<Self> {
        let formula = cnf_to_formula(cnf);
        let program = barrington_compile_with_inputs(&formula, &gadget_cycle(), cnf.num_vars())?;
        let (controlled_cycle, layout) = bp_to_fredkin(&program);
        let one = layout.one_wire();
        let swap = Circuit::new(
            layout.width(),
            vec![Gate::fredkin(
                one,
                layout.perm_wire(1),
                layout.perm_wire(2),
            )?],
        )?;
        let circuit = swap
            .concat(&controlled_cycle)?
            .concat(&swap)?
            .concat(&controlled_cycle.inverse())?;
        Ok(UnsatGadget {
            circuit,
            layout,
            program,
            controlled_cycle,
        })
    }

    /// Header comments for the circuit file.
    pub fn metadata(&self) -> Vec<String> {
        vec![
            "unsat gadget: identity on all inputs iff the CNF is unsatisfiable".to_string(),
            format!("n={}", self.layout.num_inputs()),
            format!("bp_length={}", self.program.len()),
            self.layout.describe(),
        ]
    }
}

/// Fredkin circuit that is the identity on all `2^(n+6)` inputs exactly
/// when `cnf` is unsatisfiable.
pub fn unsat_gadget(cnf: &CnfFormula) -> Result<Circuit> {
    UnsatGadget::build(cnf).map(|g| g.circuit)
}
