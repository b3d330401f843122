// SPDX-License-Identifier: Apache-2.0

//! Turn a branching program into a Fredkin circuit and watch it permute the
//! five ancilla wires.
//!
//! cargo run --example fredkin_lemma

use revequiv::bp::{BranchingProgram, Instruction};
use revequiv::compile::bp_to_fredkin;
use revequiv::{BitState, Perm5};

fn main() {
    let p = |s: &str| s.parse::<Perm5>().unwrap();
    let program = BranchingProgram::new(
        2,
        vec![
            Instruction::new(1, Perm5::IDENTITY, p("(1 2 3)")).unwrap(),
            Instruction::new(2, p("(4 5)"), p("(1 5)")).unwrap(),
        ],
    )
    .unwrap();
    let (circuit, layout) = bp_to_fredkin(&program);
    println!("{}", layout.describe());
    println!(
        "{} Fredkin gates for {} instructions",
        circuit.len(),
        program.len()
    );

    // A single marked bit on wire 0 shows where element 1 is sent.
    for x in 0..4 {
        let inputs = BitState::from_index(x, 2);
        let sigma = program.eval(&inputs).unwrap();
        let state = layout
            .state([true, false, false, false, false], &inputs, true)
            .unwrap();
        let out = circuit.simulate(&state).unwrap();
        println!("inputs {inputs}: program {sigma:<12} circuit {state} -> {out}");
    }

    // With the one-wire at 0 the action is unspecified, but the wire itself is kept.
    let state = layout
        .state(
            [true, true, false, false, true],
            &"10".parse().unwrap(),
            false,
        )
        .unwrap();
    let out = circuit.simulate(&state).unwrap();
    println!(
        "one-wire 0: {state} -> {out} (one-wire kept: {})",
        out.get(layout.one_wire()) == state.get(layout.one_wire())
    );
}
