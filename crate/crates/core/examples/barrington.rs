// SPDX-License-Identifier: Apache-2.0

//! Compile a formula into a width-5 branching program and evaluate it.
//!
//! cargo run --example barrington -- "(and (or x1 x2) -x3)"

use revequiv::bp::{barrington_compile, length_bound};
use revequiv::{BitState, Formula, Perm5};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(and (or x1 x2) -x3)".to_string());
    let formula: Formula = text.parse().expect("formula");
    let target: Perm5 = "(1 2 3 4 5)".parse().unwrap();
    let program = barrington_compile(&formula, &target).expect("compile");

    println!(
        "{formula}: depth {}, program length {} (bound {})",
        formula.depth(),
        program.len(),
        length_bound(formula.depth())
    );
    print!("{program}");

    let n = program.num_inputs();
    for x in 0..1u64 << n {
        let a = BitState::from_index(x, n);
        println!(
            "{a}  f={}  program={}",
            u8::from(formula.eval(&a).unwrap()),
            program.eval(&a).unwrap()
        );
    }
}
