// SPDX-License-Identifier: Apache-2.0

//! Build the identity gadget for a DIMACS file and compare the identity
//! check with brute-force SAT.
//!
//! cargo run --example unsat_gadget -- crates/core/data/cnf/pigeonhole_3_2.cnf

use revequiv::compile::UnsatGadget;
use revequiv::equiv::{brute_force_sat, is_identity_circuit, Mode, SatResult, Verdict};
use revequiv::formula::parse_dimacs;

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable DIMACS file"),
        None => "p cnf 2 3\n1 2 0\n-1 0\n-2 0\n".to_string(),
    };
    let cnf = parse_dimacs(&text).expect("DIMACS");
    let gadget = UnsatGadget::build(&cnf).expect("gadget");
    for line in gadget.metadata() {
        println!("# {line}");
    }
    println!(
        "width {}, {} gates",
        gadget.circuit.width(),
        gadget.circuit.len()
    );

    let verdict =
        is_identity_circuit(&gadget.circuit, Mode::Exhaustive).expect("within width limit");
    match &verdict {
        Verdict::Equivalent => println!("gadget is the identity"),
        Verdict::Inequivalent(w) => println!("gadget moves input {w}"),
        Verdict::Unknown { .. } => unreachable!("exhaustive mode decides"),
    }
    match brute_force_sat(&cnf).expect("within variable limit") {
        SatResult::Satisfiable(w) => println!("CNF is satisfiable, e.g. {w}"),
        SatResult::Unsatisfiable => println!("CNF is unsatisfiable"),
    }
}
