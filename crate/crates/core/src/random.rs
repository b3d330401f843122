// SPDX-License-Identifier: Apache-2.0

//! Random instance generators for tests, examples and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bp::{BranchingProgram, Instruction};
use crate::circuit::{Circuit, Gate};
use crate::formula::{CnfFormula, Formula, Literal};
use crate::perm5::Perm5;

pub fn random_literal<R: Rng + ?Sized>(rng: &mut R, num_vars: usize) -> Literal {
    Literal::new(rng.gen_range(1..=num_vars), rng.gen_bool(0.5)).expect("variable >= 1")
}

/// `num_clauses` clauses of `width` literals on distinct variables.
pub fn random_kcnf<R: Rng + ?Sized>(
    rng: &mut R,
    num_vars: usize,
    num_clauses: usize,
    width: usize,
) -> CnfFormula {
    assert!(width >= 1 && width <= num_vars);
    let vars: Vec<usize> = (1..=num_vars).collect();
    let clauses = (0..num_clauses)
        .map(|_| {
            vars.choose_multiple(rng, width)
                .map(|&v| Literal::new(v, rng.gen_bool(0.5)).expect("variable >= 1"))
                .collect()
        })
        .collect();
    CnfFormula::new(num_vars, clauses).expect("generated formula is valid")
}

/// Clause widths drawn from `1..=max_width`, literals may repeat.
pub fn random_cnf<R: Rng + ?Sized>(
    rng: &mut R,
    num_vars: usize,
    max_clauses: usize,
    max_width: usize,
) -> CnfFormula {
    let m = rng.gen_range(1..=max_clauses);
    let clauses = (0..m)
        .map(|_| {
            let w = rng.gen_range(1..=max_width);
            (0..w).map(|_| random_literal(rng, num_vars)).collect()
        })
        .collect();
    CnfFormula::new(num_vars, clauses).expect("generated formula is valid")
}

/// A fan-in-2 formula of depth at most `max_depth`.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, num_vars: usize, max_depth: usize) -> Formula {
    if max_depth == 0 || rng.gen_bool(0.2) {
        return Formula::Leaf(random_literal(rng, num_vars));
    }
    let l = random_formula(rng, num_vars, max_depth - 1);
    let r = random_formula(rng, num_vars, max_depth - 1);
    if rng.gen_bool(0.5) {
        Formula::and(l, r)
    } else {
        Formula::or(l, r)
    }
}

pub fn random_perm<R: Rng + ?Sized>(rng: &mut R) -> Perm5 {
    *Perm5::all().choose(rng).expect("nonempty")
}

pub fn random_bp<R: Rng + ?Sized>(rng: &mut R, num_inputs: usize, len: usize) -> BranchingProgram {
    let instructions = (0..len)
        .map(|_| {
            Instruction::new(
                rng.gen_range(1..=num_inputs),
                random_perm(rng),
                random_perm(rng),
            )
            .expect("input >= 1")
        })
        .collect();
    BranchingProgram::new(num_inputs, instructions).expect("inputs in range")
}

/// Uniform mix of Fredkin and Toffoli gates on random distinct wires.
pub fn random_circuit<R: Rng + ?Sized>(rng: &mut R, width: usize, gates: usize) -> Circuit {
    assert!(width >= 3);
    let wires: Vec<usize> = (0..width).collect();
    let mut c = Circuit::empty(width);
    for _ in 0..gates {
        let w: Vec<usize> = wires.choose_multiple(rng, 3).copied().collect();
        let g = if rng.gen_bool(0.5) {
            Gate::fredkin(w[0], w[1], w[2])
        } else {
            Gate::toffoli(w[0], w[1], w[2])
        };
        c.push(g.expect("distinct wires")).expect("wires in range");
    }
    c
}
