// SPDX-License-Identifier: Apache-2.0

//! Deciding whether a reversible circuit is the identity is coNP-hard, and
//! this crate builds the reduction end to end at desk scale:
//!
//! 1. [`formula`] parses DIMACS CNF and balances it into a log-depth
//!    fan-in-2 formula.
//! 2. [`bp`] compiles that formula into a width-5 branching program over
//!    [`perm5::Perm5`] (Barrington's construction).
//! 3. [`compile`] turns the program into a Fredkin circuit and wraps it in a
//!    gadget that is the identity exactly when the CNF is unsatisfiable.
//! 4. [`equiv`] checks strong and weak equivalence by exhaustive or random
//!    bit-sliced simulation, and supplies a brute-force SAT oracle.
//!
//! ```
//! use revequiv::{compile::unsat_gadget, equiv::{is_identity_circuit, Mode}, formula::parse_dimacs};
//!
//! let cnf = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n").unwrap();
//! let gadget = unsat_gadget(&cnf).unwrap();
//! assert!(is_identity_circuit(&gadget, Mode::Exhaustive).unwrap().is_equivalent());
//! ```

pub mod bitstate;
pub mod bp;
pub mod circuit;
pub mod cli;
pub mod compile;
pub mod equiv;
pub mod error;
pub mod formula;
pub mod perm5;
pub mod random;

pub use bitstate::BitState;
pub use bp::{barrington_compile, BranchingProgram, Instruction};
pub use circuit::{Circuit, Gate, GateKind};
pub use compile::{bp_to_fredkin, unsat_gadget, UnsatGadget, WireLayout};
pub use equiv::{brute_force_sat, strong_equiv, weak_equiv, Checker, Mode, SatResult, Verdict};
pub use error::{Error, Result};
pub use formula::{cnf_to_formula, parse_dimacs, CnfFormula, Formula, Literal};
pub use perm5::{Perm5, Transposition};
