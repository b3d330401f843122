// SPDX-License-Identifier: Apache-2.0

//! End to end over random 3-CNFs: gadget identity check against brute force.
//!
//! cargo run --release --example reduction_sweep -- 200

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use revequiv::compile::UnsatGadget;
use revequiv::equiv::{brute_force_sat, is_identity_circuit, Mode, SatResult};
use revequiv::random::random_kcnf;

fn main() {
    let count: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(100);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut unsat, mut longest) = (0, 0);
    for k in 0..count {
        let cnf = random_kcnf(&mut rng, 4, 4 + k % 14, 3);
        let gadget = UnsatGadget::build(&cnf).unwrap();
        let identity = is_identity_circuit(&gadget.circuit, Mode::Exhaustive)
            .unwrap()
            .is_equivalent();
        let is_unsat = brute_force_sat(&cnf).unwrap() == SatResult::Unsatisfiable;
        assert_eq!(
            identity,
            is_unsat,
            "reduction failed on\n{}",
            cnf.to_dimacs()
        );
        unsat += usize::from(is_unsat);
        longest = longest.max(gadget.program.len());
    }
    println!("{count} CNFs agree ({unsat} unsatisfiable); longest branching program {longest}");
}
