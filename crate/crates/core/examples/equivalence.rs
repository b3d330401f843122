// SPDX-License-Identifier: Apache-2.0

//! Strong, weak and randomized equivalence checks.
//!
//! cargo run --release --example equivalence

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use revequiv::equiv::{Checker, Mode};
use revequiv::random::random_circuit;
use revequiv::{Circuit, Gate};

fn main() {
    let fredkin = Circuit::new(3, vec![Gate::fredkin(0, 1, 2).unwrap()]).unwrap();
    let toffolis = fredkin.fredkin_to_toffoli().unwrap();
    print!("three-Toffoli form:\n{toffolis}");
    let checker = Checker::default();
    println!(
        "fredkin vs toffolis: {:?}",
        checker
            .strong_equiv(&fredkin, &toffolis, Mode::Exhaustive)
            .unwrap()
    );

    // Extra swap on wires 3 and 4 is invisible when only wires 0..3 are read.
    let a = Circuit::new(5, vec![Gate::fredkin(0, 1, 2).unwrap()]).unwrap();
    let mut b = a.clone();
    b.push(Gate::fredkin(0, 3, 4).unwrap()).unwrap();
    println!(
        "weak (5, 3): {:?}",
        checker.weak_equiv(&a, &b, 5, 3, Mode::Exhaustive).unwrap()
    );
    println!(
        "strong:      {:?}",
        checker.strong_equiv(&a, &b, Mode::Exhaustive).unwrap()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let big = random_circuit(&mut rng, 20, 1000);
    let padded = big
        .concat(&Circuit::new(20, vec![Gate::toffoli(1, 2, 3).unwrap(); 2]).unwrap())
        .unwrap();
    let start = std::time::Instant::now();
    let v = checker
        .strong_equiv(&big, &padded, Mode::Exhaustive)
        .unwrap();
    println!(
        "1000-gate width-20 exhaustive: {v:?} in {:.2?}",
        start.elapsed()
    );

    let wide = random_circuit(&mut rng, 40, 200);
    let v = checker
        .strong_equiv(
            &wide,
            &wide.inverse().inverse(),
            Mode::Random {
                trials: 100_000,
                seed: 9,
            },
        )
        .unwrap();
    println!("width-40 random mode: {v:?}");
}
