// SPDX-License-Identifier: Apache-2.0

//! S5 arithmetic: products, commutator witnesses and transposition splits.
//!
//! cargo run --example perm5_algebra

use revequiv::perm5::{find_and_pair, find_conjugator, Perm5};

fn main() {
    let swap: Perm5 = "(1 2)".parse().unwrap();
    let alpha: Perm5 = "(1 2 3 4 5)".parse().unwrap();

    let w = swap
        .compose(&alpha)
        .compose(&swap)
        .compose(&alpha.inverse());
    println!(
        "(1 2)·{alpha}·(1 2)·{alpha}⁻¹ = {w}   identity? {}",
        w.is_identity()
    );

    let (g, d) = find_and_pair(&alpha).unwrap();
    println!(
        "AND pair for {alpha}: γ = {g}, δ = {d}, [γ, δ] = {}",
        g.commutator(&d)
    );

    let other: Perm5 = "(1 3 5 2 4)".parse().unwrap();
    let tau = find_conjugator(&alpha, &other).unwrap();
    println!("{alpha} conjugated by {tau} = {}", alpha.conjugate(&tau));

    let ts = alpha.to_transpositions();
    let parts: Vec<String> = ts
        .iter()
        .map(|t| format!("({} {})", t.a(), t.b()))
        .collect();
    println!("{alpha} = {}", parts.join(""));

    let five_cycles = Perm5::all().iter().filter(|p| p.is_five_cycle()).count();
    println!(
        "{five_cycles} five-cycles among {} permutations",
        Perm5::all().len()
    );
}
