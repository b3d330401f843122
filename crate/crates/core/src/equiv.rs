// SPDX-License-Identifier: Apache-2.0

//! Strong and weak equivalence checking, plus a brute-force SAT oracle.
//!
//! Inputs are simulated 64 at a time: each wire is a `u64` whose lane `k`
//! belongs to the `k`-th input of a batch. Inputs are numbered by reading
//! wire 0 as the most significant bit, so the first differing lane of the
//! first differing batch is the lexicographically smallest counterexample.
//! Batches are searched in parallel with an order-preserving `find_first`,
//! which makes the witness independent of the worker count.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bitstate::BitState;
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::formula::CnfFormula;

pub const DEFAULT_WIDTH_LIMIT: usize = 24;
pub const DEFAULT_SAT_VAR_LIMIT: usize = 24;

/// Lane `k` of `LANE_PATTERNS[s]` is bit `s` of `k`.
const LANE_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// Batches handed to a worker at a time.
const BLOCK: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every input.
    Exhaustive,
    /// `trials` pseudo-random inputs; trial `t` depends only on `(seed, t)`.
    Random { trials: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equivalent,
    /// An input on which the two circuits disagree.
    Inequivalent(BitState),
    /// Random mode found no difference in this many trials.
    Unknown {
        trials: u64,
    },
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent)
    }

    pub fn witness(&self) -> Option<&BitState> {
        match self {
            Verdict::Inequivalent(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatResult {
    Satisfiable(BitState),
    Unsatisfiable,
}

/// Equivalence checker configuration.
#[derive(Debug, Clone, Copy)]
pub struct Checker {
    /// Largest number of swept input bits accepted in exhaustive mode.
    pub width_limit: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl Default for Checker {
    fn default() -> Self {
        Checker {
            width_limit: DEFAULT_WIDTH_LIMIT,
            jobs: None,
        }
    }
}

/// Which inputs are swept and which outputs are compared.
#[derive(Debug, Clone, Copy)]
struct Window {
    width: usize,
    /// The first `inputs` wires vary; the rest are held at 0.
    inputs: usize,
    /// Only the first `outputs` wires are compared.
    outputs: usize,
}

impl Checker {
    pub fn with_jobs(jobs: usize) -> Self {
        Checker {
            jobs: Some(jobs.max(1)),
            ..Checker::default()
        }
    }

    /// Whether `c1` and `c2` compute the same bijection on all `2^b` inputs.
    pub fn strong_equiv(&self, c1: &Circuit, c2: &Circuit, mode: Mode) -> Result<Verdict> {
        let b = same_width(c1, c2)?;
        self.check(
            c1,
            c2,
            Window {
                width: b,
                inputs: b,
                outputs: b,
            },
            mode,
        )
    }

    pub fn is_identity_circuit(&self, c: &Circuit, mode: Mode) -> Result<Verdict> {
        self.strong_equiv(c, &Circuit::empty(c.width()), mode)
    }

    /// Compare with the last `b - n` inputs fixed to 0, looking only at the
    /// first `m` outputs. Witnesses are full-width inputs.
    pub fn weak_equiv(
        &self,
        c1: &Circuit,
        c2: &Circuit,
        n: usize,
        m: usize,
        mode: Mode,
    ) -> Result<Verdict> {
        let b = same_width(c1, c2)?;
        if n > b || m > b {
            return Err(Error::InvalidParameter(format!(
                "need n <= {b} and m <= {b}, got n={n}, m={m}"
            )));
        }
        self.check(
            c1,
            c2,
            Window {
                width: b,
                inputs: n,
                outputs: m,
            },
            mode,
        )
    }

    fn check(&self, c1: &Circuit, c2: &Circuit, window: Window, mode: Mode) -> Result<Verdict> {
        let found = match mode {
            Mode::Exhaustive => {
                if window.inputs > self.width_limit {
                    return Err(Error::WidthLimitExceeded {
                        width: window.inputs,
                        limit: self.width_limit,
                    });
                }
                self.run(|| exhaustive_search(c1, c2, window))
            }
            Mode::Random { trials, seed } => {
                self.run(|| random_search(c1, c2, window, trials, seed))
            }
        };
        let verdict = match (found, mode) {
            (Some(w), _) => Verdict::Inequivalent(w),
            (None, Mode::Exhaustive) => Verdict::Equivalent,
            (None, Mode::Random { trials, .. }) => Verdict::Unknown { trials },
        };
        if let Verdict::Inequivalent(w) = &verdict {
            let (o1, o2) = (c1.simulate(w)?, c2.simulate(w)?);
            assert!(
                o1.bits()[..window.outputs] != o2.bits()[..window.outputs],
                "witness {w} does not separate the circuits"
            );
        }
        Ok(verdict)
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.jobs {
            Some(jobs) => rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }

    /// Exhaustive assignment sweep; the witness is the smallest satisfying
    /// assignment with variable 1 most significant.
    pub fn brute_force_sat(&self, cnf: &CnfFormula, var_limit: usize) -> Result<SatResult> {
        let n = cnf.num_vars();
        if n > var_limit {
            return Err(Error::LimitExceeded {
                what: "variable count",
                value: n,
                limit: var_limit,
            });
        }
        let batches = batch_count(n);
        let found = self.run(|| {
            (0..batches).into_par_iter().find_map_first(|k| {
                let words: Vec<u64> = (0..n).map(|w| sweep_word(k, n - 1 - w)).collect();
                let mut sat = lane_mask(n, k);
                for clause in cnf.clauses() {
                    let mut any = 0u64;
                    for lit in clause {
                        let word = words[lit.variable() - 1];
                        any |= if lit.is_negated() { !word } else { word };
                    }
                    sat &= any;
                }
                (sat != 0).then(|| k * 64 + u64::from(sat.trailing_zeros()))
            })
        });
        Ok(match found {
            Some(index) => {
                let witness = BitState::from_index(index, n);
                assert!(cnf.eval(&witness)?, "witness {witness} does not satisfy");
                SatResult::Satisfiable(witness)
            }
            None => SatResult::Unsatisfiable,
        })
    }
}

fn same_width(c1: &Circuit, c2: &Circuit) -> Result<usize> {
    if c1.width() != c2.width() {
        return Err(Error::WidthMismatch(c1.width(), c2.width()));
    }
    Ok(c1.width())
}

fn batch_count(bits: usize) -> u64 {
    if bits <= 6 {
        1
    } else {
        1u64 << (bits - 6)
    }
}

/// Valid lanes of batch `k` when sweeping `bits` bits.
fn lane_mask(bits: usize, k: u64) -> u64 {
    debug_assert!(bits > 6 || k == 0);
    if bits >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u64 << bits)) - 1
    }
}

/// Word for the input bit of weight `2^shift` across batch `k`.
fn sweep_word(k: u64, shift: usize) -> u64 {
    if shift < 6 {
        LANE_PATTERNS[shift]
    } else if (k >> (shift - 6)) & 1 == 1 {
        u64::MAX
    } else {
        0
    }
}

/// Lanes whose compared outputs differ.
fn simulate_pair(
    c1: &Circuit,
    c2: &Circuit,
    w1: &mut [u64],
    w2: &mut [u64],
    outputs: usize,
) -> u64 {
    w2.copy_from_slice(w1);
    c1.simulate_words(w1);
    c2.simulate_words(w2);
    w1[..outputs]
        .iter()
        .zip(&w2[..outputs])
        .fold(0, |acc, (a, b)| acc | (a ^ b))
}

fn exhaustive_search(c1: &Circuit, c2: &Circuit, window: Window) -> Option<BitState> {
    let Window {
        width,
        inputs,
        outputs,
    } = window;
    let batches = batch_count(inputs);
    let blocks = batches.div_ceil(BLOCK);
    let index = (0..blocks).into_par_iter().find_map_first(|block| {
        let mut w1 = vec![0u64; width];
        let mut w2 = vec![0u64; width];
        let end = ((block + 1) * BLOCK).min(batches);
        (block * BLOCK..end).find_map(|k| {
            for (w, word) in w1.iter_mut().enumerate() {
                *word = if w < inputs {
                    sweep_word(k, inputs - 1 - w)
                } else {
                    0
                };
            }
            let diff = simulate_pair(c1, c2, &mut w1, &mut w2, outputs) & lane_mask(inputs, k);
            (diff != 0).then(|| k * 64 + u64::from(diff.trailing_zeros()))
        })
    })?;
    let mut bits = BitState::from_index(index, inputs).bits().to_vec();
    bits.resize(width, false);
    Some(BitState::from_bits(bits))
}

fn random_search(
    c1: &Circuit,
    c2: &Circuit,
    window: Window,
    trials: u64,
    seed: u64,
) -> Option<BitState> {
    let Window {
        width,
        inputs,
        outputs,
    } = window;
    let batches = trials.div_ceil(64);
    let fill = |k: u64, words: &mut [u64]| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Each batch owns a disjoint stretch of the key stream.
        rng.set_word_pos(u128::from(k) * 2 * inputs as u128);
        for (w, word) in words.iter_mut().enumerate() {
            *word = if w < inputs { rng.next_u64() } else { 0 };
        }
    };
    let (k, lane) = (0..batches.div_ceil(BLOCK))
        .into_par_iter()
        .find_map_first(|block| {
            let mut w1 = vec![0u64; width];
            let mut w2 = vec![0u64; width];
            let end = ((block + 1) * BLOCK).min(batches);
            (block * BLOCK..end).find_map(|k| {
                fill(k, &mut w1);
                let live = trials - k * 64;
                let mask = if live >= 64 {
                    u64::MAX
                } else {
                    (1u64 << live) - 1
                };
                let diff = simulate_pair(c1, c2, &mut w1, &mut w2, outputs) & mask;
                (diff != 0).then(|| (k, diff.trailing_zeros()))
            })
        })?;
    let mut words = vec![0u64; width];
    fill(k, &mut words);
    Some(BitState::from_bits(
        words.iter().map(|w| (w >> lane) & 1 == 1).collect(),
    ))
}

pub fn strong_equiv(c1: &Circuit, c2: &Circuit, mode: Mode) -> Result<Verdict> {
    Checker::default().strong_equiv(c1, c2, mode)
}

pub fn is_identity_circuit(c: &Circuit, mode: Mode) -> Result<Verdict> {
    Checker::default().is_identity_circuit(c, mode)
}

pub fn weak_equiv(c1: &Circuit, c2: &Circuit, n: usize, m: usize, mode: Mode) -> Result<Verdict> {
    Checker::default().weak_equiv(c1, c2, n, m, mode)
}

pub fn brute_force_sat(cnf: &CnfFormula) -> Result<SatResult> {
    Checker::default().brute_force_sat(cnf, DEFAULT_SAT_VAR_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;
    use crate::compile::unsat_gadget;
    use crate::formula::parse_dimacs;

    fn fredkin3() -> Circuit {
        Circuit::new(3, vec![Gate::fredkin(0, 1, 2).unwrap()]).unwrap()
    }

    #[test]
    fn lane_patterns_encode_lane_index() {
        for lane in 0..64u64 {
            for (s, pat) in LANE_PATTERNS.iter().enumerate() {
                assert_eq!((pat >> lane) & 1, (lane >> s) & 1);
            }
        }
    }

    #[test]
    fn self_equivalence() {
        let c = fredkin3();
        assert_eq!(
            strong_equiv(&c, &c, Mode::Exhaustive).unwrap(),
            Verdict::Equivalent
        );
        assert_eq!(
            strong_equiv(
                &c,
                &c,
                Mode::Random {
                    trials: 100,
                    seed: 1
                }
            )
            .unwrap(),
            Verdict::Unknown { trials: 100 }
        );
    }

    #[test]
    fn fredkin_vs_toffoli_translation() {
        let c = fredkin3();
        let t = c.fredkin_to_toffoli().unwrap();
        assert_eq!(
            strong_equiv(&c, &t, Mode::Exhaustive).unwrap(),
            Verdict::Equivalent
        );
    }

    #[test]
    fn smallest_witness_is_reported() {
        // Differs from identity exactly on 101 and 110.
        let v = is_identity_circuit(&fredkin3(), Mode::Exhaustive).unwrap();
        assert_eq!(v, Verdict::Inequivalent("101".parse().unwrap()));
    }

    #[test]
    fn satisfiable_gadget_witness() {
        let cnf = parse_dimacs("p cnf 1 1\n1 0").unwrap();
        let g = unsat_gadget(&cnf).unwrap();
        let v = strong_equiv(&g, &Circuit::empty(7), Mode::Exhaustive).unwrap();
        let w = v.witness().expect("inequivalent");
        assert!(w.get(6) && w.get(5));
        assert_eq!(w.to_string(), "0000111");
    }

    #[test]
    fn identity_checks() {
        assert!(is_identity_circuit(&Circuit::empty(5), Mode::Exhaustive)
            .unwrap()
            .is_equivalent());
        let c = Circuit::new(
            4,
            vec![
                Gate::fredkin(0, 1, 2).unwrap(),
                Gate::toffoli(3, 1, 0).unwrap(),
                Gate::fredkin(2, 3, 0).unwrap(),
            ],
        )
        .unwrap();
        let round = c.concat(&c.inverse()).unwrap();
        assert!(is_identity_circuit(&round, Mode::Exhaustive)
            .unwrap()
            .is_equivalent());
    }

    #[test]
    fn weak_separation() {
        // Differs only by a swap among wires 2 and 3, both ignored when m = 2.
        let base = Circuit::new(4, vec![Gate::fredkin(0, 1, 2).unwrap()]).unwrap();
        let mut other = base.clone();
        other.push(Gate::fredkin(0, 2, 3).unwrap()).unwrap();
        assert!(weak_equiv(&base, &other, 4, 2, Mode::Exhaustive)
            .unwrap()
            .is_equivalent());
        let strong = strong_equiv(&base, &other, Mode::Exhaustive).unwrap();
        assert!(strong.witness().is_some());
        // n = b, m = b coincides with strong equivalence.
        assert_eq!(
            weak_equiv(&base, &other, 4, 4, Mode::Exhaustive).unwrap(),
            strong
        );
    }

    #[test]
    fn weak_fixes_trailing_inputs_to_zero() {
        // Toffoli on controls 0,1 targeting 2 vs nothing: with n = 1 wire 1 is
        // held at 0 so the gate never fires.
        let t = Circuit::new(3, vec![Gate::toffoli(0, 1, 2).unwrap()]).unwrap();
        let e = Circuit::empty(3);
        assert!(weak_equiv(&t, &e, 1, 3, Mode::Exhaustive)
            .unwrap()
            .is_equivalent());
        let v = weak_equiv(&t, &e, 2, 3, Mode::Exhaustive).unwrap();
        assert_eq!(v, Verdict::Inequivalent("110".parse().unwrap()));
    }

    #[test]
    fn parameter_errors() {
        let c = fredkin3();
        assert!(matches!(
            strong_equiv(&c, &Circuit::empty(4), Mode::Exhaustive),
            Err(Error::WidthMismatch(3, 4))
        ));
        assert!(matches!(
            weak_equiv(&c, &c, 4, 1, Mode::Exhaustive),
            Err(Error::InvalidParameter(_))
        ));
        let wide = Circuit::empty(30);
        assert!(matches!(
            is_identity_circuit(&wide, Mode::Exhaustive),
            Err(Error::WidthLimitExceeded {
                width: 30,
                limit: 24
            })
        ));
        assert_eq!(
            is_identity_circuit(
                &wide,
                Mode::Random {
                    trials: 10,
                    seed: 0
                }
            )
            .unwrap(),
            Verdict::Unknown { trials: 10 }
        );
    }

    #[test]
    fn random_mode_finds_gross_differences() {
        // Toffoli fires on a quarter of inputs.
        let t = Circuit::new(8, vec![Gate::toffoli(0, 1, 2).unwrap()]).unwrap();
        let v = is_identity_circuit(
            &t,
            Mode::Random {
                trials: 200,
                seed: 7,
            },
        )
        .unwrap();
        let w = v.witness().expect("found");
        assert!(w.get(0) && w.get(1));
        // Same seed, same witness.
        assert_eq!(
            is_identity_circuit(
                &t,
                Mode::Random {
                    trials: 200,
                    seed: 7
                }
            )
            .unwrap(),
            v
        );
    }

    #[test]
    fn sat_examples() {
        let one = parse_dimacs("p cnf 1 1\n1 0").unwrap();
        assert_eq!(
            brute_force_sat(&one).unwrap(),
            SatResult::Satisfiable("1".parse().unwrap())
        );
        let contra = parse_dimacs("p cnf 1 2\n1 0\n-1 0").unwrap();
        assert_eq!(brute_force_sat(&contra).unwrap(), SatResult::Unsatisfiable);
        let wide = parse_dimacs("p cnf 30 1\n30 0").unwrap();
        assert!(matches!(
            brute_force_sat(&wide),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn sat_witness_is_smallest() {
        // (x1 ∨ x3) ∧ ¬x2 over 8 vars: smallest satisfying has x1=0, x2=0, x3=1.
        let f = parse_dimacs("p cnf 8 2\n1 3 0\n-2 0").unwrap();
        match brute_force_sat(&f).unwrap() {
            SatResult::Satisfiable(w) => assert_eq!(w.to_string(), "00100000"),
            other => panic!("{other:?}"),
        }
    }
}
