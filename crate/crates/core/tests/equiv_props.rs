// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use revequiv::equiv::{Checker, Mode, Verdict};
use revequiv::random::random_circuit;
use revequiv::{BitState, Circuit};

/// Scalar sweep in index order; the first differing input.
fn oracle_first_difference(c1: &Circuit, c2: &Circuit, n: usize, m: usize) -> Option<BitState> {
    let b = c1.width();
    (0..1u64 << n).find_map(|x| {
        let mut bits = BitState::from_index(x, n).bits().to_vec();
        bits.resize(b, false);
        let s = BitState::from_bits(bits);
        let (o1, o2) = (c1.simulate(&s).unwrap(), c2.simulate(&s).unwrap());
        (o1.bits()[..m] != o2.bits()[..m]).then_some(s)
    })
}

fn pair() -> impl Strategy<Value = (Circuit, Circuit)> {
    (3usize..=11, 0usize..=12, 0usize..=3, any::<u64>()).prop_map(|(w, g, extra, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_circuit(&mut rng, w, g);
        // Small perturbations keep the two circuits close, so differences are sparse.
        let tail = random_circuit(&mut rng, w, extra);
        (c.clone(), c.concat(&tail).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn exhaustive_matches_scalar_oracle((c1, c2) in pair()) {
        let b = c1.width();
        let expected = match oracle_first_difference(&c1, &c2, b, b) {
            Some(w) => Verdict::Inequivalent(w),
            None => Verdict::Equivalent,
        };
        prop_assert_eq!(Checker::default().strong_equiv(&c1, &c2, Mode::Exhaustive).unwrap(), expected);
    }

    #[test]
    fn weak_matches_scalar_oracle((c1, c2) in pair(), n in 0usize..=11, m in 0usize..=11) {
        let b = c1.width();
        let (n, m) = (n.min(b), m.min(b));
        let expected = match oracle_first_difference(&c1, &c2, n, m) {
            Some(w) => Verdict::Inequivalent(w),
            None => Verdict::Equivalent,
        };
        prop_assert_eq!(Checker::default().weak_equiv(&c1, &c2, n, m, Mode::Exhaustive).unwrap(), expected);
    }

    #[test]
    fn random_mode_witnesses_are_real((c1, c2) in pair(), seed in any::<u64>()) {
        let v = Checker::default()
            .strong_equiv(&c1, &c2, Mode::Random { trials: 300, seed })
            .unwrap();
        match v {
            Verdict::Inequivalent(w) => prop_assert_ne!(c1.simulate(&w).unwrap(), c2.simulate(&w).unwrap()),
            Verdict::Unknown { trials } => prop_assert_eq!(trials, 300),
            Verdict::Equivalent => prop_assert!(false, "random mode never proves equivalence"),
        }
    }
}

#[test]
fn worker_count_does_not_change_the_answer() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..6 {
        let c = random_circuit(&mut rng, 16, 200);
        let tail = random_circuit(&mut rng, 16, 1);
        let d = c.concat(&tail).unwrap();
        let reference = Checker::with_jobs(1)
            .strong_equiv(&c, &d, Mode::Exhaustive)
            .unwrap();
        for jobs in [2, 3, 8] {
            let v = Checker::with_jobs(jobs)
                .strong_equiv(&c, &d, Mode::Exhaustive)
                .unwrap();
            assert_eq!(v, reference);
        }
        let random = |jobs| {
            Checker::with_jobs(jobs)
                .strong_equiv(
                    &c,
                    &d,
                    Mode::Random {
                        trials: 5000,
                        seed: 42,
                    },
                )
                .unwrap()
        };
        assert_eq!(random(1), random(8));
    }
}

#[test]
fn random_trials_depend_only_on_seed_and_index() {
    // Growing the trial budget must not move the first witness.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let c = random_circuit(&mut rng, 12, 3);
    let e = Circuit::empty(12);
    let small = Checker::default()
        .strong_equiv(
            &c,
            &e,
            Mode::Random {
                trials: 100,
                seed: 5,
            },
        )
        .unwrap();
    let large = Checker::default()
        .strong_equiv(
            &c,
            &e,
            Mode::Random {
                trials: 10_000,
                seed: 5,
            },
        )
        .unwrap();
    if let Verdict::Inequivalent(_) = small {
        assert_eq!(small, large);
    }
}
