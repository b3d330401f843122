// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use revequiv::formula::{cnf_to_formula, parse_dimacs, CnfFormula, Literal};
use revequiv::random::random_cnf;
use revequiv::BitState;

fn ceil_log2(x: usize) -> usize {
    (usize::BITS - (x.max(1) - 1).leading_zeros()) as usize
}

fn literal() -> impl Strategy<Value = (usize, bool)> {
    (1usize..=12, any::<bool>())
}

fn cnf() -> impl Strategy<Value = CnfFormula> {
    (1usize..=12)
        .prop_flat_map(|n| {
            let lit = (1..=n, any::<bool>());
            (
                Just(n),
                prop::collection::vec(prop::collection::vec(lit, 1..6), 1..10),
            )
        })
        .prop_map(|(n, clauses)| {
            let clauses = clauses
                .into_iter()
                .map(|c| {
                    c.into_iter()
                        .map(|(v, neg)| Literal::new(v, neg).unwrap())
                        .collect()
                })
                .collect();
            CnfFormula::new(n, clauses).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn balanced_formula_agrees_on_every_assignment(f in cnf()) {
        let g = cnf_to_formula(&f);
        let n = f.num_vars();
        for x in 0..1u64 << n {
            let a = BitState::from_index(x, n);
            prop_assert_eq!(g.eval(&a).unwrap(), f.eval(&a).unwrap());
        }
    }

    #[test]
    fn depth_is_logarithmic(f in cnf()) {
        let bound = ceil_log2(f.max_clause_width()) + ceil_log2(f.clauses().len());
        prop_assert!(cnf_to_formula(&f).depth() <= bound);
    }

    #[test]
    fn dimacs_reparses(f in cnf()) {
        prop_assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn literals_round_trip_through_dimacs((v, neg) in literal()) {
        let l = Literal::new(v, neg).unwrap();
        prop_assert_eq!(Literal::from_dimacs(l.to_dimacs()).unwrap(), l);
    }
}

#[test]
fn fifty_random_small_cnfs() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for _ in 0..50 {
        let f = random_cnf(&mut rng, 5, 8, 4);
        let g = cnf_to_formula(&f);
        for x in 0..32 {
            let a = BitState::from_index(x, 5);
            assert_eq!(g.eval(&a).unwrap(), f.eval(&a).unwrap());
        }
    }
}
