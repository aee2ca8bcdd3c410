//! S5 and a group above the multiplication-table limit.

use std::sync::Arc;

use hecke_core::harness::{verify_representation, verify_star_algebra};
use hecke_core::*;

#[test]
fn s5_pair_passes_both_suites() {
    let pair = roster::S5_EXTRA.build();
    assert_eq!(pair.group().order(), 120);
    assert_eq!(pair.right_cosets().len(), 20);
    let algebra = verify_star_algebra::<QComplex>(&pair, 3, 5, None);
    assert!(algebra.passed, "{:?}", algebra.failures().collect::<Vec<_>>());
    let reps = verify_representation::<QComplex>(&pair, 2, 5);
    assert!(reps.passed, "{:?}", reps.failures().collect::<Vec<_>>());
}

#[test]
fn oracle_multiplication_path_gives_same_algebra() {
    // S7 (5040 elements) multiplies through the lookup oracle; H = S6 point
    // stabilizer gives a 2-dimensional Hecke algebra with e1*e1 = 6 e0 + 5 e1
    let gens = ["(1 2)", "(1 2 3 4 5 6 7)"].map(|s| Permutation::parse_cycles(7, s).unwrap());
    let sub = ["(1 2)", "(1 2 3 4 5 6)"].map(|s| Permutation::parse_cycles(7, s).unwrap());
    let g = Arc::new(FiniteGroup::from_generators(7, &gens).unwrap());
    assert!(!g.uses_mul_table());
    let pair = HeckePair::new(Arc::new(Subgroup::from_generators(g, &sub).unwrap()));
    assert_eq!(pair.dimension(), 2);
    let sc = structure_constants(&pair);
    assert_eq!((sc.get(1, 1, 0), sc.get(1, 1, 1)), (6, 5));
}
