mod common;

use std::collections::BTreeMap;

use num_rational::Ratio;
use proptest::prelude::*;
use udebruijn::euler::{alternating_path, check_alternation, check_continuity, check_eulerian};
use udebruijn::eulerize::{alternating_diameter, alternating_distance, augment, duplicate_bound, eulerize, ratio};
use udebruijn::graph::{build_unoriented, ov_formula};
use udebruijn::{PairClass, Word};

#[test]
fn duplicates_stay_within_the_bound() {
    for k in 2u32..=4 {
        for n in 2..=6usize {
            let g = build_unoriented(k, n).unwrap();
            let ov = ov_formula(k as u64, n).unwrap();
            let e = eulerize(&g).unwrap();
            assert_eq!(e.odd_before as u128, ov);
            if ov <= 2 {
                assert_eq!(e.used(), 0);
                continue;
            }
            assert!(e.used() as u128 <= (n as u128 - 1) * (ov / 2 - 1), "k={k} n={n}");
            assert_eq!(e.odd_after, 2);
            let path = alternating_path(augment(&g, &e).unwrap()).unwrap();
            check_continuity(&path).unwrap();
            check_alternation(&g, &path).unwrap();
            check_eulerian(&g, &path, &e.duplicated_classes()).unwrap();
        }
    }
}

#[test]
fn each_matched_walk_flips_exactly_its_endpoints() {
    for k in 2u32..=4 {
        for n in 3..=6usize {
            let g = build_unoriented(k, n).unwrap();
            let e = eulerize(&g).unwrap();
            let mut flips: BTreeMap<PairClass, usize> = BTreeMap::new();
            for d in &e.duplicates {
                *flips.entry(d.word.prefix().unwrap().canonicalize()).or_default() += 1;
                *flips.entry(d.word.suffix().unwrap().canonicalize()).or_default() += 1;
            }
            let mut flipped: Vec<PairClass> = flips.into_iter().filter(|(_, c)| c % 2 == 1).map(|(v, _)| v).collect();
            let mut endpoints: Vec<PairClass> = e.matched.iter().flat_map(|(u, v)| [u.clone(), v.clone()]).collect();
            flipped.sort();
            endpoints.sort();
            assert_eq!(flipped, endpoints, "k={k} n={n}");
            assert_eq!(e.odd_before - e.odd_after, 2 * e.matched.len());
        }
    }
}

#[test]
fn alternating_diameter_is_at_most_n_minus_one() {
    for k in 1u32..=4 {
        for n in 2..=6usize {
            let g = build_unoriented(k, n).unwrap();
            assert!(alternating_diameter(&g).unwrap() < n, "k={k} n={n}");
        }
    }
}

fn vertex_pair() -> impl Strategy<Value = (u32, usize, Vec<u32>, Vec<u32>)> {
    (1u32..=4, 2usize..=6).prop_flat_map(|(k, n)| {
        (Just(k), Just(n), prop::collection::vec(0..k, n - 1), prop::collection::vec(0..k, n - 1))
    })
}

proptest! {
    #[test]
    fn distance_matches_overlap_formula((k, n, u, v) in vertex_pair()) {
        let g = build_unoriented(k, n).unwrap();
        let cu = Word::new(k, u.clone()).unwrap().canonicalize();
        let cv = Word::new(k, v.clone()).unwrap().canonicalize();
        let expected = [u.clone(), common::rev(&u)]
            .iter()
            .flat_map(|a| [v.clone(), common::rev(&v)].map(|b| common::overlap_distance(a, &b)))
            .min()
            .unwrap();
        prop_assert_eq!(alternating_distance(&g, &cu, &cv).unwrap(), expected);
        prop_assert_eq!(alternating_distance(&g, &cv, &cu).unwrap(), expected);
    }
}

#[test]
fn ratio_decreases_within_parity_classes_and_vanishes() {
    let r = |k: u64, n: usize| ratio(k, n).unwrap();
    for k in 2u64..=16 {
        for n in 2..=16usize {
            let value = r(k, n);
            assert!(value < Ratio::from_integer(1) / 2, "k={k} n={n}");
            assert_eq!(value == Ratio::from_integer(0), ov_formula(k, n).unwrap() <= 2);
            if k + 2 <= 16 && value > Ratio::from_integer(0) {
                assert!(r(k + 2, n) <= value, "k={k} n={n}");
            }
            if n + 2 <= 16 && n >= 6 {
                assert!(r(k, n + 2) <= value, "k={k} n={n}");
            }
        }
    }
    for n in 2..=16usize {
        assert!(r(16, n) < Ratio::new(1, 10));
    }
    for k in 3u64..=16 {
        assert!(r(k, 16) < Ratio::new(1, 100));
    }
    assert!(r(2, 16) < r(2, 8));
}

#[test]
fn bound_is_zero_without_extra_odd_vertices() {
    assert_eq!(duplicate_bound(3, 3).unwrap(), 0);
    assert_eq!(duplicate_bound(2, 3).unwrap(), 0);
    assert_eq!(duplicate_bound(2, 5).unwrap(), 8);
    assert_eq!(duplicate_bound(4, 3).unwrap(), 2);
}
