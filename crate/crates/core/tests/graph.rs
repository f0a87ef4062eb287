mod common;

use udebruijn::graph::{build_directed, build_unoriented, ov_formula, IncidenceType};
use udebruijn::words::class_count;
use udebruijn::Word;

#[test]
fn reflected_directed_edges_share_a_class() {
    for k in 1u32..=4 {
        for n in 2..=5usize {
            let d = build_directed(k, n).unwrap();
            let g = build_unoriented(k, n).unwrap();
            for e in 0..d.edge_count() {
                let w = d.edge_word(e);
                let r = w.reflect();
                let back = r.value().unwrap();
                // v -> w gives w' -> v'
                assert_eq!(d.vertex_word(d.tail(back)), w.suffix().unwrap().reflect());
                assert_eq!(d.vertex_word(d.head(back)), w.prefix().unwrap().reflect());
                assert_eq!(g.edge_index(&w).unwrap(), g.edge_index(&r).unwrap());
            }
        }
    }
}

#[test]
fn sizes_and_incidence_totals() {
    for k in 1u32..=5 {
        for n in 2..=6usize {
            let g = build_unoriented(k, n).unwrap();
            assert_eq!(g.edge_count() as u128, class_count(k as u64, n).unwrap());
            assert_eq!(g.vertex_count() as u128, class_count(k as u64, n - 1).unwrap());
            let incidences: usize = g.vertices().iter().map(|v| v.degree()).sum();
            assert_eq!(incidences, 2 * g.edge_count());
            let brute = common::degrees(k, n);
            for v in g.vertices() {
                let key: Vec<u32> = v.class.rep().symbols().to_vec();
                assert_eq!(v.degree(), brute[&key], "k={k} n={n} {}", v.class);
            }
        }
    }
}

#[test]
fn incidence_counts_follow_prefix_and_suffix_palindromes() {
    for k in 1u32..=4 {
        for n in 3..=5usize {
            let g = build_unoriented(k, n).unwrap();
            for (i, v) in g.vertices().iter().enumerate() {
                let (one, two, both) = g.type_counts(i);
                let rep = v.class.rep();
                if v.class.is_palindrome() {
                    assert_eq!((one, two), (0, 0));
                    assert_eq!(both, v.degree());
                    continue;
                }
                assert_eq!(both, 0);
                let pal = |w: Word| usize::from(w.is_palindrome());
                let k = k as usize;
                let mut expected = [k + pal(rep.prefix().unwrap()), k + pal(rep.suffix().unwrap())];
                let mut found = [one, two];
                expected.sort();
                found.sort();
                assert_eq!(found, expected, "k={k} n={n} {}", v.class);
                // the row totals: k+1 twice, k twice, or k and k+1
                assert!(one + two >= 2 * k && one + two <= 2 * k + 2);
                assert_eq!(one.abs_diff(two), v.degree() % 2);
            }
        }
    }
}

#[test]
fn worked_vertex_counts() {
    let g = build_unoriented(2, 3).unwrap();
    let v = g.vertex_index(&Word::parse("10", 2).unwrap()).unwrap();
    assert_eq!(g.type_counts(v), (3, 3, 0));
    let v = g.vertex_index(&Word::parse("00", 2).unwrap()).unwrap();
    assert_eq!(g.type_counts(v).2, g.vertex(v).degree());
    assert!(g.vertex(v).incidences().iter().all(|i| i.ty == IncidenceType::Both));
}

#[test]
fn odd_vertex_formula_matches_enumeration() {
    for k in 2u32..=5 {
        for n in 2..=7usize {
            let g = build_unoriented(k, n).unwrap();
            let formula = ov_formula(k as u64, n).unwrap();
            assert_eq!(formula, g.odd_vertices().len() as u128, "k={k} n={n}");
            if (k as u64).pow(n as u32) <= 1 << 14 {
                assert_eq!(formula, common::odd_count(k, n) as u128);
            }
        }
    }
}
