//! Brute-force reference implementations over plain symbol vectors.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub fn all_words(k: u32, m: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |a| {
                    let mut x = w.clone();
                    x.push(a);
                    x
                })
            })
            .collect();
    }
    out
}

pub fn rev(w: &[u32]) -> Vec<u32> {
    w.iter().rev().copied().collect()
}

pub fn canon(w: &[u32]) -> Vec<u32> {
    let r = rev(w);
    if r.as_slice() > w {
        r
    } else {
        w.to_vec()
    }
}

pub fn classes(k: u32, m: usize) -> BTreeSet<Vec<u32>> {
    all_words(k, m).iter().map(|w| canon(w)).collect()
}

/// Degree of every vertex class of the unoriented graph, counting loops
/// twice.
pub fn degrees(k: u32, n: usize) -> BTreeMap<Vec<u32>, usize> {
    let mut deg: BTreeMap<Vec<u32>, usize> = classes(k, n - 1).into_iter().map(|v| (v, 0)).collect();
    for e in classes(k, n) {
        *deg.get_mut(&canon(&e[..n - 1])).unwrap() += 1;
        *deg.get_mut(&canon(&e[1..])).unwrap() += 1;
    }
    deg
}

pub fn odd_count(k: u32, n: usize) -> usize {
    degrees(k, n).values().filter(|&&d| d % 2 == 1).count()
}

pub fn covers(w: &[u32], k: u32, n: usize) -> bool {
    let seen: BTreeSet<Vec<u32>> = w.windows(n).map(canon).collect();
    seen.len() == classes(k, n).len()
}

/// Shortest walk length between two words in the directed graph on
/// length-`m` words: `m` minus the longest suffix/prefix overlap.
pub fn overlap_distance(a: &[u32], b: &[u32]) -> usize {
    let m = a.len();
    let j = (0..=m).rev().find(|&j| a[m - j..] == b[..j]).unwrap();
    m - j
}

pub fn text(w: &[u32]) -> String {
    w.iter().map(|&s| char::from_digit(s, 36).unwrap()).collect()
}
