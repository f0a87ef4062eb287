//! Eulerization of the unoriented graph by duplicating edges.
//!
//! Odd-degree vertices are paired up and each pair is joined by a shortest
//! alternating walk whose edges are then duplicated. The walk has to leave
//! and enter the pair's endpoints on the incidence type those vertices are
//! short of, so every interior vertex stays balanced and each endpoint
//! becomes even. One pair stays unmatched and becomes the two ends of the
//! final path.
//!
//! Alternating walks correspond one to one with walks in the directed de
//! Bruijn graph, so distances are breadth-first searches over length-`(n-1)`
//! words, or equivalently the length lost to the longest overlap between the
//! start and end words.

use std::collections::VecDeque;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::Multigraph;
use crate::graph::{ov_formula, UGraph};
use crate::sequence::optimal_length;
use crate::words::{PairClass, Word};

/// Odd-vertex counts up to this size are matched exactly; larger ones
/// greedily.
pub const EXACT_MATCHING_LIMIT: usize = 12;

/// A parallel copy of an edge and the word read along it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Duplicate {
    pub edge: PairClass,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eulerization {
    pub k: u32,
    pub n: usize,
    pub duplicates: Vec<Duplicate>,
    /// Odd vertices joined by duplicated walks.
    pub matched: Vec<(PairClass, PairClass)>,
    /// The odd pair left unmatched; the final path runs between them.
    pub endpoints: Option<(PairClass, PairClass)>,
    pub odd_before: usize,
    pub odd_after: usize,
    /// `(n-1)(ov/2 - 1)`, or 0 when no duplicates are needed.
    pub bound: u128,
    /// Whether the pairing is a proven minimum-weight matching.
    pub exact: bool,
}

impl Eulerization {
    pub fn used(&self) -> usize {
        self.duplicates.len()
    }

    pub fn duplicated_classes(&self) -> Vec<PairClass> {
        self.duplicates.iter().map(|d| d.edge.clone()).collect()
    }

    pub fn to_record(&self) -> EulerizationRecord {
        EulerizationRecord {
            duplicates: self
                .duplicates
                .iter()
                .map(|d| DuplicateRecord { edge: d.edge.to_string(), orientation: d.word.to_string() })
                .collect(),
            bound: self.bound,
            used: self.used(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuplicateRecord {
    pub edge: String,
    pub orientation: String,
}

/// JSON form of an [`Eulerization`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerizationRecord {
    pub duplicates: Vec<DuplicateRecord>,
    pub bound: u128,
    pub used: usize,
}

/// Breadth-first search over length-`(n-1)` words from `sources`. Returns
/// the distance to every word (`u32::MAX` if unreached) and the edge word
/// used to reach it.
fn word_bfs(g: &UGraph, sources: &[u64]) -> (Vec<u32>, Vec<u64>) {
    let states = g.vertex_radix().size;
    let k = g.edge_radix().k;
    let mut dist = vec![u32::MAX; states as usize];
    let mut via = vec![u64::MAX; states as usize];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s as usize] == u32::MAX {
            dist[s as usize] = 0;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for a in 0..k {
            let edge = x * k + a;
            let y = edge % states;
            if dist[y as usize] == u32::MAX {
                dist[y as usize] = dist[x as usize] + 1;
                via[y as usize] = edge;
                queue.push_back(y);
            }
        }
    }
    (dist, via)
}

/// Length of the shortest alternating walk between two vertices, in edges.
pub fn alternating_distance(g: &UGraph, u: &PairClass, v: &PairClass) -> Result<usize> {
    let (ui, vi) = (g.vertex_of_class(u)?, g.vertex_of_class(v)?);
    if ui == vi {
        return Ok(0);
    }
    let vr = g.vertex_radix();
    let members = |code: u64| [code, vr.reflect(code)];
    let (dist, _) = word_bfs(g, &members(g.vertex(ui).code()));
    let best = members(g.vertex(vi).code()).iter().map(|&t| dist[t as usize]).min().unwrap_or(u32::MAX);
    if best == u32::MAX {
        return Err(Error::NoAlternatingPath { from: u.to_string(), to: v.to_string() });
    }
    Ok(best as usize)
}

/// Largest alternating distance over all vertex pairs.
pub fn alternating_diameter(g: &UGraph) -> Result<usize> {
    let vr = g.vertex_radix();
    let mut diameter = 0;
    for u in g.vertices() {
        let (dist, _) = word_bfs(g, &[u.code(), vr.reflect(u.code())]);
        for v in g.vertices() {
            let d = dist[v.code() as usize].min(dist[vr.reflect(v.code()) as usize]);
            if d == u32::MAX {
                return Err(Error::NoAlternatingPath { from: u.class.to_string(), to: v.class.to_string() });
            }
            diameter = diameter.max(d as usize);
        }
    }
    Ok(diameter)
}

/// First `n-1` symbols of a walk that leaves `vertex` on the type it is
/// short of, and last `n-1` symbols of a walk that arrives on it.
fn terminal_words(g: &UGraph, vertex: usize) -> (u64, u64) {
    let v = g.vertex(vertex);
    let rep = v.code();
    if v.class.is_palindrome() {
        return (rep, rep);
    }
    let reflected = g.vertex_radix().reflect(rep);
    let (one, two, _) = g.type_counts(vertex);
    if one < two {
        // leave on type I: start with v; arrive on type I: end with v'
        (rep, reflected)
    } else {
        (reflected, rep)
    }
}

/// Edge words of the shortest walk between two length-`(n-1)` words: the
/// walk spells `from` followed by whatever `to` adds beyond their longest
/// overlap.
fn shortest_walk(from: &Word, to: &Word) -> Vec<Word> {
    let (a, b) = (from.symbols(), to.symbols());
    let m = a.len();
    let overlap = (0..=m).rev().find(|&j| a[m - j..] == b[..j]).unwrap_or(0);
    let mut spelled = a.to_vec();
    spelled.extend_from_slice(&b[overlap..]);
    let spelled = Word::new(from.k(), spelled).expect("symbols come from valid words");
    spelled.windows(m + 1).collect()
}

/// `(n-1)(ov/2 - 1)` when the graph has more than two odd vertices, else 0.
pub fn duplicate_bound(k: u64, n: usize) -> Result<u128> {
    let ov = ov_formula(k, n)?;
    if ov <= 2 {
        return Ok(0);
    }
    Ok((n as u128 - 1) * (ov / 2 - 1))
}

/// Upper bound on the length of a shortest covering word when the graph has
/// more than two odd vertices.
pub fn upper_bound_length(k: u64, n: usize) -> Result<u128> {
    let ov = ov_formula(k, n)?;
    if ov <= 2 {
        return Err(Error::InvalidParameters(format!(
            "the length bound needs more than two odd vertices; ov({k},{n}) = {ov}"
        )));
    }
    optimal_length(k, n)?.checked_add(duplicate_bound(k, n)?).ok_or_else(|| Error::overflow("the length bound"))
}

/// Bound on the duplicated edges relative to the optimal length; 0 when at
/// most two vertices are odd.
pub fn ratio(k: u64, n: usize) -> Result<Ratio<u128>> {
    let extra = duplicate_bound(k, n)?;
    if extra == 0 {
        return Ok(Ratio::from_integer(0));
    }
    Ok(Ratio::new(extra, optimal_length(k, n)?))
}

/// Cost of the best pairing, the pair taken first, and whether that pair is
/// left unmatched.
type Choice = (u64, (usize, usize), bool);

/// Minimum-weight pairing of all but two vertices. Returns the matched pairs
/// and the unmatched pair.
fn exact_matching(dist: &[Vec<u32>]) -> (Vec<(usize, usize)>, (usize, usize)) {
    let m = dist.len();
    let full = (1usize << m) - 1;
    // best[free][mask]: cost of pairing `mask`, with a free pair still
    // available when `free` is 0
    let mut best = vec![vec![None::<Choice>; 1 << m]; 2];
    fn solve(mask: usize, free: usize, dist: &[Vec<u32>], best: &mut [Vec<Option<Choice>>]) -> u64 {
        if mask == 0 {
            return if free == 1 { 0 } else { u64::MAX };
        }
        if let Some((cost, _, _)) = best[free][mask] {
            return cost;
        }
        let i = mask.trailing_zeros() as usize;
        let mut choice = (u64::MAX, (i, i), false);
        let partners: Vec<usize> = (i + 1..dist.len()).filter(|&j| mask >> j & 1 == 1).collect();
        if free == 0 {
            for &j in &partners {
                let cost = solve(mask & !(1 << i) & !(1 << j), 1, dist, best);
                if cost < choice.0 {
                    choice = (cost, (i, j), true);
                }
            }
        }
        for &j in &partners {
            let rest = solve(mask & !(1 << i) & !(1 << j), free, dist, best);
            let cost = rest.saturating_add(u64::from(dist[i][j]));
            if cost < choice.0 {
                choice = (cost, (i, j), false);
            }
        }
        best[free][mask] = Some(choice);
        choice.0
    }
    solve(full, 0, dist, &mut best);

    let (mut mask, mut free) = (full, 0);
    let mut pairs = Vec::new();
    let mut unmatched = (0, 0);
    while mask != 0 {
        let (_, (i, j), leave) = best[free][mask].expect("solved");
        if leave {
            unmatched = (i, j);
            free = 1;
        } else {
            pairs.push((i, j));
        }
        mask &= !(1 << i) & !(1 << j);
    }
    (pairs, unmatched)
}

/// Greedy pairing by increasing distance, leaving the last two unmatched.
fn greedy_matching(dist: &[Vec<u32>]) -> (Vec<(usize, usize)>, (usize, usize)) {
    let m = dist.len();
    let mut candidates: Vec<(u32, usize, usize)> =
        (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).map(|(i, j)| (dist[i][j], i, j)).collect();
    candidates.sort();
    let mut taken = vec![false; m];
    let mut pairs = Vec::new();
    for (_, i, j) in candidates {
        if pairs.len() + 1 == m / 2 {
            break;
        }
        if !taken[i] && !taken[j] {
            taken[i] = true;
            taken[j] = true;
            pairs.push((i, j));
        }
    }
    let rest: Vec<usize> = (0..m).filter(|&i| !taken[i]).collect();
    (pairs, (rest[0], rest[1]))
}

/// Duplicates edges of `g` until at most two vertices have odd degree.
pub fn eulerize(g: &UGraph) -> Result<Eulerization> {
    let odd = g.odd_vertex_indices();
    let class = |v: usize| g.vertex(v).class.clone();
    let bound = if g.k() >= 2 { duplicate_bound(u64::from(g.k()), g.n())? } else { 0 };
    if odd.len() <= 2 {
        return Ok(Eulerization {
            k: g.k(),
            n: g.n(),
            duplicates: Vec::new(),
            matched: Vec::new(),
            endpoints: (odd.len() == 2).then(|| (class(odd[0]), class(odd[1]))),
            odd_before: odd.len(),
            odd_after: odd.len(),
            bound,
            exact: true,
        });
    }

    let vr = g.vertex_radix();
    let terminals: Vec<(Word, Word)> = odd
        .iter()
        .map(|&v| {
            let (start, end) = terminal_words(g, v);
            (vr.word(start), vr.word(end))
        })
        .collect();
    let dist: Vec<Vec<u32>> = (0..odd.len())
        .map(|i| (0..odd.len()).map(|j| shortest_walk(&terminals[i].0, &terminals[j].1).len() as u32).collect())
        .collect();

    let exact = odd.len() <= EXACT_MATCHING_LIMIT;
    let (pairs, unmatched) = if exact { exact_matching(&dist) } else { greedy_matching(&dist) };

    let mut duplicates = Vec::new();
    for &(i, j) in &pairs {
        duplicates.extend(
            shortest_walk(&terminals[i].0, &terminals[j].1)
                .into_iter()
                .map(|word| Duplicate { edge: word.canonicalize(), word }),
        );
    }

    let mut eulerization = Eulerization {
        k: g.k(),
        n: g.n(),
        duplicates,
        matched: pairs.iter().map(|&(i, j)| (class(odd[i]), class(odd[j]))).collect(),
        endpoints: Some((class(odd[unmatched.0]), class(odd[unmatched.1]))),
        odd_before: odd.len(),
        odd_after: 0,
        bound,
        exact,
    };
    let augmented = augment(g, &eulerization)?;
    eulerization.odd_after = augmented.odd_vertices().len();
    check_augmented(&augmented)?;
    Ok(eulerization)
}

/// The graph with every duplicate of `eulerization` added as a parallel edge.
pub fn augment<'g>(g: &'g UGraph, eulerization: &Eulerization) -> Result<Multigraph<'g>> {
    let mut m = Multigraph::new(g);
    for d in &eulerization.duplicates {
        m.add_duplicate(g.edge_index(d.edge.rep())?);
    }
    Ok(m)
}

fn check_augmented(m: &Multigraph<'_>) -> Result<()> {
    let odd = m.odd_vertices();
    if odd.len() != 2 {
        return Err(Error::Internal(format!("eulerized graph has {} odd vertices", odd.len())));
    }
    let g = m.graph();
    for v in 0..g.vertex_count() {
        if g.vertex(v).class.is_palindrome() {
            continue;
        }
        let (one, two, _) = m.type_counts(v);
        if one.abs_diff(two) != m.degree(v) % 2 {
            return Err(Error::Internal(format!(
                "eulerized graph is unbalanced at {}: {one} type I, {two} type II",
                g.vertex(v).class
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_unoriented;

    fn class(s: &str, k: u32) -> PairClass {
        PairClass::parse(s, k).unwrap()
    }

    #[test]
    fn distances() {
        let g = build_unoriented(2, 3).unwrap();
        assert_eq!(alternating_distance(&g, &class("00", 2), &class("11", 2)).unwrap(), 2);
        assert_eq!(alternating_distance(&g, &class("10", 2), &class("10", 2)).unwrap(), 0);
        assert_eq!(alternating_distance(&g, &class("00", 2), &class("10", 2)).unwrap(), 1);
        assert!(alternating_diameter(&build_unoriented(2, 4).unwrap()).unwrap() <= 3);
        assert!(alternating_distance(&g, &class("000", 2), &class("11", 2)).is_err());
    }

    #[test]
    fn binary_four() {
        let g = build_unoriented(2, 4).unwrap();
        let e = eulerize(&g).unwrap();
        assert_eq!(e.used(), 1);
        assert_eq!(e.duplicates[0].edge.to_string(), "[1100]");
        assert_eq!(e.matched, [(class("100", 2), class("110", 2))]);
        assert_eq!(e.endpoints, Some((class("000", 2), class("111", 2))));
        assert_eq!((e.odd_before, e.odd_after), (4, 2));
        assert_eq!(e.bound, 3);
    }

    #[test]
    fn binary_five_and_quaternary_three() {
        let e = eulerize(&build_unoriented(2, 5).unwrap()).unwrap();
        assert_eq!((e.used(), e.bound), (2, 8));
        let e = eulerize(&build_unoriented(4, 3).unwrap()).unwrap();
        assert_eq!((e.used(), e.bound), (2, 2));
    }

    #[test]
    fn nothing_to_do_with_two_odd_vertices() {
        let e = eulerize(&build_unoriented(2, 3).unwrap()).unwrap();
        assert_eq!(e.used(), 0);
        assert_eq!(e.endpoints, Some((class("00", 2), class("11", 2))));
        let e = eulerize(&build_unoriented(3, 3).unwrap()).unwrap();
        assert_eq!((e.used(), e.endpoints.clone()), (0, None));
    }

    #[test]
    fn bounds_and_ratios() {
        assert_eq!(upper_bound_length(2, 5).unwrap(), 32);
        assert_eq!(upper_bound_length(2, 4).unwrap(), 16);
        assert_eq!(upper_bound_length(4, 3).unwrap(), 44);
        assert!(matches!(upper_bound_length(3, 3), Err(Error::InvalidParameters(_))));
        assert!(upper_bound_length(2, 3).is_err());
        assert_eq!(ratio(3, 3).unwrap(), Ratio::from_integer(0));
        assert_eq!(ratio(2, 5).unwrap(), Ratio::new(1, 3));
        assert_eq!(ratio(2, 4).unwrap(), Ratio::new(3, 13));
    }

    #[test]
    fn greedy_leaves_one_pair() {
        let dist = vec![vec![0, 1, 5, 5], vec![1, 0, 5, 5], vec![5, 5, 0, 1], vec![5, 5, 1, 0]];
        let (pairs, rest) = greedy_matching(&dist);
        assert_eq!(pairs, [(0, 1)]);
        assert_eq!(rest, (2, 3));
        let (pairs, rest) = exact_matching(&dist);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].0.abs_diff(pairs[0].1), 1);
        assert!(rest == (0, 1) || rest == (2, 3));
    }

    #[test]
    fn record_shape() {
        let e = eulerize(&build_unoriented(2, 4).unwrap()).unwrap();
        let json = serde_json::to_value(e.to_record()).unwrap();
        assert_eq!(json["used"], 1);
        assert_eq!(json["bound"], 3);
        assert_eq!(json["duplicates"][0]["edge"], "[1100]");
    }
}
