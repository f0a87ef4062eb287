//! Covering words: generation, decoding and verification.
//!
//! A word covers `(k, n)` when, for every reflected pair of length-`n`
//! words, at least one member occurs as a forward subword.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::{alternating_path, check_continuity, optimal_exists, AlternatingPath};
use crate::eulerize::{augment, eulerize, Eulerization};
use crate::graph::{build_unoriented_with_cap, DEFAULT_EDGE_CAP};
use crate::words::{checked_pow, class_count, PairClass, Radix, Word};

/// `(k^n + k^ceil(n/2) + 2n - 2) / 2`, the length of a cover that uses
/// exactly one member of every pair.
pub fn optimal_length(k: u64, n: usize) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    let classes = class_count(k, n)?;
    classes.checked_add(n as u128 - 1).ok_or_else(|| Error::overflow("the optimal length"))
}

/// Spells out the word read along a path: the first step's word followed by
/// the last symbol of every later step.
pub fn decode(path: &AlternatingPath) -> Result<Word> {
    check_continuity(path)?;
    let mut steps = path.steps().iter();
    let first = steps.next().ok_or_else(|| Error::InvalidParameters("cannot decode an empty path".into()))?;
    let mut word = first.word.clone();
    for step in steps {
        word.push(*step.word.symbols().last().expect("steps have length n"));
    }
    Ok(word)
}

/// Decodes consecutive length-`n` windows, such as a directed Euler circuit.
pub fn decode_words(k: u32, words: &[Word]) -> Result<Word> {
    let n = words.first().map(Word::len).unwrap_or(0);
    decode(&AlternatingPath::from_words(k, n, words.to_vec())?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub word: Word,
    pub optimal: bool,
    /// Duplicated edges; `None` for the trivial cases.
    pub eulerization: Option<Eulerization>,
    pub path: Option<AlternatingPath>,
}

impl Generated {
    pub fn duplicates(&self) -> usize {
        self.eulerization.as_ref().map_or(0, Eulerization::used)
    }
}

pub fn generate(k: u32, n: usize) -> Result<Generated> {
    generate_with_cap(k, n, DEFAULT_EDGE_CAP)
}

/// Builds a covering word: trivially for `k = 1` or `n = 1`, otherwise from
/// an alternating Eulerian path through the (eulerized) unoriented graph.
/// The result is verified before it is returned.
pub fn generate_with_cap(k: u32, n: usize, cap: u64) -> Result<Generated> {
    if k == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    let generated = if k == 1 || n == 1 {
        let symbols = if k == 1 { vec![0; n] } else { (0..k).collect() };
        Generated { word: Word::new(k, symbols)?, optimal: true, eulerization: None, path: None }
    } else {
        let g = build_unoriented_with_cap(k, n, cap)?;
        let eulerization = eulerize(&g)?;
        let path = alternating_path(augment(&g, &eulerization)?)?;
        let word = decode(&path)?;
        let optimal = word.len() as u128 == optimal_length(u64::from(k), n)?;
        Generated { word, optimal, eulerization: Some(eulerization), path: Some(path) }
    };

    let report = verify(&generated.word, k, n)?;
    if !report.is_cover {
        return Err(Error::Internal(format!("generated word misses {} classes", report.missing.len())));
    }
    if optimal_exists(u64::from(k), n as u64) && !report.is_optimal {
        return Err(Error::Internal(format!(
            "generated word has length {} but an optimal cover exists",
            generated.word.len()
        )));
    }
    Ok(generated)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    pub k: u32,
    pub n: usize,
    pub length: usize,
    /// Forward occurrences per class; classes that never occur are absent.
    pub counts: BTreeMap<PairClass, usize>,
    pub missing: Vec<PairClass>,
    /// Classes with two or more forward occurrences.
    pub duplicated: Vec<PairClass>,
    pub is_cover: bool,
    pub is_optimal: bool,
}

/// JSON form of a [`CoverageReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageRecord {
    pub k: u32,
    pub n: usize,
    pub length: usize,
    pub cover: bool,
    pub optimal: bool,
    pub missing: Vec<String>,
    pub duplicated: Vec<String>,
}

impl CoverageReport {
    pub fn to_record(&self) -> CoverageRecord {
        CoverageRecord {
            k: self.k,
            n: self.n,
            length: self.length,
            cover: self.is_cover,
            optimal: self.is_optimal,
            missing: self.missing.iter().map(ToString::to_string).collect(),
            duplicated: self.duplicated.iter().map(ToString::to_string).collect(),
        }
    }

    /// Number of forward subwords beyond one per covered class.
    pub fn repetitions(&self) -> usize {
        self.counts.values().map(|c| c - 1).sum()
    }
}

/// Tallies the forward length-`n` subwords of `w` by reflected pair.
pub fn verify(w: &Word, k: u32, n: usize) -> Result<CoverageReport> {
    if k == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    if let Some(&symbol) = w.symbols().iter().find(|&&s| s >= k) {
        return Err(Error::InvalidSymbol { symbol, k });
    }
    let size = checked_pow(u64::from(k), n).ok_or_else(|| Error::overflow(format!("{k}^{n}")))?;
    if size > u128::from(DEFAULT_EDGE_CAP) {
        return Err(Error::SizeCap { k, n, size, cap: DEFAULT_EDGE_CAP });
    }
    let radix = Radix::new(k, n)?;

    let mut tally: HashMap<u64, usize> = HashMap::new();
    let symbols = w.symbols();
    if symbols.len() >= n {
        let mut code = 0u64;
        for (i, &s) in symbols.iter().enumerate() {
            code = (code * radix.k + u64::from(s)) % radix.size;
            if i + 1 >= n {
                *tally.entry(radix.canonical(code)).or_default() += 1;
            }
        }
    }

    let total = class_count(u64::from(k), n)?;
    let is_cover = tally.len() as u128 == total;
    let missing = if is_cover {
        Vec::new()
    } else {
        (0..radix.size)
            .filter(|&c| radix.canonical(c) == c && !tally.contains_key(&c))
            .map(|c| radix.word(c).canonicalize())
            .collect()
    };
    let counts: BTreeMap<PairClass, usize> =
        tally.into_iter().map(|(c, count)| (radix.word(c).canonicalize(), count)).collect();
    let duplicated = counts.iter().filter(|(_, &c)| c >= 2).map(|(class, _)| class.clone()).collect();
    let is_optimal = is_cover && w.len() as u128 == optimal_length(u64::from(k), n)?;
    Ok(CoverageReport { k, n, length: w.len(), counts, missing, duplicated, is_cover, is_optimal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str, k: u32) -> Word {
        Word::parse(s, k).unwrap()
    }

    #[test]
    fn optimal_lengths() {
        assert_eq!(optimal_length(2, 3).unwrap(), 8);
        assert_eq!(optimal_length(3, 3).unwrap(), 20);
        assert_eq!(optimal_length(2, 4).unwrap(), 13);
        assert_eq!(optimal_length(2, 5).unwrap(), 24);
        assert_eq!(optimal_length(4, 3).unwrap(), 42);
        assert!(matches!(optimal_length(10, 60), Err(Error::Overflow(_))));
    }

    #[test]
    fn decode_examples() {
        let path = AlternatingPath::from_words(
            2,
            3,
            ["000", "001", "010", "101", "011", "111"].iter().map(|s| word(s, 2)).collect(),
        )
        .unwrap();
        assert_eq!(decode(&path).unwrap(), word("00010111", 2));
        let single = AlternatingPath::from_words(2, 3, vec![word("000", 2)]).unwrap();
        assert_eq!(decode(&single).unwrap(), word("000", 2));
        let circuit: Vec<Word> =
            ["000", "001", "010", "101", "011", "111", "110", "100"].iter().map(|s| word(s, 2)).collect();
        assert_eq!(decode_words(2, &circuit).unwrap(), word("0001011100", 2));
    }

    #[test]
    fn decode_rejects_gaps() {
        let path = AlternatingPath::from_words(2, 3, vec![word("000", 2), word("011", 2)]).unwrap();
        assert!(matches!(decode(&path), Err(Error::Discontinuous { step: 1, .. })));
    }

    #[test]
    fn verify_examples() {
        let r = verify(&word("00010111", 2), 2, 3).unwrap();
        assert!(r.is_cover && r.is_optimal && r.duplicated.is_empty());

        let r = verify(&word("0001011", 2), 2, 3).unwrap();
        assert!(!r.is_cover && !r.is_optimal);
        assert_eq!(r.missing, [PairClass::parse("111", 2).unwrap()]);

        let r = verify(&word("00001100101111", 2), 2, 4).unwrap();
        assert!(r.is_cover && !r.is_optimal);
        assert_eq!(r.length, 14);
        assert_eq!(r.duplicated, [PairClass::parse("1100", 2).unwrap()]);

        let r = verify(&word("0100011101", 2), 2, 3).unwrap();
        assert!(r.is_cover && !r.is_optimal);
    }

    #[test]
    fn verify_short_and_invalid() {
        let r = verify(&word("01", 2), 2, 3).unwrap();
        assert_eq!(r.missing.len(), 6);
        assert!(!r.is_cover);
        assert_eq!(verify(&word("012", 3), 2, 2), Err(Error::InvalidSymbol { symbol: 2, k: 2 }));
    }

    #[test]
    fn trivial_generation() {
        assert_eq!(generate(1, 5).unwrap().word, word("00000", 1));
        assert_eq!(generate(4, 1).unwrap().word, word("0123", 4));
        assert!(generate(4, 1).unwrap().optimal);
    }

    #[test]
    fn generated_examples() {
        let g = generate(2, 3).unwrap();
        assert_eq!(g.word, word("00010111", 2));
        assert!(g.optimal);
        assert_eq!(generate(2, 2).unwrap().word.len(), 4);
        assert_eq!(generate(3, 3).unwrap().word.len(), 20);

        let g = generate(2, 4).unwrap();
        assert_eq!(g.word.len(), 14);
        assert!(!g.optimal);
        assert_eq!(g.duplicates(), 1);
        let r = verify(&g.word, 2, 4).unwrap();
        assert_eq!(r.duplicated.len(), 1);
    }

    #[test]
    fn generation_respects_cap() {
        assert!(matches!(generate_with_cap(2, 12, 1024), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn record_round_trip() {
        let r = verify(&word("00001100101111", 2), 2, 4).unwrap().to_record();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"k":2,"n":4,"length":14,"cover":true,"optimal":false,"missing":[],"duplicated":["[1100]"]}"#
        );
        assert_eq!(serde_json::from_str::<CoverageRecord>(&json).unwrap(), r);
    }
}
