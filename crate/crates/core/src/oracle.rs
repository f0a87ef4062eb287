//! Exhaustive search for the shortest covering word.
//!
//! The search only uses word arithmetic: it extends candidate words one
//! symbol at a time and counts which reflected pairs their forward subwords
//! hit. It shares no code with the graph-based generator and serves as an
//! independent check on it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DEFAULT_EDGE_CAP;
use crate::words::{class_count, Radix, Word};

/// Default number of search nodes before giving up.
pub const DEFAULT_BUDGET: u64 = 1 << 27;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverSearch {
    /// The lexicographically smallest cover of the requested length.
    Found(Word),
    /// No cover of that length exists.
    Absent,
    /// The budget ran out first.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub k: u32,
    pub n: usize,
    /// Number of classes plus `n - 1`; no shorter word can cover.
    pub floor: usize,
    pub min_length: Option<usize>,
    pub witness: Option<Word>,
    pub nodes: u64,
    /// No cover shorter than `min_length` exists.
    pub exhaustive: bool,
    /// Every length below this has been ruled out.
    pub refuted_below: usize,
}

/// JSON form of a [`SearchResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub k: u32,
    pub n: usize,
    pub floor: usize,
    pub min_length: Option<usize>,
    pub witness: Option<String>,
    pub nodes: u64,
    pub exhaustive: bool,
    pub refuted_below: usize,
}

impl SearchResult {
    pub fn to_record(&self) -> SearchRecord {
        SearchRecord {
            k: self.k,
            n: self.n,
            floor: self.floor,
            min_length: self.min_length,
            witness: self.witness.as_ref().map(ToString::to_string),
            nodes: self.nodes,
            exhaustive: self.exhaustive,
            refuted_below: self.refuted_below,
        }
    }
}

struct Search {
    k: u64,
    n: usize,
    len: usize,
    window_size: u64,
    class_of: Vec<u32>,
    hits: Vec<u32>,
    uncovered: usize,
    word: Vec<u32>,
    nodes: u64,
    budget: u64,
}

enum Flow {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search {
    fn new(k: u32, n: usize, len: usize, budget: u64) -> Result<Search> {
        if k == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if n == 0 {
            return Err(Error::InvalidParameters("n must be at least 1".into()));
        }
        let radix = Radix::new(k, n)?;
        if radix.size > DEFAULT_EDGE_CAP {
            return Err(Error::SizeCap { k, n, size: u128::from(radix.size), cap: DEFAULT_EDGE_CAP });
        }
        let mut class_of = vec![0u32; radix.size as usize];
        let mut classes = 0u32;
        for code in 0..radix.size {
            let reflected = radix.reflect(code);
            if reflected <= code {
                class_of[code as usize] = classes;
                class_of[reflected as usize] = classes;
                classes += 1;
            }
        }
        Ok(Search {
            k: u64::from(k),
            n,
            len,
            window_size: radix.size / u64::from(k),
            class_of,
            hits: vec![0; classes as usize],
            uncovered: classes as usize,
            word: Vec::with_capacity(len),
            nodes: 0,
            budget,
        })
    }

    /// `window` holds the last `min(depth, n-1)` symbols.
    fn extend(&mut self, window: u64) -> Flow {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Flow::OutOfBudget;
        }
        let depth = self.word.len();
        let produced = (depth + 1).saturating_sub(self.n);
        let total = self.len + 1 - self.n;
        if self.uncovered > total - produced {
            return Flow::Exhausted;
        }
        if depth == self.len {
            return if self.uncovered == 0 { Flow::Found } else { Flow::Exhausted };
        }
        for a in 0..self.k {
            let code = window * self.k + a;
            let full = depth + 1 >= self.n;
            if full {
                let c = self.class_of[code as usize] as usize;
                self.hits[c] += 1;
                if self.hits[c] == 1 {
                    self.uncovered -= 1;
                }
            }
            let next = if depth + 1 >= self.n - 1 { code % self.window_size } else { code };
            self.word.push(a as u32);
            let flow = self.extend(next);
            if matches!(flow, Flow::Found) {
                return flow;
            }
            self.word.pop();
            if full {
                let c = self.class_of[code as usize] as usize;
                self.hits[c] -= 1;
                if self.hits[c] == 0 {
                    self.uncovered += 1;
                }
            }
            if matches!(flow, Flow::OutOfBudget) {
                return flow;
            }
        }
        Flow::Exhausted
    }
}

/// Whether some word of length `len` covers `(k, n)`. Also returns the
/// number of search nodes visited.
pub fn exists_cover(k: u32, n: usize, len: usize, budget: u64) -> Result<(CoverSearch, u64)> {
    let mut search = Search::new(k, n, len, budget)?;
    if len < n {
        return Ok((CoverSearch::Absent, 0));
    }
    let outcome = match search.extend(0) {
        Flow::Found => CoverSearch::Found(Word::new(k, search.word.clone())?),
        Flow::Exhausted => CoverSearch::Absent,
        Flow::OutOfBudget => CoverSearch::Inconclusive,
    };
    Ok((outcome, search.nodes))
}

/// Smallest length of a covering word, searching upwards from the counting
/// floor. `budget` is shared across all lengths tried.
pub fn min_cover_length(k: u32, n: usize, budget: u64) -> Result<SearchResult> {
    let classes = usize::try_from(class_count(u64::from(k), n)?).map_err(|_| Error::overflow("the class count"))?;
    let floor = classes + n - 1;
    let mut result = SearchResult {
        k,
        n,
        floor,
        min_length: None,
        witness: None,
        nodes: 0,
        exhaustive: false,
        refuted_below: floor,
    };
    let mut len = floor;
    loop {
        let (outcome, nodes) = exists_cover(k, n, len, budget - result.nodes)?;
        result.nodes += nodes;
        match outcome {
            CoverSearch::Found(w) => {
                result.min_length = Some(len);
                result.witness = Some(w);
                result.exhaustive = true;
                return Ok(result);
            }
            CoverSearch::Absent => {
                len += 1;
                result.refuted_below = len;
            }
            CoverSearch::Inconclusive => return Ok(result),
        }
    }
}
