//! Unoriented de Bruijn sequences.
//!
//! A word covers `(k, n)` when every length-`n` word over `k` symbols occurs
//! in it as a forward subword, either as itself or as its reversal. This
//! crate builds the unoriented de Bruijn graph whose alternating Eulerian
//! paths spell such words. It decides when a cover of the counting lower
//! bound exists and generates optimal covers, or near-optimal ones after
//! duplicating a few edges. It also verifies arbitrary words and searches
//! exhaustively for shortest covers on small instances.
//!
//! ```
//! use udebruijn::{generate, verify};
//!
//! let g = generate(2, 3).unwrap();
//! assert_eq!(g.word.to_string(), "00010111");
//! assert!(verify(&g.word, 2, 3).unwrap().is_optimal);
//! ```

pub mod error;
pub mod euler;
pub mod eulerize;
pub mod graph;
pub mod oracle;
pub mod sequence;
pub mod words;

pub use error::{Error, Result};
pub use euler::{
    alternating_hierholzer, alternating_path, balance_palindromic_types, check_alternation, check_conditions,
    check_continuity, check_eulerian, directed_euler, optimal_exists, AlternatingPath, ConditionReport, Multigraph,
    PathStep, TypeAssignment,
};
pub use eulerize::{
    alternating_diameter, alternating_distance, augment, duplicate_bound, eulerize, ratio, upper_bound_length,
    Eulerization,
};
pub use graph::{build_directed, build_unoriented, ov_formula, DGraph, IncidenceType, UGraph};
pub use oracle::{exists_cover, min_cover_length, CoverSearch, SearchResult};
pub use sequence::{decode, generate, optimal_length, verify, CoverageReport, Generated};
pub use words::{PairClass, Word};
