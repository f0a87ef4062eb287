//! Words over the alphabet `{0, .., k-1}` and their reflected pairs.
//!
//! A reflected pair `[v]` is the set `{v, reverse(v)}`. Each pair is named by
//! its numerically larger member, read as a base-`k` integer, so the pairs of
//! `001`/`100` and `011`/`110` print as `[100]` and `[110]`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest alphabet that has a one-character-per-symbol text form.
pub const MAX_TEXT_ALPHABET: u32 = 36;

const DIGITS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// A finite word over `{0, .., k-1}`.
///
/// Words order by length first and then by base-`k` value, which for words of
/// equal length is plain lexicographic order on the symbols.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    k: u32,
    symbols: Vec<u32>,
}

impl Word {
    pub fn new(k: u32, symbols: Vec<u32>) -> Result<Word> {
        if k == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if let Some(&symbol) = symbols.iter().find(|&&s| s >= k) {
            return Err(Error::InvalidSymbol { symbol, k });
        }
        Ok(Word { k, symbols })
    }

    pub fn empty(k: u32) -> Word {
        Word { k, symbols: Vec::new() }
    }

    /// Parses the text form, one character per symbol (`0-9`, then `a-z`).
    pub fn parse(text: &str, k: u32) -> Result<Word> {
        if k == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if k > MAX_TEXT_ALPHABET {
            return Err(Error::AlphabetTooLarge(k));
        }
        let symbols =
            text.chars().map(|c| c.to_digit(36).ok_or(Error::InvalidCharacter(c))).collect::<Result<Vec<_>>>()?;
        Word::new(k, symbols)
    }

    /// The length-`len` word whose base-`k` value is `value`.
    pub fn from_value(value: u64, k: u32, len: usize) -> Word {
        debug_assert!(k >= 1);
        let radix = u64::from(k);
        let mut symbols = vec![0; len];
        let mut rest = value;
        for slot in symbols.iter_mut().rev() {
            *slot = (rest % radix) as u32;
            rest /= radix;
        }
        debug_assert_eq!(rest, 0, "value does not fit in {len} symbols");
        Word { k, symbols }
    }

    /// Base-`k` value of the word; fails when it exceeds `u64`.
    pub fn value(&self) -> Result<u64> {
        let radix = u64::from(self.k);
        self.symbols.iter().try_fold(0u64, |acc, &s| {
            acc.checked_mul(radix)
                .and_then(|v| v.checked_add(u64::from(s)))
                .ok_or_else(|| Error::overflow(format!("the value of a length-{} word", self.len())))
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn reflect(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word { k: self.k, symbols }
    }

    pub fn is_palindrome(&self) -> bool {
        let s = &self.symbols;
        s.iter().eq(s.iter().rev())
    }

    /// All but the last symbol; `None` for the empty word.
    pub fn prefix(&self) -> Option<Word> {
        let (_, init) = self.symbols.split_last()?;
        Some(Word { k: self.k, symbols: init.to_vec() })
    }

    /// All but the first symbol; `None` for the empty word.
    pub fn suffix(&self) -> Option<Word> {
        let (_, tail) = self.symbols.split_first()?;
        Some(Word { k: self.k, symbols: tail.to_vec() })
    }

    pub fn canonicalize(&self) -> PairClass {
        let reflected = self.reflect();
        let palindrome = reflected == *self;
        let rep = if reflected.symbols > self.symbols { reflected } else { self.clone() };
        PairClass { rep, palindrome }
    }

    /// Forward subwords of length `n`, left to right.
    pub fn windows(&self, n: usize) -> impl Iterator<Item = Word> + '_ {
        let count = if n == 0 { 0 } else { (self.len() + 1).saturating_sub(n) };
        (0..count).map(move |i| Word { k: self.k, symbols: self.symbols[i..i + n].to_vec() })
    }

    pub(crate) fn push(&mut self, symbol: u32) {
        debug_assert!(symbol < self.k);
        self.symbols.push(symbol);
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.symbols.cmp(&other.symbols)).then_with(|| self.k.cmp(&other.k))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            match DIGITS.get(s as usize) {
                Some(&c) => write!(f, "{}", c as char)?,
                None => write!(f, "<{s}>")?,
            }
        }
        Ok(())
    }
}

/// A reflected pair, named by its larger member.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PairClass {
    rep: Word,
    palindrome: bool,
}

impl PairClass {
    pub fn rep(&self) -> &Word {
        &self.rep
    }

    pub fn is_palindrome(&self) -> bool {
        self.palindrome
    }

    /// The smaller member; equal to the representative for palindromes.
    pub fn other(&self) -> Word {
        self.rep.reflect()
    }

    pub fn contains(&self, w: &Word) -> bool {
        *w == self.rep || (w.len() == self.rep.len() && w.symbols.iter().eq(self.rep.symbols.iter().rev()))
    }

    /// Parses either `[110]` or a bare member such as `011`.
    pub fn parse(text: &str, k: u32) -> Result<PairClass> {
        let inner = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(text);
        Ok(Word::parse(inner, k)?.canonicalize())
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

pub(crate) fn checked_pow(k: u64, exp: usize) -> Option<u128> {
    let exp = u32::try_from(exp).ok()?;
    u128::from(k).checked_pow(exp)
}

fn pow_or_overflow(k: u64, exp: usize) -> Result<u128> {
    checked_pow(k, exp).ok_or_else(|| Error::overflow(format!("{k}^{exp}")))
}

fn check_km(k: u64, m: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if m == 0 {
        return Err(Error::InvalidParameters("word length must be at least 1".into()));
    }
    Ok(())
}

/// Number of reflected pairs of length-`m` words: `(k^m + k^ceil(m/2)) / 2`.
pub fn class_count(k: u64, m: usize) -> Result<u128> {
    check_km(k, m)?;
    let all = pow_or_overflow(k, m)?;
    let pal = pow_or_overflow(k, m.div_ceil(2))?;
    let sum = all.checked_add(pal).ok_or_else(|| Error::overflow("the class count"))?;
    Ok(sum / 2)
}

/// Number of palindromes of length `m`: `k^ceil(m/2)`.
pub fn count_palindromes(k: u64, m: usize) -> Result<u128> {
    check_km(k, m)?;
    pow_or_overflow(k, m.div_ceil(2))
}

/// Number of length-`(n-1)` words whose prefix and suffix are both
/// palindromes: `k` for even `n`, `k^2` for odd `n`.
pub fn count_both_palindromic(k: u64, n: usize) -> Result<u128> {
    if k == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if n < 3 {
        return Err(Error::InvalidParameters(format!("n must be at least 3, got {n}")));
    }
    let k = u128::from(k);
    Ok(if n.is_multiple_of(2) { k } else { k * k })
}

/// Every reflected pair of length-`m` words, sorted by representative.
pub fn enumerate_classes(k: u32, m: usize) -> Result<Vec<PairClass>> {
    check_km(u64::from(k), m)?;
    let radix = Radix::new(k, m)?;
    Ok((0..radix.size)
        .filter(|&code| radix.reflect(code) <= code)
        .map(|code| Word::from_value(code, k, m).canonicalize())
        .collect())
}

/// Fixed-length words packed into their base-`k` value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Radix {
    pub k: u64,
    pub len: usize,
    /// `k^len`
    pub size: u64,
}

impl Radix {
    pub fn new(k: u32, len: usize) -> Result<Radix> {
        let size = checked_pow(u64::from(k), len)
            .and_then(|s| u64::try_from(s).ok())
            .ok_or_else(|| Error::overflow(format!("{k}^{len}")))?;
        Ok(Radix { k: u64::from(k), len, size })
    }

    pub fn reflect(&self, mut code: u64) -> u64 {
        let mut out = 0;
        for _ in 0..self.len {
            out = out * self.k + code % self.k;
            code /= self.k;
        }
        out
    }

    pub fn canonical(&self, code: u64) -> u64 {
        code.max(self.reflect(code))
    }

    pub fn word(&self, code: u64) -> Word {
        Word::from_value(code, self.k as u32, self.len)
    }
}
