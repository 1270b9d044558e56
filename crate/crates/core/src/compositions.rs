//! Compositions of integers, their `{0,1}`-word encoding, and the cover
//! relations of the lifted binary tree and Binword graphs.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("nonempty word `{0}` must start with 1")]
    LeadingZero(String),
    #[error("invalid letter `{0}` in binary word")]
    InvalidLetter(char),
    #[error("cannot parse composition `{0}`")]
    Syntax(String),
}

/// An ordered sequence of positive parts; `∅` is the empty composition.
///
/// Ordered by rank, then lexicographically on the binary word
/// (`4, 31, 22, 211, 13, ...`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CompositionError> {
        if parts.contains(&0) {
            return Err(CompositionError::ZeroPart(parts));
        }
        Ok(Composition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter `j` is 1 iff cell `j` starts a part.
    pub fn to_word(&self) -> BinaryWord {
        let mut letters = Vec::with_capacity(self.rank());
        for &part in &self.0 {
            letters.push(1);
            letters.extend(std::iter::repeat_n(0, part - 1));
        }
        BinaryWord(letters)
    }

    /// `self` with its last part increased; `∅` becomes `(1)`.
    pub fn with_last_increased(&self) -> Composition {
        let mut parts = self.0.clone();
        match parts.last_mut() {
            Some(last) => *last += 1,
            None => parts.push(1),
        }
        Composition(parts)
    }

    /// `self` with an additional part 1 at the end.
    pub fn with_one_appended(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.push(1);
        Composition(parts)
    }

    pub fn ends_with_one(&self) -> bool {
        self.0.last() == Some(&1)
    }

    /// All compositions of `n`, in canonical order.
    pub fn all_of_rank(n: usize) -> Vec<Composition> {
        BinaryWord::all_encodings(n).iter().map(BinaryWord::to_composition_unchecked).collect()
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank()).then_with(|| {
            // words of equal length compare letter by letter
            self.to_word().0.cmp(&other.to_word().0)
        })
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = CompositionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

/// `∅` for the empty composition, concatenated digits when every part is
/// below 10 (`213`), otherwise a parenthesized list (`(10,2)`).
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        if self.0.iter().all(|&p| p < 10) {
            write!(f, "{}", parts.concat())
        } else {
            write!(f, "({})", parts.join(","))
        }
    }
}

impl FromStr for Composition {
    type Err = CompositionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "()" {
            return Ok(Composition::empty());
        }
        let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let parts: Option<Vec<usize>> = if inner.contains(',') {
            inner.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            inner.chars().map(|ch| ch.to_digit(10).map(|d| d as usize)).collect()
        };
        let parts = parts.ok_or_else(|| CompositionError::Syntax(s.to_string()))?;
        Composition::new(parts)
    }
}

/// A word over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(letters: Vec<u8>) -> Result<Self, CompositionError> {
        if let Some(&bad) = letters.iter().find(|&&l| l > 1) {
            return Err(CompositionError::InvalidLetter(char::from(b'0' + bad.min(9))));
        }
        Ok(BinaryWord(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inverse of [`Composition::to_word`]; parts are the runs delimited by 1s.
    pub fn to_composition(&self) -> Result<Composition, CompositionError> {
        if self.0.first() == Some(&0) {
            return Err(CompositionError::LeadingZero(self.to_string()));
        }
        Ok(self.to_composition_unchecked())
    }

    fn to_composition_unchecked(&self) -> Composition {
        let mut parts: Vec<usize> = Vec::new();
        for &l in &self.0 {
            match (l, parts.last_mut()) {
                (0, Some(last)) => *last += 1,
                _ => parts.push(1),
            }
        }
        Composition(parts)
    }

    /// The word with the 1-based position `q` removed.
    pub fn without(&self, q: usize) -> BinaryWord {
        let mut letters = self.0.clone();
        letters.remove(q - 1);
        BinaryWord(letters)
    }

    /// The word with `letter` inserted so that it lands at 1-based position `q`.
    pub fn with_inserted(&self, q: usize, letter: u8) -> BinaryWord {
        let mut letters = self.0.clone();
        letters.insert(q - 1, letter);
        BinaryWord(letters)
    }

    /// The `2^(n-1)` words of length `n` starting with 1 (just the empty
    /// word for `n = 0`), in lexicographic order.
    pub fn all_encodings(n: usize) -> Vec<BinaryWord> {
        if n == 0 {
            return vec![BinaryWord(Vec::new())];
        }
        (0..1usize << (n - 1))
            .map(|bits| {
                let mut letters = vec![1u8];
                letters.extend((0..n - 1).rev().map(|i| ((bits >> i) & 1) as u8));
                BinaryWord(letters)
            })
            .collect()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = CompositionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(CompositionError::InvalidLetter(other)),
            })
            .collect::<Result<Vec<u8>, _>>()
            .map(BinaryWord)
    }
}

pub fn composition_to_word(c: &Composition) -> BinaryWord {
    c.to_word()
}

pub fn word_to_composition(w: &BinaryWord) -> Result<Composition, CompositionError> {
    w.to_composition()
}

/// Up-neighbors in the lifted binary tree: last part increased, or a 1
/// appended. `∅` is covered by `(1)` only.
pub fn lifted_covers(c: &Composition) -> BTreeSet<Composition> {
    if c.is_empty() {
        return BTreeSet::from([Composition(vec![1])]);
    }
    BTreeSet::from([c.with_last_increased(), c.with_one_appended()])
}

/// 1-based positions `q >= 2` such that deleting letter `q` of `v` gives `u`.
pub fn binword_deletion_positions(u: &BinaryWord, v: &BinaryWord) -> BTreeSet<usize> {
    if v.len() != u.len() + 1 {
        return BTreeSet::new();
    }
    let (u, v) = (u.letters(), v.letters());
    // v minus q equals u iff the prefixes agree before q and the suffixes after
    let common_prefix = u.iter().zip(v).take_while(|(a, b)| a == b).count();
    let common_suffix = u.iter().rev().zip(v.iter().rev()).take_while(|(a, b)| a == b).count();
    // deletion at 0-based index i works iff i <= common_prefix and
    // v.len() - 1 - i <= common_suffix
    let lo = (v.len() - 1).saturating_sub(common_suffix);
    let hi = common_prefix.min(v.len() - 1);
    (lo.max(1)..=hi).map(|i| i + 1).collect()
}

/// Up-neighbors in Binword as a set: the compositions whose word loses one
/// non-first letter to give the word of `c`. `∅` is covered by `(1)` only.
pub fn binword_covers(c: &Composition) -> BTreeSet<Composition> {
    if c.is_empty() {
        return BTreeSet::from([Composition(vec![1])]);
    }
    let w = c.to_word();
    let mut out = BTreeSet::new();
    for q in 2..=w.len() + 1 {
        for letter in [0, 1] {
            out.insert(w.with_inserted(q, letter).to_composition_unchecked());
        }
    }
    out
}
