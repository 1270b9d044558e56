//! Permutations in one-line notation, their matrices, restrictions and
//! descent statistics.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::compositions::Composition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("empty token at position {0}")]
    EmptyToken(usize),
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("value `{token}` out of range 1..={n}")]
    OutOfRange { token: String, n: usize },
    #[error("duplicate value `{0}`")]
    Duplicate(String),
}

/// A permutation of `1..=n` stored as its one-line word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates that `word` is a rearrangement of `1..=word.len()`.
    pub fn new(word: Vec<u32>) -> Result<Self, PermutationError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let i = v as usize;
            if i == 0 || i > n {
                return Err(PermutationError::OutOfRange { token: v.to_string(), n });
            }
            if seen[i] {
                return Err(PermutationError::Duplicate(v.to_string()));
            }
            seen[i] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.0
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn reversed(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// Composition of `n` whose partial sums are the descent positions.
    pub fn descent_composition(&self) -> Composition {
        let mut parts = Vec::new();
        let mut run = 0;
        for (i, &v) in self.0.iter().enumerate() {
            run += 1;
            if i + 1 == self.len() || v > self.0[i + 1] {
                parts.push(run);
                run = 0;
            }
        }
        Composition::from_parts_unchecked(parts)
    }

    /// Descent composition of the inverse; the shape of the hypoplactic P-tableau.
    pub fn recoils_composition(&self) -> Composition {
        self.inverse().descent_composition()
    }

    /// The first `k` letters, not renumbered.
    pub fn restrict_prefix(&self, k: usize) -> Vec<u32> {
        self.0[..k].to_vec()
    }

    /// The letters `<= k` in their original order.
    pub fn restrict_values(&self, k: usize) -> Vec<u32> {
        self.0.iter().copied().filter(|&v| v as usize <= k).collect()
    }

    pub fn matrix(&self) -> PermutationMatrix {
        PermutationMatrix {
            n: self.len(),
            cells: self.0.iter().enumerate().map(|(i, &v)| (i + 1, v as usize)).collect(),
        }
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(Permutation(word.clone()));
            // next lexicographic permutation
            let Some(i) = (1..word.len()).rev().find(|&i| word[i - 1] < word[i]) else {
                break;
            };
            let j = (i..word.len()).rev().find(|&j| word[j] > word[i - 1]).unwrap();
            word.swap(i - 1, j);
            word[i..].reverse();
        }
        out
    }
}

/// Parses either a digit string (`415362`, one letter per digit) or a
/// comma-separated list (`4,1,5,3,6,2`). The empty string is the empty
/// permutation.
pub fn parse_permutation(text: &str) -> Result<Permutation, PermutationError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Permutation(Vec::new()));
    }
    let tokens: Vec<&str> = if text.contains(',') {
        text.split(',').map(str::trim).collect()
    } else {
        text.split("").filter(|s| !s.is_empty()).collect()
    };
    let n = tokens.len();
    let mut seen = vec![false; n + 1];
    let mut word = Vec::with_capacity(n);
    for (idx, tok) in tokens.iter().enumerate() {
        if tok.is_empty() {
            return Err(PermutationError::EmptyToken(idx + 1));
        }
        let v: u32 = tok.parse().map_err(|_| PermutationError::InvalidToken(tok.to_string()))?;
        if v == 0 || v as usize > n {
            return Err(PermutationError::OutOfRange { token: tok.to_string(), n });
        }
        if seen[v as usize] {
            return Err(PermutationError::Duplicate(tok.to_string()));
        }
        seen[v as usize] = true;
        word.push(v);
    }
    Ok(Permutation(word))
}

impl FromStr for Permutation {
    type Err = PermutationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_permutation(s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() > 9 { "," } else { "" };
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(sep))
    }
}

/// Marks `(column, row) = (i, σ(i))`, both 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationMatrix {
    pub n: usize,
    pub cells: Vec<(usize, usize)>,
}

impl PermutationMatrix {
    pub fn contains(&self, col: usize, row: usize) -> bool {
        col >= 1 && col <= self.n && self.cells[col - 1].1 == row
    }
}
