//! Fixed-length bit words.
//!
//! `BitWord` is the common currency of every enumerator in this crate: solutions,
//! auxiliary memory, edge masks and reachability rows are all bit words. Index 0
//! is the leftmost printed character, so `word.get(0)` is variable/vertex 1 in
//! the conventions used by the problem modules.

use std::fmt;
use std::str::FromStr;

/// A fixed-length word over {0, 1}.
///
/// Equality, hashing and the derived `Ord` (lexicographic with 0 < 1, which for
/// equal lengths coincides with numeric order, most significant bit first) are
/// all defined on the bit sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    bits: Vec<bool>,
}

/// Error returned when parsing a `BitWord` from text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid bit word {text:?}: expected only '0' and '1'")]
pub struct ParseBitWordError {
    text: String,
}

impl BitWord {
    /// All-zero word of the given length.
    pub fn zeros(len: usize) -> Self {
        BitWord { bits: vec![false; len] }
    }

    /// All-one word of the given length.
    pub fn ones(len: usize) -> Self {
        BitWord { bits: vec![true; len] }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        BitWord { bits }
    }

    /// Word of length `len` holding the binary digits of `value`, most
    /// significant digit leftmost. Panics if `value` does not fit.
    pub fn from_value(len: usize, value: u64) -> Self {
        assert!(len >= 64 || value < (1u64 << len), "value {value} does not fit in {len} bits");
        let mut w = BitWord::zeros(len);
        for i in 0..len.min(64) {
            if value >> i & 1 == 1 {
                w.bits[len - 1 - i] = true;
            }
        }
        w
    }

    /// Reads the word as a binary number, leftmost bit most significant.
    /// Panics if the word is longer than 63 bits.
    pub fn to_value(&self) -> u64 {
        assert!(self.len() <= 63, "word too long for a u64 value");
        self.bits.iter().fold(0u64, |acc, &b| acc << 1 | b as u64)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, index: usize) -> bool {
        self.bits[index]
    }

    pub fn set(&mut self, index: usize, value: bool) {
        self.bits[index] = value;
    }

    pub fn flip(&mut self, index: usize) {
        self.bits[index] = !self.bits[index];
    }

    /// A copy with the bit at `index` flipped.
    pub fn with_flipped(&self, index: usize) -> Self {
        let mut w = self.clone();
        w.flip(index);
        w
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_all_zero(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    pub fn is_all_one(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }

    /// Positions (0-based) of the 1 bits, left to right.
    pub fn one_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &BitWord) -> BitWord {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        BitWord { bits }
    }

    /// The first `len` bits as a new word. Panics if `len > self.len()`.
    pub fn prefix(&self, len: usize) -> BitWord {
        BitWord { bits: self.bits[..len].to_vec() }
    }

    /// The bits from `start` onwards as a new word.
    pub fn suffix(&self, start: usize) -> BitWord {
        BitWord { bits: self.bits[start..].to_vec() }
    }

    /// Bitwise complement.
    pub fn complement(&self) -> BitWord {
        BitWord { bits: self.bits.iter().map(|&b| !b).collect() }
    }

    /// True iff some position holds a 1 in both words. Lengths must match.
    pub fn intersects(&self, other: &BitWord) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.bits.iter().zip(&other.bits).any(|(&a, &b)| a && b)
    }

    /// True iff every 1 of `self` is also a 1 of `other`. Lengths must match.
    pub fn is_subset_of(&self, other: &BitWord) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    /// Bitwise OR of `other` into `self`. Lengths must match.
    pub fn union_with(&mut self, other: &BitWord) {
        debug_assert_eq!(self.len(), other.len());
        for (a, &b) in self.bits.iter_mut().zip(&other.bits) {
            *a = *a || b;
        }
    }

    /// Positions that are 1 in `self` but not in `other`. Lengths must match.
    pub fn minus(&self, other: &BitWord) -> BitWord {
        debug_assert_eq!(self.len(), other.len());
        BitWord { bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| a && !b).collect() }
    }

    /// Hamming distance to `other`. Lengths must match.
    pub fn hamming_distance(&self, other: &BitWord) -> usize {
        debug_assert_eq!(self.len(), other.len());
        self.bits.iter().zip(&other.bits).filter(|(&a, &b)| a != b).count()
    }
}

/// Compares two equal-length words lexicographically with 1 before 0: the word
/// holding a 1 at the first differing position comes first. This is the reverse
/// of the derived `Ord`.
pub fn cmp_ones_first(a: &BitWord, b: &BitWord) -> std::cmp::Ordering {
    debug_assert_eq!(a.len(), b.len());
    b.cmp(a)
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = ParseBitWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(ParseBitWordError { text: s.to_string() }),
            }
        }
        Ok(BitWord { bits })
    }
}
