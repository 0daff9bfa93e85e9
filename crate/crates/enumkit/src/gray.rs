//! Binary reflected Gray code: rank/word conversions and four enumeration
//! schemes over the words of length `n`.
//!
//! Bit positions follow the reflected-code convention: position 0 is the
//! *rightmost* printed bit, position `n-1` the leftmost. A word of rank `r` has
//! bits `a_j = b_j XOR b_{j+1}`, where `b_j` is the `j`-th binary digit of `r`
//! (and `b_n = 0`); conversely `b_j` is the parity of `a_j, ..., a_{n-1}`.
//!
//! The schemes:
//! * [`LexWords`]: all words in numeric order, no reordering, no memory.
//! * [`OrderedGray`]: the code in rank order. One auxiliary bit tracks the
//!   parity of the step about to be performed: odd steps flip position 0, even
//!   steps flip the position just above the lowest 1. The walk ends when that
//!   flip would fall off the word, which happens exactly at `10...0`.
//! * [`GrayFromRank`] / [`GrayFromWord`]: every word of rank at least `r`,
//!   without memory. Consecutive code words differ in a single flip, so a
//!   double flip jumps by two ranks; the walk climbs the ranks of `r`'s parity,
//!   crosses over at the top two words (`10...01` and `10...0`), and descends
//!   the opposite parity back to rank `r + 1`.
//! * [`OrderedGrayFromRank`] / [`OrderedGrayFromWord`]: the rank-ordered walk
//!   started at rank `r`; the word form obtains `r` by conversion during
//!   precomputation.

use crate::machine::{Augmented, EnumError, Enumerator, MemoryBudget};
use crate::word::BitWord;

/// Largest word length for which ranks fit into a `u64`.
pub const MAX_RANK_LEN: usize = 63;

/// Parity of the next rank-ordered step. Serialized as one memory bit,
/// 1 = next step odd.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StepParity {
    NextOdd,
    NextEven,
}

impl StepParity {
    /// The step that follows reaching rank `r`: odd iff `r` is even.
    pub fn after_rank(rank: u64) -> Self {
        if rank % 2 == 0 {
            StepParity::NextOdd
        } else {
            StepParity::NextEven
        }
    }

    pub fn memory_bit(self) -> bool {
        matches!(self, StepParity::NextOdd)
    }

    pub fn from_memory_bit(bit: bool) -> Self {
        if bit {
            StepParity::NextOdd
        } else {
            StepParity::NextEven
        }
    }

    pub fn to_memory(self) -> BitWord {
        BitWord::from_bits(vec![self.memory_bit()])
    }
}

#[inline]
fn bit_at_pos(word: &BitWord, pos: usize) -> bool {
    word.get(word.len() - 1 - pos)
}

#[inline]
fn flip_pos(word: &mut BitWord, pos: usize) {
    let i = word.len() - 1 - pos;
    word.flip(i);
}

/// Position of the lowest 1, if any.
fn min_one_pos(word: &BitWord) -> Option<usize> {
    (0..word.len()).find(|&pos| bit_at_pos(word, pos))
}

fn ensure_rankable(n: usize) -> Result<(), EnumError> {
    if n == 0 {
        return Err(EnumError::MalformedInstance("word length must be at least 1".into()));
    }
    if n > MAX_RANK_LEN {
        return Err(EnumError::MalformedInstance(format!(
            "word length {n} exceeds the supported maximum of {MAX_RANK_LEN} for ranked walks"
        )));
    }
    Ok(())
}

fn check_rank(n: usize, rank: u64) -> Result<(), EnumError> {
    ensure_rankable(n)?;
    if rank >= 1u64 << n {
        return Err(EnumError::RankOutOfRange { n, rank });
    }
    Ok(())
}

/// The code word of the given rank: bit `a_j = b_j XOR b_{j+1}`.
pub fn gray_word_from_rank(n: usize, rank: u64) -> Result<BitWord, EnumError> {
    check_rank(n, rank)?;
    let mut word = BitWord::zeros(n);
    for pos in 0..n {
        let b_j = rank >> pos & 1;
        let b_j1 = rank >> (pos + 1) & 1;
        if b_j ^ b_j1 == 1 {
            flip_pos(&mut word, pos);
        }
    }
    Ok(word)
}

/// The rank of a code word: digit `b_j` is the parity of `a_j, ..., a_{n-1}`.
/// Panics on words longer than [`MAX_RANK_LEN`] bits.
pub fn gray_rank_from_word(word: &BitWord) -> u64 {
    assert!(
        !word.is_empty() && word.len() <= MAX_RANK_LEN,
        "rank conversion requires a word of 1..={MAX_RANK_LEN} bits"
    );
    let n = word.len();
    let mut rank = 0u64;
    let mut parity = 0u64;
    for pos in (0..n).rev() {
        parity ^= bit_at_pos(word, pos) as u64;
        rank |= parity << pos;
    }
    rank
}

/// Binary successor; fixpoint at the all-ones word. Together with the all-zero
/// start this enumerates every word of the given length in numeric order.
pub fn lex_next(word: &BitWord) -> BitWord {
    if word.is_all_one() {
        return word.clone();
    }
    let mut out = word.clone();
    for i in (0..out.len()).rev() {
        if out.get(i) {
            out.set(i, false);
        } else {
            out.set(i, true);
            break;
        }
    }
    out
}

/// One rank-ordered step. Odd steps flip position 0; even steps flip the
/// position just above the lowest 1. When that position falls outside the word
/// (only at `10...0`) the walk is over and the inputs are returned unchanged.
pub fn ordered_gray_next(word: &BitWord, parity: StepParity) -> (BitWord, StepParity) {
    if word.is_empty() {
        return (word.clone(), parity);
    }
    match parity {
        StepParity::NextOdd => {
            let mut next = word.clone();
            flip_pos(&mut next, 0);
            (next, StepParity::NextEven)
        }
        StepParity::NextEven => {
            let Some(low) = min_one_pos(word) else {
                return (word.clone(), parity);
            };
            if low + 1 >= word.len() {
                return (word.clone(), parity);
            }
            let mut next = word.clone();
            flip_pos(&mut next, low + 1);
            (next, StepParity::NextOdd)
        }
    }
}

/// Double flip advancing an even-chain word by two ranks (or walking the odd
/// chain down by two): flip position 0, then the position above the lowest 1
/// of the intermediate word.
fn double_flip_even_start(word: &BitWord) -> BitWord {
    let mut out = word.clone();
    flip_pos(&mut out, 0);
    match min_one_pos(&out) {
        Some(low) if low + 1 < out.len() => {
            flip_pos(&mut out, low + 1);
            out
        }
        _ => word.clone(),
    }
}

/// Mirrored double flip used when the start rank is odd: flip the position
/// above the lowest 1 first, then position 0.
fn double_flip_odd_start(word: &BitWord) -> BitWord {
    let Some(low) = min_one_pos(word) else {
        return word.clone();
    };
    if low + 1 >= word.len() {
        return word.clone();
    }
    let mut out = word.clone();
    flip_pos(&mut out, low + 1);
    flip_pos(&mut out, 0);
    out
}

/// `10...01`, the code word of rank `2^n - 2`.
fn top_even_word(n: usize) -> BitWord {
    let mut w = BitWord::zeros(n);
    flip_pos(&mut w, 0);
    flip_pos(&mut w, n - 1);
    w
}

/// `10...0`, the code word of rank `2^n - 1`.
fn top_odd_word(n: usize) -> BitWord {
    let mut w = BitWord::zeros(n);
    flip_pos(&mut w, n - 1);
    w
}

/// First word of the memoryless walk over ranks `>= rank`: the code word of
/// `rank` itself.
pub fn unordered_rank_first(n: usize, rank: u64) -> Result<BitWord, EnumError> {
    gray_word_from_rank(n, rank)
}

/// Total successor of the memoryless walk; assumes `current` is one of the
/// walk's words. See [`unordered_rank_next`] for the checked form.
pub fn unordered_rank_step(n: usize, rank: u64, current: &BitWord) -> BitWord {
    debug_assert_eq!(current.len(), n);
    if n == 1 {
        // Two words total; the walk is 0 -> 1 when starting at rank 0.
        return match (rank, current.get(0)) {
            (0, false) => BitWord::ones(1),
            _ => current.clone(),
        };
    }
    let top = (1u64 << n) - 1;
    if rank == top {
        return current.clone();
    }
    let last = gray_word_from_rank(n, rank + 1).expect("rank + 1 in range");
    if *current == last {
        return current.clone();
    }
    if rank % 2 == 0 {
        if *current == top_even_word(n) {
            top_odd_word(n)
        } else {
            double_flip_even_start(current)
        }
    } else if *current == top_odd_word(n) {
        top_even_word(n)
    } else {
        double_flip_odd_start(current)
    }
}

/// Checked successor of the memoryless walk: rejects predecessors whose rank
/// is below the start rank.
pub fn unordered_rank_next(n: usize, rank: u64, current: &BitWord) -> Result<BitWord, EnumError> {
    check_rank(n, rank)?;
    if current.len() != n {
        return Err(EnumError::InvalidPredecessor(format!(
            "expected a word of length {n}, got {current}"
        )));
    }
    if gray_rank_from_word(current) < rank {
        return Err(EnumError::InvalidPredecessor(format!(
            "{current} has rank below the start rank {rank}"
        )));
    }
    Ok(unordered_rank_step(n, rank, current))
}

/// First word of the memoryless walk anchored at a word: the word itself.
pub fn unordered_word_first(start: &BitWord) -> BitWord {
    start.clone()
}

/// Checked successor of the word-anchored walk. The start rank is recomputed
/// from `start` on every call rather than precomputed.
pub fn unordered_word_next(start: &BitWord, current: &BitWord) -> Result<BitWord, EnumError> {
    let rank = gray_rank_from_word(start);
    unordered_rank_next(start.len(), rank, current)
}

/// Start of the rank-ordered walk at an arbitrary rank: the code word plus the
/// parity of the step that follows it.
pub fn ordered_from_rank_first(n: usize, rank: u64) -> Result<(BitWord, StepParity), EnumError> {
    Ok((gray_word_from_rank(n, rank)?, StepParity::after_rank(rank)))
}

/// Precomputation of the word-anchored rank-ordered walk: the rank of `start`.
pub fn ordered_from_word_precompute(start: &BitWord) -> u64 {
    gray_rank_from_word(start)
}

/// Parameters of a ranked walk: word length and start rank.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RankStart {
    pub n: usize,
    pub rank: u64,
}

fn word_instance_rank(start: &BitWord) -> Result<RankStart, EnumError> {
    ensure_rankable(start.len())?;
    Ok(RankStart { n: start.len(), rank: gray_rank_from_word(start) })
}

/// All words of length `n` in numeric order.
pub struct LexWords;

impl Enumerator for LexWords {
    type Instance = usize;
    type Artifact = usize;

    fn problem(&self) -> &'static str {
        "gray-lex"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::None
    }

    fn instance_size(&self, n: &usize) -> usize {
        *n
    }

    fn precompute(&self, n: &usize) -> Result<Option<usize>, EnumError> {
        if *n == 0 {
            return Err(EnumError::MalformedInstance("word length must be at least 1".into()));
        }
        Ok(Some(*n))
    }

    fn first(&self, n: &usize) -> Option<Augmented> {
        Some(Augmented::bare(BitWord::zeros(*n)))
    }

    fn step(&self, _n: &usize, current: &Augmented) -> Augmented {
        Augmented::bare(lex_next(&current.solution))
    }

    fn check(&self, n: &usize, solution: &BitWord) -> Option<bool> {
        Some(solution.len() == *n)
    }
}

/// The full code in rank order, one auxiliary parity bit.
pub struct OrderedGray;

impl OrderedGray {
    fn advance(current: &Augmented) -> Augmented {
        let parity = StepParity::from_memory_bit(current.memory.get(0));
        let (word, parity) = ordered_gray_next(&current.solution, parity);
        Augmented::new(word, parity.to_memory())
    }

    fn validate(state: &Augmented, n: usize) -> Result<(), EnumError> {
        if state.solution.len() != n {
            return Err(EnumError::InvalidPredecessor(format!(
                "expected a word of length {n}, got {}",
                state.solution
            )));
        }
        if state.memory.len() != 1 {
            return Err(EnumError::InvalidPredecessor(
                "rank-ordered walks carry exactly one parity bit of memory".into(),
            ));
        }
        // The parity bit is determined by the word's rank.
        let expected = StepParity::after_rank(gray_rank_from_word(&state.solution));
        if StepParity::from_memory_bit(state.memory.get(0)) != expected {
            return Err(EnumError::InvalidPredecessor(format!(
                "parity bit does not match the rank of {}",
                state.solution
            )));
        }
        Ok(())
    }
}

impl Enumerator for OrderedGray {
    type Instance = usize;
    type Artifact = usize;

    fn problem(&self) -> &'static str {
        "gray-ordered"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::Constant(1)
    }

    fn instance_size(&self, n: &usize) -> usize {
        *n
    }

    fn precompute(&self, n: &usize) -> Result<Option<usize>, EnumError> {
        ensure_rankable(*n)?;
        Ok(Some(*n))
    }

    fn first(&self, n: &usize) -> Option<Augmented> {
        Some(Augmented::new(BitWord::zeros(*n), StepParity::NextOdd.to_memory()))
    }

    fn step(&self, _n: &usize, current: &Augmented) -> Augmented {
        Self::advance(current)
    }

    fn check(&self, n: &usize, solution: &BitWord) -> Option<bool> {
        Some(solution.len() == *n)
    }

    fn validate_state(&self, n: &usize, state: &Augmented) -> Result<(), EnumError> {
        Self::validate(state, *n)
    }
}

/// Every word of rank `>= rank`, memoryless, anchored at a rank.
pub struct GrayFromRank;

impl Enumerator for GrayFromRank {
    type Instance = RankStart;
    type Artifact = RankStart;

    fn problem(&self) -> &'static str {
        "gray-rank"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::None
    }

    fn instance_size(&self, x: &RankStart) -> usize {
        x.n
    }

    fn precompute(&self, x: &RankStart) -> Result<Option<RankStart>, EnumError> {
        check_rank(x.n, x.rank)?;
        Ok(Some(*x))
    }

    fn first(&self, a: &RankStart) -> Option<Augmented> {
        Some(Augmented::bare(gray_word_from_rank(a.n, a.rank).expect("validated rank")))
    }

    fn step(&self, a: &RankStart, current: &Augmented) -> Augmented {
        Augmented::bare(unordered_rank_step(a.n, a.rank, &current.solution))
    }

    fn check(&self, x: &RankStart, solution: &BitWord) -> Option<bool> {
        Some(solution.len() == x.n && gray_rank_from_word(solution) >= x.rank)
    }

    fn validate_state(&self, a: &RankStart, state: &Augmented) -> Result<(), EnumError> {
        if state.memory.len() != 0 {
            return Err(EnumError::InvalidPredecessor("this walk carries no memory".into()));
        }
        if state.solution.len() != a.n {
            return Err(EnumError::InvalidPredecessor(format!(
                "expected a word of length {}, got {}",
                a.n, state.solution
            )));
        }
        Ok(())
    }
}

/// Every word of rank `>= rank(start)`, memoryless, anchored at a word. The
/// start rank is reconverted inside each successor call.
pub struct GrayFromWord;

impl Enumerator for GrayFromWord {
    type Instance = BitWord;
    type Artifact = BitWord;

    fn problem(&self) -> &'static str {
        "gray-word"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::None
    }

    fn instance_size(&self, x: &BitWord) -> usize {
        x.len()
    }

    fn precompute(&self, x: &BitWord) -> Result<Option<BitWord>, EnumError> {
        ensure_rankable(x.len())?;
        Ok(Some(x.clone()))
    }

    fn first(&self, a: &BitWord) -> Option<Augmented> {
        Some(Augmented::bare(unordered_word_first(a)))
    }

    fn step(&self, a: &BitWord, current: &Augmented) -> Augmented {
        // Recompute the anchor rank here rather than caching it.
        let rank = gray_rank_from_word(a);
        Augmented::bare(unordered_rank_step(a.len(), rank, &current.solution))
    }

    fn check(&self, x: &BitWord, solution: &BitWord) -> Option<bool> {
        Some(solution.len() == x.len() && gray_rank_from_word(solution) >= gray_rank_from_word(x))
    }
}

/// Rank-ordered walk starting at a given rank; one parity bit.
pub struct OrderedGrayFromRank;

impl Enumerator for OrderedGrayFromRank {
    type Instance = RankStart;
    type Artifact = RankStart;

    fn problem(&self) -> &'static str {
        "gray-ordered-rank"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::Constant(1)
    }

    fn instance_size(&self, x: &RankStart) -> usize {
        x.n
    }

    fn precompute(&self, x: &RankStart) -> Result<Option<RankStart>, EnumError> {
        check_rank(x.n, x.rank)?;
        Ok(Some(*x))
    }

    fn first(&self, a: &RankStart) -> Option<Augmented> {
        let (word, parity) = ordered_from_rank_first(a.n, a.rank).expect("validated rank");
        Some(Augmented::new(word, parity.to_memory()))
    }

    fn step(&self, _a: &RankStart, current: &Augmented) -> Augmented {
        OrderedGray::advance(current)
    }

    fn check(&self, x: &RankStart, solution: &BitWord) -> Option<bool> {
        Some(solution.len() == x.n && gray_rank_from_word(solution) >= x.rank)
    }

    fn validate_state(&self, a: &RankStart, state: &Augmented) -> Result<(), EnumError> {
        OrderedGray::validate(state, a.n)
    }
}

/// Rank-ordered walk starting at a given word; the rank is obtained by
/// conversion during precomputation.
pub struct OrderedGrayFromWord;

impl Enumerator for OrderedGrayFromWord {
    type Instance = BitWord;
    type Artifact = RankStart;

    fn problem(&self) -> &'static str {
        "gray-ordered-word"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::Constant(1)
    }

    fn instance_size(&self, x: &BitWord) -> usize {
        x.len()
    }

    fn precompute(&self, x: &BitWord) -> Result<Option<RankStart>, EnumError> {
        word_instance_rank(x).map(Some)
    }

    fn first(&self, a: &RankStart) -> Option<Augmented> {
        let (word, parity) = ordered_from_rank_first(a.n, a.rank).expect("validated rank");
        Some(Augmented::new(word, parity.to_memory()))
    }

    fn step(&self, _a: &RankStart, current: &Augmented) -> Augmented {
        OrderedGray::advance(current)
    }

    fn check(&self, x: &BitWord, solution: &BitWord) -> Option<bool> {
        Some(solution.len() == x.len() && gray_rank_from_word(solution) >= gray_rank_from_word(x))
    }

    fn validate_state(&self, a: &RankStart, state: &Augmented) -> Result<(), EnumError> {
        OrderedGray::validate(state, a.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::run_enumeration;
    use proptest::prelude::*;

    /// The full 4-bit code, in rank order.
    const CODE4: [&str; 16] = [
        "0000", "0001", "0011", "0010", "0110", "0111", "0101", "0100", "1100", "1101", "1111",
        "1110", "1010", "1011", "1001", "1000",
    ];

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn four_bit_code_table() {
        for (rank, &expected) in CODE4.iter().enumerate() {
            let word = gray_word_from_rank(4, rank as u64).unwrap();
            assert_eq!(word.to_string(), expected, "rank {rank}");
            assert_eq!(gray_rank_from_word(&word), rank as u64, "rank {rank}");
        }
    }

    #[test]
    fn word_from_rank_examples() {
        assert_eq!(gray_word_from_rank(4, 11).unwrap().to_string(), "1110");
        assert_eq!(gray_word_from_rank(4, 0).unwrap().to_string(), "0000");
        assert_eq!(gray_word_from_rank(4, 15).unwrap().to_string(), "1000");
        assert!(matches!(
            gray_word_from_rank(4, 16),
            Err(EnumError::RankOutOfRange { n: 4, rank: 16 })
        ));
    }

    #[test]
    fn rank_from_word_examples() {
        assert_eq!(gray_rank_from_word(&w("1110")), 11);
        assert_eq!(gray_rank_from_word(&w("0000")), 0);
        assert_eq!(gray_rank_from_word(&w("1000")), 15);
        assert_eq!(gray_rank_from_word(&w("0100")), 7);
        assert_eq!(gray_rank_from_word(&w("0010")), 3);
        assert_eq!(gray_rank_from_word(&w("1")), 1);
    }

    #[test]
    fn lex_next_examples() {
        assert_eq!(lex_next(&w("0110")).to_string(), "0111");
        assert_eq!(lex_next(&w("0111")).to_string(), "1000");
        assert_eq!(lex_next(&w("1111")).to_string(), "1111");
    }

    #[test]
    fn ordered_step_examples() {
        let (word, parity) = ordered_gray_next(&w("0110"), StepParity::NextOdd);
        assert_eq!((word.to_string().as_str(), parity), ("0111", StepParity::NextEven));
        let (word, parity) = ordered_gray_next(&w("0111"), StepParity::NextEven);
        assert_eq!((word.to_string().as_str(), parity), ("0101", StepParity::NextOdd));
        // 1000 on an even step: the flip position falls off the word.
        let (word, parity) = ordered_gray_next(&w("1000"), StepParity::NextEven);
        assert_eq!((word.to_string().as_str(), parity), ("1000", StepParity::NextEven));
    }

    #[test]
    fn ordered_stream_matches_table() {
        let r = run_enumeration(&OrderedGray, &4, None).unwrap();
        let got: Vec<String> = r.solutions.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, CODE4);
        assert_eq!(r.max_overhead_bits, 1);
    }

    #[test]
    fn ordered_stream_limit() {
        let r = run_enumeration(&OrderedGray, &4, Some(3)).unwrap();
        let got: Vec<String> = r.solutions.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["0000", "0001", "0011"]);
    }

    #[test]
    fn single_bit_streams() {
        let r = run_enumeration(&OrderedGray, &1, None).unwrap();
        let got: Vec<String> = r.solutions.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["0", "1"]);

        let r = run_enumeration(&GrayFromRank, &RankStart { n: 1, rank: 0 }, None).unwrap();
        let got: Vec<String> = r.solutions.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["0", "1"]);

        let r = run_enumeration(&GrayFromRank, &RankStart { n: 1, rank: 1 }, None).unwrap();
        let got: Vec<String> = r.solutions.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["1"]);
    }

    #[test]
    fn unordered_step_examples() {
        // Climbing the even chain from rank 2.
        assert_eq!(unordered_rank_next(4, 2, &w("0011")).unwrap().to_string(), "0110");
        // Crossover at the top even word.
        assert_eq!(unordered_rank_next(4, 2, &w("1001")).unwrap().to_string(), "1000");
        // Fixpoint at rank 3, the last word of the walk from rank 2.
        assert_eq!(unordered_rank_next(4, 2, &w("0010")).unwrap().to_string(), "0010");
        // A predecessor below the start rank is rejected.
        assert!(matches!(
            unordered_rank_next(4, 2, &w("0001")),
            Err(EnumError::InvalidPredecessor(_))
        ));
    }

    #[test]
    fn unordered_word_examples() {
        assert_eq!(unordered_word_first(&w("0011")).to_string(), "0011");
        assert_eq!(unordered_word_next(&w("0011"), &w("0110")).unwrap().to_string(), "0101");
        assert_eq!(unordered_word_next(&w("0011"), &w("0010")).unwrap().to_string(), "0010");
    }

    #[test]
    fn unordered_walk_from_rank_two() {
        let r = run_enumeration(&GrayFromRank, &RankStart { n: 4, rank: 2 }, None).unwrap();
        let ranks: Vec<u64> = r.solutions.iter().map(gray_rank_from_word).collect();
        // Even chain up, crossover, odd chain down to rank 3.
        assert_eq!(ranks, [2, 4, 6, 8, 10, 12, 14, 15, 13, 11, 9, 7, 5, 3]);
        assert_eq!(r.max_overhead_bits, 0);
    }

    #[test]
    fn unordered_walk_covers_suffix_sets() {
        for n in 1..=6usize {
            let total = 1u64 << n;
            for rank in 0..total {
                let r = run_enumeration(&GrayFromRank, &RankStart { n, rank }, None).unwrap();
                assert_eq!(r.solutions.len() as u64, total - rank, "n={n} r={rank}");
                let mut got: Vec<u64> = r.solutions.iter().map(gray_rank_from_word).collect();
                got.sort_unstable();
                let expected: Vec<u64> = (rank..total).collect();
                assert_eq!(got, expected, "n={n} r={rank}");
            }
        }
    }

    #[test]
    fn word_walk_agrees_with_rank_walk() {
        for n in 1..=5usize {
            for rank in 0..1u64 << n {
                let start = gray_word_from_rank(n, rank).unwrap();
                let by_word = run_enumeration(&GrayFromWord, &start, None).unwrap();
                let by_rank = run_enumeration(&GrayFromRank, &RankStart { n, rank }, None).unwrap();
                assert_eq!(by_word.solutions, by_rank.solutions, "n={n} r={rank}");
            }
        }
    }

    #[test]
    fn ordered_from_rank_examples() {
        let (word, parity) = ordered_from_rank_first(4, 6).unwrap();
        assert_eq!((word.to_string().as_str(), parity), ("0101", StepParity::NextOdd));
        let (word, parity) = ordered_from_rank_first(4, 7).unwrap();
        assert_eq!((word.to_string().as_str(), parity), ("0100", StepParity::NextEven));
    }

    #[test]
    fn ordered_from_word_precompute_examples() {
        assert_eq!(ordered_from_word_precompute(&w("0100")), 7);
        assert_eq!(ordered_from_word_precompute(&w("1")), 1);
        assert_eq!(ordered_from_word_precompute(&w("0010")), 3);
    }

    #[test]
    fn ordered_from_rank_streams_are_rank_suffixes() {
        for n in 1..=5usize {
            for rank in 0..1u64 << n {
                let r =
                    run_enumeration(&OrderedGrayFromRank, &RankStart { n, rank }, None).unwrap();
                let ranks: Vec<u64> = r.solutions.iter().map(gray_rank_from_word).collect();
                let expected: Vec<u64> = (rank..1u64 << n).collect();
                assert_eq!(ranks, expected, "n={n} r={rank}");
            }
        }
    }

    #[test]
    fn ordered_from_word_matches_from_rank() {
        for rank in 0..16u64 {
            let start = gray_word_from_rank(4, rank).unwrap();
            let a = run_enumeration(&OrderedGrayFromWord, &start, None).unwrap();
            let b = run_enumeration(&OrderedGrayFromRank, &RankStart { n: 4, rank }, None).unwrap();
            assert_eq!(a.solutions, b.solutions, "rank {rank}");
        }
    }

    #[test]
    fn lex_stream_is_numeric_order() {
        let r = run_enumeration(&LexWords, &3, None).unwrap();
        let values: Vec<u64> = r.solutions.iter().map(|x| x.to_value()).collect();
        assert_eq!(values, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn zero_length_is_rejected() {
        assert!(run_enumeration(&LexWords, &0, None).is_err());
        assert!(run_enumeration(&OrderedGray, &0, None).is_err());
    }

    proptest! {
        /// Independent route: a code word is its rank XOR its rank shifted
        /// right by one.
        #[test]
        fn conversion_matches_shift_xor(n in 1usize..16, seed in any::<u64>()) {
            let rank = seed % (1u64 << n);
            let word = gray_word_from_rank(n, rank).unwrap();
            prop_assert_eq!(word.to_value(), rank ^ (rank >> 1));
            prop_assert_eq!(gray_rank_from_word(&word), rank);
        }

        /// A double flip advances the even chain by exactly two ranks.
        #[test]
        fn double_flip_jumps_two_ranks(n in 2usize..12, seed in any::<u64>()) {
            let top = (1u64 << n) - 2;
            let rank = (seed % (top / 2)) * 2; // even, below the crossover
            let word = gray_word_from_rank(n, rank).unwrap();
            if word != top_even_word(n) {
                let next = unordered_rank_step(n, rank, &word);
                prop_assert_eq!(gray_rank_from_word(&next), rank + 2);
            }
        }
    }
}
