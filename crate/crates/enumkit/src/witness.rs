//! Witness sets for even-parity membership of an input word.
//!
//! For an input `x` of length `n` the stream consists of every `m`-bit word
//! except `0^m` and `1^m`, in increasing value order, followed by one verdict
//! word: `1^m` when `x` has an even number of ones, `0^m` otherwise. The
//! excluded words are reserved for the verdict, so the set itself reveals the
//! answer only in its last element, and the `2^m - 2` neutral emissions give
//! the machine time to finish computing the parity on the side.
//!
//! Two machines emit the same set with different scratch space:
//!
//! * [`WitnessConstEnum`] keeps a single running-parity bit, folding in one
//!   input bit per emission (`b ⊕ x_{i+1}`); it needs `2^m - 2 ≥ n`, so
//!   `m = ⌈log2 n⌉ + 1` and inputs must have `n ≥ 2`.
//! * [`WitnessPolyEnum`] keeps a whole level of a halving tree: each emission
//!   XORs adjacent pairs (an odd tail bit is carried over), so the level
//!   shrinks to the parity bit after `⌈log2 n⌉` emissions. This needs only
//!   `2^m - 2 ≥ ⌈log2 n⌉`, giving the much smaller
//!   `m = min{ k : 2^(2^k) ≥ n } + 1`, and inputs must have `n ≥ 3`.

use crate::machine::{Augmented, EnumError, Enumerator, MemoryBudget, PolyBound};
use crate::word::BitWord;

/// Smallest `k` with `2^k ≥ n`.
fn ceil_log2(n: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

/// Word width for the single-bit machine: `⌈log2 n⌉ + 1`.
pub fn const_width(n: usize) -> Result<usize, EnumError> {
    if n < 2 {
        return Err(EnumError::InstanceTooSmall(format!(
            "the single-bit witness machine needs an input of at least 2 bits, got {n}"
        )));
    }
    Ok(ceil_log2(n) + 1)
}

/// Word width for the halving-tree machine: `min{ k : 2^(2^k) ≥ n } + 1`.
pub fn poly_width(n: usize) -> Result<usize, EnumError> {
    if n < 3 {
        return Err(EnumError::InstanceTooSmall(format!(
            "the halving-tree witness machine needs an input of at least 3 bits, got {n}"
        )));
    }
    let mut k = 0;
    while 1u128 << (1u32 << k) < n as u128 {
        k += 1;
    }
    Ok(k + 1)
}

/// Number of emissions: the `2^m - 2` neutral words plus the verdict.
pub fn witness_count(width: usize) -> u64 {
    (1u64 << width) - 1
}

pub struct WitnessArtifact {
    input: BitWord,
    width: usize,
    /// Number of neutral emissions, `2^width - 2`.
    neutral: u64,
}

impl WitnessArtifact {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn input(&self) -> &BitWord {
        &self.input
    }
}

fn build_artifact(input: &BitWord, width: usize) -> Result<WitnessArtifact, EnumError> {
    if width >= 63 {
        return Err(EnumError::MalformedInstance(format!(
            "input of {} bits needs {width}-bit witness words",
            input.len()
        )));
    }
    Ok(WitnessArtifact { input: input.clone(), width, neutral: (1u64 << width) - 2 })
}

/// The verdict word: all ones for even parity, all zeros for odd.
fn verdict(width: usize, even: bool) -> BitWord {
    if even {
        BitWord::ones(width)
    } else {
        BitWord::zeros(width)
    }
}

/// XORs adjacent pairs; an odd tail bit is carried over unchanged.
pub fn halve_level(level: &BitWord) -> BitWord {
    let mut bits = Vec::with_capacity(level.len().div_ceil(2));
    let mut i = 0;
    while i + 1 < level.len() {
        bits.push(level.get(i) ^ level.get(i + 1));
        i += 2;
    }
    if i < level.len() {
        bits.push(level.get(i));
    }
    BitWord::from_bits(bits)
}

/// Parity prefix of the first `i` input bits.
fn parity_prefix(input: &BitWord, i: usize) -> bool {
    (0..i.min(input.len())).fold(false, |acc, j| acc ^ input.get(j))
}

/// Whether `word` belongs to the witness set of `input` for words of the
/// given width. Direct from the definition; used as the independent checker.
pub fn witness_member(input: &BitWord, width: usize, word: &BitWord) -> bool {
    if word.len() != width {
        return false;
    }
    let even = input.count_ones() % 2 == 0;
    if word.is_all_one() {
        return even;
    }
    if word.is_all_zero() {
        return !even;
    }
    true
}

fn neutral_value(artifact: &WitnessArtifact, word: &BitWord) -> Option<u64> {
    if word.len() != artifact.width {
        return None;
    }
    let v = word.to_value();
    (1..=artifact.neutral).contains(&v).then_some(v)
}

/// Single running-parity bit: emission `i` carries `x_1 ⊕ ... ⊕ x_min(i,n)`.
pub struct WitnessConstEnum;

impl Enumerator for WitnessConstEnum {
    type Instance = BitWord;
    type Artifact = WitnessArtifact;

    fn problem(&self) -> &'static str {
        "witness-const"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::Constant(1)
    }

    fn instance_size(&self, input: &BitWord) -> usize {
        input.len()
    }

    fn precompute(&self, input: &BitWord) -> Result<Option<WitnessArtifact>, EnumError> {
        build_artifact(input, const_width(input.len())?).map(Some)
    }

    fn first(&self, a: &WitnessArtifact) -> Option<Augmented> {
        Some(Augmented::new(
            BitWord::from_value(a.width, 1),
            BitWord::from_bits(vec![a.input.get(0)]),
        ))
    }

    fn step(&self, a: &WitnessArtifact, current: &Augmented) -> Augmented {
        let Some(v) = neutral_value(a, &current.solution) else {
            return current.clone(); // verdict words are fixpoints
        };
        let bit = current.memory.get(0);
        if v < a.neutral {
            // Fold in x_{v+1} while input bits remain.
            let next_bit =
                if (v as usize) < a.input.len() { bit ^ a.input.get(v as usize) } else { bit };
            Augmented::new(BitWord::from_value(a.width, v + 1), BitWord::from_bits(vec![next_bit]))
        } else {
            // 2^width - 2 ≥ n, so the bit now holds the full parity.
            Augmented::new(verdict(a.width, !bit), current.memory.clone())
        }
    }

    fn check(&self, input: &BitWord, solution: &BitWord) -> Option<bool> {
        let width = const_width(input.len()).ok()?;
        Some(witness_member(input, width, solution))
    }

    fn validate_state(&self, a: &WitnessArtifact, state: &Augmented) -> Result<(), EnumError> {
        let fail =
            |why: &str| Err(EnumError::InvalidPredecessor(format!("{} ({why})", state.solution)));
        if state.memory.len() != 1 {
            return fail("expected one parity bit of memory");
        }
        if let Some(v) = neutral_value(a, &state.solution) {
            if state.memory.get(0) != parity_prefix(&a.input, v as usize) {
                return fail("parity bit does not match the emission index");
            }
            return Ok(());
        }
        let even = a.input.count_ones() % 2 == 0;
        if state.solution != verdict(a.width, even) || state.memory.get(0) == even {
            return fail("inconsistent verdict state");
        }
        Ok(())
    }
}

/// Halving-tree scratch: emission `i` carries the input folded `i` times.
pub struct WitnessPolyEnum;

impl Enumerator for WitnessPolyEnum {
    type Instance = BitWord;
    type Artifact = WitnessArtifact;

    fn problem(&self) -> &'static str {
        "witness-poly"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::Polynomial(PolyBound::linear(1))
    }

    fn instance_size(&self, input: &BitWord) -> usize {
        input.len()
    }

    fn precompute(&self, input: &BitWord) -> Result<Option<WitnessArtifact>, EnumError> {
        build_artifact(input, poly_width(input.len())?).map(Some)
    }

    fn first(&self, a: &WitnessArtifact) -> Option<Augmented> {
        Some(Augmented::new(BitWord::from_value(a.width, 1), halve_level(&a.input)))
    }

    fn step(&self, a: &WitnessArtifact, current: &Augmented) -> Augmented {
        let Some(v) = neutral_value(a, &current.solution) else {
            return current.clone(); // verdict words are fixpoints
        };
        if v < a.neutral {
            Augmented::new(BitWord::from_value(a.width, v + 1), halve_level(&current.memory))
        } else {
            // 2^width - 2 ≥ ⌈log2 n⌉, so the level is down to the parity bit.
            debug_assert_eq!(current.memory.len(), 1);
            Augmented::new(verdict(a.width, !current.memory.get(0)), current.memory.clone())
        }
    }

    fn check(&self, input: &BitWord, solution: &BitWord) -> Option<bool> {
        let width = poly_width(input.len()).ok()?;
        Some(witness_member(input, width, solution))
    }

    fn validate_state(&self, a: &WitnessArtifact, state: &Augmented) -> Result<(), EnumError> {
        let fail =
            |why: &str| Err(EnumError::InvalidPredecessor(format!("{} ({why})", state.solution)));
        if let Some(v) = neutral_value(a, &state.solution) {
            let mut level = a.input.clone();
            for _ in 0..v {
                level = halve_level(&level);
            }
            if state.memory != level {
                return fail("tree level does not match the emission index");
            }
            return Ok(());
        }
        let even = a.input.count_ones() % 2 == 0;
        if state.solution != verdict(a.width, even)
            || state.memory.len() != 1
            || state.memory.get(0) == even
        {
            return fail("inconsistent verdict state");
        }
        Ok(())
    }
}
