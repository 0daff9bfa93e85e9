//! Deliberately broken enumerators used as negative controls.
//!
//! The verification tooling (resume equivalence, purity replay, fixpoint
//! caps, stream checking) has to be able to *fail*; these fixtures each
//! violate exactly one part of the contract over the domain of all `n`-bit
//! words, so tests can prove the corresponding detector fires.

use std::cell::RefCell;
use std::collections::HashSet;

use crate::machine::{Augmented, EnumError, Enumerator, MemoryBudget};
use crate::word::BitWord;

fn max_value(len: usize) -> u64 {
    (1u64 << len) - 1
}

/// Breaks purity: the first step taken from a given word behaves normally,
/// every later step from the same word skips ahead. Full runs look fine;
/// replays and resumed runs drift.
#[derive(Default)]
pub struct StatefulCounter {
    seen: RefCell<HashSet<u64>>,
}

impl StatefulCounter {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Enumerator for StatefulCounter {
    type Instance = usize;
    type Artifact = usize;

    fn problem(&self) -> &'static str {
        "mutant-stateful"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::None
    }

    fn instance_size(&self, n: &usize) -> usize {
        *n
    }

    fn precompute(&self, n: &usize) -> Result<Option<usize>, EnumError> {
        Ok(Some(*n))
    }

    fn first(&self, n: &usize) -> Option<Augmented> {
        Some(Augmented::bare(BitWord::zeros(*n)))
    }

    fn step(&self, n: &usize, current: &Augmented) -> Augmented {
        let v = current.solution.to_value();
        let fresh = self.seen.borrow_mut().insert(v);
        let target = if fresh { v + 1 } else { v + 2 };
        if target > max_value(*n) {
            return current.clone();
        }
        Augmented::bare(BitWord::from_value(*n, target))
    }
}

/// Never reaches a fixpoint: wraps around past the last word, so only the
/// hard step cap stops it.
pub struct EndlessCycler;

impl Enumerator for EndlessCycler {
    type Instance = usize;
    type Artifact = usize;

    fn problem(&self) -> &'static str {
        "mutant-endless"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::None
    }

    fn instance_size(&self, n: &usize) -> usize {
        *n
    }

    fn precompute(&self, n: &usize) -> Result<Option<usize>, EnumError> {
        Ok(Some(*n))
    }

    fn first(&self, n: &usize) -> Option<Augmented> {
        Some(Augmented::bare(BitWord::zeros(*n)))
    }

    fn step(&self, n: &usize, current: &Augmented) -> Augmented {
        let v = (current.solution.to_value() + 1) & max_value(*n);
        Augmented::bare(BitWord::from_value(*n, v))
    }
}

/// Pure and terminating, but silently omits the word of value 1, so the
/// emitted set is incomplete.
pub struct GapSkipper;

impl Enumerator for GapSkipper {
    type Instance = usize;
    type Artifact = usize;

    fn problem(&self) -> &'static str {
        "mutant-gap"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::None
    }

    fn instance_size(&self, n: &usize) -> usize {
        *n
    }

    fn precompute(&self, n: &usize) -> Result<Option<usize>, EnumError> {
        Ok(Some(*n))
    }

    fn first(&self, n: &usize) -> Option<Augmented> {
        Some(Augmented::bare(BitWord::zeros(*n)))
    }

    fn step(&self, n: &usize, current: &Augmented) -> Augmented {
        let v = current.solution.to_value();
        let target = if v == 0 { 2 } else { v + 1 };
        if target > max_value(*n) {
            return current.clone();
        }
        Augmented::bare(BitWord::from_value(*n, target))
    }
}

/// Pure and terminating, but re-emits the starting word once (toggling a
/// memory bit), so the stream contains a duplicate.
pub struct EchoRepeater;

impl Enumerator for EchoRepeater {
    type Instance = usize;
    type Artifact = usize;

    fn problem(&self) -> &'static str {
        "mutant-echo"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::Constant(1)
    }

    fn instance_size(&self, n: &usize) -> usize {
        *n
    }

    fn precompute(&self, n: &usize) -> Result<Option<usize>, EnumError> {
        Ok(Some(*n))
    }

    fn first(&self, n: &usize) -> Option<Augmented> {
        Some(Augmented::new(BitWord::zeros(*n), BitWord::zeros(1)))
    }

    fn step(&self, n: &usize, current: &Augmented) -> Augmented {
        let v = current.solution.to_value();
        if v == 0 && !current.memory.get(0) {
            return Augmented::new(current.solution.clone(), BitWord::ones(1));
        }
        if v == max_value(*n) {
            return current.clone();
        }
        Augmented::new(BitWord::from_value(*n, v + 1), BitWord::ones(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::{purity_replay, resume_equivalence_check, run_enumeration, EnumError};

    #[test]
    fn stateful_counter_passes_a_single_run_but_fails_resume() {
        let spec = StatefulCounter::new();
        let r = run_enumeration(&spec, &3, None).unwrap();
        assert_eq!(r.solutions.len(), 8);
        let spec = StatefulCounter::new();
        assert!(!resume_equivalence_check(&spec, &3, 1).unwrap());
        let spec = StatefulCounter::new();
        assert!(!purity_replay(&spec, &3).unwrap());
    }

    #[test]
    fn endless_cycler_hits_the_step_cap() {
        assert!(matches!(
            run_enumeration(&EndlessCycler, &3, None),
            Err(EnumError::NoFixpoint { .. })
        ));
    }

    #[test]
    fn gap_skipper_misses_one_word() {
        let r = run_enumeration(&GapSkipper, &3, None).unwrap();
        assert_eq!(r.solutions.len(), 7);
        assert!(!r.solutions.iter().any(|w| w.to_value() == 1));
    }

    #[test]
    fn echo_repeater_duplicates_the_first_word() {
        let r = run_enumeration(&EchoRepeater, &2, None).unwrap();
        let values: Vec<u64> = r.solutions.iter().map(|w| w.to_value()).collect();
        assert_eq!(values, [0, 0, 1, 2, 3]);
    }
}
