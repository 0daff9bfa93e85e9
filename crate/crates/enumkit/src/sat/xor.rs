//! Conjunctions of parity constraints (affine systems over GF(2)).
//!
//! Precomputation runs Gauss-Jordan elimination, always pivoting on the
//! highest variable index with a 1 in the row. A row that reduces to `0 = 1`
//! makes the system inconsistent; otherwise every pivot variable becomes
//! dependent and is determined by the free variables left in its row:
//!
//! ```text
//! x_d = rhs_d ⊕ ⨁ { x_f : f free, f in row(d) }
//! ```
//!
//! The first solution sets every free variable to 0 (so each dependent
//! variable equals its row's right-hand side). The walk then runs the
//! single-bit-memory reflected Gray code over the free variables (taken in
//! ascending variable order): each step flips one free variable together with
//! the dependent variables it influences, so every transition changes the free
//! part in exactly one position and the stream covers all `2^k` solutions.

use crate::gray::{gray_rank_from_word, ordered_gray_next, StepParity, MAX_RANK_LEN};
use crate::machine::{Augmented, EnumError, Enumerator, MemoryBudget};
use crate::sat::{Clause, ClauseSet, FragmentKind};
use crate::word::BitWord;

/// One reduced row: `var` is the dependent (pivot) variable, `free_mask` the
/// free variables appearing in the row.
pub struct XorRow {
    pub var: usize,
    pub rhs: bool,
    pub free_mask: BitWord,
}

pub struct XorArtifact {
    var_count: usize,
    free_vars: Vec<usize>,
    dep_rows: Vec<XorRow>,
    /// For each free variable (by position in `free_vars`): the indices into
    /// `dep_rows` of the dependent variables it influences.
    influence: Vec<Vec<usize>>,
    s0: BitWord,
}

impl XorArtifact {
    /// Free variables, 0-based and ascending.
    pub fn free_vars(&self) -> &[usize] {
        &self.free_vars
    }

    pub fn free_count(&self) -> usize {
        self.free_vars.len()
    }

    pub fn dep_rows(&self) -> &[XorRow] {
        &self.dep_rows
    }

    /// Dependent rows flipped when the given free variable flips.
    pub fn influence(&self, free_pos: usize) -> &[usize] {
        &self.influence[free_pos]
    }

    /// Number of solutions, `2^k` for `k` free variables.
    pub fn solution_count(&self) -> Option<u128> {
        1u128.checked_shl(self.free_vars.len() as u32)
    }

    /// The free-variable bits of a solution, ascending variable order.
    pub fn free_word(&self, solution: &BitWord) -> BitWord {
        BitWord::from_bits(self.free_vars.iter().map(|&v| solution.get(v)).collect())
    }
}

fn xor_into(target: &mut BitWord, other: &BitWord) {
    for pos in other.one_positions() {
        target.flip(pos);
    }
}

fn highest_one(word: &BitWord) -> Option<usize> {
    word.one_positions().last()
}

/// Reduces the system; `Ok(None)` means a row collapsed to `0 = 1` and the
/// system has no solutions.
pub fn xor_precompute(cs: &ClauseSet) -> Result<Option<XorArtifact>, EnumError> {
    if cs.kind() != FragmentKind::Xor {
        return Err(EnumError::MalformedInstance(format!(
            "expected a parity clause set, got {}",
            cs.kind().as_str()
        )));
    }
    let n = cs.var_count();
    // (mask, rhs, pivot var) per reduced row.
    let mut reduced: Vec<(BitWord, bool, usize)> = Vec::new();
    for clause in cs.clauses() {
        let Clause::Xor { vars, rhs } = clause else { unreachable!("validated clause set") };
        let mut mask = BitWord::zeros(n);
        for &v in vars {
            mask.flip(v - 1); // repeated variables cancel
        }
        let mut rhs = *rhs;
        for (rmask, rrhs, rpivot) in &reduced {
            if mask.get(*rpivot) {
                xor_into(&mut mask, rmask);
                rhs ^= rrhs;
            }
        }
        let Some(pivot) = highest_one(&mask) else {
            if rhs {
                return Ok(None);
            }
            continue;
        };
        for (rmask, rrhs, _) in reduced.iter_mut() {
            if rmask.get(pivot) {
                xor_into(rmask, &mask);
                *rrhs ^= rhs;
            }
        }
        reduced.push((mask, rhs, pivot));
    }
    reduced.sort_by_key(|&(_, _, pivot)| pivot);

    let mut is_dep = vec![false; n];
    for &(_, _, pivot) in &reduced {
        is_dep[pivot] = true;
    }
    let free_vars: Vec<usize> = (0..n).filter(|&v| !is_dep[v]).collect();
    let mut s0 = BitWord::zeros(n);
    let dep_rows: Vec<XorRow> = reduced
        .into_iter()
        .map(|(mut mask, rhs, pivot)| {
            mask.set(pivot, false);
            s0.set(pivot, rhs);
            XorRow { var: pivot, rhs, free_mask: mask }
        })
        .collect();
    let influence: Vec<Vec<usize>> = free_vars
        .iter()
        .map(|&f| {
            dep_rows
                .iter()
                .enumerate()
                .filter(|(_, row)| row.free_mask.get(f))
                .map(|(d, _)| d)
                .collect()
        })
        .collect();
    debug_assert!(cs.satisfied_by(&s0));
    Ok(Some(XorArtifact { var_count: n, free_vars, dep_rows, influence, s0 }))
}

/// First solution: free variables 0, dependents at their right-hand sides.
pub fn xor_first(artifact: &XorArtifact) -> BitWord {
    artifact.s0.clone()
}

/// Total successor on (solution, parity-bit) states.
pub fn xor_step(
    artifact: &XorArtifact,
    current: &BitWord,
    parity: StepParity,
) -> (BitWord, StepParity) {
    let free = artifact.free_word(current);
    let (next_free, next_parity) = ordered_gray_next(&free, parity);
    if next_free == free {
        return (current.clone(), parity);
    }
    let flipped = (0..free.len())
        .find(|&i| free.get(i) != next_free.get(i))
        .expect("gray step flips one bit");
    let mut next = current.clone();
    next.flip(artifact.free_vars[flipped]);
    for &d in artifact.influence(flipped) {
        next.flip(artifact.dep_rows[d].var);
    }
    (next, next_parity)
}

/// Solutions of a consistent parity system, free part walking the reflected
/// Gray code; carries one parity bit of memory.
pub struct XorEnum;

impl Enumerator for XorEnum {
    type Instance = ClauseSet;
    type Artifact = XorArtifact;

    fn problem(&self) -> &'static str {
        "xor"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::Constant(1)
    }

    fn instance_size(&self, cs: &ClauseSet) -> usize {
        cs.var_count()
    }

    fn precompute(&self, cs: &ClauseSet) -> Result<Option<XorArtifact>, EnumError> {
        xor_precompute(cs)
    }

    fn first(&self, a: &XorArtifact) -> Option<Augmented> {
        Some(Augmented::new(xor_first(a), StepParity::NextOdd.to_memory()))
    }

    fn step(&self, a: &XorArtifact, current: &Augmented) -> Augmented {
        let parity = StepParity::from_memory_bit(current.memory.get(0));
        let (next, next_parity) = xor_step(a, &current.solution, parity);
        Augmented::new(next, next_parity.to_memory())
    }

    fn check(&self, cs: &ClauseSet, solution: &BitWord) -> Option<bool> {
        Some(solution.len() == cs.var_count() && cs.satisfied_by(solution))
    }

    fn validate_state(&self, a: &XorArtifact, state: &Augmented) -> Result<(), EnumError> {
        if state.solution.len() != a.var_count || state.memory.len() != 1 {
            return Err(EnumError::InvalidPredecessor(format!(
                "state {} has the wrong shape",
                state.solution
            )));
        }
        let k = a.free_count();
        if (1..=MAX_RANK_LEN).contains(&k) {
            let rank = gray_rank_from_word(&a.free_word(&state.solution));
            if StepParity::from_memory_bit(state.memory.get(0)) != StepParity::after_rank(rank) {
                return Err(EnumError::InvalidPredecessor(format!(
                    "parity bit does not match the position of {} in the walk",
                    state.solution
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gray::gray_word_from_rank;
    use crate::machine::{memory_audit, run_enumeration};

    fn xors(n: usize, rows: &[(&[usize], bool)]) -> ClauseSet {
        let clauses =
            rows.iter().map(|(vars, rhs)| Clause::Xor { vars: vars.to_vec(), rhs: *rhs }).collect();
        ClauseSet::new(n, FragmentKind::Xor, clauses).unwrap()
    }

    fn stream(cs: &ClauseSet) -> Vec<String> {
        run_enumeration(&XorEnum, cs, None)
            .unwrap()
            .solutions
            .iter()
            .map(|x| x.to_string())
            .collect()
    }

    #[test]
    fn two_variable_parity_one() {
        let cs = xors(2, &[(&[1, 2], true)]);
        let a = xor_precompute(&cs).unwrap().unwrap();
        assert_eq!(a.free_vars(), [0]);
        assert_eq!(a.dep_rows().len(), 1);
        assert_eq!(a.dep_rows()[0].var, 1);
        assert_eq!(a.influence(0), [0]);
        assert_eq!(xor_first(&a).to_string(), "01");
        assert_eq!(stream(&cs), ["01", "10"]);
    }

    #[test]
    fn three_variable_parity_zero() {
        let cs = xors(3, &[(&[1, 2, 3], false)]);
        let a = xor_precompute(&cs).unwrap().unwrap();
        assert_eq!(a.free_vars(), [0, 1]);
        assert_eq!(stream(&cs), ["000", "011", "110", "101"]);
        // Free prefixes follow the reflected Gray sequence 00, 01, 11, 10.
        let sols = run_enumeration(&XorEnum, &cs, None).unwrap().solutions;
        let prefixes: Vec<String> = sols.iter().map(|s| a.free_word(s).to_string()).collect();
        assert_eq!(prefixes, ["00", "01", "11", "10"]);
    }

    #[test]
    fn inconsistent_systems_have_no_solutions() {
        let cs = xors(1, &[(&[1, 1], true)]);
        assert!(xor_precompute(&cs).unwrap().is_none());
        let cs = xors(2, &[(&[1], true), (&[1], false)]);
        assert!(xor_precompute(&cs).unwrap().is_none());
        let r = run_enumeration(&XorEnum, &cs, None).unwrap();
        assert!(r.solutions.is_empty());
    }

    #[test]
    fn fully_determined_system() {
        let cs = xors(2, &[(&[1, 2], false), (&[2], true)]);
        let a = xor_precompute(&cs).unwrap().unwrap();
        assert_eq!(a.free_count(), 0);
        assert_eq!(a.solution_count(), Some(1));
        assert_eq!(stream(&cs), ["11"]);
    }

    #[test]
    fn repeated_variables_cancel() {
        let cs = xors(2, &[(&[1, 1, 2], true)]);
        let a = xor_precompute(&cs).unwrap().unwrap();
        // x1 ⊕ x1 ⊕ x2 = x2.
        assert_eq!(a.free_vars(), [0]);
        assert_eq!(stream(&cs), ["01", "11"]);
    }

    #[test]
    fn streams_match_rank_order_on_small_systems() {
        let cases = vec![
            xors(4, &[(&[1, 2], true), (&[2, 3, 4], false)]),
            xors(4, &[(&[1, 4], false)]),
            xors(5, &[(&[1, 2, 3], true), (&[3, 4], true), (&[5], false)]),
            xors(3, &[]),
        ];
        for cs in cases {
            let a = xor_precompute(&cs).unwrap().unwrap();
            let n = cs.var_count();
            let k = a.free_count();
            let got = run_enumeration(&XorEnum, &cs, None).unwrap().solutions;
            assert_eq!(got.len() as u128, a.solution_count().unwrap());
            let brute: std::collections::HashSet<BitWord> = (0..1u64 << n)
                .map(|v| BitWord::from_value(n, v))
                .filter(|x| cs.satisfied_by(x))
                .collect();
            assert_eq!(brute, got.iter().cloned().collect());
            for (r, sol) in got.iter().enumerate() {
                if k > 0 {
                    assert_eq!(a.free_word(sol), gray_word_from_rank(k, r as u64).unwrap());
                }
            }
        }
    }

    #[test]
    fn memory_stays_at_one_bit() {
        let cs = xors(4, &[(&[1, 2, 3], true)]);
        let audit = memory_audit(&XorEnum, &cs).unwrap();
        assert_eq!(audit, 1);
    }

    #[test]
    fn mismatched_parity_bit_is_rejected() {
        let cs = xors(3, &[(&[1, 2, 3], false)]);
        let a = xor_precompute(&cs).unwrap().unwrap();
        // "011" has free word 01 at rank 1, so the next step must be even.
        let good = Augmented::new("011".parse().unwrap(), StepParity::NextEven.to_memory());
        let bad = Augmented::new("011".parse().unwrap(), StepParity::NextOdd.to_memory());
        assert!(XorEnum.validate_state(&a, &good).is_ok());
        assert!(XorEnum.validate_state(&a, &bad).is_err());
    }
}
