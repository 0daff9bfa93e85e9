//! Positive clauses plus binary clauses `(¬x)` and `(x ∨ ¬x')` (implication
//! hitting sets).
//!
//! Precomputation builds the digraph with an arc `(x, x')` for every clause
//! `(x ∨ ¬x')`: setting `x` to 0 forces `x'` to 0, so the variables that must
//! follow `x` to 0 are exactly `tc(x)`, its forward-reachable set. Negative
//! units pin their reachable sets to 0; if that empties a positive clause the
//! instance has no solutions, otherwise the all-ones assignment on the
//! remaining variables is the first solution.
//!
//! The successor lowers a 1 at position `i` and refills the tail as high as the
//! closure allows:
//!
//! ```text
//! z^i = y_1 ... y_{i-1} 0 w_{i+1} ... w_n,
//! w_j = 0  iff  x_j ∈ tc(x_i) ∪ ⋃ { tc(x_k) : k < i, y_k = 0 }  (or forced)
//! ```
//!
//! The valid candidate with the largest `i` is the next solution; none valid
//! means the stream is over. The order is lexicographic with 1 before 0, and
//! no auxiliary memory is used.

use crate::machine::{Augmented, EnumError, Enumerator, MemoryBudget};
use crate::sat::closure::ImplicationClosure;
use crate::sat::{Clause, ClauseSet, FragmentKind};
use crate::word::BitWord;

pub struct IhsArtifact {
    clause_set: ClauseSet,
    closure: ImplicationClosure,
    first: BitWord,
}

impl IhsArtifact {
    pub fn closure(&self) -> &ImplicationClosure {
        &self.closure
    }

    /// Variables pinned to 0 by unit propagation.
    pub fn forced(&self) -> &BitWord {
        &self.closure.forced
    }
}

/// Builds the closure and applies unit propagation; `Ok(None)` means a
/// positive clause was emptied and the instance has no solutions.
pub fn ihs_precompute(cs: &ClauseSet) -> Result<Option<IhsArtifact>, EnumError> {
    if cs.kind() != FragmentKind::Ihs {
        return Err(EnumError::MalformedInstance(format!(
            "expected an implication hitting set clause set, got {}",
            cs.kind().as_str()
        )));
    }
    let n = cs.var_count();
    let mut arcs = Vec::new();
    let mut units = Vec::new();
    let mut positive_masks = Vec::new();
    for clause in cs.clauses() {
        let Clause::Or(lits) = clause else { unreachable!("validated clause set") };
        match lits.as_slice() {
            [l] if !l.positive => units.push(l.var - 1),
            [a, b] if a.positive != b.positive => {
                let (pos, neg) = if a.positive { (a, b) } else { (b, a) };
                arcs.push((pos.var - 1, neg.var - 1));
            }
            _ => {
                let mut mask = BitWord::zeros(n);
                for l in lits {
                    mask.set(l.var - 1, true);
                }
                positive_masks.push(mask);
            }
        }
    }

    let mut closure = ImplicationClosure::build(n, arcs);
    let mut forced = BitWord::zeros(n);
    for &u in &units {
        forced.union_with(closure.reachable(u));
    }
    // A positive clause with every variable forced to 0 is the empty clause.
    if positive_masks.iter().any(|m| m.is_subset_of(&forced)) {
        return Ok(None);
    }
    closure.forced = forced.clone();
    let first = BitWord::ones(n).minus(&forced);
    debug_assert!(cs.satisfied_by(&first));
    Ok(Some(IhsArtifact { clause_set: cs.clone(), closure, first }))
}

/// First solution: 1 on every unforced variable, 0 on the forced ones.
pub fn ihs_first(artifact: &IhsArtifact) -> BitWord {
    artifact.first.clone()
}

/// Total successor; see [`ihs_next`] for the checked form.
pub fn ihs_step(artifact: &IhsArtifact, current: &BitWord) -> BitWord {
    let n = current.len();
    for i in (0..n).rev() {
        if !current.get(i) {
            continue;
        }
        // Everything that must follow the zeros of the prefix, plus the new
        // zero at i, plus the globally forced variables.
        let mut zeroed = artifact.closure.forced.clone();
        zeroed.union_with(artifact.closure.reachable(i));
        for k in 0..i {
            if !current.get(k) {
                zeroed.union_with(artifact.closure.reachable(k));
            }
        }
        let mut candidate = current.prefix(i);
        candidate = candidate.concat(&BitWord::zeros(1));
        for j in i + 1..n {
            candidate = candidate.concat(&BitWord::from_bits(vec![!zeroed.get(j)]));
        }
        if artifact.clause_set.satisfied_by(&candidate) {
            return candidate;
        }
    }
    current.clone()
}

/// Checked successor: rejects words that do not satisfy the clause set.
pub fn ihs_next(artifact: &IhsArtifact, current: &BitWord) -> Result<BitWord, EnumError> {
    if current.len() != artifact.clause_set.var_count()
        || !artifact.clause_set.satisfied_by(current)
    {
        return Err(EnumError::InvalidPredecessor(format!(
            "{current} does not satisfy the clause set"
        )));
    }
    Ok(ihs_step(artifact, current))
}

/// Satisfying assignments, largest first.
pub struct IhsEnum;

impl Enumerator for IhsEnum {
    type Instance = ClauseSet;
    type Artifact = IhsArtifact;

    fn problem(&self) -> &'static str {
        "ihs"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::None
    }

    fn instance_size(&self, cs: &ClauseSet) -> usize {
        cs.var_count()
    }

    fn precompute(&self, cs: &ClauseSet) -> Result<Option<IhsArtifact>, EnumError> {
        ihs_precompute(cs)
    }

    fn first(&self, a: &IhsArtifact) -> Option<Augmented> {
        Some(Augmented::bare(ihs_first(a)))
    }

    fn step(&self, a: &IhsArtifact, current: &Augmented) -> Augmented {
        Augmented::bare(ihs_step(a, &current.solution))
    }

    fn check(&self, cs: &ClauseSet, solution: &BitWord) -> Option<bool> {
        Some(solution.len() == cs.var_count() && cs.satisfied_by(solution))
    }
}
