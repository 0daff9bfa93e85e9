//! Monotone clause sets. Positive clauses are hyperedges over their variables,
//! so the satisfying assignments are exactly the transversals of that
//! hypergraph and the walk starts at the all-ones assignment. Purely negative
//! clause sets run the identical walk on complemented words: a word satisfies
//! `(¬a ∨ ¬b)` iff its complement meets `{a, b}`.

use crate::hypergraph::{transversal_first, transversal_step, Hypergraph};
use crate::machine::{Augmented, EnumError, Enumerator, MemoryBudget};
use crate::sat::{Clause, ClauseSet, FragmentKind};
use crate::word::BitWord;

pub struct MonotoneArtifact {
    support: Hypergraph,
    negative: bool,
}

fn clause_supports(cs: &ClauseSet) -> Vec<Vec<usize>> {
    cs.clauses()
        .iter()
        .map(|c| match c {
            Clause::Or(lits) => lits.iter().map(|l| l.var).collect(),
            Clause::Xor { .. } => unreachable!("validated monotone clause set"),
        })
        .collect()
}

fn build_artifact(cs: &ClauseSet) -> Result<MonotoneArtifact, EnumError> {
    let negative = match cs.kind() {
        FragmentKind::MonotonePositive => false,
        FragmentKind::MonotoneNegative => true,
        other => {
            return Err(EnumError::MalformedInstance(format!(
                "expected a monotone clause set, got {}",
                other.as_str()
            )))
        }
    };
    let support = Hypergraph::new(cs.var_count(), clause_supports(cs))?;
    Ok(MonotoneArtifact { support, negative })
}

fn oriented(word: &BitWord, negative: bool) -> BitWord {
    if negative {
        word.complement()
    } else {
        word.clone()
    }
}

/// First satisfying assignment: all ones (all zeros for the negative kind).
pub fn monotone_first(cs: &ClauseSet) -> Result<BitWord, EnumError> {
    let a = build_artifact(cs)?;
    Ok(oriented(&transversal_first(&a.support), a.negative))
}

/// Checked successor in the transversal order (its complemented image for the
/// negative kind).
pub fn monotone_next(cs: &ClauseSet, current: &BitWord) -> Result<BitWord, EnumError> {
    let a = build_artifact(cs)?;
    if current.len() != cs.var_count() || !cs.satisfied_by(current) {
        return Err(EnumError::InvalidPredecessor(format!(
            "{current} does not satisfy the clause set"
        )));
    }
    let inner = oriented(current, a.negative);
    Ok(oriented(&transversal_step(&a.support, &inner), a.negative))
}

/// Satisfying assignments of a monotone clause set.
pub struct MonotoneEnum;

impl Enumerator for MonotoneEnum {
    type Instance = ClauseSet;
    type Artifact = MonotoneArtifact;

    fn problem(&self) -> &'static str {
        "monotone"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::None
    }

    fn instance_size(&self, cs: &ClauseSet) -> usize {
        cs.var_count()
    }

    fn precompute(&self, cs: &ClauseSet) -> Result<Option<MonotoneArtifact>, EnumError> {
        // Non-empty clauses guarantee at least one solution.
        build_artifact(cs).map(Some)
    }

    fn first(&self, a: &MonotoneArtifact) -> Option<Augmented> {
        Some(Augmented::bare(oriented(&transversal_first(&a.support), a.negative)))
    }

    fn step(&self, a: &MonotoneArtifact, current: &Augmented) -> Augmented {
        let inner = oriented(&current.solution, a.negative);
        Augmented::bare(oriented(&transversal_step(&a.support, &inner), a.negative))
    }

    fn check(&self, cs: &ClauseSet, solution: &BitWord) -> Option<bool> {
        Some(solution.len() == cs.var_count() && cs.satisfied_by(solution))
    }
}
