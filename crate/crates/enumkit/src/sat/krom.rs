//! Clauses with at most two literals of arbitrary polarity (2-SAT).
//!
//! Precomputation builds the implication graph on the `2n` literal nodes —
//! clause `(a ∨ b)` contributes arcs `¬a → b` and `¬b → a`, a unit `(a)`
//! contributes `¬a → a` — and takes its transitive closure. The instance is
//! unsatisfiable exactly when some variable reaches its own negation in both
//! directions. Otherwise the strongly connected components are sorted
//! topologically (ties broken by the smallest literal index in the component,
//! negative literal of a variable indexed below the positive one), and the
//! branch sequence `M` collects the first literal of each variable in that
//! order.
//!
//! Solutions are emitted as assignments in variable order, but the stream is
//! organised by the `M`-word bijection: bit `i` of the internal word is the
//! truth value of the `i`-th branch literal. The first solution is the word
//! `0^n` (every branch literal false — the classic implication-graph
//! assignment), and the successor raises the rightmost possible 0 to 1,
//! refilling the tail with exactly the literals forced by the closure:
//!
//! ```text
//! z^i = y_1 ... y_{i-1} 1 w_{i+1} ... w_n,
//! w_j = 1  iff  l_j ∈ tc(l_i) ∪ ⋃ { tc(l_k) : k < i, y_k = 1 }
//! ```
//!
//! The valid candidate with the largest `i` wins, giving the lexicographic
//! (0 before 1) successor over `M`-words with no auxiliary memory.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::machine::{Augmented, EnumError, Enumerator, MemoryBudget};
use crate::sat::closure::ImplicationClosure;
use crate::sat::{Clause, ClauseSet, FragmentKind, Literal};
use crate::word::BitWord;

/// Node index of a literal in the implication graph: the negative literal of
/// each variable sits just below the positive one.
pub fn literal_index(lit: &Literal) -> usize {
    2 * (lit.var - 1) + usize::from(lit.positive)
}

/// Inverse of [`literal_index`].
pub fn index_literal(idx: usize) -> Literal {
    let var = idx / 2 + 1;
    if idx % 2 == 1 {
        Literal::positive(var)
    } else {
        Literal::negative(var)
    }
}

pub struct KromArtifact {
    clause_set: ClauseSet,
    closure: ImplicationClosure,
    topo_literals: Vec<usize>,
    branch_literals: Vec<usize>,
}

impl KromArtifact {
    /// All `2n` literal indices in topological order of their components.
    pub fn topo_literals(&self) -> &[usize] {
        &self.topo_literals
    }

    /// The branch sequence `M`: the first literal of each variable in
    /// topological order. Bit `i` of an internal word is the truth value of
    /// `branch_literals()[i]`.
    pub fn branch_literals(&self) -> &[usize] {
        &self.branch_literals
    }

    pub fn closure(&self) -> &ImplicationClosure {
        &self.closure
    }
}

/// Builds the implication closure and the branch sequence; `Ok(None)` means
/// the instance is unsatisfiable.
pub fn krom_precompute(cs: &ClauseSet) -> Result<Option<KromArtifact>, EnumError> {
    if cs.kind() != FragmentKind::Krom {
        return Err(EnumError::MalformedInstance(format!(
            "expected a binary clause set, got {}",
            cs.kind().as_str()
        )));
    }
    let n = cs.var_count();
    let nodes = 2 * n;
    let mut arcs = Vec::new();
    for clause in cs.clauses() {
        let Clause::Or(lits) = clause else { unreachable!("validated clause set") };
        match lits.as_slice() {
            [a] => arcs.push((literal_index(&a.negated()), literal_index(a))),
            [a, b] => {
                arcs.push((literal_index(&a.negated()), literal_index(b)));
                arcs.push((literal_index(&b.negated()), literal_index(a)));
            }
            _ => unreachable!("validated clause set"),
        }
    }
    let closure = ImplicationClosure::build(nodes, arcs.clone());
    for v in 0..n {
        if closure.mutually_reachable(2 * v, 2 * v + 1) {
            return Ok(None);
        }
    }

    // Components by mutual reachability, then a deterministic Kahn pass over
    // the condensation, always releasing the component holding the smallest
    // literal index.
    let mut comp = vec![usize::MAX; nodes];
    let mut comp_members: Vec<Vec<usize>> = Vec::new();
    for u in 0..nodes {
        if comp[u] != usize::MAX {
            continue;
        }
        let id = comp_members.len();
        let mut members = Vec::new();
        for v in u..nodes {
            if comp[v] == usize::MAX && closure.mutually_reachable(u, v) {
                comp[v] = id;
                members.push(v);
            }
        }
        comp_members.push(members);
    }
    let comp_count = comp_members.len();
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); comp_count];
    let mut indegree = vec![0usize; comp_count];
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in &arcs {
        let (cu, cv) = (comp[u], comp[v]);
        if cu != cv && seen.insert((cu, cv)) {
            succs[cu].push(cv);
            indegree[cv] += 1;
        }
    }
    let mut heap = BinaryHeap::new();
    for (id, members) in comp_members.iter().enumerate() {
        if indegree[id] == 0 {
            heap.push(Reverse((members[0], id)));
        }
    }
    let mut topo_literals = Vec::with_capacity(nodes);
    let mut branch_literals = Vec::with_capacity(n);
    let mut var_placed = vec![false; n];
    while let Some(Reverse((_, id))) = heap.pop() {
        for &lit in &comp_members[id] {
            topo_literals.push(lit);
            let var = lit / 2;
            if !var_placed[var] {
                var_placed[var] = true;
                branch_literals.push(lit);
            }
        }
        for &next in &succs[id] {
            indegree[next] -= 1;
            if indegree[next] == 0 {
                heap.push(Reverse((comp_members[next][0], next)));
            }
        }
    }
    debug_assert_eq!(topo_literals.len(), nodes);
    Ok(Some(KromArtifact { clause_set: cs.clone(), closure, topo_literals, branch_literals }))
}

/// Re-encodes an assignment (variable order) as its internal word over the
/// branch sequence.
pub fn assignment_to_branch_word(artifact: &KromArtifact, assignment: &BitWord) -> BitWord {
    let bits = artifact
        .branch_literals
        .iter()
        .map(|&lit| {
            let value = assignment.get(lit / 2);
            if lit % 2 == 1 {
                value
            } else {
                !value
            }
        })
        .collect();
    BitWord::from_bits(bits)
}

/// Decodes an internal word over the branch sequence into an assignment in
/// variable order.
pub fn branch_word_to_assignment(artifact: &KromArtifact, word: &BitWord) -> BitWord {
    let mut assignment = BitWord::zeros(artifact.branch_literals.len());
    for (i, &lit) in artifact.branch_literals.iter().enumerate() {
        let truth = word.get(i);
        assignment.set(lit / 2, if lit % 2 == 1 { truth } else { !truth });
    }
    assignment
}

/// First solution: every branch literal false.
pub fn krom_first(artifact: &KromArtifact) -> BitWord {
    let word = BitWord::zeros(artifact.branch_literals.len());
    let assignment = branch_word_to_assignment(artifact, &word);
    debug_assert!(artifact.clause_set.satisfied_by(&assignment));
    assignment
}

/// Total successor on assignments; see [`krom_next`] for the checked form.
pub fn krom_step(artifact: &KromArtifact, current: &BitWord) -> BitWord {
    let word = assignment_to_branch_word(artifact, current);
    let n = word.len();
    for i in (0..n).rev() {
        if word.get(i) {
            continue;
        }
        // Literals forced true by the raised bit and the true prefix.
        let mut raised = artifact.closure.reachable(literal_raw(artifact, i)).clone();
        for k in 0..i {
            if word.get(k) {
                raised.union_with(artifact.closure.reachable(literal_raw(artifact, k)));
            }
        }
        let mut candidate = word.prefix(i);
        candidate = candidate.concat(&BitWord::from_bits(vec![true]));
        for j in i + 1..n {
            let forced = raised.get(literal_raw(artifact, j));
            candidate = candidate.concat(&BitWord::from_bits(vec![forced]));
        }
        let assignment = branch_word_to_assignment(artifact, &candidate);
        if artifact.clause_set.satisfied_by(&assignment) {
            return assignment;
        }
    }
    current.clone()
}

fn literal_raw(artifact: &KromArtifact, pos: usize) -> usize {
    artifact.branch_literals[pos]
}

/// Checked successor: rejects words that do not satisfy the clause set.
pub fn krom_next(artifact: &KromArtifact, current: &BitWord) -> Result<BitWord, EnumError> {
    if current.len() != artifact.clause_set.var_count()
        || !artifact.clause_set.satisfied_by(current)
    {
        return Err(EnumError::InvalidPredecessor(format!(
            "{current} does not satisfy the clause set"
        )));
    }
    Ok(krom_step(artifact, current))
}

/// Satisfying assignments of a binary clause set, in increasing order of
/// their branch-sequence encodings.
pub struct KromEnum;

impl Enumerator for KromEnum {
    type Instance = ClauseSet;
    type Artifact = KromArtifact;

    fn problem(&self) -> &'static str {
        "krom"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::None
    }

    fn instance_size(&self, cs: &ClauseSet) -> usize {
        cs.var_count()
    }

    fn precompute(&self, cs: &ClauseSet) -> Result<Option<KromArtifact>, EnumError> {
        krom_precompute(cs)
    }

    fn first(&self, a: &KromArtifact) -> Option<Augmented> {
        Some(Augmented::bare(krom_first(a)))
    }

    fn step(&self, a: &KromArtifact, current: &Augmented) -> Augmented {
        Augmented::bare(krom_step(a, &current.solution))
    }

    fn check(&self, cs: &ClauseSet, solution: &BitWord) -> Option<bool> {
        Some(solution.len() == cs.var_count() && cs.satisfied_by(solution))
    }
}
