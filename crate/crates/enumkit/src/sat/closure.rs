//! Reachability closure over a small arc set, the shared precomputation of the
//! implication-driven fragments. Vertices are dense indices: variables for the
//! hitting-set fragment, literals for 2-SAT.

use crate::word::BitWord;

/// Arcs plus the full forward-reachability table. `tc[v]` always contains `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationClosure {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
    tc: Vec<BitWord>,
    /// Vertices fixed by unit propagation; all zeros when the fragment has no
    /// units.
    pub forced: BitWord,
}

impl ImplicationClosure {
    pub fn build(vertex_count: usize, arcs: Vec<(usize, usize)>) -> Self {
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
        for &(u, v) in &arcs {
            debug_assert!(u < vertex_count && v < vertex_count);
            adjacency[u].push(v);
        }
        let mut tc = Vec::with_capacity(vertex_count);
        for start in 0..vertex_count {
            let mut mask = BitWord::zeros(vertex_count);
            mask.set(start, true);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &adjacency[u] {
                    if !mask.get(v) {
                        mask.set(v, true);
                        stack.push(v);
                    }
                }
            }
            tc.push(mask);
        }
        ImplicationClosure { vertex_count, arcs, tc, forced: BitWord::zeros(vertex_count) }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Forward-reachable set of `v`, as a mask including `v` itself.
    pub fn reachable(&self, v: usize) -> &BitWord {
        &self.tc[v]
    }

    pub fn reaches(&self, from: usize, to: usize) -> bool {
        self.tc[from].get(to)
    }

    /// True iff `u` and `v` lie on a common cycle.
    pub fn mutually_reachable(&self, u: usize, v: usize) -> bool {
        self.reaches(u, v) && self.reaches(v, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_contains_self_and_is_transitive() {
        let c = ImplicationClosure::build(4, vec![(0, 1), (1, 2)]);
        assert!(c.reaches(0, 0));
        assert!(c.reaches(0, 2));
        assert!(!c.reaches(0, 3));
        assert!(!c.reaches(2, 0));
        for u in 0..4 {
            for v in 0..4 {
                for x in 0..4 {
                    if c.reaches(u, v) && c.reaches(v, x) {
                        assert!(c.reaches(u, x));
                    }
                }
            }
        }
    }

    #[test]
    fn cycles_are_mutually_reachable() {
        let c = ImplicationClosure::build(3, vec![(0, 1), (1, 0), (1, 2)]);
        assert!(c.mutually_reachable(0, 1));
        assert!(!c.mutually_reachable(1, 2));
    }
}
