//! Transversal and dominating-set enumeration.
//!
//! A transversal of a hypergraph is a vertex subset meeting every edge. The
//! stream visits transversals in lexicographic order with 1 before 0 (for equal
//! lengths: numerically descending), starting from the full vertex set. The
//! successor inspects, for each 1 at position `i` of the current word `y`, the
//! candidate
//!
//! ```text
//! z^i = y_1 ... y_{i-1} 0 1 ... 1
//! ```
//!
//! and emits the valid candidate with the largest `i`, i.e. the one sharing the
//! longest prefix with `y`. No candidate valid means `y` was the last
//! transversal. No auxiliary memory is needed.
//!
//! Dominating sets of a graph are exactly the transversals of its closed
//! neighborhood hypergraph, so that enumerator is a precomputation step plus
//! the same walk.

use crate::graph::Graph;
use crate::machine::{Augmented, EnumError, Enumerator, MemoryBudget};
use crate::word::BitWord;

/// A vertex subset encoded as a word: index `v - 1` is vertex `v`.
pub type VertexSubset = BitWord;

/// A hypergraph over vertices `1..=n` with non-empty edges. Duplicate edges
/// are kept as given; they do not affect the enumerated stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edge_masks: Vec<BitWord>,
    edge_lists: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, EnumError> {
        if n == 0 {
            return Err(EnumError::MalformedInstance(
                "hypergraphs need at least one vertex".into(),
            ));
        }
        let mut edge_masks = Vec::with_capacity(edges.len());
        let mut edge_lists = Vec::with_capacity(edges.len());
        for edge in edges {
            if edge.is_empty() {
                return Err(EnumError::MalformedInstance("empty hyperedge".into()));
            }
            let mut mask = BitWord::zeros(n);
            for &v in &edge {
                if v == 0 || v > n {
                    return Err(EnumError::MalformedInstance(format!(
                        "vertex {v} is out of range for {n} vertices"
                    )));
                }
                mask.set(v - 1, true);
            }
            let mut sorted = edge;
            sorted.sort_unstable();
            sorted.dedup();
            edge_masks.push(mask);
            edge_lists.push(sorted);
        }
        Ok(Hypergraph { n, edge_masks, edge_lists })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edges as sorted vertex lists, in input order.
    pub fn edge_lists(&self) -> &[Vec<usize>] {
        &self.edge_lists
    }

    /// True iff `subset` meets every edge.
    pub fn is_transversal(&self, subset: &VertexSubset) -> bool {
        subset.len() == self.n && self.edge_masks.iter().all(|e| e.intersects(subset))
    }
}

/// First transversal: the full vertex set.
pub fn transversal_first(h: &Hypergraph) -> VertexSubset {
    BitWord::ones(h.vertex_count())
}

/// Total successor; assumes `current` is a transversal. Public for probing,
/// see [`transversal_next`] for the checked form.
pub fn transversal_step(h: &Hypergraph, current: &VertexSubset) -> VertexSubset {
    let n = h.vertex_count();
    // Largest flip position first: longest common prefix with `current`.
    for i in (0..n).rev() {
        if !current.get(i) {
            continue;
        }
        let mut candidate = current.clone();
        candidate.set(i, false);
        for j in i + 1..n {
            candidate.set(j, true);
        }
        if h.is_transversal(&candidate) {
            return candidate;
        }
    }
    current.clone()
}

/// Checked successor: rejects words that are not transversals.
pub fn transversal_next(h: &Hypergraph, current: &VertexSubset) -> Result<VertexSubset, EnumError> {
    if !h.is_transversal(current) {
        return Err(EnumError::InvalidPredecessor(format!("{current} is not a transversal")));
    }
    Ok(transversal_step(h, current))
}

/// Transversals of a hypergraph, largest first.
pub struct TransversalEnum;

impl Enumerator for TransversalEnum {
    type Instance = Hypergraph;
    type Artifact = Hypergraph;

    fn problem(&self) -> &'static str {
        "transversal"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::None
    }

    fn instance_size(&self, h: &Hypergraph) -> usize {
        h.vertex_count()
    }

    fn precompute(&self, h: &Hypergraph) -> Result<Option<Hypergraph>, EnumError> {
        // The full set is a transversal iff no edge is empty, which
        // construction guarantees; there is always at least one solution.
        Ok(Some(h.clone()))
    }

    fn first(&self, h: &Hypergraph) -> Option<Augmented> {
        Some(Augmented::bare(transversal_first(h)))
    }

    fn step(&self, h: &Hypergraph, current: &Augmented) -> Augmented {
        Augmented::bare(transversal_step(h, &current.solution))
    }

    fn check(&self, h: &Hypergraph, solution: &BitWord) -> Option<bool> {
        Some(h.is_transversal(solution))
    }

    fn validate_state(&self, _h: &Hypergraph, state: &Augmented) -> Result<(), EnumError> {
        if !state.memory.is_empty() {
            return Err(EnumError::InvalidPredecessor("this walk carries no memory".into()));
        }
        Ok(())
    }
}

/// True iff every vertex is in `subset` or adjacent (ignoring direction) to a
/// vertex in `subset`.
pub fn is_dominating(g: &Graph, subset: &VertexSubset) -> bool {
    let n = g.vertex_count();
    if subset.len() != n {
        return false;
    }
    let mut dominated: Vec<bool> = (0..n).map(|i| subset.get(i)).collect();
    for &(u, v) in g.edges() {
        if subset.get(u - 1) {
            dominated[v - 1] = true;
        }
        if subset.get(v - 1) {
            dominated[u - 1] = true;
        }
    }
    dominated.into_iter().all(|d| d)
}

fn neighborhood_hypergraph(g: &Graph) -> Hypergraph {
    Hypergraph::new(g.vertex_count(), g.closed_neighborhoods())
        .expect("closed neighborhoods are never empty")
}

/// First dominating set: all vertices.
pub fn dominating_first(g: &Graph) -> VertexSubset {
    BitWord::ones(g.vertex_count())
}

/// Checked successor over dominating sets: the transversal walk on the closed
/// neighborhood hypergraph.
pub fn dominating_next(g: &Graph, current: &VertexSubset) -> Result<VertexSubset, EnumError> {
    if !is_dominating(g, current) {
        return Err(EnumError::InvalidPredecessor(format!("{current} is not a dominating set")));
    }
    Ok(transversal_step(&neighborhood_hypergraph(g), current))
}

/// Dominating sets of a graph, largest first.
pub struct DominatingEnum;

impl Enumerator for DominatingEnum {
    type Instance = Graph;
    type Artifact = Hypergraph;

    fn problem(&self) -> &'static str {
        "dominating"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::None
    }

    fn instance_size(&self, g: &Graph) -> usize {
        g.vertex_count()
    }

    fn precompute(&self, g: &Graph) -> Result<Option<Hypergraph>, EnumError> {
        Ok(Some(neighborhood_hypergraph(g)))
    }

    fn first(&self, h: &Hypergraph) -> Option<Augmented> {
        Some(Augmented::bare(transversal_first(h)))
    }

    fn step(&self, h: &Hypergraph, current: &Augmented) -> Augmented {
        Augmented::bare(transversal_step(h, &current.solution))
    }

    fn check(&self, g: &Graph, solution: &BitWord) -> Option<bool> {
        Some(is_dominating(g, solution))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::run_enumeration;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    fn stream(h: &Hypergraph) -> Vec<String> {
        run_enumeration(&TransversalEnum, h, None)
            .unwrap()
            .solutions
            .iter()
            .map(|x| x.to_string())
            .collect()
    }

    #[test]
    fn two_edge_example() {
        let h = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(stream(&h), ["111", "110", "101", "011", "010"]);
    }

    #[test]
    fn successor_picks_longest_common_prefix() {
        let h = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        // Both 101 and 011 are transversals below 110; 101 shares the longer
        // prefix.
        assert_eq!(transversal_next(&h, &w("110")).unwrap().to_string(), "101");
        assert_eq!(transversal_next(&h, &w("010")).unwrap().to_string(), "010");
        assert!(matches!(transversal_next(&h, &w("001")), Err(EnumError::InvalidPredecessor(_))));
    }

    #[test]
    fn edgeless_hypergraph_enumerates_everything() {
        let h = Hypergraph::new(2, vec![]).unwrap();
        assert_eq!(stream(&h), ["11", "10", "01", "00"]);
    }

    #[test]
    fn stream_is_ones_first_lexicographic() {
        let h = Hypergraph::new(4, vec![vec![1, 4], vec![2, 3], vec![3, 4]]).unwrap();
        let words = run_enumeration(&TransversalEnum, &h, None).unwrap().solutions;
        for pair in words.windows(2) {
            assert!(pair[1].to_value() < pair[0].to_value(), "{} then {}", pair[0], pair[1]);
        }
        // Against a direct scan of all subsets.
        let mut expected: Vec<u64> =
            (0..16u64).filter(|&v| h.is_transversal(&BitWord::from_value(4, v))).collect();
        expected.sort_unstable_by(|a, b| b.cmp(a));
        let got: Vec<u64> = words.iter().map(|x| x.to_value()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(Hypergraph::new(3, vec![vec![]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![4]]).is_err());
        assert!(Hypergraph::new(0, vec![]).is_err());
    }

    #[test]
    fn duplicate_edges_do_not_change_the_stream() {
        let once = Hypergraph::new(3, vec![vec![1, 2]]).unwrap();
        let twice = Hypergraph::new(3, vec![vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(stream(&once), stream(&twice));
    }

    #[test]
    fn triangle_domination() {
        // Triangle: every non-empty subset dominates.
        let g = Graph::new(3, vec![(1, 2), (2, 3), (1, 3)], None).unwrap();
        let r = run_enumeration(&DominatingEnum, &g, None).unwrap();
        assert_eq!(r.solutions.len(), 7);
        assert_eq!(dominating_next(&g, &w("111")).unwrap().to_string(), "110");
    }

    #[test]
    fn path_domination() {
        let g = Graph::new(3, vec![(1, 2), (2, 3)], None).unwrap();
        let r = run_enumeration(&DominatingEnum, &g, None).unwrap();
        let got: Vec<String> = r.solutions.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["111", "110", "101", "011", "010"]);
        assert_eq!(dominating_next(&g, &w("011")).unwrap().to_string(), "010");
    }

    #[test]
    fn isolated_vertex_must_be_chosen() {
        let g = Graph::new(1, vec![], None).unwrap();
        let r = run_enumeration(&DominatingEnum, &g, None).unwrap();
        let got: Vec<String> = r.solutions.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["1"]);
    }
}
