//! Vertices reachable from a source in a digraph, one per step, closest
//! layers first.
//!
//! Each solution is a one-hot word marking one reachable vertex. The machine
//! keeps `2n` bits of working memory — the set of vertices seen so far and the
//! current breadth-first layer — so a step either moves to the next vertex of
//! the current layer (ascending by index) or expands the layer's out-
//! neighbourhood into the next one. The stream therefore lists every reachable
//! vertex exactly once, in non-decreasing distance from the source.

use crate::graph::Graph;
use crate::machine::{Augmented, EnumError, Enumerator, MemoryBudget, PolyBound};
use crate::word::BitWord;

pub struct ReachArtifact {
    n: usize,
    source: usize,
    out: Vec<Vec<usize>>,
}

impl ReachArtifact {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Breadth-first layers from the source; layer 0 is the source itself.
    pub fn layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut visited = BitWord::zeros(self.n);
        visited.set(self.source, true);
        let mut frontier = vec![self.source];
        while !frontier.is_empty() {
            layers.push(frontier.clone());
            frontier = self.expand(&frontier, &mut visited);
        }
        layers
    }

    fn expand(&self, frontier: &[usize], visited: &mut BitWord) -> Vec<usize> {
        let mut next = Vec::new();
        for &v in frontier {
            for &w in &self.out[v] {
                if !visited.get(w) {
                    visited.set(w, true);
                    next.push(w);
                }
            }
        }
        next.sort_unstable();
        next
    }
}

fn one_hot(n: usize, v: usize) -> BitWord {
    let mut w = BitWord::zeros(n);
    w.set(v, true);
    w
}

fn decode_one_hot(word: &BitWord) -> Option<usize> {
    let mut ones = word.one_positions();
    match (ones.next(), ones.next()) {
        (Some(v), None) => Some(v),
        _ => None,
    }
}

pub fn reach_precompute(graph: &Graph) -> Result<ReachArtifact, EnumError> {
    let source = graph
        .source()
        .ok_or_else(|| EnumError::MalformedInstance("reachability needs a source vertex".into()))?;
    // Vertices are 1-based in the instance; word positions are 0-based.
    let source = source - 1;
    let mut out = vec![Vec::new(); graph.vertex_count()];
    for &(u, v) in graph.edges() {
        out[u - 1].push(v - 1);
    }
    for list in &mut out {
        list.sort_unstable();
        list.dedup();
    }
    Ok(ReachArtifact { n: graph.vertex_count(), source, out })
}

/// First state: the source vertex, alone in both the visited set and the
/// current layer.
pub fn reach_first(artifact: &ReachArtifact) -> Augmented {
    let seen = one_hot(artifact.n, artifact.source);
    Augmented::new(seen.clone(), seen.clone().concat(&seen))
}

/// Total successor on (one-hot vertex, visited ‖ layer) states.
pub fn reach_step(artifact: &ReachArtifact, current: &Augmented) -> Augmented {
    let n = artifact.n;
    let Some(v) = decode_one_hot(&current.solution) else {
        return current.clone();
    };
    let visited = current.memory.prefix(n);
    let layer = current.memory.suffix(n);
    // Next vertex of the current layer, if any.
    if let Some(w) = layer.one_positions().find(|&w| w > v) {
        return Augmented::new(one_hot(n, w), current.memory.clone());
    }
    // Expand into the next layer.
    let mut next_visited = visited.clone();
    let frontier: Vec<usize> = layer.one_positions().collect();
    let next = artifact.expand(&frontier, &mut next_visited);
    let Some(&w) = next.first() else {
        return current.clone();
    };
    let mut next_layer = BitWord::zeros(n);
    for &u in &next {
        next_layer.set(u, true);
    }
    Augmented::new(one_hot(n, w), next_visited.concat(&next_layer))
}

/// Reachable vertices as one-hot words, breadth-first, ascending within each
/// layer; carries the visited set and the current layer (`2n` bits).
pub struct ReachEnum;

impl Enumerator for ReachEnum {
    type Instance = Graph;
    type Artifact = ReachArtifact;

    fn problem(&self) -> &'static str {
        "reach"
    }

    fn budget(&self) -> MemoryBudget {
        MemoryBudget::Polynomial(PolyBound::linear(2))
    }

    fn instance_size(&self, graph: &Graph) -> usize {
        graph.vertex_count()
    }

    fn precompute(&self, graph: &Graph) -> Result<Option<ReachArtifact>, EnumError> {
        reach_precompute(graph).map(Some)
    }

    fn first(&self, a: &ReachArtifact) -> Option<Augmented> {
        Some(reach_first(a))
    }

    fn step(&self, a: &ReachArtifact, current: &Augmented) -> Augmented {
        reach_step(a, current)
    }

    fn check(&self, graph: &Graph, solution: &BitWord) -> Option<bool> {
        if solution.len() != graph.vertex_count() {
            return Some(false);
        }
        let Some(v) = decode_one_hot(solution) else {
            return Some(false);
        };
        // Independent direct search.
        let artifact = match reach_precompute(graph) {
            Ok(a) => a,
            Err(_) => return Some(false),
        };
        Some(artifact.layers().iter().any(|layer| layer.contains(&v)))
    }

    fn validate_state(&self, a: &ReachArtifact, state: &Augmented) -> Result<(), EnumError> {
        let n = a.n;
        let fail =
            |why: &str| Err(EnumError::InvalidPredecessor(format!("{} ({why})", state.solution)));
        if state.solution.len() != n || state.memory.len() != 2 * n {
            return fail("wrong shape");
        }
        let Some(v) = decode_one_hot(&state.solution) else {
            return fail("not a one-hot vertex word");
        };
        let visited = state.memory.prefix(n);
        let layer = state.memory.suffix(n);
        let layers = a.layers();
        let Some(depth) = layers.iter().position(|l| l.contains(&v)) else {
            return fail("vertex is not reachable");
        };
        let mut expected_layer = BitWord::zeros(n);
        for &u in &layers[depth] {
            expected_layer.set(u, true);
        }
        let mut expected_visited = BitWord::zeros(n);
        for l in &layers[..=depth] {
            for &u in l {
                expected_visited.set(u, true);
            }
        }
        if layer != expected_layer || visited != expected_visited {
            return fail("memory does not match the breadth-first position");
        }
        Ok(())
    }
}
