//! Directed graphs with 1-based vertices, shared by the reachability and
//! dominating-set enumerators.

use crate::machine::EnumError;

/// A digraph over vertices `1..=n`, optionally with a distinguished source.
/// Undirected consumers (domination) treat each arc as a symmetric edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    source: Option<usize>,
}

impl Graph {
    pub fn new(
        n: usize,
        edges: Vec<(usize, usize)>,
        source: Option<usize>,
    ) -> Result<Self, EnumError> {
        if n == 0 {
            return Err(EnumError::MalformedInstance("graphs need at least one vertex".into()));
        }
        for &(u, v) in &edges {
            if u == 0 || u > n || v == 0 || v > n {
                return Err(EnumError::MalformedInstance(format!(
                    "edge ({u}, {v}) is out of range for {n} vertices"
                )));
            }
        }
        if let Some(s) = source {
            if s == 0 || s > n {
                return Err(EnumError::MalformedInstance(format!(
                    "source {s} is out of range for {n} vertices"
                )));
            }
        }
        Ok(Graph { n, edges, source })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn source(&self) -> Option<usize> {
        self.source
    }

    /// Closed neighborhoods `N[v] = {v} ∪ {u : u-v or v-u is an edge}`, with
    /// arcs read as undirected edges. Entry `v - 1` lists vertices ascending.
    pub fn closed_neighborhoods(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<bool>> = vec![vec![false; self.n + 1]; self.n];
        for v in 1..=self.n {
            sets[v - 1][v] = true;
        }
        for &(u, v) in &self.edges {
            sets[u - 1][v] = true;
            sets[v - 1][u] = true;
        }
        sets.into_iter().map(|row| (1..=self.n).filter(|&v| row[v]).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_neighborhoods_of_a_path() {
        let g = Graph::new(3, vec![(1, 2), (2, 3)], None).unwrap();
        assert_eq!(g.closed_neighborhoods(), vec![vec![1, 2], vec![1, 2, 3], vec![2, 3]]);
    }

    #[test]
    fn rejects_out_of_range_edges() {
        assert!(Graph::new(2, vec![(1, 3)], None).is_err());
        assert!(Graph::new(2, vec![(0, 1)], None).is_err());
        assert!(Graph::new(2, vec![], Some(3)).is_err());
        assert!(Graph::new(0, vec![], None).is_err());
    }
}
