//! Brute-force reference answers.
//!
//! Everything here recomputes solution sets from first principles — exhaustive
//! scans and direct definitions — without touching any successor-walk code, so
//! the enumerators can be judged against genuinely independent results.

use enumkit::sat::{Clause, ClauseSet};
use enumkit::{BitWord, Graph, Hypergraph};

/// Exhaustive scans are limited to this many solution bits.
pub const ORACLE_MAX_BITS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("solution length {len} exceeds the exhaustive-scan limit of {ORACLE_MAX_BITS} bits")]
    TooLargeForOracle { len: usize },
}

/// All words of length `len` passing `member`, in ascending binary value.
pub fn scan(
    len: usize,
    mut member: impl FnMut(&BitWord) -> bool,
) -> Result<Vec<BitWord>, OracleError> {
    if len > ORACLE_MAX_BITS {
        return Err(OracleError::TooLargeForOracle { len });
    }
    let mut out = Vec::new();
    for value in 0..(1u64 << len) {
        let word = BitWord::from_value(len, value);
        if member(&word) {
            out.push(word);
        }
    }
    Ok(out)
}

/// Does the chosen vertex set (bit v−1 ⇔ vertex v) meet every hyperedge?
pub fn hits_every_edge(h: &Hypergraph, word: &BitWord) -> bool {
    word.len() == h.vertex_count()
        && h.edge_lists().iter().all(|edge| edge.iter().any(|&v| word.get(v - 1)))
}

/// Closed neighborhood of each vertex under the symmetrized edge relation.
fn closed_neighborhoods(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut nbhd: Vec<Vec<usize>> = (1..=n).map(|v| vec![v]).collect();
    for &(u, v) in g.edges() {
        nbhd[u - 1].push(v);
        nbhd[v - 1].push(u);
    }
    for list in &mut nbhd {
        list.sort_unstable();
        list.dedup();
    }
    nbhd
}

/// Does the chosen vertex set dominate the graph (meet every closed
/// neighborhood)?
pub fn dominates(g: &Graph, word: &BitWord) -> bool {
    word.len() == g.vertex_count()
        && closed_neighborhoods(g).iter().all(|nbhd| nbhd.iter().any(|&v| word.get(v - 1)))
}

/// Direct clause-by-clause evaluation, reimplemented here so the oracle does
/// not share code with the enumerators' own checker.
pub fn satisfies(cs: &ClauseSet, word: &BitWord) -> bool {
    if word.len() != cs.var_count() {
        return false;
    }
    cs.clauses().iter().all(|clause| match clause {
        Clause::Or(lits) => lits.iter().any(|l| word.get(l.var - 1) == l.positive),
        Clause::Xor { vars, rhs } => {
            let parity = vars.iter().fold(false, |acc, &v| acc ^ word.get(v - 1));
            parity == *rhs
        }
    })
}

/// GF(2) rank of a parity system, by a plain elimination over `u32` masks
/// (requires at most 32 variables).
pub fn parity_rank(cs: &ClauseSet) -> usize {
    assert!(cs.var_count() <= 32, "rank oracle is limited to 32 variables");
    let mut rows: Vec<u32> = cs
        .clauses()
        .iter()
        .map(|clause| {
            let Clause::Xor { vars, .. } = clause else {
                panic!("rank oracle expects a parity system")
            };
            vars.iter().fold(0u32, |acc, &v| acc ^ (1 << (v - 1)))
        })
        .collect();
    let mut rank = 0;
    for bit in 0..cs.var_count() {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r] & (1 << bit) != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r] & (1 << bit) != 0 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// Out-neighbor lists (0-based) of a digraph with 1-based edges.
fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); g.vertex_count()];
    for &(u, v) in g.edges() {
        out[u - 1].push(v - 1);
    }
    out
}

/// Breadth-first distances from the graph's source; `None` = unreachable.
pub fn bfs_layers(g: &Graph) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut dist = vec![None; n];
    let Some(source) = g.source() else { return dist };
    let out = adjacency(g);
    let mut queue = std::collections::VecDeque::from([source - 1]);
    dist[source - 1] = Some(0);
    while let Some(u) = queue.pop_front() {
        for &v in &out[u] {
            if dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// The vertices reachable from the source, as one-hot words (bit v−1 set),
/// ordered by vertex number.
pub fn reachable_one_hots(g: &Graph) -> Vec<BitWord> {
    let n = g.vertex_count();
    bfs_layers(g)
        .iter()
        .enumerate()
        .filter(|(_, d)| d.is_some())
        .map(|(v, _)| {
            let mut w = BitWord::zeros(n);
            w.set(v, true);
            w
        })
        .collect()
}

/// The reflected-code word of rank `rank`, via the classic integer shortcut.
pub fn code_word_of_rank(n: usize, rank: u64) -> BitWord {
    BitWord::from_value(n, rank ^ (rank >> 1))
}

/// Inverse of [`code_word_of_rank`], by prefix-xor over the integer value.
pub fn code_rank_of_word(word: &BitWord) -> u64 {
    let mut v = word.to_value();
    let mut shift = 1;
    while shift < 64 {
        v ^= v >> shift;
        shift <<= 1;
    }
    v
}

/// Witness word width for the constant-memory parity walk on an `n`-bit
/// input: the smallest `m` with `2^(m−1) ≥ n`.
pub fn const_witness_width(n: usize) -> usize {
    let mut m = 1;
    while (1u128 << (m - 1)) < n as u128 {
        m += 1;
    }
    m
}

/// Witness word width for the polynomial-memory parity walk: `k + 1` for the
/// smallest `k` with `2^(2^k) ≥ n`.
pub fn poly_witness_width(n: usize) -> usize {
    let mut k = 0u32;
    while (1u128 << (1u32 << k)) < n as u128 {
        k += 1;
    }
    (k + 1) as usize
}

/// Membership in the parity-witness solution set for input `x` and word width
/// `m`: every mixed word belongs, and of the two constant words only the
/// verdict for `x`'s popcount does.
pub fn witness_member(x: &BitWord, m: usize, word: &BitWord) -> bool {
    if word.len() != m {
        return false;
    }
    let even = x.count_ones() % 2 == 0;
    if word.is_all_one() {
        even
    } else if word.is_all_zero() {
        !even
    } else {
        true
    }
}

/// The verdict word for input `x`: all ones when its popcount is even, all
/// zeros otherwise.
pub fn witness_verdict(x: &BitWord, m: usize) -> BitWord {
    if x.count_ones() % 2 == 0 {
        BitWord::ones(m)
    } else {
        BitWord::zeros(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use enumkit::sat::{or_clause, FragmentKind};

    #[test]
    fn scan_respects_the_size_limit() {
        assert!(scan(ORACLE_MAX_BITS + 1, |_| true).is_err());
        assert_eq!(scan(2, |_| true).unwrap().len(), 4);
    }

    #[test]
    fn transversal_oracle_matches_the_worked_example() {
        let h = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        let sols = scan(3, |w| hits_every_edge(&h, w)).unwrap();
        let strings: Vec<String> = sols.iter().map(|w| w.to_string()).collect();
        assert_eq!(strings, ["010", "011", "101", "110", "111"]);
    }

    #[test]
    fn krom_oracle_counts_three_assignments() {
        let cs = ClauseSet::new(2, FragmentKind::Krom, vec![or_clause(&[1, 2])]).unwrap();
        assert_eq!(scan(2, |w| satisfies(&cs, w)).unwrap().len(), 3);
    }

    #[test]
    fn xor_oracle_finds_the_two_solutions() {
        let cs =
            ClauseSet::new(2, FragmentKind::Xor, vec![Clause::Xor { vars: vec![1, 2], rhs: true }])
                .unwrap();
        let strings: Vec<String> =
            scan(2, |w| satisfies(&cs, w)).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(strings, ["01", "10"]);
    }

    #[test]
    fn parity_rank_by_elimination() {
        let cs = ClauseSet::new(
            3,
            FragmentKind::Xor,
            vec![
                Clause::Xor { vars: vec![1, 2], rhs: true },
                Clause::Xor { vars: vec![2, 3], rhs: false },
                Clause::Xor { vars: vec![1, 3], rhs: true },
            ],
        )
        .unwrap();
        // Third row is the sum of the first two.
        assert_eq!(parity_rank(&cs), 2);
    }

    #[test]
    fn code_rank_helpers_are_mutual_inverses() {
        for n in 1..=10 {
            for rank in 0..(1u64 << n) {
                let w = code_word_of_rank(n, rank);
                assert_eq!(code_rank_of_word(&w), rank);
            }
        }
    }

    #[test]
    fn witness_widths() {
        assert_eq!(const_witness_width(2), 2);
        assert_eq!(const_witness_width(3), 3);
        assert_eq!(const_witness_width(64), 7);
        assert_eq!(poly_witness_width(3), 2);
        assert_eq!(poly_witness_width(16), 3);
        assert_eq!(poly_witness_width(17), 4);
        assert_eq!(poly_witness_width(64), 4);
    }

    #[test]
    fn reachability_oracle_on_a_small_digraph() {
        let g = Graph::new(4, vec![(1, 3), (1, 4), (4, 2)], Some(1)).unwrap();
        let rows: Vec<String> = reachable_one_hots(&g).iter().map(|w| w.to_string()).collect();
        assert_eq!(rows, ["1000", "0100", "0010", "0001"]);
        assert_eq!(bfs_layers(&g), [Some(0), Some(2), Some(1), Some(1)]);
    }
}
