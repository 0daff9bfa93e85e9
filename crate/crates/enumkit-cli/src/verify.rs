//! Stream verification: set equality against the brute-force oracle plus the
//! problem's declared order property.

use std::collections::HashSet;
use std::str::FromStr;

use enumkit::sat::krom::{assignment_to_branch_word, krom_precompute};
use enumkit::sat::xor::xor_precompute;
use enumkit::sat::FragmentKind;
use enumkit::word::cmp_ones_first;
use enumkit::{BitWord, RunOptions};

use crate::oracle::{self, OracleError};
use crate::Problem;

/// Order property to check on a stream (after any per-problem projection).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderMode {
    /// No order constraint; set equality only.
    Set,
    /// Strictly increasing in the order where 1 beats 0 (so `1…1` is first).
    LexOnesFirst,
    /// Strictly increasing in the usual order where 0 beats 1.
    LexZerosFirst,
    /// Consecutive words differ in exactly one bit.
    GrayAdjacent,
}

impl OrderMode {
    pub fn label(self) -> &'static str {
        match self {
            OrderMode::Set => "set",
            OrderMode::LexOnesFirst => "lex-1<0",
            OrderMode::LexZerosFirst => "lex-0<1",
            OrderMode::GrayAdjacent => "gray-adjacent",
        }
    }
}

impl FromStr for OrderMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "set" => Ok(OrderMode::Set),
            "lex-1<0" | "lex-10" => Ok(OrderMode::LexOnesFirst),
            "lex-0<1" | "lex-01" => Ok(OrderMode::LexZerosFirst),
            "gray-adjacent" => Ok(OrderMode::GrayAdjacent),
            other => Err(format!(
                "unknown order mode {other:?}; expected set, lex-1<0, lex-0<1, or gray-adjacent"
            )),
        }
    }
}

/// What a verification run found. Empty `failures` means pass.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub stream_count: usize,
    pub oracle_count: usize,
    pub order: OrderMode,
    pub failures: Vec<String>,
}

impl Verdict {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The order property each problem promises by construction.
pub fn default_order(problem: &Problem) -> OrderMode {
    match problem {
        Problem::Transversal(_) | Problem::Dominating(_) | Problem::Ihs(_) => {
            OrderMode::LexOnesFirst
        }
        Problem::Monotone(cs) => {
            if cs.kind() == FragmentKind::MonotoneNegative {
                OrderMode::LexZerosFirst
            } else {
                OrderMode::LexOnesFirst
            }
        }
        // Ordered over re-encoded branch words, not the raw assignments.
        Problem::Krom(_) => OrderMode::LexZerosFirst,
        // Adjacent in the free-variable projection.
        Problem::Xor(_) => OrderMode::GrayAdjacent,
        Problem::Reach(_) => OrderMode::Set,
        Problem::GrayLex(_) => OrderMode::LexZerosFirst,
        // The memoryless anchored walks promise coverage, not order; the
        // parity-bit walks additionally promise single-bit steps.
        Problem::GrayRank(_) | Problem::GrayWord(_) => OrderMode::Set,
        Problem::GrayOrdered(_) | Problem::GrayOrderedRank(_) | Problem::GrayOrderedWord(_) => {
            OrderMode::GrayAdjacent
        }
        Problem::WitnessConst(_) | Problem::WitnessPoly(_) => OrderMode::Set,
    }
}

/// The reference solution set, in any order.
pub fn oracle_words(problem: &Problem) -> Result<Vec<BitWord>, OracleError> {
    match problem {
        Problem::Transversal(h) => {
            oracle::scan(h.vertex_count(), |w| oracle::hits_every_edge(h, w))
        }
        Problem::Dominating(g) => oracle::scan(g.vertex_count(), |w| oracle::dominates(g, w)),
        Problem::Monotone(cs) | Problem::Ihs(cs) | Problem::Krom(cs) | Problem::Xor(cs) => {
            oracle::scan(cs.var_count(), |w| oracle::satisfies(cs, w))
        }
        Problem::Reach(g) => Ok(oracle::reachable_one_hots(g)),
        Problem::GrayLex(n) | Problem::GrayOrdered(n) => oracle::scan(*n, |_| true),
        Problem::GrayRank(rs) | Problem::GrayOrderedRank(rs) => rank_suffix(rs.n, rs.rank),
        Problem::GrayWord(x) | Problem::GrayOrderedWord(x) => {
            rank_suffix(x.len(), oracle::code_rank_of_word(x))
        }
        Problem::WitnessConst(x) => {
            let m = oracle::const_witness_width(x.len());
            oracle::scan(m, |w| oracle::witness_member(x, m, w))
        }
        Problem::WitnessPoly(x) => {
            let m = oracle::poly_witness_width(x.len());
            oracle::scan(m, |w| oracle::witness_member(x, m, w))
        }
    }
}

/// Every code word of rank ≥ `rank`, built by the integer shortcut.
fn rank_suffix(n: usize, rank: u64) -> Result<Vec<BitWord>, OracleError> {
    if n > oracle::ORACLE_MAX_BITS {
        return Err(OracleError::TooLargeForOracle { len: n });
    }
    Ok((rank..(1u64 << n)).map(|r| oracle::code_word_of_rank(n, r)).collect())
}

/// Maps the emitted words into the space whose order the problem promises:
/// branch words for the 2-CNF walk, free-variable words for parity systems,
/// identity elsewhere. `None` when the projection's own precomputation says
/// the instance has no solutions (any non-empty stream is then already wrong).
fn project_for_order(problem: &Problem, words: &[BitWord]) -> Option<Vec<BitWord>> {
    match problem {
        Problem::Krom(cs) => {
            let artifact = krom_precompute(cs).ok()??;
            Some(words.iter().map(|w| assignment_to_branch_word(&artifact, w)).collect())
        }
        Problem::Xor(cs) => {
            let artifact = xor_precompute(cs).ok()??;
            Some(words.iter().map(|w| artifact.free_word(w)).collect())
        }
        _ => Some(words.to_vec()),
    }
}

fn check_order(words: &[BitWord], mode: OrderMode, failures: &mut Vec<String>) {
    for (i, pair) in words.windows(2).enumerate() {
        let (a, b) = (&pair[0], &pair[1]);
        let ok = match mode {
            OrderMode::Set => true,
            OrderMode::LexOnesFirst => cmp_ones_first(a, b) == std::cmp::Ordering::Less,
            OrderMode::LexZerosFirst => a < b,
            OrderMode::GrayAdjacent => a.hamming_distance(b) == 1,
        };
        if !ok {
            failures.push(format!(
                "order {} violated between emissions {i} and {}: {a} then {b}",
                mode.label(),
                i + 1
            ));
            return;
        }
    }
}

fn check_set_equality(stream: &[BitWord], expected: &[BitWord], failures: &mut Vec<String>) {
    let mut seen: HashSet<&BitWord> = HashSet::with_capacity(stream.len());
    for (i, w) in stream.iter().enumerate() {
        if !seen.insert(w) {
            failures.push(format!("duplicate emission {w} at position {i}"));
        }
    }
    let want: HashSet<&BitWord> = expected.iter().collect();
    let missing: Vec<String> =
        expected.iter().filter(|w| !seen.contains(*w)).take(5).map(|w| w.to_string()).collect();
    if !missing.is_empty() {
        failures.push(format!("stream misses oracle solutions, e.g. {}", missing.join(", ")));
    }
    let extra: Vec<String> =
        stream.iter().filter(|w| !want.contains(*w)).take(5).map(|w| w.to_string()).collect();
    if !extra.is_empty() {
        failures.push(format!("stream emits non-solutions, e.g. {}", extra.join(", ")));
    }
}

/// Problem-specific constraints beyond set and order.
fn check_extras(problem: &Problem, stream: &[BitWord], failures: &mut Vec<String>) {
    match problem {
        Problem::Reach(g) => {
            // Emissions must be single vertices, visited closer-first.
            let layers = oracle::bfs_layers(g);
            let mut last_layer = 0usize;
            for (i, w) in stream.iter().enumerate() {
                let mut ones = w.one_positions();
                let (Some(v), None) = (ones.next(), ones.next()) else {
                    failures.push(format!("emission {i} is not a single vertex: {w}"));
                    return;
                };
                let Some(layer) = layers[v] else {
                    failures.push(format!("emission {i} names unreachable vertex {}", v + 1));
                    return;
                };
                if layer < last_layer {
                    failures.push(format!(
                        "layer regressed at emission {i}: vertex {} sits in layer {layer} after layer {last_layer}",
                        v + 1
                    ));
                    return;
                }
                last_layer = layer;
            }
        }
        Problem::WitnessConst(x) | Problem::WitnessPoly(x) => {
            let Some(last) = stream.last() else {
                failures.push("witness stream is empty".into());
                return;
            };
            let verdict = oracle::witness_verdict(x, last.len());
            if *last != verdict {
                failures
                    .push(format!("final emission {last} is not the popcount verdict {verdict}"));
            }
        }
        _ => {}
    }
}

/// Runs the problem, compares against the oracle, and checks the order
/// property (`order` overrides the problem's default).
pub fn verify_problem(problem: &Problem, order: Option<OrderMode>) -> Result<Verdict, OracleError> {
    let mode = order.unwrap_or_else(|| default_order(problem));
    let oracle_set = oracle_words(problem)?;
    let mut failures = Vec::new();
    let stream = match problem.run(&RunOptions::default()) {
        Ok(result) => result.solutions,
        Err(e) => {
            failures.push(format!("enumeration failed: {e}"));
            return Ok(Verdict {
                stream_count: 0,
                oracle_count: oracle_set.len(),
                order: mode,
                failures,
            });
        }
    };
    check_set_equality(&stream, &oracle_set, &mut failures);
    match project_for_order(problem, &stream) {
        Some(projected) => check_order(&projected, mode, &mut failures),
        None => {
            if !stream.is_empty() {
                failures.push(format!(
                    "precomputation reports no solutions, yet {} were emitted",
                    stream.len()
                ));
            }
        }
    }
    check_extras(problem, &stream, &mut failures);
    Ok(Verdict {
        stream_count: stream.len(),
        oracle_count: oracle_set.len(),
        order: mode,
        failures,
    })
}
