//! Bounded-delay enumeration toolkit.
//!
//! Every problem in this crate is packaged the same way: a *precomputation*
//! turns the instance into an immutable artifact, a *first* map produces the
//! initial augmented solution (solution bits plus optional working memory),
//! and a pure, history-free *successor* maps each augmented solution to the
//! next one, signalling the end of the stream by reaching a fixpoint. The
//! driver in [`machine`] runs any such enumerator, audits its memory
//! overhead against the declared budget, replays transitions to confirm
//! purity, and restarts mid-stream to confirm the successor really is
//! history-free.
//!
//! Bundled enumerators:
//!
//! * [`gray`] — binary reflected Gray code walks: plain lexicographic words,
//!   the single-memory-bit ordered walk, and memoryless rank/word-anchored
//!   variants.
//! * [`hypergraph`] — all transversals of a hypergraph and all dominating
//!   sets of a graph, lexicographic with 1 before 0.
//! * [`sat`] — satisfying assignments for the tractable fragments: monotone,
//!   implication hitting sets, binary clauses, and parity systems.
//! * [`reach`] — vertices reachable from a source, breadth-first.
//! * [`witness`] — parity witness sets threaded through constant or
//!   shrinking-tree memory.
//! * [`testing`] — deliberately broken enumerators for negative controls.

pub mod graph;
pub mod gray;
pub mod hypergraph;
pub mod machine;
pub mod reach;
pub mod sat;
pub mod testing;
pub mod witness;
pub mod word;

pub use graph::Graph;
pub use hypergraph::{Hypergraph, VertexSubset};
pub use machine::{
    delay_profile, memory_audit, purity_replay, resume_equivalence_check, resume_suffix,
    run_enumeration, run_trace, run_with, Augmented, DelayProfile, EnumError, EnumerationResult,
    Enumerator, MemoryBudget, PolyBound, RunOptions,
};
pub use word::BitWord;
