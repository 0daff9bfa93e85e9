//! The enumeration machine model and its driver.
//!
//! Every enumerator in this crate is described by the same four-stage contract:
//!
//! 1. **precompute** maps an instance to an immutable artifact (or reports that
//!    there is nothing to enumerate),
//! 2. **first** produces the initial augmented solution,
//! 3. **step** maps one augmented solution to the next, using nothing but the
//!    artifact and the augmented solution itself (history freedom),
//! 4. **decode** projects an augmented solution to the emitted word, which is
//!    always a prefix of the serialized augmented form.
//!
//! The stream ends at the first fixpoint: `step` returning its input unchanged.
//! An augmented solution is the emitted word plus bounded auxiliary memory; the
//! declared [`MemoryBudget`] caps how many extra bits the memory may hold, and
//! [`memory_audit`] measures the real overhead against it.
//!
//! Because `step` sees only `(artifact, augmented solution)`, enumeration can be
//! restarted from any recorded augmented solution and must reproduce the exact
//! suffix of the stream; [`resume_equivalence_check`] verifies that property.

use std::time::{Duration, Instant};

use crate::word::BitWord;

/// An emitted solution together with its auxiliary memory bits.
///
/// The serialized form is `solution ++ memory`, so the solution is by
/// construction a prefix of the serialized word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Augmented {
    pub solution: BitWord,
    pub memory: BitWord,
}

impl Augmented {
    pub fn new(solution: BitWord, memory: BitWord) -> Self {
        Augmented { solution, memory }
    }

    /// An augmented solution with no auxiliary memory.
    pub fn bare(solution: BitWord) -> Self {
        Augmented { solution, memory: BitWord::zeros(0) }
    }

    /// `solution ++ memory` as a single word.
    pub fn serialize(&self) -> BitWord {
        self.solution.concat(&self.memory)
    }

    /// Number of auxiliary bits beyond the emitted solution.
    pub fn overhead_bits(&self) -> usize {
        self.memory.len()
    }
}

/// A polynomial `coeff * n^degree + constant`, evaluated at the instance size
/// to obtain a concrete bit bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PolyBound {
    pub coeff: u64,
    pub degree: u32,
    pub constant: u64,
}

impl PolyBound {
    pub fn linear(coeff: u64) -> Self {
        PolyBound { coeff, degree: 1, constant: 0 }
    }

    pub fn eval(&self, n: usize) -> u64 {
        self.coeff.saturating_mul((n as u64).saturating_pow(self.degree)) + self.constant
    }
}

/// Declared ceiling for the auxiliary memory of an enumerator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MemoryBudget {
    /// No auxiliary bits at all.
    None,
    /// At most this many auxiliary bits, independent of the instance.
    Constant(u64),
    /// At most `p(n)` auxiliary bits for an instance of size `n`.
    Polynomial(PolyBound),
    /// No declared bound.
    Unbounded,
}

impl MemoryBudget {
    /// Concrete bit limit for an instance of the given size; `None` means
    /// unbounded.
    pub fn limit_bits(&self, instance_size: usize) -> Option<u64> {
        match self {
            MemoryBudget::None => Some(0),
            MemoryBudget::Constant(c) => Some(*c),
            MemoryBudget::Polynomial(p) => Some(p.eval(instance_size)),
            MemoryBudget::Unbounded => None,
        }
    }
}

/// Errors surfaced by the driver and by the checked per-problem operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("step {step} emitted a word that is not a solution: {word}")]
    NonSolutionEmitted { step: u64, word: BitWord },
    #[error("no fixpoint reached within {cap} successor steps")]
    NoFixpoint { cap: u64 },
    #[error("memory overhead of {measured} bits exceeds the declared budget of {limit} bits")]
    BudgetExceeded { measured: u64, limit: u64 },
    #[error("not a valid predecessor: {0}")]
    InvalidPredecessor(String),
    #[error("rank {rank} out of range for word length {n}")]
    RankOutOfRange { n: usize, rank: u64 },
    #[error("instance too small: {0}")]
    InstanceTooSmall(String),
    #[error("malformed clause: {0}")]
    MalformedClause(String),
    #[error("malformed instance: {0}")]
    MalformedInstance(String),
    #[error("resume index {index} out of range: the stream has {count} solutions")]
    IndexOutOfRange { index: usize, count: usize },
}

/// The four-stage enumerator contract. See the module documentation.
///
/// `step` must be a pure function of `(artifact, augmented solution)`; the
/// driver treats `step(y) == y` as end of stream. Implementations signal an
/// empty solution set by returning `Ok(None)` from `precompute` (or `None`
/// from `first`).
pub trait Enumerator {
    type Instance;
    type Artifact;

    /// Stable problem tag, e.g. `"transversal"`.
    fn problem(&self) -> &'static str;

    /// Declared ceiling for auxiliary memory.
    fn budget(&self) -> MemoryBudget;

    /// Characteristic size of an instance (number of variables, vertices, or
    /// word length); budgets are evaluated at this size.
    fn instance_size(&self, instance: &Self::Instance) -> usize;

    /// Builds the immutable artifact consumed by `first` and `step`.
    /// `Ok(None)` means the instance has no solutions.
    fn precompute(&self, instance: &Self::Instance) -> Result<Option<Self::Artifact>, EnumError>;

    /// Initial augmented solution, or `None` when nothing is enumerable.
    fn first(&self, artifact: &Self::Artifact) -> Option<Augmented>;

    /// Successor map. Total and pure; returns its input unchanged at the end
    /// of the stream.
    fn step(&self, artifact: &Self::Artifact, current: &Augmented) -> Augmented;

    /// Projects an augmented solution to the emitted word.
    fn decode(&self, current: &Augmented) -> BitWord {
        current.solution.clone()
    }

    /// Optional membership predicate for emitted words. `None` means the
    /// enumerator carries no checker.
    fn check(&self, _instance: &Self::Instance, _solution: &BitWord) -> Option<bool> {
        None
    }

    /// Validates an externally supplied augmented solution before the driver
    /// resumes from it (shape of the memory bits, consistency constraints).
    fn validate_state(
        &self,
        _artifact: &Self::Artifact,
        _state: &Augmented,
    ) -> Result<(), EnumError> {
        Ok(())
    }
}

/// Knobs for a driver run.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Stop after this many emitted solutions.
    pub limit: Option<u64>,
    /// Override for the fixpoint hard cap (default `2^(solution length) + 1`).
    pub step_cap: Option<u64>,
}

impl RunOptions {
    pub fn with_limit(limit: Option<u64>) -> Self {
        RunOptions { limit, step_cap: None }
    }
}

/// Outcome of a driver run.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    /// Emitted solutions, in stream order.
    pub solutions: Vec<BitWord>,
    /// Number of successor invocations performed.
    pub steps: u64,
    /// Wall time of each successor invocation.
    pub delays: Vec<Duration>,
    /// Maximum observed `|augmented| - |solution|` over the run.
    pub max_overhead_bits: u64,
}

/// Wall-time statistics over the successor invocations of one run.
#[derive(Clone, Copy, Debug)]
pub struct DelayProfile {
    pub samples: usize,
    pub min: Duration,
    pub median: Duration,
    pub max: Duration,
}

fn default_step_cap(solution_len: usize) -> u64 {
    if solution_len >= 63 {
        u64::MAX
    } else {
        (1u64 << solution_len) + 1
    }
}

struct Drive {
    trace: Vec<Augmented>,
    steps: u64,
    delays: Vec<Duration>,
}

/// Core loop shared by every driver entry point: runs from `first` (or a given
/// start state) until fixpoint, limit, or cap.
fn drive<E: Enumerator>(
    spec: &E,
    instance: &E::Instance,
    artifact: &E::Artifact,
    start: Option<Augmented>,
    opts: &RunOptions,
) -> Result<Drive, EnumError> {
    let mut trace = Vec::new();
    let mut delays = Vec::new();
    let mut steps = 0u64;

    let first = match start {
        Some(s) => s,
        None => match spec.first(artifact) {
            Some(f) => f,
            None => return Ok(Drive { trace, steps, delays }),
        },
    };

    let cap = opts.step_cap.unwrap_or_else(|| default_step_cap(first.solution.len()));
    let limit = opts.limit.unwrap_or(u64::MAX);
    if limit == 0 {
        return Ok(Drive { trace, steps, delays });
    }

    let mut current = first;
    check_emission(spec, instance, &current, steps)?;
    trace.push(current.clone());

    while (trace.len() as u64) < limit {
        if steps >= cap {
            return Err(EnumError::NoFixpoint { cap });
        }
        let t0 = Instant::now();
        let next = spec.step(artifact, &current);
        delays.push(t0.elapsed());
        steps += 1;
        if next == current {
            return Ok(Drive { trace, steps, delays });
        }
        check_emission(spec, instance, &next, steps)?;
        trace.push(next.clone());
        current = next;
    }
    Ok(Drive { trace, steps, delays })
}

fn check_emission<E: Enumerator>(
    spec: &E,
    instance: &E::Instance,
    state: &Augmented,
    step: u64,
) -> Result<(), EnumError> {
    let word = spec.decode(state);
    if spec.check(instance, &word) == Some(false) {
        return Err(EnumError::NonSolutionEmitted { step, word });
    }
    Ok(())
}

/// Runs an enumerator to completion (or to `limit` solutions) and collects the
/// emitted stream.
pub fn run_enumeration<E: Enumerator>(
    spec: &E,
    instance: &E::Instance,
    limit: Option<u64>,
) -> Result<EnumerationResult, EnumError> {
    run_with(spec, instance, &RunOptions::with_limit(limit))
}

/// [`run_enumeration`] with explicit options.
pub fn run_with<E: Enumerator>(
    spec: &E,
    instance: &E::Instance,
    opts: &RunOptions,
) -> Result<EnumerationResult, EnumError> {
    let artifact = match spec.precompute(instance)? {
        Some(a) => a,
        None => {
            return Ok(EnumerationResult {
                solutions: Vec::new(),
                steps: 0,
                delays: Vec::new(),
                max_overhead_bits: 0,
            })
        }
    };
    let d = drive(spec, instance, &artifact, None, opts)?;
    let max_overhead_bits = d.trace.iter().map(|a| a.overhead_bits() as u64).max().unwrap_or(0);
    let solutions = d.trace.iter().map(|a| spec.decode(a)).collect();
    Ok(EnumerationResult { solutions, steps: d.steps, delays: d.delays, max_overhead_bits })
}

/// Full augmented trace of a run, for audits and restart checks.
pub fn run_trace<E: Enumerator>(
    spec: &E,
    instance: &E::Instance,
    opts: &RunOptions,
) -> Result<Vec<Augmented>, EnumError> {
    let artifact = match spec.precompute(instance)? {
        Some(a) => a,
        None => return Ok(Vec::new()),
    };
    Ok(drive(spec, instance, &artifact, None, opts)?.trace)
}

/// Validates `from` and streams the suffix that follows it (not including
/// `from` itself).
pub fn resume_suffix<E: Enumerator>(
    spec: &E,
    instance: &E::Instance,
    from: Augmented,
    opts: &RunOptions,
) -> Result<Vec<Augmented>, EnumError> {
    let artifact = match spec.precompute(instance)? {
        Some(a) => a,
        None => {
            return Err(EnumError::InvalidPredecessor(
                "the instance has no solutions to resume from".to_string(),
            ))
        }
    };
    spec.validate_state(&artifact, &from)?;
    let word = spec.decode(&from);
    if spec.check(instance, &word) == Some(false) {
        return Err(EnumError::InvalidPredecessor(word.to_string()));
    }
    // The start state occupies one trace slot; widen the limit so that `limit`
    // counts only new emissions.
    let mut opts = *opts;
    opts.limit = opts.limit.map(|l| l.saturating_add(1));
    let mut d = drive(spec, instance, &artifact, Some(from), &opts)?;
    // drive() includes the start state as its first element; the suffix is
    // everything after it.
    d.trace.remove(0);
    Ok(d.trace)
}

/// True iff restarting from the `index`-th recorded augmented solution
/// (1-based; 0 restarts from scratch) reproduces exactly the remainder of the
/// uninterrupted stream. History-free enumerators always satisfy this.
pub fn resume_equivalence_check<E: Enumerator>(
    spec: &E,
    instance: &E::Instance,
    index: usize,
) -> Result<bool, EnumError> {
    let opts = RunOptions::default();
    let full = run_trace(spec, instance, &opts)?;
    if index > full.len() {
        return Err(EnumError::IndexOutOfRange { index, count: full.len() });
    }
    if index == 0 {
        let again = run_trace(spec, instance, &opts)?;
        return Ok(again == full);
    }

    let artifact = match spec.precompute(instance)? {
        Some(a) => a,
        None => return Ok(full.is_empty()),
    };
    let start = full[index - 1].clone();
    let resumed = drive(spec, instance, &artifact, Some(start), &opts)?;
    Ok(resumed.trace[1..] == full[index..])
}

/// Replays every recorded transition once more and reports whether the
/// successor map reproduced itself exactly (purity check).
pub fn purity_replay<E: Enumerator>(spec: &E, instance: &E::Instance) -> Result<bool, EnumError> {
    let opts = RunOptions::default();
    let artifact = match spec.precompute(instance)? {
        Some(a) => a,
        None => return Ok(true),
    };
    let d = drive(spec, instance, &artifact, None, &opts)?;
    if d.trace.is_empty() {
        return Ok(true);
    }
    match spec.first(&artifact) {
        Some(f) if f == d.trace[0] => {}
        _ => return Ok(false),
    }
    for pair in d.trace.windows(2) {
        if spec.step(&artifact, &pair[0]) != pair[1] {
            return Ok(false);
        }
    }
    // The closing fixpoint must replay as well.
    let last = d.trace.last().unwrap();
    Ok(spec.step(&artifact, last) == *last)
}

/// Runs the enumerator and returns the maximum observed memory overhead in
/// bits, failing with [`EnumError::BudgetExceeded`] when it is above the
/// declared budget.
pub fn memory_audit<E: Enumerator>(spec: &E, instance: &E::Instance) -> Result<u64, EnumError> {
    let trace = run_trace(spec, instance, &RunOptions::default())?;
    let measured = trace.iter().map(|a| a.overhead_bits() as u64).max().unwrap_or(0);
    if let Some(limit) = spec.budget().limit_bits(spec.instance_size(instance)) {
        if measured > limit {
            return Err(EnumError::BudgetExceeded { measured, limit });
        }
    }
    Ok(measured)
}

/// Wall-time statistics of the successor invocations over one full run
/// (optionally truncated to `limit` solutions). Reporting only; no pass/fail.
pub fn delay_profile<E: Enumerator>(
    spec: &E,
    instance: &E::Instance,
    limit: Option<u64>,
) -> Result<DelayProfile, EnumError> {
    let result = run_with(spec, instance, &RunOptions::with_limit(limit))?;
    let mut delays = result.delays;
    delays.sort_unstable();
    if delays.is_empty() {
        return Ok(DelayProfile {
            samples: 0,
            min: Duration::ZERO,
            median: Duration::ZERO,
            max: Duration::ZERO,
        });
    }
    Ok(DelayProfile {
        samples: delays.len(),
        min: delays[0],
        median: delays[delays.len() / 2],
        max: delays[delays.len() - 1],
    })
}
