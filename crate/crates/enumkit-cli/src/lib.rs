//! Command-line front end for the `enumkit` enumerators.
//!
//! [`parse`] reads instance files, [`oracle`] recomputes solution sets by
//! brute force, [`verify`] compares a stream against its oracle and order
//! property, and [`Problem`] bundles every runnable problem behind one
//! dispatch point shared by the binary and the test suites.

pub mod oracle;
pub mod parse;
pub mod verify;

use enumkit::gray::{
    GrayFromRank, GrayFromWord, LexWords, OrderedGray, OrderedGrayFromRank, OrderedGrayFromWord,
    RankStart,
};
use enumkit::hypergraph::{DominatingEnum, TransversalEnum};
use enumkit::reach::ReachEnum;
use enumkit::sat::ihs::IhsEnum;
use enumkit::sat::krom::KromEnum;
use enumkit::sat::monotone::MonotoneEnum;
use enumkit::sat::xor::XorEnum;
use enumkit::sat::ClauseSet;
use enumkit::witness::{WitnessConstEnum, WitnessPolyEnum};
pub use enumkit::RunOptions;
use enumkit::{
    memory_audit, purity_replay, resume_equivalence_check, resume_suffix, run_trace, run_with,
    Augmented, BitWord, DelayProfile, EnumError, EnumerationResult, Enumerator, Graph, Hypergraph,
};

/// One runnable problem: an enumerator paired with its parsed instance.
#[derive(Debug, Clone)]
pub enum Problem {
    Transversal(Hypergraph),
    Dominating(Graph),
    /// Positive or negative monotone clause set; the instance's tag decides.
    Monotone(ClauseSet),
    Ihs(ClauseSet),
    Krom(ClauseSet),
    Xor(ClauseSet),
    Reach(Graph),
    GrayLex(usize),
    GrayOrdered(usize),
    GrayRank(RankStart),
    GrayWord(BitWord),
    GrayOrderedRank(RankStart),
    GrayOrderedWord(BitWord),
    WitnessConst(BitWord),
    WitnessPoly(BitWord),
}

/// Expands to `body` with `spec` bound to the problem's enumerator and
/// `instance` to its instance, for each variant.
macro_rules! dispatch {
    ($problem:expr, |$spec:ident, $instance:ident| $body:expr) => {
        match $problem {
            Problem::Transversal(x) => {
                let $spec = &TransversalEnum;
                let $instance = x;
                $body
            }
            Problem::Dominating(x) => {
                let $spec = &DominatingEnum;
                let $instance = x;
                $body
            }
            Problem::Monotone(x) => {
                let $spec = &MonotoneEnum;
                let $instance = x;
                $body
            }
            Problem::Ihs(x) => {
                let $spec = &IhsEnum;
                let $instance = x;
                $body
            }
            Problem::Krom(x) => {
                let $spec = &KromEnum;
                let $instance = x;
                $body
            }
            Problem::Xor(x) => {
                let $spec = &XorEnum;
                let $instance = x;
                $body
            }
            Problem::Reach(x) => {
                let $spec = &ReachEnum;
                let $instance = x;
                $body
            }
            Problem::GrayLex(x) => {
                let $spec = &LexWords;
                let $instance = x;
                $body
            }
            Problem::GrayOrdered(x) => {
                let $spec = &OrderedGray;
                let $instance = x;
                $body
            }
            Problem::GrayRank(x) => {
                let $spec = &GrayFromRank;
                let $instance = x;
                $body
            }
            Problem::GrayWord(x) => {
                let $spec = &GrayFromWord;
                let $instance = x;
                $body
            }
            Problem::GrayOrderedRank(x) => {
                let $spec = &OrderedGrayFromRank;
                let $instance = x;
                $body
            }
            Problem::GrayOrderedWord(x) => {
                let $spec = &OrderedGrayFromWord;
                let $instance = x;
                $body
            }
            Problem::WitnessConst(x) => {
                let $spec = &WitnessConstEnum;
                let $instance = x;
                $body
            }
            Problem::WitnessPoly(x) => {
                let $spec = &WitnessPolyEnum;
                let $instance = x;
                $body
            }
        }
    };
}

/// Outcome of `audit`: budget, purity, and restart findings for one instance.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub problem: &'static str,
    /// Emitted solutions in the reference run.
    pub states: usize,
    /// Maximum auxiliary bits observed.
    pub measured_bits: u64,
    /// Declared ceiling at this instance size; `None` = unbounded.
    pub budget_limit: Option<u64>,
    pub budget_ok: bool,
    /// Replaying every recorded transition reproduced it.
    pub purity_ok: bool,
    /// Restart indices tried (0 = from scratch, i = from the i-th state).
    pub restarts_checked: usize,
    /// First restart index whose resumed stream diverged, if any.
    pub first_failed_restart: Option<usize>,
}

impl AuditReport {
    pub fn pass(&self) -> bool {
        self.budget_ok && self.purity_ok && self.first_failed_restart.is_none()
    }
}

fn audit_generic<E: Enumerator>(
    spec: &E,
    instance: &E::Instance,
) -> Result<AuditReport, EnumError> {
    let opts = RunOptions::default();
    let states = run_trace(spec, instance, &opts)?.len();
    let (measured_bits, budget_ok) = match memory_audit(spec, instance) {
        Ok(bits) => (bits, true),
        Err(EnumError::BudgetExceeded { measured, .. }) => (measured, false),
        Err(e) => return Err(e),
    };
    let budget_limit = spec.budget().limit_bits(spec.instance_size(instance));
    let purity_ok = purity_replay(spec, instance)?;
    let mut restarts_checked = 0;
    let mut first_failed_restart = None;
    for index in 0..=states {
        restarts_checked += 1;
        if !resume_equivalence_check(spec, instance, index)? {
            first_failed_restart = Some(index);
            break;
        }
    }
    Ok(AuditReport {
        problem: spec.problem(),
        states,
        measured_bits,
        budget_limit,
        budget_ok,
        purity_ok,
        restarts_checked,
        first_failed_restart,
    })
}

fn resume_generic<E: Enumerator>(
    spec: &E,
    instance: &E::Instance,
    from: Augmented,
    opts: &RunOptions,
) -> Result<Vec<BitWord>, EnumError> {
    let suffix = resume_suffix(spec, instance, from, opts)?;
    Ok(suffix.iter().map(|a| spec.decode(a)).collect())
}

impl Problem {
    /// The stable tag used by `--problem`.
    pub fn tag(&self) -> &'static str {
        match self {
            Problem::Monotone(cs) if cs.kind() == enumkit::sat::FragmentKind::MonotoneNegative => {
                "monotone-neg"
            }
            _ => dispatch!(self, |spec, _instance| spec.problem()),
        }
    }

    /// Full or truncated run, collecting the emitted stream.
    pub fn run(&self, opts: &RunOptions) -> Result<EnumerationResult, EnumError> {
        dispatch!(self, |spec, instance| run_with(spec, instance, opts))
    }

    /// Validates the supplied augmented state and streams what follows it
    /// (excluding the state itself).
    pub fn resume(&self, from: Augmented, opts: &RunOptions) -> Result<Vec<BitWord>, EnumError> {
        dispatch!(self, |spec, instance| resume_generic(spec, instance, from, opts))
    }

    /// Memory budget, purity replay, and restart-equivalence checks.
    pub fn audit(&self) -> Result<AuditReport, EnumError> {
        dispatch!(self, |spec, instance| audit_generic(spec, instance))
    }

    /// Wall-time statistics of the successor calls over one run.
    pub fn profile(&self, limit: Option<u64>) -> Result<DelayProfile, EnumError> {
        dispatch!(self, |spec, instance| enumkit::delay_profile(spec, instance, limit))
    }
}
