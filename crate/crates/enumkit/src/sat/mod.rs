//! Satisfying-assignment enumeration for four CNF/XOR fragments.
//!
//! * [`monotone`]: purely positive (or purely negative) clauses; the positive
//!   case is transversal enumeration over clause supports, the negative case
//!   runs the same walk on complemented words.
//! * [`ihs`]: positive clauses plus binary clauses of the forms `(¬x)` and
//!   `(x ∨ ¬x')`; a reachability closure over variables drives both the unit
//!   propagation and the successor.
//! * [`krom`]: arbitrary 2-clauses; the implication graph over literals yields
//!   satisfiability, a variable ordering, and the successor.
//! * [`xor`]: parity equations; Gaussian elimination yields a triangular
//!   system walked with one auxiliary bit.
//!
//! Assignments are words with variable 1 leftmost.

pub mod closure;
pub mod ihs;
pub mod krom;
pub mod monotone;
pub mod xor;

use crate::machine::EnumError;
use crate::word::BitWord;

/// A propositional literal over 1-based variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn positive(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn negative(var: usize) -> Self {
        Literal { var, positive: false }
    }

    pub fn negated(self) -> Self {
        Literal { var: self.var, positive: !self.positive }
    }

    /// Value under an assignment word (variable 1 at index 0).
    pub fn eval(self, assignment: &BitWord) -> bool {
        assignment.get(self.var - 1) == self.positive
    }
}

impl std::fmt::Display for Literal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "-x{}", self.var)
        }
    }
}

/// One constraint: a disjunction of literals or a parity equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Clause {
    Or(Vec<Literal>),
    Xor { vars: Vec<usize>, rhs: bool },
}

/// Which fragment a clause set claims to belong to; construction validates the
/// claim clause by clause.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FragmentKind {
    MonotonePositive,
    MonotoneNegative,
    Ihs,
    Krom,
    Xor,
}

impl FragmentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FragmentKind::MonotonePositive => "monotone",
            FragmentKind::MonotoneNegative => "monotone-neg",
            FragmentKind::Ihs => "ihs",
            FragmentKind::Krom => "krom",
            FragmentKind::Xor => "xor",
        }
    }
}

/// A clause set over variables `1..=n`, tagged with its fragment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseSet {
    n: usize,
    kind: FragmentKind,
    clauses: Vec<Clause>,
}

impl ClauseSet {
    pub fn new(n: usize, kind: FragmentKind, clauses: Vec<Clause>) -> Result<Self, EnumError> {
        if n == 0 {
            return Err(EnumError::MalformedInstance(
                "clause sets need at least one variable".into(),
            ));
        }
        for clause in &clauses {
            validate_clause(n, kind, clause)?;
        }
        Ok(ClauseSet { n, kind, clauses })
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> FragmentKind {
        self.kind
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Direct evaluation of every constraint under `assignment`.
    pub fn satisfied_by(&self, assignment: &BitWord) -> bool {
        if assignment.len() != self.n {
            return false;
        }
        self.clauses.iter().all(|clause| match clause {
            Clause::Or(lits) => lits.iter().any(|l| l.eval(assignment)),
            Clause::Xor { vars, rhs } => {
                let parity = vars.iter().fold(false, |acc, &v| acc ^ assignment.get(v - 1));
                parity == *rhs
            }
        })
    }
}

fn validate_clause(n: usize, kind: FragmentKind, clause: &Clause) -> Result<(), EnumError> {
    let check_var = |v: usize| {
        if v == 0 || v > n {
            Err(EnumError::MalformedClause(format!(
                "variable {v} is out of range for {n} variables"
            )))
        } else {
            Ok(())
        }
    };
    match (kind, clause) {
        (FragmentKind::Xor, Clause::Xor { vars, .. }) => {
            if vars.is_empty() {
                return Err(EnumError::MalformedClause("parity equation with no variables".into()));
            }
            vars.iter().try_for_each(|&v| check_var(v))
        }
        (FragmentKind::Xor, Clause::Or(_)) => {
            Err(EnumError::MalformedClause("disjunction in a parity system".into()))
        }
        (_, Clause::Xor { .. }) => {
            Err(EnumError::MalformedClause("parity equation in a disjunctive fragment".into()))
        }
        (FragmentKind::MonotonePositive, Clause::Or(lits)) => {
            if lits.is_empty() || lits.iter().any(|l| !l.positive) {
                return Err(EnumError::MalformedClause(
                    "monotone clauses must be non-empty and purely positive".into(),
                ));
            }
            lits.iter().try_for_each(|l| check_var(l.var))
        }
        (FragmentKind::MonotoneNegative, Clause::Or(lits)) => {
            if lits.is_empty() || lits.iter().any(|l| l.positive) {
                return Err(EnumError::MalformedClause(
                    "negative monotone clauses must be non-empty and purely negative".into(),
                ));
            }
            lits.iter().try_for_each(|l| check_var(l.var))
        }
        (FragmentKind::Ihs, Clause::Or(lits)) => {
            lits.iter().try_for_each(|l| check_var(l.var))?;
            let accepted = match lits.as_slice() {
                // Implication (x ∨ ¬x').
                [a, b] if a.positive != b.positive => true,
                // Negative unit.
                [l] if !l.positive => true,
                // Everything else must be purely positive. The empty
                // disjunction counts: no assignment satisfies it, and
                // precomputation reports the empty stream.
                _ => lits.iter().all(|l| l.positive),
            };
            if accepted {
                Ok(())
            } else {
                Err(EnumError::MalformedClause(format!(
                    "clause ({}) fits neither the positive part nor the binary part",
                    lits.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ∨ ")
                )))
            }
        }
        (FragmentKind::Krom, Clause::Or(lits)) => {
            if lits.is_empty() || lits.len() > 2 {
                return Err(EnumError::MalformedClause(format!(
                    "2-clauses must hold one or two literals, got {}",
                    lits.len()
                )));
            }
            lits.iter().try_for_each(|l| check_var(l.var))
        }
    }
}

/// Convenience constructor for disjunctions from signed integers, DIMACS
/// style: positive `v` is the literal `x_v`, negative `-v` is `¬x_v`.
pub fn or_clause(lits: &[i64]) -> Clause {
    Clause::Or(
        lits.iter()
            .map(|&l| {
                assert!(l != 0, "0 is not a literal");
                if l > 0 {
                    Literal::positive(l as usize)
                } else {
                    Literal::negative((-l) as usize)
                }
            })
            .collect(),
    )
}
