//! `enumkit` — run, verify, audit, and time the bundled enumerators.
//!
//! Exit codes: 0 success, 1 verification or runtime failure, 2 bad input
//! (unparsable file, malformed argument, unknown problem).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use enumkit::gray::RankStart;
use enumkit::sat::FragmentKind;
use enumkit::{Augmented, BitWord, RunOptions};
use enumkit_cli::parse::{parse_instance, InputFormat, InstanceSpec};
use enumkit_cli::verify::{verify_problem, OrderMode};
use enumkit_cli::Problem;

/// Print one line to stdout; when the consumer has closed the pipe (e.g.
/// `enumkit enum … | head`), end the process quietly instead of panicking.
macro_rules! emit {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("cannot write to stdout: {e}");
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "enumkit",
    version,
    about = "Bounded-delay enumeration: history-free successor walks with audited memory budgets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an enumerator; prints one 0/1 word per line, then `# count=K`
    Enum(EnumArgs),
    /// Compare the stream against a brute-force oracle and its order property
    Verify(VerifyArgs),
    /// Check the memory budget, successor purity, and restart equivalence
    Audit(AuditArgs),
    /// Report wall-time statistics of the successor calls
    Bench(BenchArgs),
}

#[derive(Args)]
struct ProblemArgs {
    /// One of: transversal, dominating, monotone, monotone-neg, ihs, krom,
    /// xor, reach, gray-lex, gray-ordered, gray-rank, gray-word,
    /// gray-ordered-rank, gray-ordered-word, witness-const, witness-poly
    #[arg(long)]
    problem: String,

    /// Instance file (hypergraph `h`, digraph `g`, DIMACS CNF, or `x … : b`
    /// parity lines); required by the graph and clause problems
    #[arg(long)]
    input: Option<PathBuf>,

    /// Word length; required by gray-lex, gray-ordered, gray-rank,
    /// gray-ordered-rank
    #[arg(long)]
    n: Option<usize>,

    /// Start rank; required by gray-rank and gray-ordered-rank
    #[arg(long)]
    rank: Option<u64>,

    /// 0/1 word: the anchor of gray-word and gray-ordered-word, or the input
    /// of witness-const and witness-poly
    #[arg(long)]
    word: Option<String>,
}

#[derive(Args)]
struct EnumArgs {
    #[command(flatten)]
    problem: ProblemArgs,

    /// Stop after this many solutions
    #[arg(long)]
    limit: Option<u64>,

    /// Restart from an augmented predecessor `WORD[:MEMORY]` and print only
    /// what follows it
    #[arg(long, value_name = "WORD[:MEM]")]
    resume_from: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    problem: ProblemArgs,

    /// Override the order property: set, lex-1<0, lex-0<1, gray-adjacent
    #[arg(long)]
    order: Option<String>,
}

#[derive(Args)]
struct AuditArgs {
    #[command(flatten)]
    problem: ProblemArgs,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    problem: ProblemArgs,

    /// Profile only the first N solutions
    #[arg(long)]
    limit: Option<u64>,
}

/// Failures split by exit code: bad input (2) versus runtime/verification (1).
enum CliError {
    BadInput(String),
    Runtime(String),
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::BadInput(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            CliError::Runtime(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
        }
    }
}

fn bad_input(msg: impl Into<String>) -> CliError {
    CliError::BadInput(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Enum(args) => cmd_enum(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Audit(args) => cmd_audit(args),
        Command::Bench(args) => cmd_bench(args),
    };
    outcome.unwrap_or_else(CliError::report)
}

fn read_instance(args: &ProblemArgs, format: InputFormat) -> Result<InstanceSpec, CliError> {
    let Some(path) = &args.input else {
        return Err(bad_input(format!("--problem {} requires --input FILE", args.problem)));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| bad_input(format!("cannot read {}: {e}", path.display())))?;
    parse_instance(&text, format).map_err(|e| bad_input(format!("{}: {e}", path.display())))
}

fn need_n(args: &ProblemArgs) -> Result<usize, CliError> {
    args.n.ok_or_else(|| bad_input(format!("--problem {} requires --n LEN", args.problem)))
}

fn need_rank(args: &ProblemArgs) -> Result<u64, CliError> {
    args.rank.ok_or_else(|| bad_input(format!("--problem {} requires --rank R", args.problem)))
}

fn need_word(args: &ProblemArgs) -> Result<BitWord, CliError> {
    let Some(text) = &args.word else {
        return Err(bad_input(format!("--problem {} requires --word BITS", args.problem)));
    };
    text.parse().map_err(|e| bad_input(format!("--word: {e}")))
}

fn build_problem(args: &ProblemArgs) -> Result<Problem, CliError> {
    let problem = match args.problem.as_str() {
        "transversal" => match read_instance(args, InputFormat::Hypergraph)? {
            InstanceSpec::Hypergraph(h) => Problem::Transversal(h),
            _ => unreachable!("hypergraph format parsed"),
        },
        "dominating" | "reach" => match read_instance(args, InputFormat::Digraph)? {
            InstanceSpec::Digraph(g) if args.problem == "reach" => Problem::Reach(g),
            InstanceSpec::Digraph(g) => Problem::Dominating(g),
            _ => unreachable!("digraph format parsed"),
        },
        "monotone" | "monotone-neg" | "ihs" | "krom" => {
            let kind = match args.problem.as_str() {
                "monotone" => FragmentKind::MonotonePositive,
                "monotone-neg" => FragmentKind::MonotoneNegative,
                "ihs" => FragmentKind::Ihs,
                _ => FragmentKind::Krom,
            };
            match read_instance(args, InputFormat::Cnf(kind))? {
                InstanceSpec::Clauses(cs) => match kind {
                    FragmentKind::Ihs => Problem::Ihs(cs),
                    FragmentKind::Krom => Problem::Krom(cs),
                    _ => Problem::Monotone(cs),
                },
                _ => unreachable!("CNF format parsed"),
            }
        }
        "xor" => match read_instance(args, InputFormat::Xor)? {
            InstanceSpec::Clauses(cs) => Problem::Xor(cs),
            _ => unreachable!("parity format parsed"),
        },
        "gray-lex" => Problem::GrayLex(need_n(args)?),
        "gray-ordered" => Problem::GrayOrdered(need_n(args)?),
        "gray-rank" => Problem::GrayRank(RankStart { n: need_n(args)?, rank: need_rank(args)? }),
        "gray-ordered-rank" => {
            Problem::GrayOrderedRank(RankStart { n: need_n(args)?, rank: need_rank(args)? })
        }
        "gray-word" => Problem::GrayWord(need_word(args)?),
        "gray-ordered-word" => Problem::GrayOrderedWord(need_word(args)?),
        "witness-const" => Problem::WitnessConst(need_word(args)?),
        "witness-poly" => Problem::WitnessPoly(need_word(args)?),
        other => return Err(bad_input(format!("unknown problem {other:?}"))),
    };
    Ok(problem)
}

/// `ENUM_STEP_CAP` overrides the fixpoint hard cap of the run.
fn step_cap_from_env() -> Result<Option<u64>, CliError> {
    match std::env::var("ENUM_STEP_CAP") {
        Ok(text) => text.trim().parse::<u64>().map(Some).map_err(|_| {
            bad_input(format!("ENUM_STEP_CAP must be an unsigned integer, got {text:?}"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(bad_input(format!("ENUM_STEP_CAP: {e}"))),
    }
}

/// `WORD[:MEMORY]` → an augmented solution to restart from.
fn parse_resume(text: &str) -> Result<Augmented, CliError> {
    let (word, memory) = match text.split_once(':') {
        Some((w, m)) => {
            let memory: BitWord =
                m.parse().map_err(|e| bad_input(format!("--resume-from memory: {e}")))?;
            (w, memory)
        }
        None => (text, BitWord::zeros(0)),
    };
    let solution: BitWord =
        word.parse().map_err(|e| bad_input(format!("--resume-from word: {e}")))?;
    Ok(Augmented::new(solution, memory))
}

fn cmd_enum(args: EnumArgs) -> Result<ExitCode, CliError> {
    let problem = build_problem(&args.problem)?;
    let opts = RunOptions { limit: args.limit, step_cap: step_cap_from_env()? };
    let words = match args.resume_from {
        None => problem.run(&opts).map_err(|e| CliError::Runtime(e.to_string()))?.solutions,
        Some(text) => {
            let from = parse_resume(&text)?;
            problem.resume(from, &opts).map_err(|e| CliError::Runtime(e.to_string()))?
        }
    };
    for word in &words {
        emit!("{word}");
    }
    emit!("# count={}", words.len());
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let problem = build_problem(&args.problem)?;
    let order = match &args.order {
        Some(text) => Some(text.parse::<OrderMode>().map_err(bad_input)?),
        None => None,
    };
    let verdict = verify_problem(&problem, order).map_err(|e| CliError::Runtime(e.to_string()))?;
    emit!(
        "stream={} oracle={} order={}",
        verdict.stream_count,
        verdict.oracle_count,
        verdict.order.label()
    );
    for failure in &verdict.failures {
        emit!("fail: {failure}");
    }
    if verdict.pass() {
        emit!("# verify=pass");
        Ok(ExitCode::SUCCESS)
    } else {
        emit!("# verify=fail");
        Ok(ExitCode::from(1))
    }
}

fn cmd_audit(args: AuditArgs) -> Result<ExitCode, CliError> {
    let problem = build_problem(&args.problem)?;
    let report = problem.audit().map_err(|e| CliError::Runtime(e.to_string()))?;
    let limit = match report.budget_limit {
        Some(bits) => format!("<= {bits} bits"),
        None => "unbounded".to_string(),
    };
    emit!("problem={} solutions={}", report.problem, report.states);
    emit!(
        "memory: measured={} bits, declared {} -> {}",
        report.measured_bits,
        limit,
        if report.budget_ok { "ok" } else { "exceeded" }
    );
    emit!("purity: {}", if report.purity_ok { "ok" } else { "violated" });
    match report.first_failed_restart {
        None => emit!("restarts: {} of {} ok", report.restarts_checked, report.restarts_checked),
        Some(index) => emit!("restarts: diverged when resuming from state {index}"),
    }
    if report.pass() {
        emit!("# audit=pass");
        Ok(ExitCode::SUCCESS)
    } else {
        emit!("# audit=fail");
        Ok(ExitCode::from(1))
    }
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode, CliError> {
    let problem = build_problem(&args.problem)?;
    let profile = problem.profile(args.limit).map_err(|e| CliError::Runtime(e.to_string()))?;
    emit!(
        "samples={} min={:?} median={:?} max={:?}",
        profile.samples,
        profile.min,
        profile.median,
        profile.max
    );
    emit!("# bench=done");
    Ok(ExitCode::SUCCESS)
}
