use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use fermat_core::descent::check_trace;
use fermat_core::diophantus20::{refute, DescentState};
use fermat_core::pythagoras::{circle_point, classify, enumerate_triples};
use fermat_core::{Nat, Rational, Triple};

use crate::props::run_props;
use crate::report::{
    emit, CircleRecord, ClassifyRecord, DescentSummary, Format, StepLine, TripleRecord,
};
use crate::verify::{run_verify, Task, VerifyError};

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitCode {
    Success = 0,
    Counterexample = 1,
    Usage = 2,
    Overflow = 3,
    Domain = 4,
}

#[derive(Parser, Debug)]
#[command(
    name = "fermat",
    version,
    about = "Pythagorean triples, infinite descent, and bounded refutations"
)]
struct Cli {
    /// Output format: one JSON object per line, or human-readable text.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List triples with hypotenuse at most N, in canonical odd-first form.
    Triples {
        #[arg(long = "max-c", value_name = "N")]
        max_c: Nat,
        /// Only primitive triples (m = 1).
        #[arg(long)]
        primitive: bool,
        /// Keep triples with a zero side.
        #[arg(long)]
        include_degenerate: bool,
    },
    /// Canonical (m, p, q, orientation) of a Pythagorean triple.
    Classify { a: Nat, b: Nat, c: Nat },
    /// Unit-circle point for the slope NUM/DEN.
    Circle { num: Nat, den: Nat },
    /// Run the descent on the state (P, Q).
    Descend {
        p: Nat,
        q: Nat,
        /// Emit every step with its intermediate values.
        #[arg(long)]
        trace: bool,
    },
    /// Exhaustively search for a counterexample up to a bound.
    Verify {
        #[arg(value_enum)]
        task: Task,
        #[arg(long)]
        bound: Nat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Seeded randomized property checks.
    Props {
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Core(fermat_core::Error),
    Io(std::io::Error),
}

impl From<fermat_core::Error> for Failure {
    fn from(e: fermat_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Partition(p) => Failure::Usage(p.to_string()),
            VerifyError::Arithmetic(a) => Failure::Core(a),
        }
    }
}

/// Parses `argv` (including the program name), runs the command, and
/// returns the exit code. Results go to `out`, diagnostics to `err`.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() {
                ExitCode::Usage
            } else {
                ExitCode::Success
            } as i32;
        }
    };
    let code = match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            ExitCode::Usage
        }
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_overflow() {
                ExitCode::Overflow
            } else {
                ExitCode::Domain
            }
        }
        // A closed stdout (e.g. piped into `head`) is not worth a diagnostic.
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::Success,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            ExitCode::Usage
        }
    };
    code as i32
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<ExitCode, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Triples {
            max_c,
            primitive,
            include_degenerate,
        } => {
            for t in enumerate_triples(max_c, primitive, include_degenerate)? {
                emit(out, format, &TripleRecord::from(t))?;
            }
        }
        Command::Classify { a, b, c } => {
            let t = Triple::new(a, b, c);
            emit(out, format, &ClassifyRecord::new(t, classify(t)?))?;
        }
        Command::Circle { num, den } => {
            let r = Rational::new(num, den)?;
            emit(out, format, &CircleRecord::new(r, circle_point(r)?))?;
        }
        Command::Descend { p, q, trace } => {
            let refutation = refute(DescentState::new(p, q)?)?;
            let t = &refutation.trace;
            if trace {
                for (i, ((state, measure), rec)) in t
                    .states
                    .iter()
                    .zip(&t.measures)
                    .zip(&refutation.records)
                    .enumerate()
                {
                    emit(out, format, &StepLine::new(i, state, *measure, rec))?;
                }
            }
            let stage = refutation.stage();
            let detail = match stage {
                fermat_core::diophantus20::RefutationStage::InternalAssertionFailed(d) => Some(d),
                _ => None,
            };
            emit(
                out,
                format,
                &DescentSummary {
                    p,
                    q,
                    stage: stage.name(),
                    detail,
                    steps: t.len(),
                    trace_valid: check_trace(t),
                },
            )?;
        }
        Command::Verify { task, bound, jobs } => {
            let report = run_verify(task, bound, jobs)?;
            emit(out, format, &report)?;
            if !report.counterexamples.is_empty() {
                return Ok(ExitCode::Counterexample);
            }
        }
        Command::Props { trials, seed } => {
            let lines = run_props(trials, seed);
            for line in &lines {
                emit(out, format, line)?;
            }
            if lines.iter().any(|l| l.failures > 0) {
                return Ok(ExitCode::Counterexample);
            }
        }
    }
    Ok(ExitCode::Success)
}
