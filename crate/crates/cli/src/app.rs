use clap::{Parser, Subcommand};

use crate::commands::{self, Algebra, CliError, EvalMode, Outcome};
use crate::worked;

#[derive(Debug, Parser)]
#[command(name = "slicereg", version, about = "Invariants and equivalence of quaternionic stem polynomials")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Trace, norm and central divisor.
    Invariants {
        f: String,
        #[arg(long, value_enum, default_value_t)]
        algebra: Algebra,
    },
    /// Central divisor as a monic polynomial.
    Cdiv {
        f: String,
        /// List approximate roots with multiplicities (display only).
        #[arg(long)]
        roots: bool,
    },
    /// Decide equivalence of two stem polynomials.
    Equiv {
        f: String,
        h: String,
        #[arg(long, value_enum, default_value_t)]
        algebra: Algebra,
        /// Also try the swap of the two H summands (R3 only).
        #[arg(long)]
        allow_swap: bool,
    },
    /// Equivalence for R3 pairs `(F1 ; F2)`.
    R3Equiv {
        f: String,
        h: String,
        #[arg(long)]
        allow_swap: bool,
    },
    /// Whether two points of H_C lie in one automorphism orbit.
    Orbit { p: String, q: String },
    /// Orbit kind, form value and isotropy of a point.
    Classify { p: String },
    /// Basis of intertwiners alpha with alpha*F = H*alpha.
    Intertwine {
        f: String,
        h: String,
        #[arg(long)]
        degree_max: usize,
        /// Restrict to alpha with zero trace.
        #[arg(long)]
        trace_free: bool,
    },
    /// Check a candidate intertwiner.
    Verify { f: String, h: String, alpha: String },
    /// Evaluate at a point.
    Eval {
        f: String,
        #[arg(long)]
        at: String,
        /// Slice function at a quaternion (default).
        #[arg(long, conflicts_with = "stem")]
        slice: bool,
        /// Stem function at a complex number a + b*E.
        #[arg(long)]
        stem: bool,
    },
    /// Truncated series checks of the rotating unit and its conjugator.
    SeriesCheck {
        #[arg(long, default_value_t = 40)]
        order: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Comma separated complex samples, e.g. "0.3, 0.5+0.5E".
        #[arg(long)]
        samples: Option<String>,
    },
    /// Recompute the embedded worked examples.
    #[command(name = "paper-examples", alias = "examples")]
    WorkedExamples,
}

/// Rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Invariants { f, algebra } => commands::invariants_cmd(f, *algebra),
        Command::Cdiv { f, roots } => commands::cdiv_cmd(f, *roots),
        Command::Equiv { f, h, algebra, allow_swap } => {
            if *allow_swap && *algebra == Algebra::H {
                return Err(CliError::Usage("--allow-swap needs --algebra r3".into()));
            }
            commands::equiv_cmd(f, h, *algebra, *allow_swap)
        }
        Command::R3Equiv { f, h, allow_swap } => commands::r3_equiv_cmd(f, h, *allow_swap),
        Command::Orbit { p, q } => commands::orbit_cmd(p, q),
        Command::Classify { p } => commands::classify_cmd(p),
        Command::Intertwine { f, h, degree_max, trace_free } => {
            commands::intertwine_cmd(f, h, *degree_max, *trace_free)
        }
        Command::Verify { f, h, alpha } => commands::verify_cmd(f, h, alpha),
        Command::Eval { f, at, stem, .. } => {
            let mode = if *stem { EvalMode::Stem } else { EvalMode::Slice };
            commands::eval_cmd(f, at, mode)
        }
        Command::SeriesCheck { order, tol, samples } => {
            if *order == 0 {
                return Err(CliError::Usage("--order must be at least 1".into()));
            }
            commands::series_check_cmd(*order, *tol, samples.as_deref())
        }
        Command::WorkedExamples => {
            let r = worked::worked_examples()?;
            let ok = r.all_checks_pass();
            Ok((r, ok))
        }
    }
}

pub fn run(cli: &Cli) -> Invocation {
    match dispatch(&cli.command) {
        Ok((report, ok)) => Invocation {
            stdout: if cli.json { report.to_json() + "\n" } else { report.to_text() },
            stderr: String::new(),
            code: if ok { 0 } else { 1 },
        },
        Err(e) => Invocation {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}
