// SPDX-License-Identifier: Apache-2.0

//! Command-line front end.
//!
//! Every command prints one verdict token first, followed by `key=value`
//! pairs. Exit codes are fixed:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success, `EQUIVALENT`, or `UNSAT`         |
//! | 1    | `INEQUIVALENT` or `SAT`                   |
//! | 2    | usage, file or format error               |
//! | 3    | resource limit reached, or `UNKNOWN`      |

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bitstate::BitState;
use crate::bp::{barrington_compile_with_inputs, length_bound, BranchingProgram};
use crate::circuit::Circuit;
use crate::compile::UnsatGadget;
use crate::equiv::{Checker, Mode, SatResult, Verdict, DEFAULT_SAT_VAR_LIMIT, DEFAULT_WIDTH_LIMIT};
use crate::error::Error;
use crate::formula::{cnf_to_formula, parse_dimacs, Formula};
use crate::perm5::Perm5;

/// Largest input count `bp --verify` will sweep.
pub const BP_VERIFY_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Found = 1,
    UsageError = 2,
    ResourceLimit = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "revequiv",
    version,
    about = "Reversible-circuit identity checking via width-5 branching programs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Fredkin,
    Toffoli,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the identity gadget for a DIMACS CNF.
    Compile {
        dimacs: PathBuf,
        out: PathBuf,
        #[arg(long, value_enum, default_value = "fredkin")]
        emit: Emit,
    },
    /// Check two circuit files for strong (or weak) equivalence.
    Check {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: CheckMode,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Weak equivalence: sweep the first N inputs, compare the first M outputs.
        #[arg(long, num_args = 2, value_names = ["N", "M"])]
        weak: Option<Vec<usize>>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_WIDTH_LIMIT)]
        width_limit: usize,
    },
    /// Run a circuit on one input bit string (wire 0 first).
    Simulate { circuit: PathBuf, input: String },
    /// Compile a DIMACS CNF or an s-expression formula into a branching program.
    Bp {
        input: PathBuf,
        out: PathBuf,
        /// 5-cycle the program evaluates to when the formula holds.
        #[arg(long, default_value = "(1 2 3 4 5)")]
        target: String,
        /// Evaluate the program on every assignment (at most 16 inputs).
        #[arg(long)]
        verify: bool,
    },
    /// Brute-force satisfiability.
    Sat {
        dimacs: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SAT_VAR_LIMIT)]
        var_limit: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// A failed command: its exit status and a message for standard error.
struct Failure(ExitStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::WidthLimitExceeded { .. } | Error::LimitExceeded { .. } => {
                ExitStatus::ResourceLimit
            }
            _ => ExitStatus::UsageError,
        };
        Failure(status, e.to_string())
    }
}

type CmdResult = std::result::Result<ExitStatus, Failure>;

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                ExitStatus::UsageError
            } else {
                ExitStatus::Success
            };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return status;
        }
    };
    match dispatch(cli.command, out) {
        Ok(status) => status,
        Err(Failure(status, message)) => {
            let _ = writeln!(err, "error: {message}");
            status
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Compile {
            dimacs,
            out: path,
            emit,
        } => cmd_compile(&dimacs, &path, emit, out),
        Command::Check {
            first,
            second,
            mode,
            trials,
            seed,
            weak,
            jobs,
            width_limit,
        } => {
            let mode = match mode {
                CheckMode::Exhaustive => Mode::Exhaustive,
                CheckMode::Random => Mode::Random { trials, seed },
            };
            let weak = weak.map(|v| (v[0], v[1]));
            let checker = Checker { width_limit, jobs };
            cmd_check(&first, &second, mode, weak, &checker, out)
        }
        Command::Simulate { circuit, input } => cmd_simulate(&circuit, &input, out),
        Command::Bp {
            input,
            out: path,
            target,
            verify,
        } => cmd_bp(&input, &path, &target, verify, out),
        Command::Sat {
            dimacs,
            var_limit,
            jobs,
        } => {
            let checker = Checker {
                jobs,
                ..Checker::default()
            };
            cmd_sat(&dimacs, var_limit, &checker, out)
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure(ExitStatus::UsageError, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> std::result::Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure(ExitStatus::UsageError, format!("{}: {e}", path.display())))
}

fn io(e: std::io::Error) -> Failure {
    Failure(ExitStatus::UsageError, e.to_string())
}

fn read_circuit(path: &Path) -> std::result::Result<Circuit, Failure> {
    read(path)?
        .parse::<Circuit>()
        .map_err(|e| Failure(ExitStatus::UsageError, format!("{}: {e}", path.display())))
}

pub fn cmd_compile_text(dimacs: &str, emit: Emit) -> crate::error::Result<(String, String)> {
    let cnf = parse_dimacs(dimacs)?;
    let gadget = UnsatGadget::build(&cnf)?;
    let circuit = match emit {
        Emit::Fredkin => gadget.circuit.clone(),
        Emit::Toffoli => gadget.circuit.fredkin_to_toffoli()?,
    };
    let mut meta = gadget.metadata();
    let emit_name = match emit {
        Emit::Fredkin => "fredkin",
        Emit::Toffoli => "toffoli",
    };
    meta.push(format!("emit={emit_name}"));
    let summary = format!(
        "COMPILED n={} width={} gates={} bp_length={} emit={emit_name}",
        cnf.num_vars(),
        circuit.width(),
        circuit.len(),
        gadget.program.len()
    );
    Ok((circuit.to_text_with_comments(&meta), summary))
}

fn cmd_compile(dimacs: &Path, path: &Path, emit: Emit, out: &mut dyn Write) -> CmdResult {
    let (text, summary) = cmd_compile_text(&read(dimacs)?, emit)?;
    write_file(path, &text)?;
    writeln!(out, "{summary}").map_err(io)?;
    Ok(ExitStatus::Success)
}

fn cmd_check(
    first: &Path,
    second: &Path,
    mode: Mode,
    weak: Option<(usize, usize)>,
    checker: &Checker,
    out: &mut dyn Write,
) -> CmdResult {
    let c1 = read_circuit(first)?;
    let c2 = read_circuit(second)?;
    let verdict = match weak {
        Some((n, m)) => checker.weak_equiv(&c1, &c2, n, m, mode)?,
        None => checker.strong_equiv(&c1, &c2, mode)?,
    };
    let status = match &verdict {
        Verdict::Equivalent => {
            writeln!(out, "EQUIVALENT").map_err(io)?;
            ExitStatus::Success
        }
        Verdict::Inequivalent(w) => {
            writeln!(out, "INEQUIVALENT witness={w}").map_err(io)?;
            ExitStatus::Found
        }
        Verdict::Unknown { trials } => {
            writeln!(out, "UNKNOWN trials={trials}").map_err(io)?;
            ExitStatus::ResourceLimit
        }
    };
    Ok(status)
}

fn cmd_simulate(path: &Path, input: &str, out: &mut dyn Write) -> CmdResult {
    let circuit = read_circuit(path)?;
    let state: BitState = input.parse()?;
    let result = circuit.simulate(&state)?;
    writeln!(out, "{result}").map_err(io)?;
    Ok(ExitStatus::Success)
}

fn looks_like_dimacs(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with('p') || l.starts_with('c'))
}

/// Formula and input count from DIMACS or s-expression text.
pub fn read_formula(text: &str) -> crate::error::Result<(Formula, usize)> {
    if looks_like_dimacs(text) {
        let cnf = parse_dimacs(text)?;
        Ok((cnf_to_formula(&cnf), cnf.num_vars()))
    } else {
        let f: Formula = text.parse()?;
        let n = f.num_vars();
        Ok((f, n))
    }
}

fn cmd_bp(input: &Path, path: &Path, target: &str, verify: bool, out: &mut dyn Write) -> CmdResult {
    let (formula, n) = read_formula(&read(input)?)?;
    let target: Perm5 = target.parse()?;
    let program = barrington_compile_with_inputs(&formula, &target, n)?;
    let depth = formula.depth();
    let mut line = format!(
        "BP n={n} length={} depth={depth} bound={}",
        program.len(),
        length_bound(depth)
    );
    let mut status = ExitStatus::Success;
    if verify {
        if n > BP_VERIFY_LIMIT {
            return Err(Failure(
                ExitStatus::ResourceLimit,
                format!("--verify sweeps at most {BP_VERIFY_LIMIT} inputs, formula has {n}"),
            ));
        }
        let (ok, always_identity) = verify_program(&program, &formula, &target)?;
        line.push_str(&format!(
            " verified={} identity_on_all={always_identity}",
            if ok { "ok" } else { "FAILED" }
        ));
        if !ok {
            status = ExitStatus::Found;
        }
    }
    write_file(path, &program.to_string())?;
    writeln!(out, "{line}").map_err(io)?;
    Ok(status)
}

fn verify_program(
    program: &BranchingProgram,
    formula: &Formula,
    target: &Perm5,
) -> crate::error::Result<(bool, bool)> {
    let n = program.num_inputs();
    let mut ok = true;
    let mut always_identity = true;
    for x in 0..1u64 << n {
        let a = BitState::from_index(x, n);
        let value = program.eval(&a)?;
        let expected = if formula.eval(&a)? {
            *target
        } else {
            Perm5::IDENTITY
        };
        ok &= value == expected;
        always_identity &= value.is_identity();
    }
    Ok((ok, always_identity))
}

fn cmd_sat(dimacs: &Path, var_limit: usize, checker: &Checker, out: &mut dyn Write) -> CmdResult {
    let cnf = parse_dimacs(&read(dimacs)?)?;
    match checker.brute_force_sat(&cnf, var_limit)? {
        SatResult::Satisfiable(w) => {
            writeln!(out, "SAT witness={w}").map_err(io)?;
            Ok(ExitStatus::Found)
        }
        SatResult::Unsatisfiable => {
            writeln!(out, "UNSAT").map_err(io)?;
            Ok(ExitStatus::Success)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::GateKind;

    #[test]
    fn dimacs_sniffing() {
        assert!(looks_like_dimacs("c hi\np cnf 1 1\n1 0"));
        assert!(looks_like_dimacs("\np cnf 1 1\n1 0"));
        assert!(!looks_like_dimacs("# f\n(and x1 x2)"));
        assert!(!looks_like_dimacs("x1"));
    }

    #[test]
    fn exit_codes_are_stable() {
        assert_eq!(ExitStatus::Success.code(), 0);
        assert_eq!(ExitStatus::Found.code(), 1);
        assert_eq!(ExitStatus::UsageError.code(), 2);
        assert_eq!(ExitStatus::ResourceLimit.code(), 3);
    }

    #[test]
    fn compile_text_summary() {
        let (text, summary) = cmd_compile_text("p cnf 1 2\n1 0\n-1 0\n", Emit::Fredkin).unwrap();
        assert!(summary.starts_with("COMPILED n=1 width=7 "));
        assert!(text.contains("# n=1\n"));
        let c: Circuit = text.parse().unwrap();
        assert_eq!(c.width(), 7);
        assert_eq!(c.stats().count(GateKind::Toffoli), 0);
    }
}
