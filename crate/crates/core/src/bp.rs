// SPDX-License-Identifier: Apache-2.0

//! Width-5 branching programs and the Barrington compiler.
//!
//! An instruction `(i, α, β)` contributes `α` when input bit `i` is 0 and
//! `β` when it is 1; the program's value is the left-to-right product of
//! the contributions.
//!
//! Compilation of a formula `f` toward a 5-cycle target `c` produces a
//! program that evaluates to `c` when `f` holds and to the identity when it
//! does not:
//!
//! * `x_i` becomes `(i, (), c)` and `¬x_i` becomes `(i, c, ())`.
//! * `g ∧ h` picks 5-cycles `γ, δ` whose commutator is `c` and emits
//!   `P_g · P_h · P_g⁻¹ · P_h⁻¹`.
//! * `g ∨ h` is `¬(¬g ∧ ¬h)`. Negating a program for target `s⁻¹` means
//!   multiplying by the constant `s` on the right, which yields `s` exactly
//!   when the subformula is false. The constant is folded into the last
//!   instruction, so negation never adds length and the `4^depth` bound
//!   holds for every formula.

use std::fmt;
use std::str::FromStr;

use crate::bitstate::BitState;
use crate::error::{Error, Result};
use crate::formula::{Formula, Literal};
use crate::perm5::{find_and_pair, find_conjugator, Perm5};

/// One `(i, α, β)` triple; `input` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Instruction {
    input: usize,
    if_zero: Perm5,
    if_one: Perm5,
}

impl Instruction {
    pub fn new(input: usize, if_zero: Perm5, if_one: Perm5) -> Result<Self> {
        if input == 0 {
            return Err(Error::InvalidParameter(
                "instruction inputs are 1-based".into(),
            ));
        }
        Ok(Instruction {
            input,
            if_zero,
            if_one,
        })
    }

    /// Applies `p` regardless of input; encoded as `(1, p, p)`.
    pub fn constant(p: Perm5) -> Self {
        Instruction {
            input: 1,
            if_zero: p,
            if_one: p,
        }
    }

    pub fn input(&self) -> usize {
        self.input
    }

    pub fn if_zero(&self) -> Perm5 {
        self.if_zero
    }

    pub fn if_one(&self) -> Perm5 {
        self.if_one
    }

    pub fn select(&self, bit: bool) -> Perm5 {
        if bit {
            self.if_one
        } else {
            self.if_zero
        }
    }

    fn map_branches(&self, f: impl Fn(&Perm5) -> Perm5) -> Self {
        Instruction {
            input: self.input,
            if_zero: f(&self.if_zero),
            if_one: f(&self.if_one),
        }
    }
}

/// A width-5 branching program over `num_inputs` bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingProgram {
    num_inputs: usize,
    instructions: Vec<Instruction>,
}

impl BranchingProgram {
    pub fn new(num_inputs: usize, instructions: Vec<Instruction>) -> Result<Self> {
        if let Some(ins) = instructions.iter().find(|ins| ins.input > num_inputs) {
            return Err(Error::IndexOutOfRange {
                index: ins.input,
                bound: num_inputs,
            });
        }
        Ok(BranchingProgram {
            num_inputs,
            instructions,
        })
    }

    pub fn empty(num_inputs: usize) -> Self {
        BranchingProgram {
            num_inputs,
            instructions: Vec::new(),
        }
    }

    pub fn num_inputs(&self) -> usize {
        self.num_inputs
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }

    pub fn eval(&self, assignment: &BitState) -> Result<Perm5> {
        assignment.expect_len(self.num_inputs)?;
        Ok(self.instructions.iter().fold(Perm5::IDENTITY, |acc, ins| {
            acc.compose(&ins.select(assignment.get(ins.input - 1)))
        }))
    }

    /// Reversed instruction list with every branch inverted.
    pub fn inverse(&self) -> Self {
        BranchingProgram {
            num_inputs: self.num_inputs,
            instructions: self
                .instructions
                .iter()
                .rev()
                .map(|ins| ins.map_branches(Perm5::inverse))
                .collect(),
        }
    }

    /// Conjugate every branch so a program for `from` becomes one for `to`.
    pub fn retarget(&self, from: &Perm5, to: &Perm5) -> Result<Self> {
        let tau = find_conjugator(from, to)?;
        Ok(BranchingProgram {
            num_inputs: self.num_inputs,
            instructions: self
                .instructions
                .iter()
                .map(|ins| ins.map_branches(|p| p.conjugate(&tau)))
                .collect(),
        })
    }

    /// `self` followed by `other`; the input count is the larger of the two.
    pub fn concat(&self, other: &BranchingProgram) -> Self {
        let mut instructions = self.instructions.clone();
        instructions.extend_from_slice(&other.instructions);
        BranchingProgram {
            num_inputs: self.num_inputs.max(other.num_inputs),
            instructions,
        }
    }
}

pub fn eval_bp(program: &BranchingProgram, assignment: &BitState) -> Result<Perm5> {
    program.eval(assignment)
}

pub fn invert_bp(program: &BranchingProgram) -> BranchingProgram {
    program.inverse()
}

pub fn retarget_bp(
    program: &BranchingProgram,
    from: &Perm5,
    to: &Perm5,
) -> Result<BranchingProgram> {
    program.retarget(from, to)
}

/// `4^depth`, saturating.
pub fn length_bound(depth: usize) -> u128 {
    u32::try_from(depth)
        .ok()
        .and_then(|d| 4u128.checked_pow(d))
        .unwrap_or(u128::MAX)
}

/// Compile `formula` into a program that yields `target` when the formula is
/// true and the identity otherwise.
///
/// The program reads `formula.num_vars()` inputs. Fails with
/// [`Error::NotFiveCycle`] when `target` is not a 5-cycle.
pub fn barrington_compile(formula: &Formula, target: &Perm5) -> Result<BranchingProgram> {
    barrington_compile_with_inputs(formula, target, formula.num_vars())
}

/// As [`barrington_compile`], declaring `num_inputs` inputs (at least the
/// formula's largest variable).
pub fn barrington_compile_with_inputs(
    formula: &Formula,
    target: &Perm5,
    num_inputs: usize,
) -> Result<BranchingProgram> {
    if !target.is_five_cycle() {
        return Err(Error::NotFiveCycle(target.to_string()));
    }
    if num_inputs < formula.num_vars() {
        return Err(Error::IndexOutOfRange {
            index: formula.num_vars(),
            bound: num_inputs,
        });
    }
    let mut out = Vec::new();
    emit(formula, *target, false, &mut out)?;

    let depth = formula.depth();
    let bound = length_bound(depth);
    if out.len() as u128 > bound {
        return Err(Error::LengthBoundExceeded {
            length: out.len(),
            depth,
            bound,
        });
    }
    BranchingProgram::new(num_inputs, out)
}

/// Append the program for `formula` (or its negation when `negate` is set)
/// toward `target` to `out`.
fn emit(formula: &Formula, target: Perm5, negate: bool, out: &mut Vec<Instruction>) -> Result<()> {
    match (formula, negate) {
        (Formula::Leaf(lit), _) => {
            out.push(leaf(*lit, target, negate));
            Ok(())
        }
        (Formula::And(g, h), false) => emit_and(g, false, h, false, target, out),
        // ¬(g ∨ h) = ¬g ∧ ¬h
        (Formula::Or(g, h), true) => emit_and(g, true, h, true, target, out),
        // ¬(g ∧ h) and g ∨ h = ¬(¬g ∧ ¬h) are both a negated AND.
        (Formula::And(g, h), true) => emit_negated_and(g, false, h, false, target, out),
        (Formula::Or(g, h), false) => emit_negated_and(g, true, h, true, target, out),
    }
}

fn leaf(lit: Literal, target: Perm5, negate: bool) -> Instruction {
    let (if_zero, if_one) = if lit.is_negated() != negate {
        (target, Perm5::IDENTITY)
    } else {
        (Perm5::IDENTITY, target)
    };
    Instruction {
        input: lit.variable(),
        if_zero,
        if_one,
    }
}

fn emit_and(
    g: &Formula,
    neg_g: bool,
    h: &Formula,
    neg_h: bool,
    target: Perm5,
    out: &mut Vec<Instruction>,
) -> Result<()> {
    let (gamma, delta) = find_and_pair(&target)?;
    let start = out.len();
    emit(g, gamma, neg_g, out)?;
    let mid = out.len();
    emit(h, delta, neg_h, out)?;
    let end = out.len();
    for k in (start..mid).rev() {
        let ins = out[k].map_branches(Perm5::inverse);
        out.push(ins);
    }
    for k in (mid..end).rev() {
        let ins = out[k].map_branches(Perm5::inverse);
        out.push(ins);
    }
    Ok(())
}

/// Program for `¬(g' ∧ h')` toward `target`: compile the AND toward
/// `target⁻¹`, then multiply by `target` on the right.
fn emit_negated_and(
    g: &Formula,
    neg_g: bool,
    h: &Formula,
    neg_h: bool,
    target: Perm5,
    out: &mut Vec<Instruction>,
) -> Result<()> {
    emit_and(g, neg_g, h, neg_h, target.inverse(), out)?;
    let last = out
        .last_mut()
        .expect("an AND emits at least four instructions");
    *last = last.map_branches(|p| p.compose(&target));
    Ok(())
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.input, self.if_zero, self.if_one)
    }
}

/// Text form: `bp <n> <l>` then one `<i> <perm-if-zero> <perm-if-one>` per line.
impl fmt::Display for BranchingProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bp {} {}", self.num_inputs, self.instructions.len())?;
        for ins in &self.instructions {
            writeln!(f, "{ins}")?;
        }
        Ok(())
    }
}

impl FromStr for BranchingProgram {
    type Err = Error;

    /// Blank lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `bp` header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 || fields[0] != "bp" {
            return Err(Error::parse(hline, "expected `bp <n> <l>`"));
        }
        let n: usize = fields[1]
            .parse()
            .map_err(|_| Error::parse(hline, "bad input count"))?;
        let l: usize = fields[2]
            .parse()
            .map_err(|_| Error::parse(hline, "bad length"))?;

        let mut instructions = Vec::with_capacity(l);
        for (line_no, line) in lines {
            instructions.push(parse_instruction(line).map_err(|m| Error::parse(line_no, m))?);
        }
        if instructions.len() != l {
            return Err(Error::parse(
                hline,
                format!(
                    "header declares {l} instructions, found {}",
                    instructions.len()
                ),
            ));
        }
        BranchingProgram::new(n, instructions).map_err(|e| Error::parse(hline, e.to_string()))
    }
}

fn parse_instruction(line: &str) -> std::result::Result<Instruction, String> {
    let split = line
        .find(char::is_whitespace)
        .ok_or_else(|| format!("expected `<i> <perm> <perm>`, got `{line}`"))?;
    let input: usize = line[..split]
        .parse()
        .map_err(|_| format!("bad input index `{}`", &line[..split]))?;
    let rest = line[split..].trim();
    // Two permutations in cycle notation; the boundary is the first `)`
    // followed by whitespace.
    let mut cut = None;
    let bytes = rest.as_bytes();
    for (k, &b) in bytes.iter().enumerate() {
        if b == b')' && bytes.get(k + 1).is_some_and(u8::is_ascii_whitespace) {
            cut = Some(k + 1);
            break;
        }
    }
    let cut = cut.ok_or_else(|| format!("expected two permutations in `{rest}`"))?;
    let if_zero: Perm5 = rest[..cut].parse().map_err(|e: Error| e.to_string())?;
    let if_one: Perm5 = rest[cut..].parse().map_err(|e: Error| e.to_string())?;
    Instruction::new(input, if_zero, if_one).map_err(|e| e.to_string())
}
