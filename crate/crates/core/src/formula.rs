// SPDX-License-Identifier: Apache-2.0

//! CNF formulas, fan-in-2 Boolean formulas, and the balancing step between them.
//!
//! Negation only ever appears on leaves. A CNF is turned into a formula by
//! building a balanced OR tree for each clause and a balanced AND tree over
//! the clauses, which keeps the depth logarithmic in the input size.

use std::fmt;
use std::str::FromStr;

use crate::bitstate::BitState;
use crate::error::{Error, Result};

/// A possibly negated variable; variables are numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    variable: usize,
    negated: bool,
}

impl Literal {
    pub fn new(variable: usize, negated: bool) -> Result<Self> {
        if variable == 0 {
            return Err(Error::InvalidParameter(
                "variables are numbered from 1".into(),
            ));
        }
        Ok(Literal { variable, negated })
    }

    pub fn pos(variable: usize) -> Self {
        Self::new(variable, false).expect("variable >= 1")
    }

    pub fn neg(variable: usize) -> Self {
        Self::new(variable, true).expect("variable >= 1")
    }

    /// DIMACS reading: `3` is `x3`, `-3` is `¬x3`.
    pub fn from_dimacs(value: i64) -> Result<Self> {
        let variable = usize::try_from(value.unsigned_abs())
            .map_err(|_| Error::InvalidParameter(format!("literal {value} too large")))?;
        Self::new(variable, value < 0)
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.variable as i64;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn variable(self) -> usize {
        self.variable
    }

    pub fn is_negated(self) -> bool {
        self.negated
    }

    /// Value under `assignment`, where bit `k` holds variable `k + 1`.
    pub fn eval(self, assignment: &BitState) -> bool {
        assignment.get(self.variable - 1) != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "-x{}", self.variable)
        } else {
            write!(f, "x{}", self.variable)
        }
    }
}

/// A conjunction of nonempty clauses over `num_vars` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Rejects empty formulas, empty clauses and out-of-range variables.
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        if clauses.is_empty() {
            return Err(Error::InvalidParameter("formula has no clauses".into()));
        }
        for (k, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidParameter(format!(
                    "clause {} is empty",
                    k + 1
                )));
            }
            if let Some(lit) = clause.iter().find(|l| l.variable > num_vars) {
                return Err(Error::InvalidParameter(format!(
                    "literal {lit} exceeds {num_vars} variables"
                )));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn max_clause_width(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn eval(&self, assignment: &BitState) -> Result<bool> {
        assignment.expect_len(self.num_vars)?;
        Ok(self
            .clauses
            .iter()
            .all(|clause| clause.iter().any(|lit| lit.eval(assignment))))
    }

    /// Serialize as DIMACS CNF.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&lit.to_dimacs().to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Parse DIMACS CNF text.
///
/// Comment lines start with `c`. Clauses may span lines and must end with `0`.
/// A line holding only `%` ends the input, as in the SATLIB benchmark files.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line == "%" {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(line_no, "duplicate header"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(Error::parse(line_no, "expected `p cnf <vars> <clauses>`"));
            }
            let vars = fields[2]
                .parse()
                .map_err(|_| Error::parse(line_no, "bad variable count"))?;
            let count = fields[3]
                .parse()
                .map_err(|_| Error::parse(line_no, "bad clause count"))?;
            header = Some((vars, count));
            continue;
        }
        let (num_vars, _) = header.ok_or_else(|| Error::parse(line_no, "clause before header"))?;
        for tok in line.split_whitespace() {
            let value: i64 = tok
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad literal `{tok}`")))?;
            if value == 0 {
                if current.is_empty() {
                    return Err(Error::parse(line_no, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            let lit =
                Literal::from_dimacs(value).map_err(|e| Error::parse(line_no, e.to_string()))?;
            if lit.variable() > num_vars {
                return Err(Error::parse(
                    line_no,
                    format!("variable {} out of range 1..={num_vars}", lit.variable()),
                ));
            }
            current.push(lit);
        }
    }

    let (num_vars, count) = header.ok_or_else(|| Error::parse(last_line, "missing header"))?;
    if !current.is_empty() {
        return Err(Error::parse(
            last_line,
            "last clause is not terminated by 0",
        ));
    }
    if clauses.len() != count {
        return Err(Error::parse(
            last_line,
            format!("header declares {count} clauses, found {}", clauses.len()),
        ));
    }
    if clauses.is_empty() {
        return Err(Error::parse(last_line, "formula has no clauses"));
    }
    CnfFormula::new(num_vars, clauses).map_err(|e| Error::parse(last_line, e.to_string()))
}

/// A fan-in-2 Boolean formula with literal leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Leaf(Literal),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn leaf(lit: Literal) -> Self {
        Formula::Leaf(lit)
    }

    pub fn and(left: Formula, right: Formula) -> Self {
        Formula::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Self {
        Formula::Or(Box::new(left), Box::new(right))
    }

    /// Edges on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Leaf(_) => 0,
            Formula::And(l, r) | Formula::Or(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Largest variable index mentioned.
    pub fn num_vars(&self) -> usize {
        match self {
            Formula::Leaf(lit) => lit.variable(),
            Formula::And(l, r) | Formula::Or(l, r) => l.num_vars().max(r.num_vars()),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Formula::Leaf(_) => 1,
            Formula::And(l, r) | Formula::Or(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// The assignment must cover every variable in the formula; longer is fine.
    pub fn eval(&self, assignment: &BitState) -> Result<bool> {
        let needed = self.num_vars();
        if assignment.len() < needed {
            return Err(Error::LengthMismatch {
                expected: needed,
                actual: assignment.len(),
            });
        }
        Ok(self.eval_unchecked(assignment))
    }

    fn eval_unchecked(&self, a: &BitState) -> bool {
        match self {
            Formula::Leaf(lit) => lit.eval(a),
            Formula::And(l, r) => l.eval_unchecked(a) && r.eval_unchecked(a),
            Formula::Or(l, r) => l.eval_unchecked(a) || r.eval_unchecked(a),
        }
    }

    /// Balanced conversion from CNF; see the module docs.
    pub fn from_cnf(cnf: &CnfFormula) -> Formula {
        let clauses: Vec<Formula> = cnf
            .clauses()
            .iter()
            .map(|clause| {
                let leaves: Vec<Formula> = clause.iter().copied().map(Formula::Leaf).collect();
                balance(leaves, Formula::or)
            })
            .collect();
        balance(clauses, Formula::and)
    }
}

/// Midpoint split, the left half taking the extra element.
fn balance(mut items: Vec<Formula>, join: fn(Formula, Formula) -> Formula) -> Formula {
    assert!(!items.is_empty(), "cannot balance an empty list");
    if items.len() == 1 {
        return items.pop().expect("one item");
    }
    let right = items.split_off(items.len().div_ceil(2));
    join(balance(items, join), balance(right, join))
}

/// Free-function form of [`Formula::from_cnf`].
pub fn cnf_to_formula(cnf: &CnfFormula) -> Formula {
    Formula::from_cnf(cnf)
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Leaf(lit) => write!(f, "{lit}"),
            Formula::And(l, r) => write!(f, "(and {l} {r})"),
            Formula::Or(l, r) => write!(f, "(or {l} {r})"),
        }
    }
}

/// S-expression syntax: `x3`, `-x3` (also `!x3`, `~x3`), `(and A B)`, `(or A B)`.
/// Lines starting with `#` are comments.
impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        for (idx, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.starts_with('#') {
                continue;
            }
            let spaced = line.replace('(', " ( ").replace(')', " ) ");
            tokens.extend(spaced.split_whitespace().map(|t| (idx + 1, t.to_string())));
        }
        let mut pos = 0;
        let formula = parse_expr(&tokens, &mut pos)?;
        if let Some((line, tok)) = tokens.get(pos) {
            return Err(Error::parse(*line, format!("trailing token `{tok}`")));
        }
        Ok(formula)
    }
}

fn parse_expr(tokens: &[(usize, String)], pos: &mut usize) -> Result<Formula> {
    let last_line = tokens.last().map_or(1, |t| t.0);
    let (line, tok) = tokens
        .get(*pos)
        .ok_or_else(|| Error::parse(last_line, "unexpected end of formula"))?;
    *pos += 1;
    if tok == "(" {
        let (_, op) = tokens
            .get(*pos)
            .ok_or_else(|| Error::parse(*line, "missing operator"))?;
        *pos += 1;
        let join: fn(Formula, Formula) -> Formula = match op.to_ascii_lowercase().as_str() {
            "and" => Formula::and,
            "or" => Formula::or,
            other => return Err(Error::parse(*line, format!("unknown operator `{other}`"))),
        };
        let left = parse_expr(tokens, pos)?;
        let right = parse_expr(tokens, pos)?;
        match tokens.get(*pos) {
            Some((_, t)) if t == ")" => *pos += 1,
            _ => return Err(Error::parse(*line, "operators take exactly two operands")),
        }
        return Ok(join(left, right));
    }
    let (negated, body) = match tok.strip_prefix(['-', '!', '~']) {
        Some(rest) => (true, rest),
        None => (false, tok.as_str()),
    };
    let var = body
        .strip_prefix('x')
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .ok_or_else(|| Error::parse(*line, format!("bad literal `{tok}`")))?;
    Ok(Formula::Leaf(Literal::new(var, negated)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_assignments(n: usize) -> impl Iterator<Item = BitState> {
        (0..1u64 << n).map(move |i| BitState::from_index(i, n))
    }

    #[test]
    fn parse_examples() {
        let f = parse_dimacs("p cnf 1 1\n1 0").unwrap();
        assert_eq!(f.num_vars(), 1);
        assert_eq!(f.clauses(), &[vec![Literal::pos(1)]]);

        let f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0").unwrap();
        assert_eq!(
            f.clauses(),
            &[
                vec![Literal::pos(1), Literal::pos(2)],
                vec![Literal::neg(1), Literal::neg(2)]
            ]
        );

        assert!(matches!(
            parse_dimacs("p cnf 1 1\n2 0"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn parse_comments_and_multiline_clauses() {
        let text = "c hello\np cnf 3 2\nc between\n1 -2\n 3 0 -1\n0\n";
        let f = parse_dimacs(text).unwrap();
        assert_eq!(f.clauses().len(), 2);
        assert_eq!(f.clauses()[0].len(), 3);
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "1 0",
            "p cnf x 1\n1 0",
            "p dnf 1 1\n1 0",
            "p cnf 1 2\n1 0",
            "p cnf 1 1\n0",
            "p cnf 1 1\n1",
            "p cnf 1 0\n",
            "p cnf 2 1\n1 a 0",
            "p cnf 1 1\np cnf 1 1\n1 0",
        ] {
            assert!(
                matches!(parse_dimacs(bad), Err(Error::Parse { .. })),
                "accepted {bad:?}"
            );
        }
    }

    #[test]
    fn cnf_eval_examples() {
        let one = parse_dimacs("p cnf 1 1\n1 0").unwrap();
        assert!(one.eval(&"1".parse().unwrap()).unwrap());

        let xor = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0").unwrap();
        assert!(xor.eval(&"10".parse().unwrap()).unwrap());
        assert!(!xor.eval(&"11".parse().unwrap()).unwrap());

        let contra = parse_dimacs("p cnf 1 2\n1 0\n-1 0").unwrap();
        assert!(!contra.eval(&"0".parse().unwrap()).unwrap());
        assert!(!contra.eval(&"1".parse().unwrap()).unwrap());

        assert!(matches!(
            contra.eval(&"01".parse().unwrap()),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn balanced_conversion_examples() {
        let f = parse_dimacs("p cnf 1 1\n1 0").unwrap();
        assert_eq!(cnf_to_formula(&f), Formula::Leaf(Literal::pos(1)));
        assert_eq!(cnf_to_formula(&f).depth(), 0);

        let f = parse_dimacs("p cnf 4 1\n1 2 3 4 0").unwrap();
        let g = cnf_to_formula(&f);
        assert_eq!(g.depth(), 2);
        assert_eq!(g.to_string(), "(or (or x1 x2) (or x3 x4))");

        // Left half takes the ceiling.
        let f = parse_dimacs("p cnf 3 1\n1 2 3 0").unwrap();
        assert_eq!(cnf_to_formula(&f).to_string(), "(or (or x1 x2) x3)");

        let f = parse_dimacs("p cnf 4 4\n1 2 3 4 0\n-1 2 3 4 0\n1 -2 3 4 0\n1 2 -3 4 0").unwrap();
        assert_eq!(cnf_to_formula(&f).depth(), 4);
    }

    #[test]
    fn depth_examples() {
        let x = Formula::leaf(Literal::pos(1));
        assert_eq!(x.depth(), 0);
        assert_eq!(Formula::and(x.clone(), x.clone()).depth(), 1);
    }

    #[test]
    fn formula_eval_examples() {
        let nx = Formula::leaf(Literal::neg(1));
        assert!(!nx.eval(&"1".parse().unwrap()).unwrap());
        let or = Formula::or(
            Formula::leaf(Literal::pos(1)),
            Formula::leaf(Literal::pos(2)),
        );
        assert!(or.eval(&"01".parse().unwrap()).unwrap());
        assert!(matches!(
            or.eval(&"0".parse().unwrap()),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn conversion_agrees_with_cnf_semantics() {
        let f = parse_dimacs("p cnf 3 3\n1 -2 0\n2 3 -1 0\n-3 0").unwrap();
        let g = cnf_to_formula(&f);
        for a in all_assignments(3) {
            assert_eq!(g.eval(&a).unwrap(), f.eval(&a).unwrap());
        }
    }

    #[test]
    fn formula_text_round_trip() {
        let text = "(and x1 (or -x2 (and x3 !x4)))";
        let f: Formula = text.parse().unwrap();
        assert_eq!(f.to_string(), "(and x1 (or -x2 (and x3 -x4)))");
        assert_eq!(f.to_string().parse::<Formula>().unwrap(), f);
        assert_eq!(
            "# c\n x2 ".parse::<Formula>().unwrap(),
            Formula::leaf(Literal::pos(2))
        );
        for bad in [
            "",
            "(and x1)",
            "(xor x1 x2)",
            "x0",
            "(and x1 x2 x3)",
            "x1 x2",
            "y1",
        ] {
            assert!(bad.parse::<Formula>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn dimacs_round_trip() {
        let f = parse_dimacs("c x\np cnf 3 2\n1 -3 0\n2 0\n").unwrap();
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }
}
