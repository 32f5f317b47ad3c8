//! Hilbert-style derivations over the C1 postulates.
//!
//! The postulate list numbers its items 1 to 13 with item 3 being modus
//! ponens. Axiom schemas keep that numbering, so the valid schema ids are
//! 1, 2 and 4 through 13.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::formula::{Binding, Formula};
use crate::parse::{parse, strip_comment, ParseError};

/// The list position occupied by modus ponens.
pub const MODUS_PONENS_ITEM: u8 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomSchema {
    pub id: u8,
    /// Pattern over the schema variables `a`, `b`, `c`, with every `°`
    /// already expanded through [`Formula::well_behaved`].
    pub pattern: Formula,
}

fn build_schemas() -> Vec<AxiomSchema> {
    let p = |s: &str| parse(s).expect("schema text parses");
    let a = Formula::var("a");
    let b = Formula::var("b");
    let a0 = a.well_behaved();
    let b0 = b.well_behaved();

    let ax10 = Formula::implies(b0.clone(), p("(a -> b) -> ((a -> ~b) -> ~a)"));
    let ax11 = Formula::implies(
        Formula::and(a0, b0),
        Formula::and(
            Formula::and(p("a & b").well_behaved(), p("a | b").well_behaved()),
            p("a -> b").well_behaved(),
        ),
    );
    vec![
        (1, p("a -> (b -> a)")),
        (2, p("(a -> b) -> ((a -> (b -> c)) -> (a -> c))")),
        (4, p("a & b -> a")),
        (5, p("a & b -> b")),
        (6, p("a -> (b -> a & b)")),
        (7, p("a -> a | b")),
        (8, p("b -> a | b")),
        (9, p("(a -> c) -> ((b -> c) -> (a | b -> c))")),
        (10, ax10),
        (11, ax11),
        (12, p("a | ~a")),
        (13, p("~~a -> a")),
    ]
    .into_iter()
    .map(|(id, pattern)| AxiomSchema { id, pattern })
    .collect()
}

/// The twelve axiom schemas in list order.
pub fn axiom_schemas() -> &'static [AxiomSchema] {
    static SCHEMAS: OnceLock<Vec<AxiomSchema>> = OnceLock::new();
    SCHEMAS.get_or_init(build_schemas)
}

pub fn axiom_schema(id: u8) -> Option<&'static AxiomSchema> {
    axiom_schemas().iter().find(|s| s.id == id)
}

/// Finds the binding that instantiates `schema` to `f`, if any.
pub fn match_schema(f: &Formula, schema: &AxiomSchema) -> Option<Binding> {
    let mut binding = Binding::new();
    unify(&schema.pattern, f, &mut binding).then_some(binding)
}

fn unify(pattern: &Formula, f: &Formula, binding: &mut Binding) -> bool {
    use Formula::*;
    match (pattern, f) {
        (Var(x), _) => match binding.get(x) {
            Some(bound) => bound == f,
            None => {
                binding.insert(x.clone(), f.clone());
                true
            }
        },
        (Neg(p), Neg(g)) => unify(p, g, binding),
        (And(p1, p2), And(g1, g2))
        | (Or(p1, p2), Or(g1, g2))
        | (Implies(p1, p2), Implies(g1, g2))
        | (Iff(p1, p2), Iff(g1, g2)) => unify(p1, g1, binding) && unify(p2, g2, binding),
        _ => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Premise,
    /// An instance of schema `id`. Variables missing from `binding` are
    /// inferred by matching.
    Axiom {
        id: u8,
        binding: Binding,
    },
    /// Modus ponens from line `minor` (`α`) and line `major` (`α → β`),
    /// both 1-based.
    Mp {
        minor: usize,
        major: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Derivation {
    pub lines: Vec<Line>,
}

impl Derivation {
    pub fn push(&mut self, formula: Formula, justification: Justification) -> &mut Self {
        self.lines.push(Line {
            formula,
            justification,
        });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Reason {
    #[error("not a premise")]
    NotAPremise,
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("modus ponens shape mismatch: {0}")]
    MpShapeMismatch(String),
    #[error("forward reference to line {0}")]
    ForwardReference(usize),
    #[error("empty derivation")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct CheckError {
    pub line: usize,
    pub reason: Reason,
}

/// Verifies every line and returns the last formula as the theorem.
pub fn check_derivation(d: &Derivation, premises: &[Formula]) -> Result<Formula, CheckError> {
    for (idx, line) in d.lines.iter().enumerate() {
        let n = idx + 1;
        let fail = |reason| CheckError { line: n, reason };
        match &line.justification {
            Justification::Premise => {
                if !premises.contains(&line.formula) {
                    return Err(fail(Reason::NotAPremise));
                }
            }
            Justification::Axiom { id, binding } => {
                check_axiom(&line.formula, *id, binding).map_err(fail)?;
            }
            Justification::Mp { minor, major } => {
                for &r in [minor, major] {
                    if r == 0 || r >= n {
                        return Err(fail(Reason::ForwardReference(r)));
                    }
                }
                let alpha = &d.lines[minor - 1].formula;
                let imp = &d.lines[major - 1].formula;
                match imp {
                    Formula::Implies(ante, cons) => {
                        if ante.as_ref() != alpha {
                            return Err(fail(Reason::MpShapeMismatch(format!(
                                "antecedent of line {major} is `{ante}`, line {minor} is `{alpha}`"
                            ))));
                        }
                        if cons.as_ref() != &line.formula {
                            return Err(fail(Reason::MpShapeMismatch(format!(
                                "consequent of line {major} is `{cons}`, not `{}`",
                                line.formula
                            ))));
                        }
                    }
                    _ => {
                        return Err(fail(Reason::MpShapeMismatch(format!(
                            "line {major} is not an implication"
                        ))));
                    }
                }
            }
        }
    }
    d.lines.last().map(|l| l.formula.clone()).ok_or(CheckError {
        line: 0,
        reason: Reason::Empty,
    })
}

fn check_axiom(f: &Formula, id: u8, given: &Binding) -> Result<(), Reason> {
    let schema = axiom_schema(id).ok_or_else(|| {
        if id == MODUS_PONENS_ITEM {
            Reason::SchemaMismatch("item 3 is the modus ponens rule, use `mp`".into())
        } else {
            Reason::SchemaMismatch(format!("no axiom schema {id}"))
        }
    })?;
    let found = match_schema(f, schema).ok_or_else(|| {
        Reason::SchemaMismatch(format!("not an instance of axiom {id}: {}", schema.pattern))
    })?;
    for (var, value) in given {
        match found.get(var) {
            None => {
                return Err(Reason::SchemaMismatch(format!(
                    "axiom {id} has no schema variable `{var}`"
                )))
            }
            Some(actual) if actual != value => {
                return Err(Reason::SchemaMismatch(format!(
                    "`{var}` is bound to `{value}` but the line instantiates it with `{actual}`"
                )))
            }
            Some(_) => {}
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptErrorKind {
    #[error("{0}")]
    Formula(ParseError),
    #[error("{0}")]
    Syntax(String),
}

/// A malformed proof script; `line` counts text lines from 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("script line {line}: {kind}")]
pub struct ScriptError {
    pub line: usize,
    pub kind: ScriptErrorKind,
}

/// Parses the line-oriented proof script format:
///
/// ```text
/// 1. p ; premise
/// 2. p -> q ; premise
/// 3. q ; mp 1 2
/// 4. q -> (r -> q) ; ax 1 a=q b=r
/// ```
///
/// `#` starts a comment. Steps must be numbered 1, 2, 3, ... in order.
pub fn parse_script(text: &str) -> Result<Derivation, ScriptError> {
    let mut d = Derivation::default();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        let syntax = |msg: String| ScriptError {
            line: lineno,
            kind: ScriptErrorKind::Syntax(msg),
        };
        let formula_err = |e: ParseError| ScriptError {
            line: lineno,
            kind: ScriptErrorKind::Formula(e),
        };

        let (head, rule) = body
            .split_once(';')
            .ok_or_else(|| syntax("missing `;` before the justification".into()))?;
        let (num, formula_text) = head
            .split_once('.')
            .ok_or_else(|| syntax("expected `<n>.` at line start".into()))?;
        let n: usize = num
            .trim()
            .parse()
            .map_err(|_| syntax(format!("bad step number `{}`", num.trim())))?;
        if n != d.lines.len() + 1 {
            return Err(syntax(format!(
                "step numbered {n}, expected {}",
                d.lines.len() + 1
            )));
        }
        let formula = parse(formula_text).map_err(formula_err)?;

        let rule = rule.trim();
        let (keyword, rest) = rule.split_once(char::is_whitespace).unwrap_or((rule, ""));
        let justification = match keyword {
            "premise" => {
                if !rest.trim().is_empty() {
                    return Err(syntax("`premise` takes no arguments".into()));
                }
                Justification::Premise
            }
            "mp" => {
                let nums: Vec<&str> = rest.split_whitespace().collect();
                let [i, j] = nums.as_slice() else {
                    return Err(syntax("`mp` takes two line numbers".into()));
                };
                let i = i
                    .parse()
                    .map_err(|_| syntax(format!("bad line number `{i}`")))?;
                let j = j
                    .parse()
                    .map_err(|_| syntax(format!("bad line number `{j}`")))?;
                Justification::Mp { minor: i, major: j }
            }
            "ax" => {
                let rest = rest.trim_start();
                let (id, bindings) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let id: u8 = id
                    .parse()
                    .map_err(|_| syntax(format!("bad axiom id `{id}`")))?;
                let binding = parse_bindings(bindings).map_err(|e| match e {
                    BindingError::Syntax(m) => syntax(m),
                    BindingError::Formula(e) => formula_err(e),
                })?;
                Justification::Axiom { id, binding }
            }
            other => {
                return Err(syntax(format!(
                    "unknown justification `{other}` (expected premise, ax or mp)"
                )))
            }
        };
        d.push(formula, justification);
    }
    Ok(d)
}

enum BindingError {
    Syntax(String),
    Formula(ParseError),
}

/// Parses `a=p | q b=r`: each `=` is preceded by a schema variable name and
/// the replacement runs up to the next `name=`.
fn parse_bindings(text: &str) -> Result<Binding, BindingError> {
    let bytes = text.as_bytes();
    let mut heads = Vec::new();
    for (eq, _) in text.match_indices('=') {
        let mut end = eq;
        while end > 0 && bytes[end - 1].is_ascii_whitespace() {
            end -= 1;
        }
        let mut start = end;
        while start > 0 && (bytes[start - 1].is_ascii_alphanumeric() || bytes[start - 1] == b'_') {
            start -= 1;
        }
        if start == end || !bytes[start].is_ascii_alphabetic() {
            return Err(BindingError::Syntax(format!(
                "expected a schema variable before `=` at byte {eq}"
            )));
        }
        heads.push((start, text[start..end].to_string(), eq + 1));
    }
    if heads.is_empty() {
        if text.trim().is_empty() {
            return Ok(Binding::new());
        }
        return Err(BindingError::Syntax(format!(
            "expected `<var>=<formula>` bindings, found `{}`",
            text.trim()
        )));
    }
    if !text[..heads[0].0].trim().is_empty() {
        return Err(BindingError::Syntax(format!(
            "unexpected `{}` before bindings",
            text[..heads[0].0].trim()
        )));
    }
    let mut binding = Binding::new();
    for (k, (_, name, value_start)) in heads.iter().enumerate() {
        let value_end = heads.get(k + 1).map_or(text.len(), |h| h.0);
        let value = parse(&text[*value_start..value_end]).map_err(BindingError::Formula)?;
        if binding.insert(name.clone(), value).is_some() {
            return Err(BindingError::Syntax(format!("`{name}` bound twice")));
        }
    }
    Ok(binding)
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, line) in self.lines.iter().enumerate() {
            write!(f, "{}. {} ; ", i + 1, line.formula)?;
            match &line.justification {
                Justification::Premise => f.write_str("premise")?,
                Justification::Mp { minor, major } => write!(f, "mp {minor} {major}")?,
                Justification::Axiom { id, binding } => {
                    write!(f, "ax {id}")?;
                    for (k, v) in binding {
                        write!(f, " {k}={v}")?;
                    }
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
