//! Abstract syntax of C1 propositions and the structural operations over it.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A C1 proposition.
///
/// `Iff` is kept as its own node so that text round-trips, but the semantic
/// and proof layers only ever see it through [`Formula::expand_iff`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

/// How `a <-> b` unfolds into the primitive connectives.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IffMode {
    /// `(a -> b) & (b -> a)`
    #[default]
    Conjunctive,
    /// `(a -> b) | (b -> a)`, the literal textbook reading.
    Disjunctive,
}

impl std::str::FromStr for IffMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "conjunctive" => Ok(IffMode::Conjunctive),
            "disjunctive" => Ok(IffMode::Disjunctive),
            other => Err(format!(
                "unknown iff mode `{other}` (expected conjunctive|disjunctive)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unbound schema variable `{0}`")]
pub struct UnboundVariable(pub String);

/// Schema variable name to replacement formula.
pub type Binding = BTreeMap<String, Formula>;

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Formula, r: Formula) -> Self {
        Formula::Iff(Box::new(l), Box::new(r))
    }

    /// Parses a formula; shorthand for [`crate::parse::parse`].
    pub fn parse(text: &str) -> Result<Self, crate::parse::ParseError> {
        crate::parse::parse(text)
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Formula::Var(_))
    }

    /// Direct children, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Var(_) => vec![],
            Formula::Neg(a) => vec![a],
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                vec![a, b]
            }
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children()
            .into_iter()
            .map(Formula::node_count)
            .sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self
            .children()
            .into_iter()
            .map(Formula::depth)
            .max()
            .unwrap_or(0)
    }

    /// Variable names in first-occurrence order.
    pub fn variables(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        self.collect_vars(&mut seen, &mut out);
        out
    }

    fn collect_vars(&self, seen: &mut BTreeSet<String>, out: &mut Vec<String>) {
        match self {
            Formula::Var(name) => {
                if seen.insert(name.clone()) {
                    out.push(name.clone());
                }
            }
            _ => {
                for c in self.children() {
                    c.collect_vars(seen, out);
                }
            }
        }
    }

    pub fn contains_var(&self, name: &str) -> bool {
        match self {
            Formula::Var(v) => v == name,
            _ => self.children().into_iter().any(|c| c.contains_var(name)),
        }
    }

    pub fn contains_iff(&self) -> bool {
        match self {
            Formula::Iff(..) => true,
            _ => self.children().into_iter().any(Formula::contains_iff),
        }
    }

    /// `α₀ = ¬(α ∧ ¬α)`: the well-behavedness marker of `self`.
    pub fn well_behaved(&self) -> Formula {
        Formula::not(Formula::and(self.clone(), Formula::not(self.clone())))
    }

    /// `¬*α = ¬α ∧ α₀`, the classical (explosive) negation definable in C1.
    pub fn strong_negation(&self) -> Formula {
        Formula::and(Formula::not(self.clone()), self.well_behaved())
    }

    /// If `self` has the shape `¬(β ∧ ¬β)`, returns `β`.
    pub fn as_well_behaved(&self) -> Option<&Formula> {
        match self {
            Formula::Neg(inner) => match inner.as_ref() {
                Formula::And(l, r) => match r.as_ref() {
                    Formula::Neg(rr) if rr == l => Some(l),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }

    /// Deterministic post-order listing of distinct subformulas; `self` is last.
    pub fn subformulas(&self) -> Vec<Formula> {
        subformula_closure(std::slice::from_ref(self))
    }

    /// Uniform replacement of variables by formulas.
    pub fn substitute(&self, binding: &Binding) -> Result<Formula, UnboundVariable> {
        Ok(match self {
            Formula::Var(name) => binding
                .get(name)
                .cloned()
                .ok_or_else(|| UnboundVariable(name.clone()))?,
            Formula::Neg(a) => Formula::not(a.substitute(binding)?),
            Formula::And(a, b) => Formula::and(a.substitute(binding)?, b.substitute(binding)?),
            Formula::Or(a, b) => Formula::or(a.substitute(binding)?, b.substitute(binding)?),
            Formula::Implies(a, b) => {
                Formula::implies(a.substitute(binding)?, b.substitute(binding)?)
            }
            Formula::Iff(a, b) => Formula::iff(a.substitute(binding)?, b.substitute(binding)?),
        })
    }

    /// Rewrites every `↔` into primitive connectives according to `mode`.
    pub fn expand_iff(&self, mode: IffMode) -> Formula {
        match self {
            Formula::Var(_) => self.clone(),
            Formula::Neg(a) => Formula::not(a.expand_iff(mode)),
            Formula::And(a, b) => Formula::and(a.expand_iff(mode), b.expand_iff(mode)),
            Formula::Or(a, b) => Formula::or(a.expand_iff(mode), b.expand_iff(mode)),
            Formula::Implies(a, b) => Formula::implies(a.expand_iff(mode), b.expand_iff(mode)),
            Formula::Iff(a, b) => {
                let (a, b) = (a.expand_iff(mode), b.expand_iff(mode));
                let fwd = Formula::implies(a.clone(), b.clone());
                let bwd = Formula::implies(b, a);
                match mode {
                    IffMode::Conjunctive => Formula::and(fwd, bwd),
                    IffMode::Disjunctive => Formula::or(fwd, bwd),
                }
            }
        }
    }

    /// Minimal-parenthesis ASCII rendering.
    pub fn render(&self) -> String {
        self.to_string()
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Neg(_) => 5,
            Formula::Var(_) => 6,
        }
    }
}

/// Post-order, duplicate-free listing of all subformulas of `fs`, taken in
/// the order the formulas are given.
pub fn subformula_closure(fs: &[Formula]) -> Vec<Formula> {
    fn walk(f: &Formula, seen: &mut HashSet<Formula>, out: &mut Vec<Formula>) {
        if seen.contains(f) {
            return;
        }
        for c in f.children() {
            walk(c, seen, out);
        }
        seen.insert(f.clone());
        out.push(f.clone());
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for f in fs {
        walk(f, &mut seen, &mut out);
    }
    out
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // (left needs parens when prec < threshold, right likewise)
        fn child(f: &mut fmt::Formatter<'_>, c: &Formula, min_prec: u8) -> fmt::Result {
            if c.precedence() < min_prec {
                write!(f, "({c})")
            } else {
                write!(f, "{c}")
            }
        }
        let p = self.precedence();
        let (op, l, r, right_assoc) = match self {
            Formula::Var(name) => return f.write_str(name),
            Formula::Neg(a) => {
                f.write_str("~")?;
                return child(f, a, p);
            }
            Formula::And(l, r) => ("&", l, r, false),
            Formula::Or(l, r) => ("|", l, r, false),
            Formula::Implies(l, r) => ("->", l, r, true),
            Formula::Iff(l, r) => ("<->", l, r, true),
        };
        if right_assoc {
            child(f, l, p + 1)?;
            write!(f, " {op} ")?;
            child(f, r, p)
        } else {
            child(f, l, p)?;
            write!(f, " {op} ")?;
            child(f, r, p + 1)
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = crate::parse::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::parse::parse(s)
    }
}

impl Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        crate::parse::parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    #[test]
    fn well_behaved_shapes() {
        assert_eq!(f("p").well_behaved(), f("~(p & ~p)"));
        assert_eq!(f("p | q").well_behaved(), f("~((p | q) & ~(p | q))"));
        let p0 = f("~(p & ~p)");
        assert_eq!(
            f("p").well_behaved().well_behaved(),
            Formula::not(Formula::and(p0.clone(), Formula::not(p0)))
        );
    }

    #[test]
    fn strong_negation_shapes() {
        assert_eq!(f("p").strong_negation(), f("~p & ~(p & ~p)"));
        assert_eq!(f("~p").strong_negation(), f("~~p & ~(~p & ~~p)"));
        assert_eq!(
            f("q | r").strong_negation(),
            f("~(q | r) & ~((q | r) & ~(q | r))")
        );
    }

    #[test]
    fn well_behaved_node_count() {
        for s in ["p", "p -> q", "~(a & b) | c", "p <-> q"] {
            let a = f(s);
            assert_eq!(a.well_behaved().node_count(), 2 * a.node_count() + 3);
            assert_eq!(a.strong_negation().node_count(), 3 * a.node_count() + 5);
        }
        assert!(!f("p -> q").well_behaved().contains_iff());
    }

    #[test]
    fn as_well_behaved_recognizes_marker() {
        let a = f("p -> q");
        assert_eq!(a.well_behaved().as_well_behaved(), Some(&a));
        assert_eq!(f("~(p & ~q)").as_well_behaved(), None);
    }

    #[test]
    fn subformula_listing() {
        assert_eq!(
            f("p & ~p").subformulas(),
            vec![f("p"), f("~p"), f("p & ~p")]
        );
        assert_eq!(f("p").subformulas(), vec![f("p")]);
        assert_eq!(
            f("(p -> q) | p").subformulas(),
            vec![f("p"), f("q"), f("p -> q"), f("(p -> q) | p")]
        );
    }

    #[test]
    fn substitution() {
        let b: Binding = [("a".to_string(), f("p | q")), ("b".to_string(), f("r"))]
            .into_iter()
            .collect();
        assert_eq!(
            f("a -> (b -> a)").substitute(&b).unwrap(),
            f("(p | q) -> (r -> (p | q))")
        );
        let only_a: Binding = [("a".to_string(), f("p"))].into_iter().collect();
        assert_eq!(f("a").substitute(&only_a).unwrap(), f("p"));
        assert_eq!(
            f("a & b").substitute(&only_a),
            Err(UnboundVariable("b".into()))
        );
    }

    #[test]
    fn iff_expansion_modes() {
        let e = f("p <-> q");
        assert_eq!(e.expand_iff(IffMode::Conjunctive), f("(p -> q) & (q -> p)"));
        assert_eq!(e.expand_iff(IffMode::Disjunctive), f("(p -> q) | (q -> p)"));
    }
}
