//! Bivaluation semantics for C1 and the decision procedure built on it.
//!
//! A valuation assigns 0/1 to every member of a subformula-closed set. It is
//! admissible when it is the restriction of a bivaluation of the whole
//! language obeying the seven C1 rules:
//!
//! 1. `V(α)=0 ⟹ V(¬α)=1`
//! 2. `V(¬¬α)=1 ⟹ V(α)=1`
//! 3. `V(β₀)=V(α→β)=V(α→¬β)=1 ⟹ V(α)=0`
//! 4. `V(α→β)=1 ⟺ V(α)=0 or V(β)=1`
//! 5. `V(α∧β)=1 ⟺ V(α)=V(β)=1`
//! 6. `V(α∨β)=1 ⟺ V(α)=1 or V(β)=1`
//! 7. `V(α₀)=V(β₀)=1 ⟹ V((α∘β)₀)=1` for `∘ ∈ {∧, ∨, →}`
//!
//! Over the full language, rule 3 (instantiated with `α := β`) says a
//! well-behaved formula is never both true and false, and rule 7 then says
//! that a compound of two consistent formulas is consistent. Both are
//! checked in that saturated form, with any negation missing from the set
//! taken at its most permissive extension value. See [`admissible`].

mod admissible;
mod classical;
mod enumerate;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::formula::{Formula, IffMode};

pub use admissible::is_admissible;
pub use enumerate::Valuations;

/// Default cap on branching nodes (variables plus negations) in a closure.
pub const DEFAULT_BRANCH_BUDGET: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("valuation domain is not closed under subformulas: `{0}` is missing")]
    NotClosed(Formula),
    #[error("valuation assigns `{0}` twice")]
    Duplicate(Formula),
    #[error("valuation contains an unexpanded biconditional `{0}`")]
    UnexpandedIff(Formula),
    #[error("enumeration budget exceeded: {branching} branching nodes > cap {budget}")]
    BudgetExceeded { branching: usize, budget: usize },
    #[error("no formulas to evaluate")]
    Empty,
}

/// A 0/1 assignment over a finite set of formulas, in a fixed order.
#[derive(Clone, PartialEq, Eq)]
pub struct Valuation {
    entries: Vec<(Formula, bool)>,
    index: HashMap<Formula, usize>,
}

impl Valuation {
    pub fn new(entries: Vec<(Formula, bool)>) -> Result<Self, SemanticsError> {
        let mut index = HashMap::with_capacity(entries.len());
        for (i, (f, _)) in entries.iter().enumerate() {
            if index.insert(f.clone(), i).is_some() {
                return Err(SemanticsError::Duplicate(f.clone()));
            }
        }
        Ok(Valuation { entries, index })
    }

    pub fn get(&self, f: &Formula) -> Option<bool> {
        self.index.get(f).map(|&i| self.entries[i].1)
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.index.contains_key(f)
    }

    pub fn entries(&self) -> &[(Formula, bool)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The 0/1 values in domain order.
    pub fn bits(&self) -> Vec<bool> {
        self.entries.iter().map(|(_, b)| *b).collect()
    }
}

impl fmt::Debug for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(k, v)| (k.render(), u8::from(*v))))
            .finish()
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(k, v)| format!("V({k})={}", u8::from(*v)))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Serialize)]
struct Entry<'a> {
    formula: &'a Formula,
    value: u8,
}

impl Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.iter().map(|(formula, v)| Entry {
            formula,
            value: u8::from(*v),
        }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Valid,
    Invalid,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Valid => "valid",
            Status::Invalid => "invalid",
        })
    }
}

/// Outcome of a validity or entailment query. A countermodel is present
/// exactly when the status is `Invalid`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    countermodel: Option<Valuation>,
    pub branches_explored: u64,
}

impl Verdict {
    pub fn valid(branches_explored: u64) -> Self {
        Verdict {
            countermodel: None,
            branches_explored,
        }
    }

    pub fn invalid(countermodel: Valuation, branches_explored: u64) -> Self {
        Verdict {
            countermodel: Some(countermodel),
            branches_explored,
        }
    }

    pub fn status(&self) -> Status {
        if self.countermodel.is_some() {
            Status::Invalid
        } else {
            Status::Valid
        }
    }

    pub fn is_valid(&self) -> bool {
        self.countermodel.is_none()
    }

    pub fn countermodel(&self) -> Option<&Valuation> {
        self.countermodel.as_ref()
    }
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Verdict", 3)?;
        st.serialize_field("status", &self.status())?;
        st.serialize_field("countermodel", &self.countermodel)?;
        st.serialize_field("branches_explored", &self.branches_explored)?;
        st.end()
    }
}

/// Decision procedure settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct C1 {
    pub iff_mode: IffMode,
    pub branch_budget: usize,
}

impl Default for C1 {
    fn default() -> Self {
        C1 {
            iff_mode: IffMode::Conjunctive,
            branch_budget: DEFAULT_BRANCH_BUDGET,
        }
    }
}

impl C1 {
    pub fn with_budget(branch_budget: usize) -> Self {
        C1 {
            branch_budget,
            ..C1::default()
        }
    }

    fn expand(&self, fs: &[Formula]) -> Vec<Formula> {
        fs.iter().map(|f| f.expand_iff(self.iff_mode)).collect()
    }

    /// All admissible valuations over the subformula closure of `fs`, in a
    /// deterministic order.
    pub fn enumerate_valuations(&self, fs: &[Formula]) -> Result<Valuations, SemanticsError> {
        if fs.is_empty() {
            return Err(SemanticsError::Empty);
        }
        Valuations::new(&self.expand(fs), &[], self.branch_budget)
    }

    pub fn is_valid(&self, f: &Formula) -> Result<Verdict, SemanticsError> {
        self.entails(&[], f)
    }

    /// `premises ⊨ conclusion` in C1. The countermodel, if any, is the first
    /// admissible valuation (in enumeration order) that designates every
    /// premise and falsifies the conclusion.
    pub fn entails(
        &self,
        premises: &[Formula],
        conclusion: &Formula,
    ) -> Result<Verdict, SemanticsError> {
        let mut all = self.expand(premises);
        let goal = conclusion.expand_iff(self.iff_mode);
        all.push(goal.clone());
        let mut reqs: Vec<(Formula, bool)> = all[..all.len() - 1]
            .iter()
            .map(|p| (p.clone(), true))
            .collect();
        reqs.push((goal, false));
        let mut it = Valuations::new(&all, &reqs, self.branch_budget)?;
        let first = it.next();
        Ok(match first {
            Some(v) => Verdict::invalid(v, it.branches_explored()),
            None => Verdict::valid(it.branches_explored()),
        })
    }

    /// Two-valued truth-functional entailment (negation is classical).
    pub fn classical_entails(
        &self,
        premises: &[Formula],
        conclusion: &Formula,
    ) -> Result<Verdict, SemanticsError> {
        classical::entails(
            &self.expand(premises),
            &conclusion.expand_iff(self.iff_mode),
            self.branch_budget,
        )
    }
}

/// [`C1::enumerate_valuations`] with default settings.
pub fn enumerate_valuations(fs: &[Formula]) -> Result<Valuations, SemanticsError> {
    C1::default().enumerate_valuations(fs)
}

/// [`C1::is_valid`] with default settings.
pub fn is_valid(f: &Formula) -> Result<Verdict, SemanticsError> {
    C1::default().is_valid(f)
}

/// [`C1::entails`] with default settings.
pub fn entails(premises: &[Formula], conclusion: &Formula) -> Result<Verdict, SemanticsError> {
    C1::default().entails(premises, conclusion)
}

/// [`C1::classical_entails`] with default settings.
pub fn classical_entails(
    premises: &[Formula],
    conclusion: &Formula,
) -> Result<Verdict, SemanticsError> {
    C1::default().classical_entails(premises, conclusion)
}

#[cfg(test)]
mod tests;
