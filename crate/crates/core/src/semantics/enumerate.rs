//! Quasi-matrix style enumeration of admissible valuations.
//!
//! Nodes are assigned in order of increasing size, so when a negation `¬x`
//! is reached every formula its constraints mention (`x`, the components of
//! `x`, and their negations) already has a value. Connectives are forced,
//! `¬x` with `x` false is forced to 1, and only variables and negations of
//! true formulas branch.

use std::collections::HashMap;

use super::{SemanticsError, Valuation};
use crate::formula::{subformula_closure, Formula};

#[derive(Debug, Clone, Copy)]
enum Kind {
    Var,
    Neg(usize),
    And(usize, usize),
    Or(usize, usize),
    Implies(usize, usize),
}

struct Closure {
    formulas: Vec<Formula>,
    kinds: Vec<Kind>,
    /// Index of `¬f` when it is in the closure.
    neg_of: Vec<Option<usize>>,
    /// `f` has the shape `β ∧ ¬β`.
    self_contradiction: Vec<bool>,
    /// Assignment order.
    order: Vec<usize>,
}

impl Closure {
    fn build(fs: &[Formula]) -> Self {
        let formulas = subformula_closure(fs);
        let index: HashMap<&Formula, usize> =
            formulas.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let kinds: Vec<Kind> = formulas
            .iter()
            .map(|f| match f {
                Formula::Var(_) => Kind::Var,
                Formula::Neg(a) => Kind::Neg(index[a.as_ref()]),
                Formula::And(a, b) => Kind::And(index[a.as_ref()], index[b.as_ref()]),
                Formula::Or(a, b) => Kind::Or(index[a.as_ref()], index[b.as_ref()]),
                Formula::Implies(a, b) => Kind::Implies(index[a.as_ref()], index[b.as_ref()]),
                Formula::Iff(..) => panic!("biconditionals must be expanded before enumeration"),
            })
            .collect();
        let mut neg_of = vec![None; formulas.len()];
        for (i, k) in kinds.iter().enumerate() {
            if let Kind::Neg(c) = k {
                neg_of[*c] = Some(i);
            }
        }
        let self_contradiction = kinds
            .iter()
            .map(|k| match *k {
                Kind::And(l, r) => matches!(kinds[r], Kind::Neg(x) if x == l),
                _ => false,
            })
            .collect();
        let sizes: Vec<usize> = formulas.iter().map(Formula::node_count).collect();
        let mut order: Vec<usize> = (0..formulas.len()).collect();
        order.sort_by_key(|&i| (sizes[i], i));
        Closure {
            formulas,
            kinds,
            neg_of,
            self_contradiction,
            order,
        }
    }

    fn branching_nodes(&self) -> usize {
        self.kinds
            .iter()
            .filter(|k| matches!(k, Kind::Var | Kind::Neg(_)))
            .count()
    }
}

struct Frame {
    candidates: [bool; 2],
    len: usize,
    next: usize,
}

/// Lazy, deterministic stream of admissible valuations, optionally
/// restricted to those meeting fixed requirements on some formulas.
pub struct Valuations {
    closure: Closure,
    required: Vec<Option<bool>>,
    values: Vec<bool>,
    stack: Vec<Frame>,
    branches: u64,
    exhausted: bool,
}

impl Valuations {
    pub(crate) fn new(
        fs: &[Formula],
        requirements: &[(Formula, bool)],
        budget: usize,
    ) -> Result<Self, SemanticsError> {
        if fs.is_empty() {
            return Err(SemanticsError::Empty);
        }
        let closure = Closure::build(fs);
        let branching = closure.branching_nodes();
        if branching > budget {
            return Err(SemanticsError::BudgetExceeded { branching, budget });
        }
        let n = closure.formulas.len();
        let mut required = vec![None; n];
        let mut exhausted = false;
        for (f, want) in requirements {
            let i = closure
                .formulas
                .iter()
                .position(|g| g == f)
                .expect("requirement formulas belong to the closure");
            match required[i] {
                Some(prev) if prev != *want => exhausted = true,
                _ => required[i] = Some(*want),
            }
        }
        let mut it = Valuations {
            closure,
            required,
            values: vec![false; n],
            stack: Vec::with_capacity(n),
            branches: 0,
            exhausted,
        };
        if !it.exhausted {
            let first = it.frame_for(0);
            it.stack.push(first);
        }
        Ok(it)
    }

    /// Number of node assignments tried so far.
    pub fn branches_explored(&self) -> u64 {
        self.branches
    }

    /// The closure in output order.
    pub fn domain(&self) -> &[Formula] {
        &self.closure.formulas
    }

    fn frame_for(&self, pos: usize) -> Frame {
        let node = self.closure.order[pos];
        let mut frame = Frame {
            candidates: [false; 2],
            len: 0,
            next: 0,
        };
        for val in [false, true] {
            if self.required[node].is_some_and(|r| r != val) {
                continue;
            }
            if self.allowed(node, val) {
                frame.candidates[frame.len] = val;
                frame.len += 1;
            }
        }
        frame
    }

    fn allowed(&self, node: usize, val: bool) -> bool {
        let v = &self.values;
        match self.closure.kinds[node] {
            Kind::Var => true,
            Kind::And(a, b) => val == (v[a] && v[b]),
            Kind::Or(a, b) => val == (v[a] || v[b]),
            Kind::Implies(a, b) => val == (!v[a] || v[b]),
            Kind::Neg(c) => {
                if !v[c] {
                    // forced to 1; rule 2 then holds since ¬g = 0 means g = 1
                    return val;
                }
                if !val {
                    return true;
                }
                match self.closure.kinds[c] {
                    Kind::Neg(g) => v[g],
                    Kind::And(..) if self.closure.self_contradiction[c] => false,
                    Kind::And(x, y) | Kind::Or(x, y) | Kind::Implies(x, y) => {
                        self.inconsistent(x) || self.inconsistent(y)
                    }
                    Kind::Var => true,
                }
            }
        }
    }

    fn inconsistent(&self, z: usize) -> bool {
        if !self.values[z] {
            return false;
        }
        if let Some(nz) = self.closure.neg_of[z] {
            return self.values[nz];
        }
        match self.closure.kinds[z] {
            Kind::Var => true,
            Kind::Neg(g) => self.values[g],
            Kind::And(..) if self.closure.self_contradiction[z] => false,
            Kind::And(x, y) | Kind::Or(x, y) | Kind::Implies(x, y) => {
                self.inconsistent(x) || self.inconsistent(y)
            }
        }
    }

    fn snapshot(&self) -> Valuation {
        let entries = self
            .closure
            .formulas
            .iter()
            .cloned()
            .zip(self.values.iter().copied())
            .collect();
        Valuation::new(entries).expect("closure has no duplicates")
    }
}

impl Iterator for Valuations {
    type Item = Valuation;

    fn next(&mut self) -> Option<Valuation> {
        if self.exhausted {
            return None;
        }
        let n = self.closure.order.len();
        loop {
            let depth = self.stack.len();
            let Some(top) = self.stack.last_mut() else {
                self.exhausted = true;
                return None;
            };
            if top.next >= top.len {
                self.stack.pop();
                continue;
            }
            let val = top.candidates[top.next];
            top.next += 1;
            let node = self.closure.order[depth - 1];
            self.values[node] = val;
            self.branches += 1;
            if depth == n {
                return Some(self.snapshot());
            }
            let frame = self.frame_for(depth);
            self.stack.push(frame);
        }
    }
}
