use super::{SemanticsError, Valuation};
use crate::formula::Formula;

/// Checks a valuation rule by rule.
///
/// The domain must be closed under subformulas and free of `↔`.
pub fn is_admissible(v: &Valuation) -> Result<bool, SemanticsError> {
    for (f, _) in v.entries() {
        if let Formula::Iff(..) = f {
            return Err(SemanticsError::UnexpandedIff(f.clone()));
        }
        for c in f.children() {
            if !v.contains(c) {
                return Err(SemanticsError::NotClosed(c.clone()));
            }
        }
    }
    let val = |f: &Formula| v.get(f).expect("closed domain");
    let check = Checker { v };

    for (f, value) in v.entries() {
        let value = *value;
        let ok = match f {
            Formula::Var(_) => true,
            // rule 4
            Formula::Implies(a, b) => value == (!val(a) || val(b)),
            // rule 5
            Formula::And(a, b) => value == (val(a) && val(b)),
            // rule 6
            Formula::Or(a, b) => value == (val(a) || val(b)),
            Formula::Neg(a) => {
                let a_val = val(a);
                // rule 1
                let r1 = a_val || value;
                // rule 2
                let r2 = match a.as_ref() {
                    Formula::Neg(inner) => !value || val(inner),
                    _ => true,
                };
                // rule 3, saturated: β₀ true forbids β and ¬β both true
                let r3 = match f.as_well_behaved() {
                    Some(beta) => !(value && a_val && val(beta)),
                    None => true,
                };
                // rule 7, saturated: a true compound whose negation is also
                // true needs an inconsistent component
                let r7 = match a.as_ref() {
                    Formula::And(x, y) | Formula::Or(x, y) | Formula::Implies(x, y) => {
                        !(value && a_val) || check.inconsistent(x) || check.inconsistent(y)
                    }
                    _ => true,
                };
                r1 && r2 && r3 && r7
            }
            Formula::Iff(..) => unreachable!(),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Checker<'a> {
    v: &'a Valuation,
}

impl Checker<'_> {
    /// Whether `z` is (or can be made, outside the domain) both true and
    /// false.
    fn inconsistent(&self, z: &Formula) -> bool {
        if !self.v.get(z).expect("closed domain") {
            return false;
        }
        let neg = Formula::not(z.clone());
        match self.v.get(&neg) {
            Some(b) => b,
            None => self.negation_may_hold(z),
        }
    }

    /// For a true `z` whose negation lies outside the domain: can `¬z` be
    /// set to 1 in some admissible extension?
    fn negation_may_hold(&self, z: &Formula) -> bool {
        match z {
            Formula::Var(_) => true,
            Formula::Neg(inner) => self.v.get(inner).expect("closed domain"),
            Formula::And(l, r) if **r == Formula::not((**l).clone()) => false,
            Formula::And(x, y) | Formula::Or(x, y) | Formula::Implies(x, y) => {
                self.inconsistent(x) || self.inconsistent(y)
            }
            Formula::Iff(..) => unreachable!(),
        }
    }
}
