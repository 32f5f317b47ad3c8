use super::{SemanticsError, Valuation, Verdict};
use crate::formula::{subformula_closure, Formula};

fn eval(f: &Formula, assignment: &dyn Fn(&str) -> bool) -> bool {
    match f {
        Formula::Var(name) => assignment(name),
        Formula::Neg(a) => !eval(a, assignment),
        Formula::And(a, b) => eval(a, assignment) && eval(b, assignment),
        Formula::Or(a, b) => eval(a, assignment) || eval(b, assignment),
        Formula::Implies(a, b) => !eval(a, assignment) || eval(b, assignment),
        Formula::Iff(a, b) => eval(a, assignment) == eval(b, assignment),
    }
}

/// Truth-table entailment over the variables of the query. Assignments are
/// tried in binary counting order with the first variable as the high bit.
pub(super) fn entails(
    premises: &[Formula],
    conclusion: &Formula,
    budget: usize,
) -> Result<Verdict, SemanticsError> {
    let mut all: Vec<Formula> = premises.to_vec();
    all.push(conclusion.clone());
    let domain = subformula_closure(&all);
    let vars: Vec<&str> = domain
        .iter()
        .filter_map(|f| match f {
            Formula::Var(n) => Some(n.as_str()),
            _ => None,
        })
        .collect();
    if vars.len() > budget {
        return Err(SemanticsError::BudgetExceeded {
            branching: vars.len(),
            budget,
        });
    }
    let k = vars.len();
    let mut tried = 0u64;
    for bits in 0u64..(1u64 << k) {
        tried += 1;
        let lookup = |name: &str| {
            let i = vars
                .iter()
                .position(|v| *v == name)
                .expect("known variable");
            (bits >> (k - 1 - i)) & 1 == 1
        };
        if premises.iter().all(|p| eval(p, &lookup)) && !eval(conclusion, &lookup) {
            let entries = domain
                .iter()
                .map(|f| (f.clone(), eval(f, &lookup)))
                .collect();
            let v = Valuation::new(entries).expect("closure has no duplicates");
            return Ok(Verdict::invalid(v, tried));
        }
    }
    Ok(Verdict::valid(tried))
}
