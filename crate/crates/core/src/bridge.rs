//! Ties CHSH outcomes to C1 verdicts: superposition as a conjunction of
//! contradictory state claims, locality versus non-locality as `γ` and `¬γ`,
//! and machine-checked witnesses that neither explodes.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::formula::Formula;
use crate::quantum::ChshResult;
use crate::scalar::Real;
use crate::semantics::{is_admissible, SemanticsError, Valuation, Verdict, C1};

/// Fresh variable used for non-explosion checks.
pub const FRESH: &str = "eta";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("`{0}` occurs in the formula and is not fresh")]
    NotFresh(String),
    #[error("`{0}` is unsatisfiable in C1, so explosion from it is vacuous")]
    Unsatisfiable(Formula),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// `¬a1 ∧ a1 ∧ … ∧ ¬an ∧ an` (left-nested).
///
/// # Panics
///
/// If `n_states` is zero.
pub fn superposition_formula(n_states: usize) -> Formula {
    assert!(n_states >= 1, "superposition needs at least one state");
    (1..=n_states)
        .flat_map(|i| {
            let a = Formula::var(format!("a{i}"));
            [Formula::not(a.clone()), a]
        })
        .reduce(Formula::and)
        .expect("non-empty")
}

/// An admissible valuation making `f` true and `fresh` false, i.e. a
/// witness that `f ⊭ fresh`.
pub fn non_explosion_certificate(
    f: &Formula,
    fresh: &str,
    c1: &C1,
) -> Result<Valuation, BridgeError> {
    if f.contains_var(fresh) {
        return Err(BridgeError::NotFresh(fresh.to_string()));
    }
    let verdict = c1.entails(std::slice::from_ref(f), &Formula::var(fresh))?;
    let cm = verdict
        .countermodel()
        .cloned()
        .ok_or_else(|| BridgeError::Unsatisfiable(f.clone()))?;
    debug_assert!(is_admissible(&cm)?);
    Ok(cm)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `S ≤ 2`: no evidence of non-locality.
    Classical,
    /// `S > 2`: both locality and its negation are asserted.
    NonLocal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Proposition {
    pub name: String,
    pub formula: Formula,
    pub reading: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QueryVerdict {
    pub query: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InconsistencyReport {
    pub s_value: f64,
    pub degree: f64,
    pub regime: Regime,
    pub propositions: Vec<Proposition>,
    /// The theory `T`: atoms `β₁`, `β₂` and their bridge implications.
    pub theory: Vec<Formula>,
    /// What the theory asserts about locality.
    pub asserted: Vec<Formula>,
    pub verdicts: Vec<QueryVerdict>,
}

fn set_text(fs: &[Formula]) -> String {
    let parts: Vec<String> = fs.iter().map(Formula::render).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Builds the locality report for one CHSH outcome.
pub fn locality_report<T: Real>(
    result: &ChshResult<T>,
    c1: &C1,
) -> Result<InconsistencyReport, BridgeError> {
    let s_value = result.s_value.to_f64().unwrap_or(f64::NAN);
    let degree = result.degree.to_f64().unwrap_or(f64::NAN);
    let regime = if s_value > 2.0 {
        Regime::NonLocal
    } else {
        Regime::Classical
    };

    let beta1 = Formula::var("beta1");
    let beta2 = Formula::var("beta2");
    let gamma = Formula::var("gamma");
    let not_gamma = Formula::not(gamma.clone());
    let eta = Formula::var(FRESH);

    let mut propositions = vec![
        Proposition {
            name: "beta1".into(),
            formula: beta1.clone(),
            reading: "locality: a system is influenced by its surroundings at most at light speed"
                .into(),
        },
        Proposition {
            name: "gamma".into(),
            formula: gamma.clone(),
            reading: "locality is established".into(),
        },
    ];
    let mut theory = vec![beta1.clone(), Formula::implies(beta1, gamma.clone())];
    let mut asserted = vec![gamma.clone()];
    if regime == Regime::NonLocal {
        propositions.insert(
            1,
            Proposition {
                name: "beta2".into(),
                formula: beta2.clone(),
                reading: "entangled partners are correlated instantaneously".into(),
            },
        );
        propositions.push(Proposition {
            name: "not_gamma".into(),
            formula: not_gamma.clone(),
            reading: "locality is not established (non-locality)".into(),
        });
        theory.insert(1, beta2.clone());
        theory.push(Formula::implies(beta2, not_gamma.clone()));
        asserted.push(not_gamma.clone());
    }

    let mut verdicts = Vec::new();
    let mut run = |premises: &[Formula], conclusion: &Formula| -> Result<(), BridgeError> {
        let verdict = c1.entails(premises, conclusion)?;
        verdicts.push(QueryVerdict {
            query: format!("{} |= {}", set_text(premises), conclusion),
            verdict,
        });
        Ok(())
    };
    run(&theory, &gamma)?;
    if regime == Regime::NonLocal {
        run(&theory, &not_gamma)?;
    }
    run(&theory, &eta)?;
    run(&asserted, &eta)?;
    if regime == Regime::NonLocal {
        run(&asserted, &Formula::and(gamma, not_gamma))?;
    }

    Ok(InconsistencyReport {
        s_value,
        degree,
        regime,
        propositions,
        theory,
        asserted,
        verdicts,
    })
}

impl InconsistencyReport {
    /// Whether every non-explosion query (conclusion `eta`) came out invalid.
    pub fn non_explosive(&self) -> bool {
        self.verdicts
            .iter()
            .filter(|q| q.query.ends_with(&format!("|= {FRESH}")))
            .all(|q| !q.verdict.is_valid())
    }
}

impl fmt::Display for InconsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "S = {:.9}", self.s_value)?;
        writeln!(f, "degree = {:.6}", self.degree)?;
        let regime = match self.regime {
            Regime::Classical => "classical (S <= 2, no evidence of non-locality)",
            Regime::NonLocal => "non-local (S > 2)",
        };
        writeln!(f, "regime: {regime}")?;
        for p in &self.propositions {
            writeln!(f, "  {} := {}  -- {}", p.name, p.formula, p.reading)?;
        }
        writeln!(f, "theory: {}", set_text(&self.theory))?;
        writeln!(f, "asserted: {}", set_text(&self.asserted))?;
        for q in &self.verdicts {
            match q.verdict.countermodel() {
                None => writeln!(f, "{}: valid", q.query)?,
                Some(cm) => writeln!(f, "{}: invalid; countermodel {cm}", q.query)?,
            }
        }
        Ok(())
    }
}
