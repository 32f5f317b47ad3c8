//! Three-valued reading of superposed states: values `F < B < T` with `B`
//! ("both") designated alongside `T`, connectives after the Logic of
//! Paradox, and the angle-to-truth-degree mapping.

use std::fmt;

use serde::Serialize;

use crate::quantum::{QuantumError, Qubit, TwoQubitState};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TruthValue3 {
    F,
    B,
    T,
}

impl TruthValue3 {
    pub const ALL: [TruthValue3; 3] = [TruthValue3::T, TruthValue3::B, TruthValue3::F];

    pub fn is_designated(self) -> bool {
        self != TruthValue3::F
    }
}

impl fmt::Display for TruthValue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue3::T => "T",
            TruthValue3::B => "B",
            TruthValue3::F => "F",
        })
    }
}

pub fn neg3(a: TruthValue3) -> TruthValue3 {
    match a {
        TruthValue3::T => TruthValue3::F,
        TruthValue3::B => TruthValue3::B,
        TruthValue3::F => TruthValue3::T,
    }
}

pub fn and3(a: TruthValue3, b: TruthValue3) -> TruthValue3 {
    a.min(b)
}

pub fn or3(a: TruthValue3, b: TruthValue3) -> TruthValue3 {
    a.max(b)
}

pub fn implies3(a: TruthValue3, b: TruthValue3) -> TruthValue3 {
    or3(neg3(a), b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Connective3 {
    Not,
    And,
    Or,
    Implies,
}

impl Connective3 {
    pub const ALL: [Connective3; 4] = [
        Connective3::Not,
        Connective3::And,
        Connective3::Or,
        Connective3::Implies,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Connective3::Not => "not",
            Connective3::And => "and",
            Connective3::Or => "or",
            Connective3::Implies => "implies",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub connective: Connective3,
    pub a: TruthValue3,
    pub b: Option<TruthValue3>,
    pub value: TruthValue3,
}

/// Full table of one connective: 3 rows for negation, 9 for binary ones,
/// in `T, B, F` order.
pub fn truth_table(conn: Connective3) -> Vec<TableRow> {
    let binary = |op: fn(TruthValue3, TruthValue3) -> TruthValue3| {
        TruthValue3::ALL
            .iter()
            .flat_map(|&a| {
                TruthValue3::ALL.iter().map(move |&b| TableRow {
                    connective: conn,
                    a,
                    b: Some(b),
                    value: op(a, b),
                })
            })
            .collect()
    };
    match conn {
        Connective3::Not => TruthValue3::ALL
            .iter()
            .map(|&a| TableRow {
                connective: conn,
                a,
                b: None,
                value: neg3(a),
            })
            .collect(),
        Connective3::And => binary(and3),
        Connective3::Or => binary(or3),
        Connective3::Implies => binary(implies3),
    }
}

/// Truth values of `p: "the qubit is in |0⟩"` and `q: "the qubit is in |1⟩"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuperpositionReading {
    pub in_zero: TruthValue3,
    pub in_one: TruthValue3,
}

impl SuperpositionReading {
    pub fn as_pairs(&self) -> [(&'static str, TruthValue3); 2] {
        [("p", self.in_zero), ("q", self.in_one)]
    }
}

/// Reads the computational-basis weights of one qubit: a proposition is
/// `T` when the opposite weight vanishes, `F` when its own does, else `B`.
pub fn assign_superposition<T: Real>(
    state: &TwoQubitState<T>,
    qubit: Qubit,
) -> Result<SuperpositionReading, QuantumError> {
    let n = state.norm_sqr();
    if (n - T::one()).abs() > T::tolerance() {
        return Err(QuantumError::NotNormalized(n.to_f64().unwrap_or(f64::NAN)));
    }
    let (w0, w1) = state.reduced_weights(qubit);
    let tol = T::tolerance();
    Ok(if w1 <= tol {
        SuperpositionReading {
            in_zero: TruthValue3::T,
            in_one: TruthValue3::F,
        }
    } else if w0 <= tol {
        SuperpositionReading {
            in_zero: TruthValue3::F,
            in_one: TruthValue3::T,
        }
    } else {
        SuperpositionReading {
            in_zero: TruthValue3::B,
            in_one: TruthValue3::B,
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TruthDegree<T> {
    pub degree_true: T,
    pub degree_false: T,
}

/// `degree_true = cos²(θ/2)`, the overlap of the rotated state with `|0⟩`.
pub fn angle_to_truth_degree<T: Real>(theta: T) -> TruthDegree<T> {
    let (s, c) = (theta / T::lit(2.0)).sin_cos();
    TruthDegree {
        degree_true: c * c,
        degree_false: s * s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::bell_phi_plus;
    use num_complex::Complex;
    use TruthValue3::*;

    #[test]
    fn connective_examples() {
        assert_eq!(and3(B, B), B);
        assert_eq!(or3(B, B), B);
        assert_eq!(neg3(T), F);
        assert_eq!(neg3(B), B);
        assert_eq!(implies3(T, F), F);
        assert_eq!(implies3(B, F), B);
    }

    #[test]
    fn de_morgan() {
        for a in TruthValue3::ALL {
            for b in TruthValue3::ALL {
                assert_eq!(neg3(and3(a, b)), or3(neg3(a), neg3(b)));
                assert_eq!(neg3(or3(a, b)), and3(neg3(a), neg3(b)));
            }
        }
    }

    #[test]
    fn glut_does_not_explode() {
        // p = B designates p and ~p; an unrelated q = F stays undesignated
        let p = B;
        assert!(p.is_designated() && neg3(p).is_designated());
        assert!(and3(p, neg3(p)).is_designated());
        let q = F;
        let premises = [p, neg3(p), and3(p, neg3(p))];
        assert!(premises.iter().all(|v| v.is_designated()) && !q.is_designated());
    }

    #[test]
    fn table_sizes() {
        assert_eq!(truth_table(Connective3::Not).len(), 3);
        for c in [Connective3::And, Connective3::Or, Connective3::Implies] {
            assert_eq!(truth_table(c).len(), 9);
        }
    }

    #[test]
    fn superposition_readings() {
        let phi = bell_phi_plus::<f64>();
        let r = assign_superposition(&phi, Qubit::A).unwrap();
        assert_eq!((r.in_zero, r.in_one), (B, B));
        let zz = TwoQubitState::<f64>::basis(false, false);
        let r = assign_superposition(&zz, Qubit::A).unwrap();
        assert_eq!((r.in_zero, r.in_one), (T, F));
        let oo = TwoQubitState::<f64>::basis(true, true);
        let r = assign_superposition(&oo, Qubit::B).unwrap();
        assert_eq!((r.in_zero, r.in_one), (F, T));
        // |01⟩: A is in |0⟩, B in |1⟩
        let s = TwoQubitState::<f64>::basis(false, true);
        assert_eq!(assign_superposition(&s, Qubit::A).unwrap().in_zero, T);
        assert_eq!(assign_superposition(&s, Qubit::B).unwrap().in_one, T);
    }

    #[test]
    fn superposition_requires_normalized_state() {
        let one = Complex::new(1.0, 0.0);
        let z = Complex::new(0.0, 0.0);
        // a product state with unequal weights is still B/B
        let s = TwoQubitState::normalized([one, z, one * 0.1, z]).unwrap();
        let r = assign_superposition(&s, Qubit::A).unwrap();
        assert_eq!((r.in_zero, r.in_one), (B, B));
        assert_eq!(assign_superposition(&s, Qubit::B).unwrap().in_zero, T);
    }

    #[test]
    fn degree_examples() {
        let d = angle_to_truth_degree(0.0f64);
        assert_eq!((d.degree_true, d.degree_false), (1.0, 0.0));
        let d = angle_to_truth_degree(std::f64::consts::PI);
        assert!(d.degree_true.abs() < 1e-15 && (d.degree_false - 1.0).abs() < 1e-15);
        let d = angle_to_truth_degree(22.5f64.to_radians());
        assert!((d.degree_true - 0.9619).abs() < 1e-4);
        assert!((d.degree_false - 0.0381).abs() < 1e-4);
        let period = angle_to_truth_degree(0.7 + 2.0 * std::f64::consts::PI);
        assert!((period.degree_true - angle_to_truth_degree(0.7).degree_true).abs() < 1e-12);
    }

    #[test]
    fn degree_is_monotone_and_sums_to_one() {
        let mut prev = 2.0;
        for k in 0..=200 {
            let d = angle_to_truth_degree(std::f64::consts::PI * k as f64 / 200.0);
            assert!(d.degree_true <= prev);
            assert!((d.degree_true + d.degree_false - 1.0).abs() < 1e-12);
            prev = d.degree_true;
        }
    }
}
