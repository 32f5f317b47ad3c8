use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::formula::subformula_closure;

fn f(s: &str) -> Formula {
    Formula::parse(s).unwrap()
}

fn val(pairs: &[(&str, bool)]) -> Valuation {
    Valuation::new(pairs.iter().map(|(s, b)| (f(s), *b)).collect()).unwrap()
}

/// All 2^n assignments over the closure, filtered by `is_admissible`.
fn brute_force(fs: &[Formula]) -> BTreeSet<Vec<bool>> {
    let domain = subformula_closure(fs);
    let n = domain.len();
    assert!(n <= 16);
    let mut out = BTreeSet::new();
    for bits in 0u32..(1 << n) {
        let entries = domain
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), (bits >> i) & 1 == 1))
            .collect();
        let v = Valuation::new(entries).unwrap();
        if is_admissible(&v).unwrap() {
            out.insert(v.bits());
        }
    }
    out
}

fn enumerated(fs: &[Formula]) -> Vec<Vec<bool>> {
    enumerate_valuations(fs)
        .unwrap()
        .map(|v| v.bits())
        .collect()
}

#[test]
fn admissibility_examples() {
    assert!(is_admissible(&val(&[("p", true), ("~p", true)])).unwrap());
    assert!(!is_admissible(&val(&[("p", false), ("~p", false)])).unwrap());
    assert!(is_admissible(&val(&[("p", true), ("~p", true), ("~~p", true)])).unwrap());
    // rule 2: ~~p true with p false
    assert!(!is_admissible(&val(&[("p", false), ("~p", true), ("~~p", true)])).unwrap());
}

#[test]
fn admissibility_errors() {
    assert_eq!(
        is_admissible(&val(&[("~p", true)])),
        Err(SemanticsError::NotClosed(f("p")))
    );
    assert!(matches!(
        is_admissible(&val(&[("p", true), ("q", true), ("p <-> q", true)])),
        Err(SemanticsError::UnexpandedIff(_))
    ));
    assert!(matches!(
        Valuation::new(vec![(f("p"), true), (f("p"), false)]),
        Err(SemanticsError::Duplicate(_))
    ));
}

#[test]
fn well_behaved_formula_is_not_contradictory() {
    // p, ~p, p & ~p and p₀ all true: excluded by rule 3
    let v = val(&[
        ("p", true),
        ("~p", true),
        ("p & ~p", true),
        ("~(p & ~p)", true),
    ]);
    assert!(!is_admissible(&v).unwrap());
}

#[test]
fn rule_seven_applies_through_missing_negations() {
    // p and q consistent, p & q and its negation both true
    let v = val(&[
        ("p", true),
        ("~p", false),
        ("q", true),
        ("~q", false),
        ("p & q", true),
        ("~(p & q)", true),
    ]);
    assert!(!is_admissible(&v).unwrap());
    // without ~q in the domain, q may be taken inconsistent
    let v = val(&[
        ("p", true),
        ("~p", false),
        ("q", true),
        ("p & q", true),
        ("~(p & q)", true),
    ]);
    assert!(is_admissible(&v).unwrap());
}

#[test]
fn enumeration_examples() {
    let got: BTreeSet<_> = enumerated(&[f("p & ~p")]).into_iter().collect();
    let want: BTreeSet<_> = [
        vec![true, true, true],
        vec![true, false, false],
        vec![false, true, false],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);
    assert_eq!(enumerated(&[f("p")]), vec![vec![false], vec![true]]);
    assert_eq!(
        enumerated(&[f("p -> p")]),
        vec![vec![false, true], vec![true, true]]
    );
}

#[test]
fn enumeration_matches_brute_force_on_fixed_cases() {
    let cases = [
        vec![f("p & ~p")],
        vec![f("~(p & ~p)")],
        vec![f("~~p -> p")],
        vec![f("~(p & q) | ~p"), f("~q")],
        vec![f("~~~p")],
        vec![f("~(p -> ~p)")],
        vec![f("~((p | q) & ~(p | q))"), f("~p")],
    ];
    for fs in cases {
        let got: BTreeSet<_> = enumerated(&fs).into_iter().collect();
        assert_eq!(got, brute_force(&fs), "{fs:?}");
    }
}

#[test]
fn enumeration_never_duplicates() {
    let all = enumerated(&[f("~(p & q) | ~~p"), f("~q")]);
    let set: BTreeSet<_> = all.iter().cloned().collect();
    assert_eq!(set.len(), all.len());
}

#[test]
fn budget_is_enforced() {
    let big = (0..13)
        .map(|i| Formula::not(Formula::var(format!("x{i}"))))
        .reduce(Formula::and)
        .unwrap();
    let err = C1::default().is_valid(&big).unwrap_err();
    assert_eq!(
        err,
        SemanticsError::BudgetExceeded {
            branching: 26,
            budget: 24
        }
    );
    assert!(C1::with_budget(26).is_valid(&big).is_ok());
    assert!(matches!(
        enumerate_valuations(&[]),
        Err(SemanticsError::Empty)
    ));
}

#[test]
fn validity_examples() {
    assert!(is_valid(&f("p | ~p")).unwrap().is_valid());
    assert!(is_valid(&f("~~p -> p")).unwrap().is_valid());
    let v = is_valid(&f("(p & ~p) -> q")).unwrap();
    assert_eq!(v.status(), Status::Invalid);
    let cm = v.countermodel().unwrap();
    assert_eq!(cm.get(&f("p")), Some(true));
    assert_eq!(cm.get(&f("~p")), Some(true));
    assert_eq!(cm.get(&f("q")), Some(false));
}

#[test]
fn entailment_examples() {
    let v = entails(&[f("p"), f("~p")], &f("q")).unwrap();
    assert_eq!(v.status(), Status::Invalid);
    let cm = v.countermodel().unwrap();
    assert_eq!(
        (cm.get(&f("p")), cm.get(&f("~p")), cm.get(&f("q"))),
        (Some(true), Some(true), Some(false))
    );
    assert!(entails(&[f("p"), f("p -> q")], &f("q")).unwrap().is_valid());
    let strong = f("p").strong_negation();
    assert!(entails(&[strong, f("p")], &f("q")).unwrap().is_valid());
    // premise equal to conclusion
    assert!(entails(&[f("~p")], &f("~p")).unwrap().is_valid());
}

#[test]
fn classical_examples() {
    assert!(classical_entails(&[f("p"), f("~p")], &f("q"))
        .unwrap()
        .is_valid());
    assert!(classical_entails(&[], &f("p | ~p")).unwrap().is_valid());
    assert!(classical_entails(&[], &f("~(p & ~p)")).unwrap().is_valid());
    let v = classical_entails(&[f("p | q")], &f("p")).unwrap();
    let cm = v.countermodel().unwrap();
    assert_eq!(
        (cm.get(&f("p")), cm.get(&f("q"))),
        (Some(false), Some(true))
    );
}

#[test]
fn self_contradiction_with_its_marker_explodes() {
    let a = f("~p & ~~p");
    assert!(entails(&[a.clone(), Formula::not(a)], &f("z"))
        .unwrap()
        .is_valid());
}

#[test]
fn non_contradiction_is_not_valid() {
    let v = is_valid(&f("~(p & ~p)")).unwrap();
    assert_eq!(v.status(), Status::Invalid);
    let cm = v.countermodel().unwrap();
    assert_eq!(
        cm.bits(),
        vec![true, true, true, false],
        "domain order p, ~p, p & ~p, ~(p & ~p)"
    );
}

#[test]
fn iff_modes_differ() {
    let q = f("(p <-> q) | r");
    let conj = C1::default().is_valid(&q).unwrap();
    assert_eq!(conj.status(), Status::Invalid);
    let disj = C1 {
        iff_mode: IffMode::Disjunctive,
        ..C1::default()
    }
    .is_valid(&q)
    .unwrap();
    assert!(disj.is_valid());
}

fn arb_formula(depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just("p"), Just("q"), Just("r")].prop_map(Formula::var);
    leaf.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            3 => inner.clone().prop_map(Formula::not),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            1 => (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
}

fn negation_free(depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just("p"), Just("q"), Just("r"), Just("s")].prop_map(Formula::var);
    leaf.prop_recursive(depth, 40, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn enumeration_equals_brute_force(a in arb_formula(4), b in arb_formula(3)) {
        let fs = vec![a, b];
        prop_assume!(subformula_closure(&fs).len() <= 12);
        let got: BTreeSet<_> = enumerated(&fs).into_iter().collect();
        prop_assert_eq!(got, brute_force(&fs));
    }

    #[test]
    fn countermodels_check_out(p in arb_formula(3), c in arb_formula(3)) {
        let v = entails(std::slice::from_ref(&p), &c).unwrap();
        if let Some(cm) = v.countermodel() {
            prop_assert!(is_admissible(cm).unwrap());
            prop_assert_eq!(cm.get(&p), Some(true));
            prop_assert_eq!(cm.get(&c), Some(false));
        }
    }

    /// `{a, ~a}` explodes exactly when `a` is well-behaved in every
    /// valuation (e.g. `a = b & ~b`, where `~a` is `b₀`).
    #[test]
    fn contradiction_explodes_only_when_well_behaved(a in arb_formula(3)) {
        prop_assume!(!a.contains_var("z"));
        let v = entails(&[a.clone(), Formula::not(a.clone())], &Formula::var("z")).unwrap();
        let wb = is_valid(&a.well_behaved()).unwrap();
        prop_assert_eq!(v.is_valid(), wb.is_valid());
    }

    #[test]
    fn positive_fragment_is_classical(a in negation_free(6)) {
        let c1 = is_valid(&a).unwrap();
        let cl = classical_entails(&[], &a).unwrap();
        prop_assert_eq!(c1.status(), cl.status());
    }

    #[test]
    fn monotone_in_premises(p in arb_formula(2), extra in arb_formula(2), c in arb_formula(2)) {
        let base = entails(std::slice::from_ref(&p), &c).unwrap();
        if base.is_valid() {
            prop_assert!(entails(&[p, extra], &c).unwrap().is_valid());
        }
    }

    #[test]
    fn classical_limit(p in arb_formula(3), c in arb_formula(3)) {
        let mut vars = p.variables();
        for v in c.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        let mut premises = vec![p.clone()];
        premises.extend(vars.iter().map(|v| Formula::var(v.clone()).well_behaved()));
        let c1 = C1::with_budget(40).entails(&premises, &c).unwrap();
        let cl = classical_entails(&[p], &c).unwrap();
        prop_assert_eq!(c1.status(), cl.status());
    }
}
