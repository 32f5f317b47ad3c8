use std::collections::BTreeSet;

use paraq::fuzz::{var_pool, FormulaGen};
use paraq::proofs::{
    axiom_schemas, check_derivation, match_schema, parse_script, Derivation, Justification,
};
use paraq::semantics::{entails, enumerate_valuations, is_valid};
use paraq::{Binding, Formula, C1};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f(s: &str) -> Formula {
    Formula::parse(s).unwrap()
}

fn models(fs: &[&str]) -> BTreeSet<Vec<(String, bool)>> {
    let fs: Vec<Formula> = fs.iter().map(|s| f(s)).collect();
    enumerate_valuations(&fs)
        .unwrap()
        .map(|v| v.entries().iter().map(|(g, b)| (g.render(), *b)).collect())
        .collect()
}

fn rows(rows: &[&[(&str, bool)]]) -> BTreeSet<Vec<(String, bool)>> {
    rows.iter()
        .map(|r| r.iter().map(|(g, b)| (g.to_string(), *b)).collect())
        .collect()
}

// hand-derived admissible valuations
#[test]
fn frozen_valuation_sets() {
    assert_eq!(
        models(&["~p"]),
        rows(&[
            &[("p", false), ("~p", true)],
            &[("p", true), ("~p", false)],
            &[("p", true), ("~p", true)],
        ])
    );
    assert_eq!(models(&["~~p"]).len(), 4);
    assert!(!models(&["~~p"]).contains(&vec![
        ("p".to_string(), false),
        ("~p".to_string(), true),
        ("~~p".to_string(), true)
    ]));
    let lnc = models(&["~(p & ~p)"]);
    assert_eq!(lnc.len(), 3);
    assert!(lnc.contains(&vec![
        ("p".to_string(), true),
        ("~p".to_string(), true),
        ("p & ~p".to_string(), true),
        ("~(p & ~p)".to_string(), false)
    ]));
    assert_eq!(models(&["p & q"]).len(), 4);
    assert_eq!(models(&["p -> q", "~q"]).len(), 2 * 3);
}

#[test]
fn axiom_instances_check_and_hold() {
    let gen = FormulaGen::new(var_pool(3), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let c1 = C1::with_budget(64);
    for schema in axiom_schemas() {
        for _ in 0..15 {
            let binding: Binding = schema
                .pattern
                .variables()
                .into_iter()
                .map(|v| (v, gen.sample(&mut rng)))
                .collect();
            let inst = schema.pattern.substitute(&binding).unwrap();
            assert!(match_schema(&inst, schema).is_some());
            let mut d = Derivation::default();
            d.push(
                inst.clone(),
                Justification::Axiom {
                    id: schema.id,
                    binding: Binding::new(),
                },
            );
            assert_eq!(check_derivation(&d, &[]).unwrap(), inst);
            assert!(
                c1.is_valid(&inst).unwrap().is_valid(),
                "ax {} {inst}",
                schema.id
            );
        }
    }
}

#[test]
fn accepted_scripts_are_sound() {
    let script = "\
1. p ; premise
2. p -> q ; premise
3. q ; mp 1 2
4. q -> (r -> q) ; ax 1 a=q b=r
5. r -> q ; mp 3 4
6. q & (r -> q) -> q ; ax 4
";
    let d = parse_script(script).unwrap();
    let premises = [f("p"), f("p -> q")];
    let theorem = check_derivation(&d, &premises).unwrap();
    assert_eq!(theorem, f("q & (r -> q) -> q"));
    for line in &d.lines {
        assert!(
            entails(&premises, &line.formula).unwrap().is_valid(),
            "{}",
            line.formula
        );
    }
    // appending an unused valid line keeps the script accepted
    let longer = format!("{script}7. s -> (s -> s) ; ax 1\n");
    assert!(check_derivation(&parse_script(&longer).unwrap(), &premises).is_ok());
}

#[test]
fn render_parse_round_trip() {
    let gen = FormulaGen::new(var_pool(4), 6).with_iff(true);
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..2000 {
        let g = gen.sample(&mut rng);
        let text = g.render();
        assert_eq!(Formula::parse(&text).unwrap(), g, "{text}");
        let back: Formula = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        assert_eq!(back, g);
    }
}

#[test]
fn strong_negation_explodes_and_weak_does_not() {
    assert!(entails(&[f("p"), f("~p")], &f("q"))
        .unwrap()
        .countermodel()
        .is_some());
    let strong = f("p").strong_negation();
    assert!(entails(&[f("p"), strong], &f("q")).unwrap().is_valid());
    assert!(is_valid(&f("p | ~p")).unwrap().is_valid());
    assert!(!is_valid(&f("~(p & ~p)")).unwrap().is_valid());
}
