//! Properties of the statement algebra over randomly generated compounds.

use proptest::prelude::*;
use verblogic::statement::{
    canonical_form, distribute, factor, negate, Fan, Junction, TermList,
};
use verblogic::{Atom, Compound, Tense, Term};

const VERBS: [&str; 3] = ["bake", "eat", "cook"];
const OBJECTS: [&str; 4] = ["potato", "apple", "fruit", "vegetable"];

fn atom_strategy() -> impl Strategy<Value = Atom> {
    (
        0..VERBS.len(),
        0..OBJECTS.len(),
        any::<bool>(),
        prop_oneof![Just(None), Just(Some("I get this job".to_string()))],
        0..3usize,
    )
        .prop_map(|(v, o, neg, cond, tense)| {
            let mut b = Atom::builder("I", VERBS[v])
                .object(OBJECTS[o])
                .negated(neg)
                .tense(Tense::ALL[tense]);
            if let Some(c) = cond {
                b = b.condition(c);
            }
            b.build().unwrap()
        })
}

fn junction() -> impl Strategy<Value = Junction> {
    prop_oneof![Just(Junction::And), Just(Junction::Or)]
}

fn term_list(pool: &'static [&'static str]) -> impl Strategy<Value = TermList> {
    (junction(), proptest::sample::subsequence(pool.to_vec(), 2..=pool.len())).prop_map(
        |(junction, terms)| TermList {
            junction,
            terms: terms.into_iter().map(Term::new).collect(),
        },
    )
}

fn fan_strategy() -> impl Strategy<Value = Compound> {
    (
        atom_strategy(),
        proptest::option::of(term_list(&VERBS)),
        proptest::option::of(term_list(&OBJECTS)),
    )
        .prop_map(|(template, verbs, objects)| {
            Fan {
                template,
                verbs,
                objects,
            }
            .into_compound()
        })
}

fn compound_strategy() -> impl Strategy<Value = Compound> {
    let leaf = prop_oneof![
        3 => atom_strategy().prop_map(Compound::Leaf),
        1 => fan_strategy(),
    ];
    leaf.prop_recursive(3, 16, 4, |inner| {
        (junction(), proptest::collection::vec(inner, 2..4))
            .prop_map(|(j, children)| Compound::junction(j, children))
    })
}

/// Evaluates a distributed compound with each atom's truth given by `val`.
fn eval(c: &Compound, val: &impl Fn(&Atom) -> bool) -> bool {
    match c {
        Compound::Leaf(a) => val(a),
        Compound::And(cs) => cs.iter().all(|c| eval(c, val)),
        Compound::Or(cs) => cs.iter().any(|c| eval(c, val)),
        Compound::Fan(_) => eval(&distribute(c), val),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn negate_is_an_involution(c in compound_strategy()) {
        prop_assert_eq!(negate(&negate(&c)), c.clone());
        let canon = canonical_form(&c);
        prop_assert_eq!(canonical_form(&negate(&negate(&canon))), canon);
    }

    #[test]
    fn canonical_form_is_idempotent(c in compound_strategy()) {
        let once = canonical_form(&c);
        prop_assert_eq!(canonical_form(&once), once);
    }

    #[test]
    fn factor_undoes_distribute(c in compound_strategy()) {
        let canon = canonical_form(&c);
        prop_assert_eq!(canonical_form(&factor(&canon)), canon.clone());
        prop_assert_eq!(canonical_form(&factor(&distribute(&c))), canon);
    }

    #[test]
    fn negation_is_truth_functional(c in compound_strategy(), bits in any::<u64>()) {
        // atoms as propositional variables; a negated atom is the complement
        // of its positive twin
        let val = |a: &Atom| {
            let pos = if a.negated() { a.negate() } else { a.clone() };
            let h = pos.canonical_key().bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
            let v = (bits >> (h % 64)) & 1 == 1;
            v ^ a.negated()
        };
        prop_assert_eq!(eval(&negate(&c), &val), !eval(&c, &val));
        prop_assert_eq!(eval(&canonical_form(&c), &val), eval(&c, &val));
    }

    #[test]
    fn distributed_leaves_are_plain(c in compound_strategy()) {
        fn plain(c: &Compound) -> bool {
            match c {
                Compound::Leaf(_) => true,
                Compound::Fan(_) => false,
                Compound::And(cs) | Compound::Or(cs) => cs.len() >= 2 && cs.iter().all(plain),
            }
        }
        prop_assert!(plain(&distribute(&c)));
        prop_assert!(plain(&canonical_form(&c)));
    }

    #[test]
    fn condition_survives(c in compound_strategy()) {
        let conds: Vec<Option<String>> = distribute(&c)
            .leaves()
            .iter()
            .map(|a| a.condition().map(str::to_string))
            .collect();
        let mut after: Vec<Option<String>> = distribute(&negate(&c))
            .leaves()
            .iter()
            .map(|a| a.condition().map(str::to_string))
            .collect();
        let mut before = conds.clone();
        before.sort();
        after.sort();
        prop_assert_eq!(before, after);
    }
}
