mod common;

use common::*;
use partial_entailment::prime_implicants::HypothesisSet;
use partial_entailment::{
    abductive_explanations, is_prime_implicant, literal_in_all_pi, literal_in_some_pi,
    partially_entails, prime_implicants, EntailmentKind, Literal, LiteralSet, Theory,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn enumeration_matches_brute_force(
        t in theory_strategy(atom_pool(5), 3, 2),
        p in formula_strategy(atom_pool(5), 3),
    ) {
        let fast = prime_implicants(&t, &p).unwrap().into_vec();
        prop_assert_eq!(fast, brute_pi(&t, &p));
    }

    #[test]
    fn membership_check_agrees_with_enumeration(
        t in theory_strategy(atom_pool(4), 3, 2),
        p in formula_strategy(atom_pool(4), 3),
        pi in literal_set_strategy(atom_pool(4)),
    ) {
        let listed = prime_implicants(&t, &p).unwrap().contains(&pi);
        prop_assert_eq!(is_prime_implicant(&t, &p, &pi).unwrap(), listed);
    }

    #[test]
    fn antichain_and_consistency(
        t in theory_strategy(atom_pool(4), 3, 2),
        p in formula_strategy(atom_pool(4), 3),
    ) {
        let pis = prime_implicants(&t, &p).unwrap();
        for a in pis.iter() {
            prop_assert!(partial_entailment::is_consistent(&t.with(a.to_formula())).unwrap());
            for b in pis.iter() {
                prop_assert!(!a.is_proper_subset(b));
            }
        }
        let mut sorted = pis.implicants().to_vec();
        sort_canonical(&mut sorted);
        prop_assert_eq!(sorted.as_slice(), pis.implicants());
    }

    #[test]
    fn literal_queries_follow_the_set(
        t in theory_strategy(atom_pool(4), 3, 2),
        p in formula_strategy(atom_pool(4), 3),
        name in proptest::sample::select(atom_pool(4)),
        positive in any::<bool>(),
    ) {
        let l = Literal::new(atom(name), positive);
        let pis = brute_pi(&t, &p);
        prop_assert_eq!(literal_in_some_pi(&t, &p, &l).unwrap(), pis.iter().any(|s| s.contains(&l)));
        prop_assert_eq!(
            literal_in_all_pi(&t, &p, &l).unwrap(),
            !pis.is_empty() && pis.iter().all(|s| s.contains(&l))
        );
    }

    #[test]
    fn explanations_match_subset_search(
        t in theory_strategy(atom_pool(4), 2, 2),
        p in formula_strategy(atom_pool(4), 3),
        hyp in proptest::collection::btree_set((proptest::sample::select(atom_pool(4)), any::<bool>()), 0..6),
    ) {
        let mut h = HypothesisSet::new();
        for (a, pos) in &hyp {
            h.insert(Literal::new(atom(a), *pos));
        }
        let got = abductive_explanations(&t, &p, &h).unwrap();
        // every consistent subset of H, filtered by the definition
        let lits: Vec<Literal> = h.iter().cloned().collect();
        let mut qualifying: Vec<LiteralSet> = Vec::new();
        for mask in 0..1u32 << lits.len() {
            let chosen = lits.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, l)| l.clone());
            let Ok(s) = LiteralSet::from_literals(chosen) else { continue };
            let with = t.with(s.to_formula());
            if partial_entailment::is_consistent(&with).unwrap() && brute_entails(&with, &p) {
                qualifying.push(s);
            }
        }
        let mut expected: Vec<LiteralSet> = qualifying
            .iter()
            .filter(|c| !qualifying.iter().any(|d| d.is_proper_subset(c)))
            .cloned()
            .collect();
        sort_canonical(&mut expected);
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn entailment_matches_brute_force(
        t in theory_strategy(atom_pool(4), 2, 1),
        p in formula_strategy(atom_pool(4), 3),
        q in formula_strategy(atom_pool(4), 3),
    ) {
        for kind in EntailmentKind::ALL {
            prop_assert_eq!(
                partially_entails(kind, &t, &p, &q).unwrap().holds,
                brute_partially_entails(kind, &t, &p, &q),
                "{} {} {} {}", kind, t, p, q
            );
        }
    }
}

#[test]
fn explanations_over_all_literals_are_prime_implicants() {
    let t = theory(&["x | y", "z -> y"]);
    let p = f("(x & r) | (y & s)");
    let h = HypothesisSet::all_over(&t.atoms().union(&p.atoms()).cloned().collect::<Vec<_>>());
    assert_eq!(
        abductive_explanations(&t, &p, &h).unwrap(),
        prime_implicants(&t, &p).unwrap().into_vec()
    );
}

#[test]
fn brute_force_reference_on_known_sets() {
    let empty = Theory::new();
    assert_eq!(brute_pi(&empty, &f("x | (y & z)")), sets(&["{x}", "{y, z}"]));
    assert_eq!(brute_pi(&empty, &f("x & !x")), Vec::<LiteralSet>::new());
    assert_eq!(brute_pi(&empty, &f("x | !x")), sets(&["{}"]));
    assert_eq!(brute_prime_implicates(&f("x & y")), sets(&["{x}", "{y}"]));
}
