//! Brute-force reference implementations. They only use `evaluate` and the
//! plain data types, never the truth-table engine or the implicant search.

#![allow(dead_code)]

use std::collections::BTreeSet;

use partial_entailment::semantics::{evaluate, Assignment};
use partial_entailment::{AtomId, EntailmentKind, Formula, Literal, LiteralSet, Theory};
use proptest::prelude::*;

pub fn f(s: &str) -> Formula {
    s.parse().unwrap_or_else(|e| panic!("bad formula {s:?}: {e}"))
}

pub fn set(s: &str) -> LiteralSet {
    s.parse().unwrap_or_else(|e| panic!("bad literal set {s:?}: {e}"))
}

pub fn theory(items: &[&str]) -> Theory {
    items.iter().map(|s| f(s)).collect()
}

pub fn sets(items: &[&str]) -> Vec<LiteralSet> {
    items.iter().map(|s| set(s)).collect()
}

pub fn atom(name: &str) -> AtomId {
    AtomId::new(name).unwrap()
}

/// Every total assignment over `atoms`.
pub fn all_assignments(atoms: &[AtomId]) -> Vec<Assignment> {
    (0..1usize << atoms.len())
        .map(|bits| {
            let lits = atoms
                .iter()
                .enumerate()
                .map(|(i, a)| Literal::new(a.clone(), bits >> i & 1 == 1));
            Assignment::new(LiteralSet::from_literals(lits).unwrap())
        })
        .collect()
}

/// Every consistent literal set over `atoms` (3^n of them).
pub fn all_literal_sets(atoms: &[AtomId]) -> Vec<LiteralSet> {
    let mut out = vec![LiteralSet::new()];
    for a in atoms {
        let mut next = Vec::with_capacity(out.len() * 3);
        for s in &out {
            next.push(s.clone());
            for positive in [true, false] {
                let mut t = s.clone();
                t.insert(Literal::new(a.clone(), positive)).unwrap();
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn satisfies_theory(t: &Theory, a: &Assignment) -> bool {
    t.iter().all(|g| evaluate(g, a).unwrap())
}

fn extends(a: &Assignment, pi: &LiteralSet) -> bool {
    pi.iter().all(|l| a.value(&l.atom) == Some(l.positive))
}

pub fn sort_canonical(v: &mut [LiteralSet]) {
    v.sort_by_key(|s| (s.len(), s.to_string()));
}

fn minimal(mut candidates: Vec<LiteralSet>) -> Vec<LiteralSet> {
    let keep: Vec<bool> = candidates
        .iter()
        .map(|c| !candidates.iter().any(|d| d.is_proper_subset(c)))
        .collect();
    let mut i = 0;
    candidates.retain(|_| {
        i += 1;
        keep[i - 1]
    });
    sort_canonical(&mut candidates);
    candidates
}

/// `PI(Γ, P)` straight from the definition: every candidate literal set over
/// `atoms(Γ) ∪ atoms(P)`, filtered by consistency, entailment, minimality.
pub fn brute_pi(t: &Theory, p: &Formula) -> Vec<LiteralSet> {
    let universe: Vec<AtomId> = t.atoms().union(&p.atoms()).cloned().collect();
    let rows: Vec<(Assignment, bool)> = all_assignments(&universe)
        .into_iter()
        .filter(|a| satisfies_theory(t, a))
        .map(|a| {
            let v = evaluate(p, &a).unwrap();
            (a, v)
        })
        .collect();
    let qualifying = all_literal_sets(&universe)
        .into_iter()
        .filter(|pi| {
            let ext: Vec<bool> = rows.iter().filter(|(a, _)| extends(a, pi)).map(|(_, v)| *v).collect();
            !ext.is_empty() && ext.iter().all(|&v| v)
        })
        .collect();
    minimal(qualifying)
}

/// Minimal clauses (as literal sets) over `atoms(F)` entailed by `F`; the
/// empty clause when `F` is unsatisfiable.
pub fn brute_prime_implicates(formula: &Formula) -> Vec<LiteralSet> {
    let universe: Vec<AtomId> = formula.atoms().into_iter().collect();
    let models: Vec<Assignment> = all_assignments(&universe)
        .into_iter()
        .filter(|a| evaluate(formula, a).unwrap())
        .collect();
    let entailed = all_literal_sets(&universe)
        .into_iter()
        .filter(|c| {
            models
                .iter()
                .all(|a| c.iter().any(|l| a.value(&l.atom) == Some(l.positive)))
        })
        .collect();
    minimal(entailed)
}

/// `∃V. F` by disjoining both conditionings of each atom in turn.
pub fn forget(formula: &Formula, vars: &BTreeSet<AtomId>) -> Formula {
    vars.iter().fold(formula.clone(), |g, v| {
        Formula::or(g.condition(&Literal::pos(v.clone())), g.condition(&Literal::neg(v.clone())))
    })
}

/// Equivalence by evaluation over the joint atoms.
pub fn brute_equivalent(a: &Formula, b: &Formula) -> bool {
    let universe: Vec<AtomId> = a.atoms().union(&b.atoms()).cloned().collect();
    all_assignments(&universe)
        .iter()
        .all(|x| evaluate(a, x).unwrap() == evaluate(b, x).unwrap())
}

/// Whether Γ entails `p`, by evaluation.
pub fn brute_entails(t: &Theory, p: &Formula) -> bool {
    let universe: Vec<AtomId> = t.atoms().union(&p.atoms()).cloned().collect();
    all_assignments(&universe)
        .iter()
        .filter(|a| satisfies_theory(t, a))
        .all(|a| evaluate(p, a).unwrap())
}

pub fn brute_relation(kind: EntailmentKind, a: &LiteralSet, b: &LiteralSet) -> bool {
    let meets = a.iter().any(|l| b.contains(&l));
    let clash = a.iter().any(|l| b.contains(&l.complement()));
    match kind {
        EntailmentKind::Weak => meets,
        EntailmentKind::Plain => meets && !clash,
        EntailmentKind::Strong => !a.is_empty() && a.iter().all(|l| b.contains(&l)),
    }
}

/// Partial entailment on brute-force implicant sets.
pub fn brute_partially_entails(kind: EntailmentKind, t: &Theory, p: &Formula, q: &Formula) -> bool {
    let ps = brute_pi(t, p);
    let qs = brute_pi(t, q);
    !ps.is_empty() && ps.iter().all(|a| qs.iter().any(|b| brute_relation(kind, a, b)))
}

pub fn atom_pool(n: usize) -> Vec<&'static str> {
    ["v", "w", "x", "y", "z"][5 - n..].to_vec()
}

/// Formulas over `atoms` with at most `depth` connectives on any path.
pub fn formula_strategy(atoms: Vec<&'static str>, depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::Top),
        1 => Just(Formula::Bottom),
        12 => proptest::sample::select(atoms).prop_map(|a| Formula::Atom(AtomId::new(a).unwrap())),
    ];
    leaf.prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

pub fn theory_strategy(atoms: Vec<&'static str>, depth: u32, max_len: usize) -> impl Strategy<Value = Theory> {
    proptest::collection::vec(formula_strategy(atoms, depth), 0..=max_len).prop_map(Theory::from_formulas)
}

pub fn literal_set_strategy(atoms: Vec<&'static str>) -> impl Strategy<Value = LiteralSet> {
    proptest::collection::vec(proptest::option::of(any::<bool>()), atoms.len()).prop_map(move |choice| {
        LiteralSet::from_literals(
            atoms
                .iter()
                .zip(choice)
                .filter_map(|(a, c)| c.map(|pos| Literal::new(AtomId::new(a).unwrap(), pos))),
        )
        .unwrap()
    })
}
