//! Seeded random formulas and theories for property sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::formula::{AtomId, Formula, Literal, LiteralSet, Theory};

#[derive(Clone, Debug)]
pub struct FormulaGenerator {
    atoms: Vec<AtomId>,
    max_depth: usize,
}

impl FormulaGenerator {
    pub fn new(atom_names: &[&str], max_depth: usize) -> Result<Self> {
        let atoms = atom_names
            .iter()
            .map(|n| AtomId::new(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(FormulaGenerator { atoms, max_depth })
    }

    /// Four atoms `w, x, y, z`, depth at most four.
    pub fn standard() -> Self {
        FormulaGenerator::new(&["w", "x", "y", "z"], 4).expect("valid atom names")
    }

    pub fn atoms(&self) -> &[AtomId] {
        &self.atoms
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    /// Same pool, different depth bound.
    pub fn with_depth(&self, max_depth: usize) -> Self {
        FormulaGenerator {
            atoms: self.atoms.clone(),
            max_depth,
        }
    }

    pub fn atom<R: Rng + ?Sized>(&self, rng: &mut R) -> AtomId {
        self.atoms.choose(rng).expect("non-empty atom pool").clone()
    }

    pub fn literal<R: Rng + ?Sized>(&self, rng: &mut R) -> Literal {
        Literal::new(self.atom(rng), rng.gen_bool(0.5))
    }

    pub fn formula<R: Rng + ?Sized>(&self, rng: &mut R) -> Formula {
        self.formula_at(rng, self.max_depth)
    }

    fn formula_at<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize) -> Formula {
        let leaf_chance = if depth == self.max_depth { 0.1 } else { 0.35 };
        if depth == 0 || rng.gen_bool(leaf_chance) {
            return match rng.gen_range(0..40) {
                0 => Formula::Top,
                1 => Formula::Bottom,
                _ => Formula::Atom(self.atom(rng)),
            };
        }
        let d = depth - 1;
        match rng.gen_range(0..20) {
            0..=3 => Formula::not(self.formula_at(rng, d)),
            4..=8 => Formula::and(self.formula_at(rng, d), self.formula_at(rng, d)),
            9..=13 => Formula::or(self.formula_at(rng, d), self.formula_at(rng, d)),
            14..=16 => Formula::implies(self.formula_at(rng, d), self.formula_at(rng, d)),
            _ => Formula::iff(self.formula_at(rng, d), self.formula_at(rng, d)),
        }
    }

    /// A disjunction of one or two cubes of up to three literals; depth at
    /// most four.
    pub fn dnf<R: Rng + ?Sized>(&self, rng: &mut R) -> Formula {
        let cubes = rng.gen_range(1..=2);
        Formula::disjunction((0..cubes).map(|_| {
            let width = rng.gen_range(1..=3.min(self.atoms.len()));
            let chosen: Vec<&AtomId> = self.atoms.choose_multiple(rng, width).collect();
            Formula::conjunction(chosen.into_iter().map(|a| {
                let lit = Formula::Atom(a.clone());
                if rng.gen_bool(0.5) {
                    lit
                } else {
                    Formula::not(lit)
                }
            }))
        }))
    }

    /// Up to `max_len` formulas.
    pub fn theory<R: Rng + ?Sized>(&self, rng: &mut R, max_len: usize) -> Theory {
        let len = rng.gen_range(0..=max_len);
        (0..len).map(|_| self.formula(rng)).collect()
    }

    /// A consistent literal set over the pool.
    pub fn literal_set<R: Rng + ?Sized>(&self, rng: &mut R) -> LiteralSet {
        let mut out = LiteralSet::new();
        for a in &self.atoms {
            match rng.gen_range(0..3) {
                0 => out.insert(Literal::pos(a.clone())).expect("fresh atom"),
                1 => out.insert(Literal::neg(a.clone())).expect("fresh atom"),
                _ => {}
            }
        }
        out
    }

    /// A non-empty clause (as a literal set) over the pool.
    pub fn clause<R: Rng + ?Sized>(&self, rng: &mut R) -> LiteralSet {
        loop {
            let set = self.literal_set(rng);
            if !set.is_empty() {
                return set;
            }
        }
    }
}

/// A formula equivalent to `f` under `theory`, obtained by one or two
/// meaning-preserving rewrites.
pub fn equivalent_variant<R: Rng + ?Sized>(f: &Formula, theory: &Theory, rng: &mut R) -> Formula {
    let steps = rng.gen_range(1..=2);
    (0..steps).fold(f.clone(), |g, _| rewrite_once(&g, theory, rng))
}

fn rewrite_once<R: Rng + ?Sized>(f: &Formula, theory: &Theory, rng: &mut R) -> Formula {
    use Formula::*;
    match rng.gen_range(0..7) {
        0 => Formula::not(Formula::not(f.clone())),
        1 => match f {
            And(l, r) => Formula::not(Formula::or(Formula::not((**l).clone()), Formula::not((**r).clone()))),
            Or(l, r) => Formula::not(Formula::and(Formula::not((**l).clone()), Formula::not((**r).clone()))),
            Implies(l, r) => Formula::or(Formula::not((**l).clone()), (**r).clone()),
            Iff(l, r) => Formula::and(
                Formula::implies((**l).clone(), (**r).clone()),
                Formula::implies((**r).clone(), (**l).clone()),
            ),
            _ => Formula::not(Formula::not(f.clone())),
        },
        2 => match f {
            And(l, r) => Formula::and((**r).clone(), (**l).clone()),
            Or(l, r) => Formula::or((**r).clone(), (**l).clone()),
            Iff(l, r) => Formula::iff((**r).clone(), (**l).clone()),
            _ => Formula::and(f.clone(), f.clone()),
        },
        3 => match theory.formulas().choose(rng) {
            // Γ ⊨ G, so conjoining G changes nothing under Γ.
            Some(g) => Formula::and(f.clone(), g.clone()),
            None => Formula::or(f.clone(), Formula::Bottom),
        },
        4 => match theory.formulas().choose(rng) {
            Some(g) => Formula::or(f.clone(), Formula::not(g.clone())),
            None => Formula::and(f.clone(), Formula::Top),
        },
        5 => {
            let a = Formula::Atom(f.atoms().into_iter().next().unwrap_or_else(|| {
                AtomId::new("x").expect("valid atom")
            }));
            // absorption: f ∨ (f ∧ a)
            Formula::or(f.clone(), Formula::and(f.clone(), a))
        }
        _ => Formula::implies(Formula::not(f.clone()), f.clone()),
    }
}

/// A theory equivalent to `theory`, built by splitting conjunctions,
/// merging members, rewriting members or adding valid formulas.
pub fn equivalent_theory<R: Rng + ?Sized>(theory: &Theory, rng: &mut R) -> Theory {
    let mut out: Vec<Formula> = Vec::new();
    for g in theory {
        match (g, rng.gen_range(0..3)) {
            (Formula::And(l, r), 0) => {
                out.push((**l).clone());
                out.push((**r).clone());
            }
            (_, 1) => out.push(equivalent_variant(g, &Theory::new(), rng)),
            _ => out.push(g.clone()),
        }
    }
    match rng.gen_range(0..4) {
        0 if out.len() > 1 => out = vec![Formula::conjunction(out)],
        1 => {
            let a = Formula::Atom(AtomId::new("x").expect("valid atom"));
            out.push(Formula::or(a.clone(), Formula::not(a)));
        }
        2 => out.reverse(),
        _ => {}
    }
    Theory::from_formulas(out)
}
