//! Models, satisfiability and classical entailment.
//!
//! Every query is answered by exhaustive truth-table enumeration over the
//! atoms the query mentions, which is exact for the small vocabularies this
//! library targets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{AtomId, Formula, LiteralSet, Theory};
use crate::table::Universe;

/// A total assignment over its own set of atoms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    literals: LiteralSet,
}

impl Assignment {
    /// Every literal set is a total assignment over the atoms it mentions.
    pub fn new(literals: LiteralSet) -> Self {
        Assignment { literals }
    }

    pub fn literals(&self) -> &LiteralSet {
        &self.literals
    }

    pub fn universe(&self) -> BTreeSet<AtomId> {
        self.literals.atoms()
    }

    pub fn value(&self, atom: &AtomId) -> Option<bool> {
        self.literals.value(atom)
    }

    /// The assignment restricted to atoms outside `drop`.
    pub fn without(&self, drop: &BTreeSet<AtomId>) -> Assignment {
        Assignment::new(
            LiteralSet::from_literals(self.literals.iter().filter(|l| !drop.contains(&l.atom)))
                .expect("subset of a consistent set"),
        )
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literals)
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literals)
    }
}

impl From<LiteralSet> for Assignment {
    fn from(literals: LiteralSet) -> Self {
        Assignment::new(literals)
    }
}

/// Truth value of `f` under `a`; `a` must assign every atom of `f`.
pub fn evaluate(f: &Formula, a: &Assignment) -> Result<bool> {
    Ok(match f {
        Formula::Atom(x) => a
            .value(x)
            .ok_or_else(|| Error::UncoveredAtom(x.to_string()))?,
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Not(g) => !evaluate(g, a)?,
        Formula::And(l, r) => evaluate(l, a)? & evaluate(r, a)?,
        Formula::Or(l, r) => evaluate(l, a)? | evaluate(r, a)?,
        Formula::Implies(l, r) => !evaluate(l, a)? | evaluate(r, a)?,
        Formula::Iff(l, r) => evaluate(l, a)? == evaluate(r, a)?,
    })
}

/// All assignments over `universe` satisfying every member of `theory`.
///
/// Atoms are ordered lexicographically and assignments are listed as a
/// binary count from all-true down to all-false, the first atom being the
/// most significant digit.
pub fn models(theory: &Theory, universe: &BTreeSet<AtomId>) -> Result<Vec<Assignment>> {
    if let Some(a) = theory.atoms().difference(universe).next() {
        return Err(Error::UncoveredAtom(a.to_string()));
    }
    let u = Universe::new(universe.clone())?;
    let sat = u.theory_table(theory);
    let n = u.len();
    // Internal rows put the first atom in bit 0; canonical order wants it as
    // the most significant digit.
    let mut rows: Vec<(usize, usize)> = sat
        .rows()
        .map(|row| (reverse_bits(row, n), row))
        .collect();
    rows.sort_unstable_by_key(|r| std::cmp::Reverse(r.0));
    Ok(rows
        .into_iter()
        .map(|(_, row)| Assignment::new(u.row_literals(row)))
        .collect())
}

fn reverse_bits(row: usize, n: usize) -> usize {
    (0..n).fold(0, |acc, k| acc | ((row >> k & 1) << (n - 1 - k)))
}

/// True iff the theory has a model (vacuously true for the empty theory).
pub fn is_consistent(theory: &Theory) -> Result<bool> {
    let u = Universe::new(theory.atoms())?;
    Ok(!u.theory_table(theory).is_empty())
}

/// `Γ ⊨ F`.
pub fn entails(theory: &Theory, f: &Formula) -> Result<bool> {
    let u = Universe::spanning(theory, [f])?;
    Ok(u.theory_table(theory).is_subset(&u.table(f)))
}

/// True iff each theory entails every member of the other.
pub fn theories_equivalent(a: &Theory, b: &Theory) -> Result<bool> {
    let u = Universe::spanning(a, b.iter())?;
    Ok(u.theory_table(a) == u.theory_table(b))
}

/// True iff `f` is true under every assignment.
pub fn is_valid(f: &Formula) -> Result<bool> {
    entails(&Theory::new(), f)
}

/// True iff `f` has a model.
pub fn is_satisfiable(f: &Formula) -> Result<bool> {
    is_consistent(&Theory::from_formulas([f.clone()]))
}

/// Constant folding: removes every `⊤`/`⊥` from the formula, or reduces it
/// to a single constant.
pub fn simplify(f: &Formula) -> Formula {
    use Formula::*;
    match f {
        Atom(_) | Top | Bottom => f.clone(),
        Not(g) => match simplify(g) {
            Top => Bottom,
            Bottom => Top,
            g => Formula::not(g),
        },
        And(l, r) => match (simplify(l), simplify(r)) {
            (Bottom, _) | (_, Bottom) => Bottom,
            (Top, g) | (g, Top) => g,
            (l, r) => Formula::and(l, r),
        },
        Or(l, r) => match (simplify(l), simplify(r)) {
            (Top, _) | (_, Top) => Top,
            (Bottom, g) | (g, Bottom) => g,
            (l, r) => Formula::or(l, r),
        },
        Implies(l, r) => match (simplify(l), simplify(r)) {
            (Bottom, _) | (_, Top) => Top,
            (Top, g) => g,
            (g, Bottom) => Formula::not(g),
            (l, r) => Formula::implies(l, r),
        },
        Iff(l, r) => match (simplify(l), simplify(r)) {
            (Top, g) | (g, Top) => g,
            (Bottom, Bottom) => Top,
            (Bottom, g) | (g, Bottom) => Formula::not(g),
            (l, r) => Formula::iff(l, r),
        },
    }
}
