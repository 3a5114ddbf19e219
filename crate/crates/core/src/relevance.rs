//! Relevance and independence notions expressed through prime implicants.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::entailment::{partially_entails, EntailmentKind};
use crate::error::{Error, Result};
use crate::formula::{AtomId, Formula, Literal, Theory};
use crate::parser;
use crate::prime_implicants::prime_implicants;

/// A set of atoms, written `{x, y}`.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct VariableSet {
    atoms: BTreeSet<AtomId>,
}

impl VariableSet {
    pub fn new<I: IntoIterator<Item = AtomId>>(atoms: I) -> Self {
        VariableSet {
            atoms: atoms.into_iter().collect(),
        }
    }

    pub fn atoms(&self) -> &BTreeSet<AtomId> {
        &self.atoms
    }

    pub fn contains(&self, atom: &AtomId) -> bool {
        self.atoms.contains(atom)
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// `V ∪ -V`.
    pub fn literals(&self) -> Vec<Literal> {
        self.atoms
            .iter()
            .flat_map(|a| [Literal::pos(a.clone()), Literal::neg(a.clone())])
            .collect()
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.atoms.iter().map(|a| a.as_str()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

impl FromStr for VariableSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let literals = parser::parse_literal_list(s)?;
        if let Some(l) = literals.iter().find(|l| !l.positive) {
            return Err(Error::InvalidArgument(format!(
                "variable sets list atoms, found negated `{l}`"
            )));
        }
        Ok(VariableSet::new(literals.into_iter().map(|l| l.atom)))
    }
}

/// True iff no member of `PI(F)` mentions an atom of `V`, i.e. `F` can be
/// rewritten without those atoms.
pub fn variable_independent(f: &Formula, vars: &VariableSet) -> Result<bool> {
    Ok(prime_implicants(&Theory::new(), f)?
        .iter()
        .all(|pi| pi.iter().all(|l| !vars.contains(&l.atom))))
}

/// True iff `¬F` weakly partially entails `(x1 ∧ … ∧ xn) ∨ (¬x1 ∧ … ∧ ¬xn)`.
pub fn strictly_relevant(f: &Formula, vars: &VariableSet) -> Result<bool> {
    if vars.is_empty() {
        return Err(Error::EmptyVariableSet);
    }
    let all_true = Formula::conjunction(vars.atoms.iter().map(|a| Formula::Atom(a.clone())));
    let all_false = Formula::conjunction(
        vars.atoms
            .iter()
            .map(|a| Formula::not(Formula::Atom(a.clone()))),
    );
    let target = Formula::or(all_true, all_false);
    Ok(partially_entails(
        EntailmentKind::Weak,
        &Theory::new(),
        &Formula::not(f.clone()),
        &target,
    )?
    .holds)
}

/// True iff some member of `PI(Γ, P)` meets some member of `PI(Γ, Q)`.
pub fn relevant_formulas(theory: &Theory, p: &Formula, q: &Formula) -> Result<bool> {
    let p_pis = prime_implicants(theory, p)?;
    if p_pis.is_empty() {
        return Ok(false);
    }
    let q_pis = prime_implicants(theory, q)?;
    Ok(p_pis
        .iter()
        .any(|pi| q_pis.iter().any(|other| pi.intersects(other))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Novelty {
    pub new_positive: bool,
    pub new_negative: bool,
}

/// Whether learning `P` creates a prime implicant of `Q` (positive) or of
/// `¬Q` (negative) that was not one before.
pub fn novelty(theory: &Theory, p: &Formula, q: &Formula) -> Result<Novelty> {
    let extended = theory.with(p.clone());
    let creates = |target: &Formula| -> Result<bool> {
        let before = prime_implicants(theory, target)?;
        let after = prime_implicants(&extended, target)?;
        Ok(after.iter().any(|pi| !before.contains(pi)))
    };
    Ok(Novelty {
        new_positive: creates(q)?,
        new_negative: creates(&Formula::not(q.clone()))?,
    })
}

/// Novelty-based independence: `P` is not new negative to `Q` against an
/// empty background.
pub fn novelty_independent(p: &Formula, q: &Formula) -> Result<bool> {
    Ok(!novelty(&Theory::new(), p, q)?.new_negative)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    fn vars(s: &str) -> VariableSet {
        s.parse().unwrap()
    }

    #[test]
    fn independence() {
        assert!(variable_independent(&f("x & (y | !y)"), &vars("{y}")).unwrap());
        assert!(!variable_independent(&f("x & y"), &vars("{y}")).unwrap());
        assert!(variable_independent(&f("x"), &vars("{z}")).unwrap());
    }

    #[test]
    fn strict_relevance() {
        assert!(strictly_relevant(&f("x & y"), &vars("{x, y}")).unwrap());
        assert!(!strictly_relevant(&f("x & y"), &vars("{z, w}")).unwrap());
        assert_eq!(
            strictly_relevant(&f("x"), &VariableSet::default()).unwrap_err(),
            Error::EmptyVariableSet
        );
    }

    #[test]
    fn formula_relevance() {
        let empty = Theory::new();
        assert!(relevant_formulas(&empty, &f("x | z"), &f("x & y")).unwrap());
        assert!(!relevant_formulas(&empty, &f("z"), &f("x & y")).unwrap());
    }

    #[test]
    fn novelty_examples() {
        let empty = Theory::new();
        let n = novelty(&empty, &f("x | y"), &f("x & y")).unwrap();
        assert!(!n.new_positive && !n.new_negative);
        let n = novelty(&empty, &f("x <-> y"), &f("x")).unwrap();
        assert!(n.new_positive && n.new_negative);
        let n = novelty(&empty, &f("q | !q"), &f("x -> y")).unwrap();
        assert!(!n.new_positive && !n.new_negative);
    }

    #[test]
    fn novelty_independence() {
        assert!(novelty_independent(&f("x"), &f("y")).unwrap());
        assert!(!novelty_independent(&f("x <-> y"), &f("x")).unwrap());
    }

    #[test]
    fn variable_set_syntax() {
        assert_eq!(vars("{y, x}").to_string(), "{x, y}");
        assert!("{!x}".parse::<VariableSet>().is_err());
        assert_eq!(vars("{x}").literals().len(), 2);
    }
}
