//! Prime implicants relative to a background theory, and the decision
//! problems built on them.
//!
//! A literal set `π` is a prime implicant of `P` with respect to `Γ` when
//! `Γ ∪ π` is consistent, `Γ ∪ π ⊨ P`, and no proper subset of `π` has both
//! properties. Candidates range over literals on `atoms(Γ) ∪ atoms(P)`: a
//! literal on any other atom can always be dropped from an implicant, so
//! no prime implicant mentions one.
//!
//! Enumeration is breadth-first by size. Size `s` is explored by a
//! depth-first walk over atom-ordered prefixes that are consistent with
//! `Γ` and contain no implicant already found; every candidate of size `s`
//! that survives and entails `P` is therefore minimal.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::formula::{AtomId, Formula, Literal, LiteralSet, Theory};
use crate::parser;
use crate::table::{Table, Universe};

/// `PI(Γ, P)` in canonical order: by size, then by printed form.
#[derive(Clone, PartialEq, Eq)]
pub struct PrimeImplicantSet {
    implicants: Vec<LiteralSet>,
    theory_atoms: BTreeSet<AtomId>,
    formula_atoms: BTreeSet<AtomId>,
}

impl PrimeImplicantSet {
    pub fn implicants(&self) -> &[LiteralSet] {
        &self.implicants
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LiteralSet> {
        self.implicants.iter()
    }

    pub fn len(&self) -> usize {
        self.implicants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.implicants.is_empty()
    }

    pub fn contains(&self, pi: &LiteralSet) -> bool {
        self.implicants.iter().any(|m| m == pi)
    }

    /// True for `{∅}`, the value of `PI(Γ, P)` when `Γ` is consistent and entails `P`.
    pub fn is_empty_implicant_only(&self) -> bool {
        self.implicants.len() == 1 && self.implicants[0].is_empty()
    }

    /// Atoms of the background theory the search ranged over.
    pub fn theory_atoms(&self) -> &BTreeSet<AtomId> {
        &self.theory_atoms
    }

    /// Atoms of the formula the search ranged over.
    pub fn formula_atoms(&self) -> &BTreeSet<AtomId> {
        &self.formula_atoms
    }

    /// Every literal occurring in some member.
    pub fn literals(&self) -> BTreeSet<Literal> {
        self.implicants.iter().flat_map(|pi| pi.iter()).collect()
    }

    pub fn into_vec(self) -> Vec<LiteralSet> {
        self.implicants
    }
}

impl<'a> IntoIterator for &'a PrimeImplicantSet {
    type Item = &'a LiteralSet;
    type IntoIter = std::slice::Iter<'a, LiteralSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.implicants.iter()
    }
}

impl fmt::Display for PrimeImplicantSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pi in &self.implicants {
            writeln!(f, "{pi}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PrimeImplicantSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.implicants.iter()).finish()
    }
}

/// Sorts literal sets by size, then by printed form.
pub fn canonical_sort(sets: &mut [LiteralSet]) {
    sets.sort_by_cached_key(|s| (s.len(), s.to_string()));
}

/// A vocabulary of hypothesis literals. Unlike [`LiteralSet`] it may hold
/// both polarities of an atom.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct HypothesisSet {
    literals: BTreeSet<Literal>,
}

impl HypothesisSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Both literals of every given atom.
    pub fn all_over<'a, I: IntoIterator<Item = &'a AtomId>>(atoms: I) -> Self {
        atoms
            .into_iter()
            .flat_map(|a| [Literal::pos(a.clone()), Literal::neg(a.clone())])
            .collect()
    }

    pub fn insert(&mut self, l: Literal) {
        self.literals.insert(l);
    }

    pub fn contains(&self, l: &Literal) -> bool {
        self.literals.contains(l)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Literal> {
        self.literals.iter()
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }
}

impl FromIterator<Literal> for HypothesisSet {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> Self {
        HypothesisSet {
            literals: iter.into_iter().collect(),
        }
    }
}

impl FromStr for HypothesisSet {
    type Err = Error;

    /// Parses `{x, !x, y}`; both polarities of an atom are allowed.
    fn from_str(s: &str) -> Result<Self> {
        Ok(parser::parse_literal_list(s)?.into_iter().collect())
    }
}

/// A literal set in bit form: `care` marks mentioned atoms, `value` their polarity.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Cube {
    care: u32,
    value: u32,
}

impl Cube {
    const EMPTY: Cube = Cube { care: 0, value: 0 };

    fn with(self, atom: usize, positive: bool) -> Cube {
        Cube {
            care: self.care | 1 << atom,
            value: self.value | (positive as u32) << atom,
        }
    }

    fn contains(self, other: Cube) -> bool {
        other.care & !self.care == 0 && (other.value ^ self.value) & other.care == 0
    }

    fn to_literals(self, u: &Universe) -> LiteralSet {
        LiteralSet::from_literals(
            (0..u.len())
                .filter(|k| self.care >> k & 1 == 1)
                .map(|k| Literal::new(u.atoms()[k].clone(), self.value >> k & 1 == 1)),
        )
        .expect("a cube mentions each atom once")
    }
}

/// Enumerates the ⊆-minimal literal sets drawn from `vocab` that are
/// consistent with `gamma` and whose models within `gamma` all lie in `goal`.
struct MinimalSearch<'a> {
    universe: &'a Universe,
    goal: &'a Table,
    /// (atom index, polarity), sorted by atom index.
    vocab: Vec<(usize, bool)>,
    /// For each vocabulary position, the first position on a later atom.
    next_atom: Vec<usize>,
    found: Vec<Cube>,
}

impl<'a> MinimalSearch<'a> {
    fn new(universe: &'a Universe, goal: &'a Table, mut vocab: Vec<(usize, bool)>) -> Self {
        vocab.sort_unstable();
        vocab.dedup();
        let next_atom = (0..vocab.len())
            .map(|i| {
                let atom = vocab[i].0;
                (i..vocab.len())
                    .find(|&j| vocab[j].0 != atom)
                    .unwrap_or(vocab.len())
            })
            .collect();
        MinimalSearch {
            universe,
            goal,
            vocab,
            next_atom,
            found: Vec::new(),
        }
    }

    fn run(mut self, gamma: &Table) -> Vec<Cube> {
        if gamma.is_empty() {
            return Vec::new();
        }
        let distinct_atoms = self
            .vocab
            .iter()
            .map(|&(a, _)| a)
            .collect::<BTreeSet<_>>()
            .len();
        for size in 0..=distinct_atoms {
            let open = self.level(Cube::EMPTY, gamma, 0, size);
            if !open {
                break;
            }
        }
        self.found
    }

    /// Explores prefixes extending `cube` (whose models within Γ are
    /// `models`) up to `remaining` more literals taken from `vocab[from..]`.
    /// Returns whether some prefix at the target size was left open, i.e.
    /// consistent, not an implicant, and not a superset of one.
    fn level(&mut self, cube: Cube, models: &Table, from: usize, remaining: usize) -> bool {
        if self.found.iter().any(|&f| cube.contains(f)) {
            return false;
        }
        if remaining == 0 {
            if models.is_subset(self.goal) {
                self.found.push(cube);
                return false;
            }
            return true;
        }
        if models.is_subset(self.goal) {
            // Would already contain a smaller implicant.
            return false;
        }
        let mut open = false;
        for i in from..self.vocab.len() {
            let (atom, positive) = self.vocab[i];
            let narrowed = models.and(self.universe.literal_table(atom, positive));
            if narrowed.is_empty() {
                continue;
            }
            let next = self.next_atom[i];
            open |= self.level(cube.with(atom, positive), &narrowed, next, remaining - 1);
        }
        open
    }
}

fn vocabulary_all(u: &Universe) -> Vec<(usize, bool)> {
    (0..u.len()).flat_map(|k| [(k, false), (k, true)]).collect()
}

fn collect(u: &Universe, cubes: Vec<Cube>) -> Vec<LiteralSet> {
    let mut sets: Vec<LiteralSet> = cubes.into_iter().map(|c| c.to_literals(u)).collect();
    canonical_sort(&mut sets);
    sets
}

/// `PI(Γ, P)`.
pub fn prime_implicants(theory: &Theory, p: &Formula) -> Result<PrimeImplicantSet> {
    let u = Universe::spanning(theory, [p])?;
    let gamma = u.theory_table(theory);
    let goal = u.table(p);
    let cubes = MinimalSearch::new(&u, &goal, vocabulary_all(&u)).run(&gamma);
    Ok(PrimeImplicantSet {
        implicants: collect(&u, cubes),
        theory_atoms: theory.atoms(),
        formula_atoms: p.atoms(),
    })
}

/// Decides whether `π ∈ PI(Γ, P)` without enumerating the whole set.
///
/// Entailment from `Γ ∪ π′` is monotone in `π′`, so minimality only needs
/// the subsets obtained by dropping one literal.
pub fn is_prime_implicant(theory: &Theory, p: &Formula, pi: &LiteralSet) -> Result<bool> {
    let mut atoms = theory.atoms();
    p.collect_atoms(&mut atoms);
    atoms.extend(pi.atoms());
    let u = Universe::new(atoms)?;
    let gamma = u.theory_table(theory);
    let goal = u.table(p);
    let with_pi = gamma.and(&u.cube(pi)?);
    if with_pi.is_empty() || !with_pi.is_subset(&goal) {
        return Ok(false);
    }
    for l in pi.iter() {
        let mut smaller = pi.clone();
        smaller.remove(&l);
        if gamma.and(&u.cube(&smaller)?).is_subset(&goal) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `l` belongs to at least one member of `PI(Γ, P)`.
pub fn literal_in_some_pi(theory: &Theory, p: &Formula, l: &Literal) -> Result<bool> {
    if !theory.atoms().contains(&l.atom) && !p.atoms().contains(&l.atom) {
        return Ok(false);
    }
    Ok(prime_implicants(theory, p)?
        .iter()
        .any(|pi| pi.contains(l)))
}

/// True iff `PI(Γ, P)` is non-empty and every member contains `l`.
pub fn literal_in_all_pi(theory: &Theory, p: &Formula, l: &Literal) -> Result<bool> {
    let pis = prime_implicants(theory, p)?;
    Ok(!pis.is_empty() && pis.iter().all(|pi| pi.contains(l)))
}

/// The ⊆-minimal `π ⊆ H` with `Γ ∪ π` consistent and `Γ ∪ π ⊨ F`, in
/// canonical order.
pub fn abductive_explanations(
    theory: &Theory,
    f: &Formula,
    hypotheses: &HypothesisSet,
) -> Result<Vec<LiteralSet>> {
    let u = Universe::spanning(theory, [f])?;
    let gamma = u.theory_table(theory);
    let goal = u.table(f);
    // Hypotheses on atoms outside the query can never be part of a minimal
    // explanation.
    let vocab = hypotheses
        .iter()
        .filter_map(|l| u.index_of(&l.atom).map(|k| (k, l.positive)))
        .collect();
    let cubes = MinimalSearch::new(&u, &goal, vocab).run(&gamma);
    Ok(collect(&u, cubes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    fn theory(items: &[&str]) -> Theory {
        items.iter().map(|s| f(s)).collect()
    }

    fn set(s: &str) -> LiteralSet {
        s.parse().unwrap()
    }

    fn lit(s: &str) -> Literal {
        s.parse().unwrap()
    }

    fn shown(pis: &PrimeImplicantSet) -> Vec<String> {
        pis.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn single_implicants() {
        let pis = prime_implicants(&Theory::new(), &f("x & y")).unwrap();
        assert_eq!(shown(&pis), ["{x, y}"]);
        let pis = prime_implicants(&Theory::new(), &f("x | y")).unwrap();
        assert_eq!(shown(&pis), ["{x}", "{y}"]);
    }

    #[test]
    fn background_adds_implicants() {
        let pis = prime_implicants(&theory(&["y -> x"]), &f("x")).unwrap();
        assert_eq!(shown(&pis), ["{x}", "{y}"]);
    }

    #[test]
    fn disjunction_of_conjunction() {
        let pis = prime_implicants(&Theory::new(), &f("x | (y & z)")).unwrap();
        assert_eq!(shown(&pis), ["{x}", "{y, z}"]);
    }

    #[test]
    fn trivial_formulas() {
        let valid = prime_implicants(&Theory::new(), &f("x | !x")).unwrap();
        assert!(valid.is_empty_implicant_only());
        assert_eq!(valid.to_string(), "{}\n");
        assert!(prime_implicants(&Theory::new(), &f("x & !x")).unwrap().is_empty());
        assert!(prime_implicants(&theory(&["x", "!x"]), &f("y")).unwrap().is_empty());
        assert!(prime_implicants(&theory(&["x"]), &f("x | z"))
            .unwrap()
            .is_empty_implicant_only());
    }

    #[test]
    fn provenance_is_recorded() {
        let pis = prime_implicants(&theory(&["z -> y"]), &f("x")).unwrap();
        assert_eq!(pis.theory_atoms().len(), 2);
        assert_eq!(pis.formula_atoms().len(), 1);
    }

    #[test]
    fn prime_implicant_check() {
        assert!(is_prime_implicant(&Theory::new(), &f("x & y"), &set("{x, y}")).unwrap());
        let g = theory(&["x | y", "z -> y"]);
        let q = f("(x & z) | (!x & y & s)");
        assert!(!is_prime_implicant(&g, &q, &set("{!x, y, s}")).unwrap());
        assert!(is_prime_implicant(&g, &q, &set("{!x, s}")).unwrap());
        assert!(!is_prime_implicant(&Theory::new(), &f("x"), &set("{}")).unwrap());
        // extra atom outside the formula
        assert!(!is_prime_implicant(&Theory::new(), &f("x"), &set("{x, w}")).unwrap());
    }

    #[test]
    fn literal_existence_and_universality() {
        let xy = f("x & y");
        assert!(literal_in_some_pi(&Theory::new(), &xy, &lit("x")).unwrap());
        assert!(literal_in_some_pi(&theory(&["y -> x"]), &f("x"), &lit("y")).unwrap());
        assert!(!literal_in_some_pi(&Theory::new(), &xy, &lit("z")).unwrap());
        assert!(!literal_in_some_pi(&Theory::new(), &xy, &lit("!x")).unwrap());

        assert!(literal_in_all_pi(&Theory::new(), &xy, &lit("x")).unwrap());
        assert!(!literal_in_all_pi(&Theory::new(), &f("x | y"), &lit("x")).unwrap());
        assert!(!literal_in_all_pi(&Theory::new(), &f("x & !x"), &lit("x")).unwrap());
    }

    #[test]
    fn explanations() {
        let h: HypothesisSet = "{y, !y}".parse().unwrap();
        let ex = abductive_explanations(&theory(&["y -> x"]), &f("x"), &h).unwrap();
        assert_eq!(ex, vec![set("{y}")]);

        let h: HypothesisSet = "{y}".parse().unwrap();
        assert!(abductive_explanations(&Theory::new(), &f("x"), &h).unwrap().is_empty());

        // hypotheses over foreign atoms are ignored
        let h: HypothesisSet = "{x, w}".parse().unwrap();
        assert_eq!(
            abductive_explanations(&Theory::new(), &f("x"), &h).unwrap(),
            vec![set("{x}")]
        );
    }

    #[test]
    fn explanations_over_all_literals_are_prime_implicants() {
        let g = theory(&["x | y", "z -> y"]);
        let p = f("(x & r) | (y & s)");
        let all = HypothesisSet::all_over(&Universe::spanning(&g, [&p]).unwrap().atoms().to_vec());
        assert_eq!(
            abductive_explanations(&g, &p, &all).unwrap(),
            prime_implicants(&g, &p).unwrap().into_vec()
        );
    }

    #[test]
    fn hypothesis_sets_allow_both_polarities() {
        let h: HypothesisSet = "{x, !x}".parse().unwrap();
        assert_eq!(h.len(), 2);
        assert!(h.contains(&lit("!x")));
    }
}
