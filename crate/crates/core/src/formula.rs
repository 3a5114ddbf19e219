//! The propositional language: atoms, literals, literal sets, formulas and
//! theories, together with the purely syntactic operations on them.
//!
//! `∧`, `∨` and `↔` are kept as first-class nodes so that a formula prints
//! back exactly as it was written. Conditioning and atom substitution are
//! plain substitutions; constant folding lives in [`crate::semantics::simplify`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::parser;

/// Name of a propositional atom, matching `[a-z][A-Za-z0-9_]*`.
///
/// `true` and `false` are reserved for the constants.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomId(Arc<str>);

impl AtomId {
    pub fn new(name: &str) -> Result<Self> {
        if is_atom_name(name) {
            Ok(AtomId(Arc::from(name)))
        } else {
            Err(Error::InvalidAtom(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub(crate) fn new_unchecked(name: &str) -> Self {
        debug_assert!(is_atom_name(name));
        AtomId(Arc::from(name))
    }
}

pub(crate) fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && name != "true" && name != "false"
}

impl fmt::Display for AtomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for AtomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for AtomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AtomId::new(s.trim())
    }
}

/// An atom or its negation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: AtomId,
    pub positive: bool,
}

impl Literal {
    pub fn new(atom: AtomId, positive: bool) -> Self {
        Literal { atom, positive }
    }

    pub fn pos(atom: AtomId) -> Self {
        Literal::new(atom, true)
    }

    pub fn neg(atom: AtomId) -> Self {
        Literal::new(atom, false)
    }

    /// The complementary literal `-l`.
    pub fn complement(&self) -> Self {
        Literal::new(self.atom.clone(), !self.positive)
    }

    pub fn to_formula(&self) -> Formula {
        let atom = Formula::Atom(self.atom.clone());
        if self.positive {
            atom
        } else {
            Formula::not(atom)
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("!")?;
        }
        write!(f, "{}", self.atom)
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Literal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_prefix('!') {
            Some(rest) => Ok(Literal::neg(AtomId::new(rest.trim())?)),
            None => Ok(Literal::pos(AtomId::new(s)?)),
        }
    }
}

/// A consistent set of literals.
///
/// Doubles as the conjunction of its members (the empty set is `⊤`) and as
/// a partial assignment. Consistency is enforced on construction, so at
/// most one literal per atom is ever stored.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiteralSet {
    polarity: BTreeMap<AtomId, bool>,
}

impl LiteralSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_literals<I>(literals: I) -> Result<Self>
    where
        I: IntoIterator<Item = Literal>,
    {
        let mut set = LiteralSet::new();
        for l in literals {
            set.insert(l)?;
        }
        Ok(set)
    }

    /// Adds `l`, failing if its complement is already present.
    pub fn insert(&mut self, l: Literal) -> Result<()> {
        match self.polarity.get(&l.atom) {
            Some(&p) if p != l.positive => Err(Error::InconsistentLiteralSet(l.atom.to_string())),
            _ => {
                self.polarity.insert(l.atom, l.positive);
                Ok(())
            }
        }
    }

    pub fn remove(&mut self, l: &Literal) -> bool {
        if self.contains(l) {
            self.polarity.remove(&l.atom);
            true
        } else {
            false
        }
    }

    pub fn len(&self) -> usize {
        self.polarity.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polarity.is_empty()
    }

    pub fn contains(&self, l: &Literal) -> bool {
        self.polarity.get(&l.atom) == Some(&l.positive)
    }

    /// Polarity assigned to `atom`, if any.
    pub fn value(&self, atom: &AtomId) -> Option<bool> {
        self.polarity.get(atom).copied()
    }

    /// Literals in atom order.
    pub fn iter(&self) -> impl Iterator<Item = Literal> + '_ {
        self.polarity
            .iter()
            .map(|(a, &p)| Literal::new(a.clone(), p))
    }

    pub fn atoms(&self) -> BTreeSet<AtomId> {
        self.polarity.keys().cloned().collect()
    }

    /// `-π`.
    pub fn complement(&self) -> Self {
        LiteralSet {
            polarity: self.polarity.iter().map(|(a, &p)| (a.clone(), !p)).collect(),
        }
    }

    pub fn intersects(&self, other: &LiteralSet) -> bool {
        self.iter().any(|l| other.contains(&l))
    }

    /// True if some literal of `self` is the complement of a literal of `other`.
    pub fn clashes_with(&self, other: &LiteralSet) -> bool {
        self.polarity
            .iter()
            .any(|(a, &p)| other.polarity.get(a) == Some(&!p))
    }

    pub fn is_subset(&self, other: &LiteralSet) -> bool {
        self.len() <= other.len() && self.iter().all(|l| other.contains(&l))
    }

    pub fn is_proper_subset(&self, other: &LiteralSet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    /// Union of two sets; fails if the result would be inconsistent.
    pub fn union(&self, other: &LiteralSet) -> Result<LiteralSet> {
        let mut out = self.clone();
        for l in other.iter() {
            out.insert(l)?;
        }
        Ok(out)
    }

    /// The conjunction of the members, `⊤` when empty.
    pub fn to_formula(&self) -> Formula {
        Formula::conjunction(self.iter().map(|l| l.to_formula()))
    }

    /// The disjunction of the members (the set read as a clause), `⊥` when empty.
    pub fn to_clause_formula(&self) -> Formula {
        Formula::disjunction(self.iter().map(|l| l.to_formula()))
    }
}

impl fmt::Display for LiteralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for LiteralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LiteralSet {
    type Err = Error;

    /// Parses `{x, !y}`.
    fn from_str(s: &str) -> Result<Self> {
        let literals = parser::parse_literal_list(s)?;
        LiteralSet::from_literals(literals)
    }
}

/// Propositional formula.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(AtomId),
    Top,
    Bottom,
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(atom: AtomId) -> Self {
        Formula::Atom(atom)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Formula, r: Formula) -> Self {
        Formula::Iff(Box::new(l), Box::new(r))
    }

    /// Left-nested conjunction; `⊤` for an empty sequence.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::Top)
    }

    /// Left-nested disjunction; `⊥` for an empty sequence.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::Bottom)
    }

    pub fn parse(text: &str) -> Result<Self> {
        parser::parse_formula(text)
    }

    /// Atoms occurring syntactically in the formula.
    pub fn atoms(&self) -> BTreeSet<AtomId> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<AtomId>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Top | Formula::Bottom => {}
            Formula::Not(f) => f.collect_atoms(out),
            Formula::Implies(l, r) | Formula::And(l, r) | Formula::Or(l, r) | Formula::Iff(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bottom => 1,
            Formula::Not(f) => 1 + f.size(),
            Formula::Implies(l, r) | Formula::And(l, r) | Formula::Or(l, r) | Formula::Iff(l, r) => {
                1 + l.size() + r.size()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bottom => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::Implies(l, r) | Formula::And(l, r) | Formula::Or(l, r) | Formula::Iff(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    /// Rebuilds the tree with every atom passed through `leaf`.
    fn map_atoms(&self, leaf: &impl Fn(&AtomId) -> Formula) -> Formula {
        match self {
            Formula::Atom(a) => leaf(a),
            Formula::Top => Formula::Top,
            Formula::Bottom => Formula::Bottom,
            Formula::Not(f) => Formula::not(f.map_atoms(leaf)),
            Formula::Implies(l, r) => Formula::implies(l.map_atoms(leaf), r.map_atoms(leaf)),
            Formula::And(l, r) => Formula::and(l.map_atoms(leaf), r.map_atoms(leaf)),
            Formula::Or(l, r) => Formula::or(l.map_atoms(leaf), r.map_atoms(leaf)),
            Formula::Iff(l, r) => Formula::iff(l.map_atoms(leaf), r.map_atoms(leaf)),
        }
    }

    /// `P|l`: every occurrence of `l`'s atom becomes `⊤` (positive `l`) or
    /// `⊥` (negative `l`). No simplification is performed.
    pub fn condition(&self, l: &Literal) -> Formula {
        let constant = if l.positive { Formula::Top } else { Formula::Bottom };
        self.map_atoms(&|a| {
            if *a == l.atom {
                constant.clone()
            } else {
                Formula::Atom(a.clone())
            }
        })
    }

    /// `P|π`, conditioning on the members of `π` in atom order.
    pub fn condition_set(&self, pi: &LiteralSet) -> Formula {
        pi.iter().fold(self.clone(), |f, l| f.condition(&l))
    }

    /// Conditions on `literals` in the given order, rejecting a sequence
    /// that mentions an atom with both polarities.
    pub fn condition_sequence<'a, I>(&self, literals: I) -> Result<Formula>
    where
        I: IntoIterator<Item = &'a Literal>,
    {
        let mut seen = LiteralSet::new();
        let mut out = self.clone();
        for l in literals {
            seen.insert(l.clone())?;
            out = out.condition(l);
        }
        Ok(out)
    }

    /// `P(x/y)`: simultaneously replaces every occurrence of `from` by `to`.
    pub fn substitute_atom(&self, from: &AtomId, to: &AtomId) -> Formula {
        self.map_atoms(&|a| {
            if a == from {
                Formula::Atom(to.clone())
            } else {
                Formula::Atom(a.clone())
            }
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Not(_) => 5,
            Formula::Atom(_) | Formula::Top | Formula::Bottom => 6,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, parens: bool) -> fmt::Result {
        if parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prec = self.precedence();
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Top => f.write_str("true"),
            Formula::Bottom => f.write_str("false"),
            Formula::Not(inner) => {
                f.write_str("!")?;
                inner.write_child(f, inner.precedence() < prec)
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                let op = if matches!(self, Formula::And(..)) { " & " } else { " | " };
                // left-associative
                l.write_child(f, l.precedence() < prec)?;
                f.write_str(op)?;
                r.write_child(f, r.precedence() <= prec)
            }
            Formula::Implies(l, r) | Formula::Iff(l, r) => {
                let op = if matches!(self, Formula::Implies(..)) { " -> " } else { " <-> " };
                // right-associative
                l.write_child(f, l.precedence() <= prec)?;
                f.write_str(op)?;
                r.write_child(f, r.precedence() < prec)
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parser::parse_formula(s)
    }
}

/// A finite set of formulas, read semantically as its deductive closure.
///
/// List order never influences any decision.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Theory {
    formulas: Vec<Formula>,
}

impl Theory {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_formulas<I: IntoIterator<Item = Formula>>(formulas: I) -> Self {
        Theory {
            formulas: formulas.into_iter().collect(),
        }
    }

    /// Parses one formula per line; `#` starts a comment, blank lines are skipped.
    pub fn parse_lines(text: &str) -> Result<Self> {
        let mut formulas = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let f = Formula::parse(line).map_err(|e| Error::AtLine {
                line: idx + 1,
                inner: Box::new(e),
            })?;
            formulas.push(f);
        }
        Ok(Theory { formulas })
    }

    pub fn push(&mut self, f: Formula) {
        self.formulas.push(f);
    }

    /// `Γ ∪ {f}` as a new theory.
    pub fn with(&self, f: Formula) -> Theory {
        let mut out = self.clone();
        out.push(f);
        out
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.formulas.iter()
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn atoms(&self) -> BTreeSet<AtomId> {
        let mut out = BTreeSet::new();
        for f in &self.formulas {
            f.collect_atoms(&mut out);
        }
        out
    }

    /// `⋀Γ`, `⊤` for the empty theory.
    pub fn conjunction(&self) -> Formula {
        Formula::conjunction(self.formulas.iter().cloned())
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.formulas.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> IntoIterator for &'a Theory {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.formulas.iter()
    }
}

impl FromIterator<Formula> for Theory {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        Theory::from_formulas(iter)
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    fn lit(s: &str) -> Literal {
        s.parse().unwrap()
    }

    fn set(s: &str) -> LiteralSet {
        s.parse().unwrap()
    }

    #[test]
    fn atom_names() {
        assert!(AtomId::new("x").is_ok());
        assert!(AtomId::new("milk_2B").is_ok());
        assert!(AtomId::new("X").is_err());
        assert!(AtomId::new("2x").is_err());
        assert!(AtomId::new("").is_err());
        assert!(AtomId::new("true").is_err());
        assert!(AtomId::new("x-y").is_err());
    }

    #[test]
    fn atoms_examples() {
        let a = |names: &[&str]| -> BTreeSet<AtomId> {
            names.iter().map(|n| AtomId::new(n).unwrap()).collect()
        };
        assert_eq!(f("x & y").atoms(), a(&["x", "y"]));
        assert_eq!(f("true").atoms(), a(&[]));
        assert_eq!(f("(x | !x) & y").atoms(), a(&["x", "y"]));
    }

    #[test]
    fn condition_examples() {
        let xy = f("x & y");
        assert_eq!(xy.condition(&lit("x")), Formula::and(Formula::Top, f("y")));
        assert_eq!(xy.condition(&lit("!x")), Formula::and(Formula::Bottom, f("y")));
        assert_eq!(f("y").condition(&lit("x")), f("y"));
    }

    #[test]
    fn condition_set_examples() {
        assert_eq!(
            f("x & y").condition_set(&set("{x, y}")),
            Formula::and(Formula::Top, Formula::Top)
        );
        let g = f("(x | z) & !y -> w");
        assert_eq!(g.condition_set(&LiteralSet::new()), g);
        assert_eq!(
            f("(x | z) & y").condition_set(&set("{x}")),
            Formula::and(Formula::or(Formula::Top, f("z")), f("y"))
        );
    }

    #[test]
    fn condition_sequence_rejects_clash() {
        let g = f("x & y");
        let err = g.condition_sequence(&[lit("x"), lit("!x")]).unwrap_err();
        assert!(matches!(err, Error::InconsistentLiteralSet(_)));
        let a = g.condition_sequence(&[lit("y"), lit("x")]).unwrap();
        let b = g.condition_sequence(&[lit("x"), lit("y")]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn substitute_examples() {
        let x = AtomId::new("x").unwrap();
        let y = AtomId::new("y").unwrap();
        assert_eq!(f("x & z").substitute_atom(&x, &y), f("y & z"));
        assert_eq!(f("x & y").substitute_atom(&x, &y), f("y & y"));
        assert_eq!(f("z").substitute_atom(&x, &y), f("z"));
    }

    #[test]
    fn literal_sets() {
        assert!(matches!(
            "{x, !x}".parse::<LiteralSet>(),
            Err(Error::InconsistentLiteralSet(_))
        ));
        let s = set("{y, !x, z}");
        assert_eq!(s.to_string(), "{!x, y, z}");
        assert_eq!(s.complement().to_string(), "{x, !y, !z}");
        assert_eq!(s.complement().len(), s.len());
        assert_eq!(s.complement().complement(), s);
        assert!(set("{}").is_empty());
        assert!(set("{x}").is_proper_subset(&set("{x, y}")));
        assert!(set("{x, !y}").clashes_with(&set("{x, y}")));
        assert_eq!(LiteralSet::new().to_formula(), Formula::Top);
        assert_eq!(LiteralSet::new().to_clause_formula(), Formula::Bottom);
    }

    #[test]
    fn literal_complement_involution() {
        let l = lit("!q");
        assert_eq!(l.complement(), lit("q"));
        assert_eq!(l.complement().complement(), l);
    }

    #[test]
    fn printing_uses_minimal_parentheses() {
        assert_eq!(f("(x & y) & z").to_string(), "x & y & z");
        assert_eq!(f("x & (y & z)").to_string(), "x & (y & z)");
        assert_eq!(f("(x -> y) -> z").to_string(), "(x -> y) -> z");
        assert_eq!(f("x -> (y -> z)").to_string(), "x -> y -> z");
        assert_eq!(f("!(x | y) & z").to_string(), "!(x | y) & z");
        assert_eq!(f("(x | y) & z").to_string(), "(x | y) & z");
        assert_eq!(f("!!x").to_string(), "!!x");
        assert_eq!(f("x <-> (y -> z)").to_string(), "x <-> y -> z");
    }

    #[test]
    fn theory_lines() {
        let t = Theory::parse_lines("# background\nx | y\n\nz -> y  # rule\n").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.formulas()[1], f("z -> y"));
        let err = Theory::parse_lines("x\ny &\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 2, .. }));
    }
}
