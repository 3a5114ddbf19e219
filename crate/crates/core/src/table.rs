//! Bit-parallel truth tables over a small, fixed universe of atoms.
//!
//! Bit `i` of a table is the value of the formula under the assignment in
//! which atom `k` of the universe is true iff bit `k` of `i` is set.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::formula::{AtomId, Formula, Literal, LiteralSet, Theory};

/// Largest universe a single query may range over.
pub const MAX_ATOMS: usize = 22;

const PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Table {
    words: Vec<u64>,
    tail: u64,
}

impl Table {
    fn filled(n_atoms: usize, value: bool) -> Self {
        let bits = 1usize << n_atoms;
        let n_words = bits.div_ceil(64);
        let tail = if bits >= 64 { u64::MAX } else { (1u64 << bits) - 1 };
        let fill = if value { u64::MAX } else { 0 };
        let mut t = Table {
            words: vec![fill; n_words],
            tail,
        };
        t.mask_tail();
        t
    }

    fn mask_tail(&mut self) {
        if let Some(last) = self.words.last_mut() {
            *last &= self.tail;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn and_assign(&mut self, other: &Table) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn and(&self, other: &Table) -> Table {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    fn or_assign(&mut self, other: &Table) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    fn negate(&mut self) {
        for w in &mut self.words {
            *w = !*w;
        }
        self.mask_tail();
    }

    fn iff_assign(&mut self, other: &Table) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a = !(*a ^ *b);
        }
        self.mask_tail();
    }

    fn implies_assign(&mut self, other: &Table) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a = !*a | *b;
        }
        self.mask_tail();
    }

    /// True iff every row set here is also set in `other`.
    pub fn is_subset(&self, other: &Table) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| wi * 64 + b)
        })
    }
}

/// Sorted atoms of a query together with their table positions.
#[derive(Clone, Debug)]
pub(crate) struct Universe {
    atoms: Vec<AtomId>,
    index: BTreeMap<AtomId, usize>,
    literal_tables: Vec<[Table; 2]>,
}

impl Universe {
    pub fn new(atoms: BTreeSet<AtomId>) -> Result<Self> {
        if atoms.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms {
                count: atoms.len(),
                max: MAX_ATOMS,
            });
        }
        let atoms: Vec<AtomId> = atoms.into_iter().collect();
        let n = atoms.len();
        let index = atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();
        let literal_tables = (0..n)
            .map(|k| {
                let pos = atom_table(n, k);
                let mut neg = pos.clone();
                neg.negate();
                [neg, pos]
            })
            .collect();
        Ok(Universe {
            atoms,
            index,
            literal_tables,
        })
    }

    /// Universe spanning the atoms of a theory and some formulas.
    pub fn spanning<'a, I>(theory: &Theory, formulas: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        let mut atoms = theory.atoms();
        for f in formulas {
            f.collect_atoms(&mut atoms);
        }
        Universe::new(atoms)
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[AtomId] {
        &self.atoms
    }

    pub fn index_of(&self, atom: &AtomId) -> Option<usize> {
        self.index.get(atom).copied()
    }

    pub fn top(&self) -> Table {
        Table::filled(self.len(), true)
    }

    pub fn literal_table(&self, atom_index: usize, positive: bool) -> &Table {
        &self.literal_tables[atom_index][positive as usize]
    }

    /// Rows where every literal of `pi` holds; literals over atoms outside
    /// the universe are reported as an error.
    pub fn cube(&self, pi: &LiteralSet) -> Result<Table> {
        let mut t = self.top();
        for l in pi.iter() {
            let k = self
                .index_of(&l.atom)
                .ok_or_else(|| Error::UncoveredAtom(l.atom.to_string()))?;
            t.and_assign(self.literal_table(k, l.positive));
        }
        Ok(t)
    }

    /// Truth table of `f`; every atom of `f` must belong to the universe.
    pub fn table(&self, f: &Formula) -> Table {
        match f {
            Formula::Atom(a) => {
                let k = self
                    .index_of(a)
                    .expect("formula atom missing from query universe");
                self.literal_table(k, true).clone()
            }
            Formula::Top => self.top(),
            Formula::Bottom => Table::filled(self.len(), false),
            Formula::Not(g) => {
                let mut t = self.table(g);
                t.negate();
                t
            }
            Formula::And(l, r) => {
                let mut t = self.table(l);
                if !t.is_empty() {
                    t.and_assign(&self.table(r));
                }
                t
            }
            Formula::Or(l, r) => {
                let mut t = self.table(l);
                t.or_assign(&self.table(r));
                t
            }
            Formula::Implies(l, r) => {
                let mut t = self.table(l);
                t.implies_assign(&self.table(r));
                t
            }
            Formula::Iff(l, r) => {
                let mut t = self.table(l);
                t.iff_assign(&self.table(r));
                t
            }
        }
    }

    /// Rows satisfying every member of the theory.
    pub fn theory_table(&self, theory: &Theory) -> Table {
        let mut t = self.top();
        for f in theory {
            if t.is_empty() {
                break;
            }
            t.and_assign(&self.table(f));
        }
        t
    }

    /// The full assignment encoded by `row`.
    pub fn row_literals(&self, row: usize) -> LiteralSet {
        LiteralSet::from_literals(
            self.atoms
                .iter()
                .enumerate()
                .map(|(k, a)| Literal::new(a.clone(), row >> k & 1 == 1)),
        )
        .expect("a row assigns each atom once")
    }
}

fn atom_table(n_atoms: usize, k: usize) -> Table {
    let mut t = Table::filled(n_atoms, false);
    if k < 6 {
        for w in &mut t.words {
            *w = PATTERNS[k];
        }
    } else {
        for (wi, w) in t.words.iter_mut().enumerate() {
            if wi >> (k - 6) & 1 == 1 {
                *w = u64::MAX;
            }
        }
    }
    t.mask_tail();
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe(names: &[&str]) -> Universe {
        Universe::new(names.iter().map(|n| AtomId::new(n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn atom_tables_match_row_encoding() {
        for n in [0usize, 1, 3, 6, 7, 9] {
            let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let u = universe(&refs);
            for k in 0..n {
                let rows: Vec<usize> = u.literal_table(k, true).rows().collect();
                let expected: Vec<usize> = (0..1usize << n).filter(|r| r >> k & 1 == 1).collect();
                assert_eq!(rows, expected, "n={n} k={k}");
            }
            assert_eq!(u.top().rows().count(), 1 << n);
        }
    }

    #[test]
    fn connectives() {
        let u = universe(&["x", "y"]);
        let t = |s: &str| u.table(&s.parse().unwrap()).rows().collect::<Vec<_>>();
        // rows: bit0 = x, bit1 = y
        assert_eq!(t("x & y"), vec![3]);
        assert_eq!(t("x | y"), vec![1, 2, 3]);
        assert_eq!(t("x -> y"), vec![0, 2, 3]);
        assert_eq!(t("x <-> y"), vec![0, 3]);
        assert_eq!(t("!x"), vec![0, 2]);
        assert_eq!(t("false"), Vec::<usize>::new());
    }

    #[test]
    fn too_many_atoms() {
        let atoms = (0..=MAX_ATOMS)
            .map(|i| AtomId::new(&format!("a{i}")).unwrap())
            .collect();
        assert!(matches!(
            Universe::new(atoms),
            Err(Error::TooManyAtoms { .. })
        ));
    }
}
