//! Inference rules for partial entailment, checked on concrete instances.
//!
//! The sweep in [`table2_report`] is a falsification harness: a "yes" cell
//! surviving it is evidence, not proof.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::entailment::{is_trivial, partially_entails, EntailmentKind};
use crate::error::{Error, Result};
use crate::formula::{AtomId, Formula, Theory};
use crate::generate::{equivalent_theory, equivalent_variant, FormulaGenerator};
use crate::semantics::{entails, theories_equivalent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RuleId {
    Ref,
    Le,
    Re,
    Be,
    Rev,
    Tran,
    As,
    Lo,
    Ls,
    Ra,
    Ro,
    Mono,
    Ln,
    Rn,
    Cp,
}

impl RuleId {
    pub const ALL: [RuleId; 15] = [
        RuleId::Ref,
        RuleId::Le,
        RuleId::Re,
        RuleId::Be,
        RuleId::Rev,
        RuleId::Tran,
        RuleId::As,
        RuleId::Lo,
        RuleId::Ls,
        RuleId::Ra,
        RuleId::Ro,
        RuleId::Mono,
        RuleId::Ln,
        RuleId::Rn,
        RuleId::Cp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Ref => "REF",
            RuleId::Le => "LE",
            RuleId::Re => "RE",
            RuleId::Be => "BE",
            RuleId::Rev => "REV",
            RuleId::Tran => "TRAN",
            RuleId::As => "AS",
            RuleId::Lo => "LO",
            RuleId::Ls => "LS",
            RuleId::Ra => "RA",
            RuleId::Ro => "RO",
            RuleId::Mono => "MONO",
            RuleId::Ln => "LN",
            RuleId::Rn => "RN",
            RuleId::Cp => "CP",
        }
    }

    /// Contraposition is not one of the tabulated rules.
    pub fn is_extension(self) -> bool {
        self == RuleId::Cp
    }

    /// Whether the rule holds for `kind`.
    pub fn expected(self, kind: EntailmentKind) -> bool {
        use EntailmentKind::*;
        match self {
            RuleId::Ref | RuleId::Le | RuleId::Re | RuleId::Be | RuleId::Rev => true,
            RuleId::Tran => kind == Strong,
            RuleId::Ls => kind == Weak,
            _ => false,
        }
    }

    fn needs_r(self) -> bool {
        matches!(
            self,
            RuleId::Le | RuleId::Re | RuleId::Tran | RuleId::Lo | RuleId::Ls | RuleId::Ra | RuleId::Ro
        )
    }

    fn needs_alt_theory(self) -> bool {
        matches!(self, RuleId::Be | RuleId::Mono)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        RuleId::ALL
            .into_iter()
            .find(|r| r.as_str() == upper)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown rule `{s}`")))
    }
}

/// One instantiation of a rule schema.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleInstance {
    pub kind: EntailmentKind,
    pub theory: Theory,
    /// `Γ′` for BE and MONO.
    pub alt_theory: Option<Theory>,
    pub p: Formula,
    pub q: Formula,
    pub r: Option<Formula>,
    /// `(x, y)` for AS: every `x` is replaced by `y`.
    pub substitution: Option<(AtomId, AtomId)>,
}

impl RuleInstance {
    pub fn new(kind: EntailmentKind, theory: Theory, p: Formula, q: Formula) -> Self {
        RuleInstance {
            kind,
            theory,
            alt_theory: None,
            p,
            q,
            r: None,
            substitution: None,
        }
    }

    pub fn with_r(mut self, r: Formula) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_alt_theory(mut self, alt: Theory) -> Self {
        self.alt_theory = Some(alt);
        self
    }

    pub fn with_substitution(mut self, x: AtomId, y: AtomId) -> Self {
        self.substitution = Some((x, y));
        self
    }
}

impl fmt::Display for RuleInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Γ={}", self.theory)?;
        if let Some(alt) = &self.alt_theory {
            write!(f, ", Γ′={alt}")?;
        }
        write!(f, ", P={}, Q={}", self.p, self.q)?;
        if let Some(r) = &self.r {
            write!(f, ", R={r}")?;
        }
        if let Some((x, y)) = &self.substitution {
            write!(f, ", x={x}, y={y}")?;
        }
        Ok(())
    }
}

fn malformed(rule: RuleId, message: &str) -> Error {
    Error::MalformedInstance {
        rule,
        message: message.to_string(),
    }
}

fn validate_shape(rule: RuleId, inst: &RuleInstance) -> Result<()> {
    if rule.needs_r() != inst.r.is_some() {
        return Err(malformed(
            rule,
            if inst.r.is_some() { "unexpected formula R" } else { "formula R is required" },
        ));
    }
    if rule.needs_alt_theory() != inst.alt_theory.is_some() {
        return Err(malformed(
            rule,
            if inst.alt_theory.is_some() { "unexpected theory Γ′" } else { "theory Γ′ is required" },
        ));
    }
    match (&inst.substitution, rule == RuleId::As) {
        (Some((x, y)), true) if x == y => return Err(malformed(rule, "x and y must be distinct atoms")),
        (None, true) => return Err(malformed(rule, "atoms x and y are required")),
        (Some(_), false) => return Err(malformed(rule, "unexpected atom substitution")),
        _ => {}
    }
    if rule == RuleId::Rev && !inst.theory.is_empty() {
        return Err(malformed(rule, "the background theory must be empty"));
    }
    Ok(())
}

/// Formulas derived from the instance and the theories they are judged
/// against; all of them have to be nontrivial.
fn slots(rule: RuleId, inst: &RuleInstance) -> (Vec<Formula>, Vec<&Theory>) {
    let mut fs = vec![inst.p.clone(), inst.q.clone()];
    if let Some(r) = &inst.r {
        fs.push(r.clone());
    }
    match rule {
        RuleId::Lo => fs.push(Formula::or(inst.p.clone(), inst.r.clone().unwrap())),
        RuleId::Ra => fs.push(Formula::and(inst.r.clone().unwrap(), inst.q.clone())),
        RuleId::Ro => fs.push(Formula::or(inst.q.clone(), inst.r.clone().unwrap())),
        RuleId::As => {
            let (x, y) = inst.substitution.as_ref().unwrap();
            fs.push(inst.p.substitute_atom(x, y));
            fs.push(inst.q.substitute_atom(x, y));
        }
        _ => {}
    }
    let mut theories = vec![&inst.theory];
    if let Some(alt) = &inst.alt_theory {
        theories.push(alt);
    }
    (fs, theories)
}

/// True when every formula of the instance, including derived ones such as
/// `P ∨ R` for LO, is nontrivial with respect to every theory involved.
pub fn is_nontrivial_instance(rule: RuleId, inst: &RuleInstance) -> Result<bool> {
    validate_shape(rule, inst)?;
    let (fs, theories) = slots(rule, inst);
    for t in theories {
        for f in &fs {
            if is_trivial(t, f)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Outcome {
    antecedent: bool,
    holds: bool,
}

fn evaluate(rule: RuleId, inst: &RuleInstance) -> Result<Outcome> {
    validate_shape(rule, inst)?;
    let kind = inst.kind;
    let g = &inst.theory;
    let pe = |t: &Theory, a: &Formula, b: &Formula| -> Result<bool> {
        Ok(partially_entails(kind, t, a, b)?.holds)
    };
    let implication = |antecedent: bool, consequent: &dyn Fn() -> Result<bool>| -> Result<Outcome> {
        Ok(Outcome {
            antecedent,
            holds: !antecedent || consequent()?,
        })
    };
    let (p, q) = (&inst.p, &inst.q);
    let r = inst.r.as_ref();
    match rule {
        RuleId::Ref => implication(true, &|| pe(g, p, p)),
        RuleId::Le => {
            let r = r.unwrap();
            let ante = entails(g, &Formula::iff(p.clone(), r.clone()))? && pe(g, p, q)?;
            implication(ante, &|| pe(g, r, q))
        }
        RuleId::Re => {
            let r = r.unwrap();
            let ante = entails(g, &Formula::iff(q.clone(), r.clone()))? && pe(g, p, q)?;
            implication(ante, &|| pe(g, p, r))
        }
        RuleId::Be => {
            let alt = inst.alt_theory.as_ref().unwrap();
            let ante = theories_equivalent(g, alt)?;
            implication(ante, &|| Ok(pe(g, p, q)? == pe(alt, p, q)?))
        }
        RuleId::Rev => {
            let ante = pe(g, p, q)?;
            implication(ante, &|| Ok(!p.atoms().is_disjoint(&q.atoms())))
        }
        RuleId::Tran => {
            let r = r.unwrap();
            let ante = pe(g, p, q)? && pe(g, q, r)?;
            implication(ante, &|| pe(g, p, r))
        }
        RuleId::As => {
            let (x, y) = inst.substitution.as_ref().unwrap();
            let ante = pe(g, p, q)?;
            implication(ante, &|| pe(g, &p.substitute_atom(x, y), &q.substitute_atom(x, y)))
        }
        RuleId::Lo => {
            let r = r.unwrap();
            let ante = pe(g, p, q)? && pe(g, r, q)?;
            implication(ante, &|| pe(g, &Formula::or(p.clone(), r.clone()), q))
        }
        RuleId::Ls => {
            let r = r.unwrap();
            let ante = entails(g, &Formula::implies(p.clone(), r.clone()))? && pe(g, r, q)?;
            implication(ante, &|| pe(g, p, q))
        }
        RuleId::Ra => {
            let r = r.unwrap();
            let ante = pe(g, p, q)? && pe(g, p, r)?;
            implication(ante, &|| pe(g, p, &Formula::and(r.clone(), q.clone())))
        }
        RuleId::Ro => {
            let r = r.unwrap();
            let ante = pe(g, p, q)?;
            implication(ante, &|| pe(g, p, &Formula::or(q.clone(), r.clone())))
        }
        RuleId::Mono => {
            let alt = inst.alt_theory.as_ref().unwrap();
            let mut ante = pe(g, p, q)?;
            for member in g {
                ante = ante && entails(alt, member)?;
            }
            implication(ante, &|| pe(alt, p, q))
        }
        RuleId::Ln => {
            let ante = pe(g, p, q)?;
            implication(ante, &|| Ok(!pe(g, &Formula::not(p.clone()), q)?))
        }
        RuleId::Rn => {
            let ante = pe(g, p, q)?;
            implication(ante, &|| Ok(!pe(g, p, &Formula::not(q.clone()))?))
        }
        RuleId::Cp => {
            let ante = pe(g, p, q)?;
            implication(ante, &|| pe(g, &Formula::not(q.clone()), &Formula::not(p.clone())))
        }
    }
}

/// True iff the rule's implication holds on `inst`; a false antecedent
/// makes it hold vacuously.
pub fn check_rule_instance(rule: RuleId, inst: &RuleInstance) -> Result<bool> {
    Ok(evaluate(rule, inst)?.holds)
}

/// A random formula: usually a random tree, sometimes a small DNF, whose
/// prime implicants are less uniform.
fn sample<R: Rng + ?Sized>(gen: &FormulaGenerator, rng: &mut R) -> Formula {
    if rng.gen_bool(0.3) {
        gen.dnf(rng)
    } else {
        gen.formula(rng)
    }
}

/// A formula that shares structure with `f`, so that antecedents of the
/// rules are satisfied often enough to matter. Stays within the depth bound.
fn related<R: Rng + ?Sized>(f: &Formula, gen: &FormulaGenerator, rng: &mut R) -> Formula {
    if f.depth() >= gen.max_depth() {
        return sample(gen, rng);
    }
    let s = gen.with_depth(gen.max_depth() - 1).formula(rng);
    match rng.gen_range(0..7) {
        0 => Formula::and(f.clone(), s),
        1 => Formula::or(f.clone(), s),
        2 => Formula::and(s, f.clone()),
        3 => Formula::iff(f.clone(), s),
        4 => match f.atoms().into_iter().collect::<Vec<_>>().choose(rng) {
            Some(a) => {
                let lit = Formula::Atom(a.clone());
                if rng.gen_bool(0.5) { lit } else { Formula::not(lit) }
            }
            None => s,
        },
        _ => sample(gen, rng),
    }
}

fn maybe_related<R: Rng + ?Sized>(f: &Formula, gen: &FormulaGenerator, rng: &mut R) -> Formula {
    if rng.gen_bool(0.5) {
        related(f, gen, rng)
    } else {
        sample(gen, rng)
    }
}

fn draw<R: Rng + ?Sized>(rule: RuleId, kind: EntailmentKind, gen: &FormulaGenerator, rng: &mut R) -> RuleInstance {
    let theory = if rule == RuleId::Rev { Theory::new() } else { gen.theory(rng, 2) };
    let p = sample(gen, rng);
    let q = if rule == RuleId::Ref { p.clone() } else { maybe_related(&p, gen, rng) };
    let base = RuleInstance::new(kind, theory.clone(), p.clone(), q.clone());
    match rule {
        RuleId::Ref | RuleId::Rev | RuleId::Ln | RuleId::Rn | RuleId::Cp => base,
        RuleId::Le => base.with_r(equivalent_variant(&p, &theory, rng)),
        RuleId::Re => base.with_r(equivalent_variant(&q, &theory, rng)),
        RuleId::Be => base.with_alt_theory(equivalent_theory(&theory, rng)),
        RuleId::Tran => base.with_r(maybe_related(&q, gen, rng)),
        RuleId::As => {
            let mut candidates: Vec<AtomId> = p.atoms().union(&q.atoms()).cloned().collect();
            if candidates.is_empty() {
                candidates = gen.atoms().to_vec();
            }
            let x = candidates.choose(rng).unwrap().clone();
            let others: Vec<&AtomId> = gen.atoms().iter().filter(|a| **a != x).collect();
            let y = match others.choose(rng) {
                Some(a) => (*a).clone(),
                None => AtomId::new(if x.as_str() == "y" { "z" } else { "y" }).expect("valid atom"),
            };
            base.with_substitution(x, y)
        }
        RuleId::Lo if rng.gen_bool(0.3) => {
            // two cubes clashing on one atom; Q extends each by a literal
            let mut atoms = gen.atoms().to_vec();
            atoms.shuffle(rng);
            let lit = |a: &AtomId, pos: bool| {
                let f = Formula::Atom(a.clone());
                if pos { f } else { Formula::not(f) }
            };
            let sign = rng.gen_bool(0.5);
            let p = Formula::and(lit(&atoms[0], sign), lit(&atoms[1], rng.gen_bool(0.5)));
            let r = Formula::and(lit(&atoms[0], !sign), lit(&atoms[2], rng.gen_bool(0.5)));
            let q = Formula::or(
                Formula::and(p.clone(), gen.literal(rng).to_formula()),
                Formula::and(r.clone(), gen.literal(rng).to_formula()),
            );
            RuleInstance::new(kind, theory, p, q).with_r(r)
        }
        RuleId::Lo => base.with_r(maybe_related(&q, gen, rng)),
        RuleId::Ls => {
            // strengthen R into P most of the time, so that Γ ⊨ P → R
            let shallow = gen.with_depth(gen.max_depth() - 1);
            let r = shallow.formula(rng);
            let p = if rng.gen_bool(0.8) {
                Formula::and(r.clone(), shallow.formula(rng))
            } else {
                p
            };
            let q = maybe_related(&r, gen, rng);
            RuleInstance::new(kind, theory, p, q).with_r(r)
        }
        RuleId::Ra | RuleId::Ro => base.with_r(maybe_related(&p, gen, rng)),
        RuleId::Mono => base.with_alt_theory(theory.with(sample(gen, rng))),
    }
}

/// `count` nontrivial instances, deterministic in `seed`.
pub fn generate_instances(rule: RuleId, kind: EntailmentKind, count: usize, seed: u64) -> Vec<RuleInstance> {
    let gen = FormulaGenerator::standard();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let inst = draw(rule, kind, &gen, &mut rng);
        if is_nontrivial_instance(rule, &inst).expect("generated instances are well-formed and small") {
            out.push(inst);
        }
    }
    out
}

/// Where a stored counterexample came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CounterexampleSource {
    Published,
    Search,
}

#[derive(Clone, Debug)]
pub struct RuleVerdict {
    pub rule: RuleId,
    pub kind: EntailmentKind,
    pub expected: bool,
    pub confirmed: bool,
    pub counterexample: Option<RuleInstance>,
    pub source: Option<CounterexampleSource>,
    /// Instances swept.
    pub samples: usize,
    /// Swept instances whose antecedent held.
    pub exercised: usize,
}

impl RuleVerdict {
    pub fn matches_expectation(&self) -> bool {
        self.confirmed == self.expected
    }
}

fn f(text: &str) -> Formula {
    Formula::parse(text).expect("valid built-in formula")
}

/// Counterexamples given in the literature for the "no" cells.
pub fn published_counterexample(rule: RuleId, kind: EntailmentKind) -> Option<RuleInstance> {
    use EntailmentKind::*;
    let empty = Theory::new();
    match (rule, kind) {
        (RuleId::Tran, Weak | Plain) => {
            Some(RuleInstance::new(kind, empty, f("x"), f("x & y")).with_r(f("y")))
        }
        (RuleId::Ls, Plain | Strong) => {
            Some(RuleInstance::new(kind, empty, f("x & !y"), f("x & y")).with_r(f("x")))
        }
        (RuleId::Ln | RuleId::Rn, _) => Some(RuleInstance::new(kind, empty, f("x"), f("x <-> y"))),
        _ => None,
    }
}

fn mix(seed: u64, salt: u64) -> u64 {
    // splitmix64 finaliser
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Extra rounds of search for a "no" cell with no published counterexample.
const SEARCH_ROUNDS: usize = 40;

fn sweep_cell(rule: RuleId, kind: EntailmentKind, samples: usize, seed: u64) -> Result<RuleVerdict> {
    let salt = (rule as u64) * 3 + kind as u64 + 1;
    let cell_seed = mix(seed, salt);
    let expected = rule.expected(kind);
    let mut exercised = 0;
    let mut found: Option<RuleInstance> = None;
    for inst in generate_instances(rule, kind, samples, cell_seed) {
        let out = evaluate(rule, &inst)?;
        exercised += usize::from(out.antecedent);
        if !out.holds && found.is_none() {
            found = Some(inst);
        }
    }
    if expected && found.is_some() {
        return Err(Error::RuleViolation {
            rule,
            kind: kind.to_string(),
        });
    }
    let (counterexample, source) = match published_counterexample(rule, kind) {
        Some(inst) if !expected => {
            if check_rule_instance(rule, &inst)? {
                return Err(malformed(rule, "published counterexample does not refute the rule"));
            }
            (Some(inst), Some(CounterexampleSource::Published))
        }
        _ => {
            let mut round = 1;
            while found.is_none() && !expected && round <= SEARCH_ROUNDS {
                for inst in generate_instances(rule, kind, samples, mix(cell_seed, round as u64)) {
                    if !check_rule_instance(rule, &inst)? {
                        found = Some(inst);
                        break;
                    }
                }
                round += 1;
            }
            let source = found.as_ref().map(|_| CounterexampleSource::Search);
            (found, source)
        }
    };
    Ok(RuleVerdict {
        rule,
        kind,
        expected,
        confirmed: counterexample.is_none(),
        counterexample,
        source,
        samples,
        exercised,
    })
}

/// One verdict per (rule, kind) cell, in [`RuleId::ALL`] × [`EntailmentKind::ALL`]
/// order. Deterministic in `(samples_per_cell, seed)`; cells run in parallel.
pub fn table2_report(samples_per_cell: usize, seed: u64) -> Result<Vec<RuleVerdict>> {
    if samples_per_cell < 100 {
        return Err(Error::InvalidArgument(format!(
            "at least 100 samples per cell are required, got {samples_per_cell}"
        )));
    }
    let cells: Vec<(RuleId, EntailmentKind)> = RuleId::ALL
        .iter()
        .flat_map(|&r| EntailmentKind::ALL.iter().map(move |&k| (r, k)))
        .collect();
    cells
        .par_iter()
        .map(|&(rule, kind)| sweep_cell(rule, kind, samples_per_cell, seed))
        .collect()
}

/// Fixed-column rendering: one row per rule, one column per kind. A cell
/// whose outcome disagrees with the expected value is marked with `!`.
pub fn render_table(verdicts: &[RuleVerdict], samples: usize, seed: u64) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# random sweep, {samples} instances per cell, seed {seed}; a falsification harness, not a proof\n"
    ));
    out.push_str(&format!("{:<6}{:<8}{:<8}{}\n", "rule", "weak", "plain", "strong"));
    for rule in RuleId::ALL {
        let mut line = format!("{:<6}", rule.as_str());
        for kind in EntailmentKind::ALL {
            let cell = verdicts.iter().find(|v| v.rule == rule && v.kind == kind);
            let text = match cell {
                Some(v) => {
                    let word = if v.confirmed { "yes" } else { "no" };
                    if v.matches_expectation() { word.to_string() } else { format!("{word}!") }
                }
                None => "-".to_string(),
            };
            line.push_str(&format!("{text:<8}"));
        }
        if rule.is_extension() {
            line.push_str("(extension)");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str("\ncounterexamples:\n");
    for v in verdicts {
        if let (Some(inst), Some(source)) = (&v.counterexample, v.source) {
            let tag = match source {
                CounterexampleSource::Published => "published",
                CounterexampleSource::Search => "search",
            };
            out.push_str(&format!("  {:<5}{:<7}[{tag}] {inst}\n", v.rule.as_str(), v.kind.as_str()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use EntailmentKind::*;

    #[test]
    fn table_cells() {
        assert!(RuleId::Tran.expected(Strong));
        assert!(!RuleId::Tran.expected(Plain));
        assert!(RuleId::Ls.expected(Weak));
        assert!(!RuleId::Ls.expected(Strong));
        assert!(!RuleId::Cp.expected(Weak));
        let yes: usize = RuleId::ALL
            .iter()
            .flat_map(|r| EntailmentKind::ALL.map(|k| r.expected(k)))
            .filter(|&b| b)
            .count();
        assert_eq!(yes, 17);
    }

    #[test]
    fn published_counterexamples_refute() {
        for rule in RuleId::ALL {
            for kind in EntailmentKind::ALL {
                if let Some(inst) = published_counterexample(rule, kind) {
                    assert!(!rule.expected(kind));
                    assert!(!check_rule_instance(rule, &inst).unwrap(), "{rule} {kind}");
                    assert!(is_nontrivial_instance(rule, &inst).unwrap());
                }
            }
        }
    }

    #[test]
    fn strong_transitivity_on_the_example() {
        let inst = RuleInstance::new(Strong, Theory::new(), f("x"), f("x & y")).with_r(f("y"));
        // x ∧ y does not strongly entail y, so the antecedent fails
        assert!(check_rule_instance(RuleId::Tran, &inst).unwrap());
    }

    #[test]
    fn shape_errors() {
        let inst = RuleInstance::new(Weak, Theory::new(), f("x"), f("y"));
        assert!(matches!(
            check_rule_instance(RuleId::Tran, &inst),
            Err(Error::MalformedInstance { .. })
        ));
        let with_theory = RuleInstance::new(Weak, Theory::from_formulas([f("z")]), f("x"), f("y"));
        assert!(check_rule_instance(RuleId::Rev, &with_theory).is_err());
        let x = AtomId::new("x").unwrap();
        let same = inst.clone().with_substitution(x.clone(), x);
        assert!(check_rule_instance(RuleId::As, &same).is_err());
        assert!(check_rule_instance(RuleId::Ref, &inst.with_r(f("z"))).is_err());
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_instances(RuleId::Ref, Weak, 10, 42);
        let b = generate_instances(RuleId::Ref, Weak, 10, 42);
        assert_eq!(a.len(), 10);
        assert_eq!(a, b);
    }

    #[test]
    fn equivalent_background_theories() {
        for inst in generate_instances(RuleId::Be, Plain, 5, 7) {
            let alt = inst.alt_theory.as_ref().unwrap();
            assert!(theories_equivalent(&inst.theory, alt).unwrap());
        }
    }

    #[test]
    fn generated_instances_are_nontrivial() {
        for rule in [RuleId::Lo, RuleId::As, RuleId::Mono] {
            for inst in generate_instances(rule, Strong, 20, 3) {
                assert!(is_nontrivial_instance(rule, &inst).unwrap());
            }
        }
    }

    #[test]
    fn small_report_rejected() {
        assert!(table2_report(10, 1).is_err());
    }

    #[test]
    fn rule_names_round_trip() {
        for rule in RuleId::ALL {
            assert_eq!(rule.as_str().parse::<RuleId>().unwrap(), rule);
        }
        assert!("FOO".parse::<RuleId>().is_err());
    }
}
