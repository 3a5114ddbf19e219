//! Weak, plain and strong partial entailment.
//!
//! All three relations share one shape: `PI(Γ, P)` must be non-empty, and
//! every member of it needs a partner in `PI(Γ, Q)` satisfying the
//! relation between literal sets given by [`literal_set_relation`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{Formula, LiteralSet, Theory};
use crate::prime_implicants::{prime_implicants, PrimeImplicantSet};
use crate::semantics;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntailmentKind {
    Weak,
    Plain,
    Strong,
}

impl EntailmentKind {
    pub const ALL: [EntailmentKind; 3] = [
        EntailmentKind::Weak,
        EntailmentKind::Plain,
        EntailmentKind::Strong,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EntailmentKind::Weak => "weak",
            EntailmentKind::Plain => "plain",
            EntailmentKind::Strong => "strong",
        }
    }
}

impl fmt::Display for EntailmentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EntailmentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "weak" => Ok(EntailmentKind::Weak),
            "plain" => Ok(EntailmentKind::Plain),
            "strong" => Ok(EntailmentKind::Strong),
            other => Err(Error::InvalidArgument(format!(
                "unknown entailment kind `{other}` (expected weak, plain or strong)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reason {
    Ok,
    /// `PI(Γ, P)` is empty: `P` is inconsistent with `Γ`.
    EmptyPi,
    /// Some member of `PI(Γ, P)` has no partner in `PI(Γ, Q)`.
    NoPartner,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::Ok => "OK",
            Reason::EmptyPi => "EMPTY_PI",
            Reason::NoPartner => "NO_PARTNER",
        })
    }
}

/// Outcome of a partial-entailment query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub reason: Reason,
    /// A member of `PI(Γ, P)` without a partner, when `reason` is `NoPartner`.
    pub refuter: Option<LiteralSet>,
}

impl Verdict {
    fn holds() -> Self {
        Verdict {
            holds: true,
            reason: Reason::Ok,
            refuter: None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.reason, &self.refuter) {
            (Reason::Ok, _) => f.write_str("HOLDS"),
            (reason, Some(r)) => write!(f, "FAILS (reason={reason}, refuter={r})"),
            (reason, None) => write!(f, "FAILS (reason={reason})"),
        }
    }
}

/// The relation between two consistent literal sets.
///
/// Weak: `π ∩ π′ ≠ ∅`. Plain: additionally `π ∩ -π′ = ∅`. Strong:
/// `∅ ⊂ π ⊆ π′`. The empty set stands in no relation to anything.
pub fn literal_set_relation(kind: EntailmentKind, pi: &LiteralSet, other: &LiteralSet) -> bool {
    match kind {
        EntailmentKind::Weak => pi.intersects(other),
        EntailmentKind::Plain => pi.intersects(other) && !pi.clashes_with(other),
        EntailmentKind::Strong => !pi.is_empty() && pi.is_subset(other),
    }
}

/// `Γ ⊨ P` or `Γ ⊨ ¬P`.
pub fn is_trivial(theory: &Theory, p: &Formula) -> Result<bool> {
    Ok(semantics::entails(theory, p)? || semantics::entails(theory, &Formula::not(p.clone()))?)
}

/// Decides `P ≻ Q` w.r.t. `Γ` for the given kind.
pub fn partially_entails(
    kind: EntailmentKind,
    theory: &Theory,
    p: &Formula,
    q: &Formula,
) -> Result<Verdict> {
    let p_pis = prime_implicants(theory, p)?;
    if p_pis.is_empty() {
        return Ok(Verdict {
            holds: false,
            reason: Reason::EmptyPi,
            refuter: None,
        });
    }
    let q_pis = prime_implicants(theory, q)?;
    Ok(compare_implicants(kind, &p_pis, &q_pis))
}

/// The partial-entailment check on precomputed implicant sets.
pub fn compare_implicants(
    kind: EntailmentKind,
    antecedent: &PrimeImplicantSet,
    consequent: &PrimeImplicantSet,
) -> Verdict {
    if antecedent.is_empty() {
        return Verdict {
            holds: false,
            reason: Reason::EmptyPi,
            refuter: None,
        };
    }
    let unmatched = antecedent.iter().find(|pi| {
        !consequent
            .iter()
            .any(|partner| literal_set_relation(kind, pi, partner))
    });
    match unmatched {
        None => Verdict::holds(),
        Some(pi) => Verdict {
            holds: false,
            reason: Reason::NoPartner,
            refuter: Some(pi.clone()),
        },
    }
}

/// Five independently computed readings of "clause `δ` relates to clause `δ′`".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseReport {
    pub subset: bool,
    pub classical: bool,
    pub weak: bool,
    pub plain: bool,
    pub strong: bool,
}

impl ClauseReport {
    /// True when all five readings coincide.
    pub fn agrees(&self) -> bool {
        let v = [self.classical, self.weak, self.plain, self.strong];
        v.iter().all(|&b| b == self.subset)
    }
}

/// Compares two clauses, each given as the literal set of its disjuncts.
///
/// A [`LiteralSet`] cannot hold complementary literals, so neither clause
/// can be valid. The empty clause is rejected: it is unsatisfiable, hence
/// trivial, and sits outside the five-way agreement.
pub fn clause_relation_report(delta: &LiteralSet, other: &LiteralSet) -> Result<ClauseReport> {
    if delta.is_empty() || other.is_empty() {
        return Err(Error::InvalidClause("the empty clause is unsatisfiable".into()));
    }
    let d = delta.to_clause_formula();
    let d2 = other.to_clause_formula();
    let empty = Theory::new();
    Ok(ClauseReport {
        subset: delta.is_subset(other),
        classical: semantics::entails(&Theory::from_formulas([d.clone()]), &d2)?,
        weak: partially_entails(EntailmentKind::Weak, &empty, &d, &d2)?.holds,
        plain: partially_entails(EntailmentKind::Plain, &empty, &d, &d2)?.holds,
        strong: partially_entails(EntailmentKind::Strong, &empty, &d, &d2)?.holds,
    })
}
