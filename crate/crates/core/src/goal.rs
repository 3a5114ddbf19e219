//! Complete and partial goal satisfaction for single-step actions.
//!
//! An action is a triple `⟨pre, label, post⟩`. It completely achieves a goal
//! `G` under belief `Γ` when `Γ ⊨ pre`, `Γ ∪ {post}` is consistent and
//! `Γ ⊨ post → G`; it partially achieves `G` when `Γ ⊨ pre` and `post`
//! partially entails `G` w.r.t. `Γ`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::entailment::{compare_implicants, EntailmentKind};
use crate::error::{Error, Result};
use crate::formula::{strip_comment, Formula, Theory};
use crate::prime_implicants::prime_implicants;
use crate::semantics;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    pub label: String,
    pub pre: Formula,
    pub post: Formula,
}

impl Action {
    pub fn new(label: impl Into<String>, pre: Formula, post: Formula) -> Self {
        Action {
            label: label.into(),
            pre,
            post,
        }
    }
}

pub fn completely_achieves(theory: &Theory, goal: &Formula, action: &Action) -> Result<bool> {
    Ok(semantics::entails(theory, &action.pre)?
        && semantics::is_consistent(&theory.with(action.post.clone()))?
        && semantics::entails(
            theory,
            &Formula::implies(action.post.clone(), goal.clone()),
        )?)
}

pub fn partially_achieves(
    kind: EntailmentKind,
    theory: &Theory,
    goal: &Formula,
    action: &Action,
) -> Result<bool> {
    if !semantics::entails(theory, &action.pre)? {
        return Ok(false);
    }
    let post = prime_implicants(theory, &action.post)?;
    let target = prime_implicants(theory, goal)?;
    Ok(compare_implicants(kind, &post, &target).holds)
}

/// Ranking bucket, best first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rank {
    Complete,
    Strong,
    Plain,
    Weak,
    None,
}

impl Rank {
    pub const ALL: [Rank; 5] = [Rank::Complete, Rank::Strong, Rank::Plain, Rank::Weak, Rank::None];

    pub fn as_str(self) -> &'static str {
        match self {
            Rank::Complete => "complete",
            Rank::Strong => "strong",
            Rank::Plain => "plain",
            Rank::Weak => "weak",
            Rank::None => "none",
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How one action relates to the goal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionAssessment {
    pub label: String,
    /// `Γ ⊨ pre`.
    pub applicable: bool,
    /// `Γ ∪ {post}` is consistent.
    pub post_consistent: bool,
    pub complete: bool,
    pub weak: bool,
    pub plain: bool,
    pub strong: bool,
    /// Bucket for applicable actions; `None` when the action is not applicable.
    pub rank: Option<Rank>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoalReport {
    /// One entry per action, in input order.
    pub assessments: Vec<ActionAssessment>,
    /// Kinds that counted towards ranking.
    pub kinds: Vec<EntailmentKind>,
}

impl GoalReport {
    /// Labels of applicable actions in the given bucket, in input order.
    pub fn bucket(&self, rank: Rank) -> Vec<&str> {
        self.assessments
            .iter()
            .filter(|a| a.rank == Some(rank))
            .map(|a| a.label.as_str())
            .collect()
    }

    /// Applicable actions, best bucket first, input order within a bucket.
    pub fn ranking(&self) -> Vec<&ActionAssessment> {
        let mut ranked: Vec<&ActionAssessment> =
            self.assessments.iter().filter(|a| a.rank.is_some()).collect();
        ranked.sort_by_key(|a| a.rank);
        ranked
    }

    /// Labels of actions whose precondition the belief does not entail.
    pub fn unranked(&self) -> Vec<&str> {
        self.assessments
            .iter()
            .filter(|a| a.rank.is_none())
            .map(|a| a.label.as_str())
            .collect()
    }
}

/// Classifies every action against the goal, counting all three kinds.
pub fn rank_actions(theory: &Theory, goal: &Formula, actions: &[Action]) -> Result<GoalReport> {
    rank_actions_with(theory, goal, actions, &EntailmentKind::ALL)
}

/// Like [`rank_actions`], but only the listed kinds place an action in a
/// partial bucket. The per-action flags are always reported in full.
pub fn rank_actions_with(
    theory: &Theory,
    goal: &Formula,
    actions: &[Action],
    kinds: &[EntailmentKind],
) -> Result<GoalReport> {
    let mut seen = BTreeSet::new();
    for a in actions {
        if !seen.insert(a.label.as_str()) {
            return Err(Error::DuplicateLabel(a.label.clone()));
        }
    }
    let target = prime_implicants(theory, goal)?;
    let mut assessments = Vec::with_capacity(actions.len());
    for action in actions {
        let applicable = semantics::entails(theory, &action.pre)?;
        let post_consistent = semantics::is_consistent(&theory.with(action.post.clone()))?;
        let complete = applicable
            && post_consistent
            && semantics::entails(
                theory,
                &Formula::implies(action.post.clone(), goal.clone()),
            )?;
        let post = prime_implicants(theory, &action.post)?;
        let holds = |kind| applicable && compare_implicants(kind, &post, &target).holds;
        let (weak, plain, strong) = (
            holds(EntailmentKind::Weak),
            holds(EntailmentKind::Plain),
            holds(EntailmentKind::Strong),
        );
        let counts = |kind: EntailmentKind, flag: bool| flag && kinds.contains(&kind);
        let rank = applicable.then(|| {
            if complete {
                Rank::Complete
            } else if counts(EntailmentKind::Strong, strong) {
                Rank::Strong
            } else if counts(EntailmentKind::Plain, plain) {
                Rank::Plain
            } else if counts(EntailmentKind::Weak, weak) {
                Rank::Weak
            } else {
                Rank::None
            }
        });
        assessments.push(ActionAssessment {
            label: action.label.clone(),
            applicable,
            post_consistent,
            complete,
            weak,
            plain,
            strong,
            rank,
        });
    }
    let mut kinds = kinds.to_vec();
    kinds.sort();
    kinds.dedup();
    Ok(GoalReport { assessments, kinds })
}

/// A belief, a goal and candidate actions, as read from a scenario file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub belief: Theory,
    pub goal: Formula,
    pub actions: Vec<Action>,
}

impl Scenario {
    /// Parses the line-oriented scenario format:
    ///
    /// ```text
    /// # comment
    /// belief: z -> x
    /// goal: x & y
    /// action: choice1 | true | x
    /// ```
    ///
    /// `belief:` and `action:` may repeat; exactly one `goal:` is required.
    /// The precondition/postcondition split of an action must be unique, so a
    /// disjunctive precondition or postcondition has to be parenthesised
    /// whenever another split would also parse.
    pub fn parse(text: &str) -> Result<Scenario> {
        let mut belief = Theory::new();
        let mut goal = None;
        let mut actions: Vec<Action> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let at = |e: Error| Error::AtLine {
                line: line_no,
                inner: Box::new(e),
            };
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| at(Error::InvalidArgument(format!("expected `key: value`, found `{line}`"))))?;
            match key.trim() {
                "belief" => belief.push(Formula::parse(rest).map_err(at)?),
                "goal" => {
                    if goal.is_some() {
                        return Err(at(Error::InvalidArgument("goal given more than once".into())));
                    }
                    goal = Some(Formula::parse(rest).map_err(at)?);
                }
                "action" => {
                    let action = parse_action(rest).map_err(at)?;
                    if actions.iter().any(|a| a.label == action.label) {
                        return Err(at(Error::DuplicateLabel(action.label)));
                    }
                    actions.push(action);
                }
                other => {
                    return Err(at(Error::InvalidArgument(format!(
                        "unknown key `{other}` (expected belief, goal or action)"
                    ))))
                }
            }
        }
        let goal = goal.ok_or_else(|| Error::InvalidArgument("scenario has no `goal:` line".into()))?;
        Ok(Scenario {
            belief,
            goal,
            actions,
        })
    }
}

fn parse_action(text: &str) -> Result<Action> {
    let (label, rest) = text.split_once('|').ok_or_else(|| {
        Error::InvalidArgument("expected `action: <label> | <pre> | <post>`".into())
    })?;
    let label = label.trim();
    if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
        return Err(Error::InvalidArgument(format!("invalid action label `{label}`")));
    }
    // Candidate separators are the `|` characters outside parentheses.
    let mut depth = 0i32;
    let mut splits = Vec::new();
    for (i, c) in rest.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '|' if depth == 0 => splits.push(i),
            _ => {}
        }
    }
    let parses: Vec<(Formula, Formula)> = splits
        .iter()
        .filter_map(|&i| {
            let pre = Formula::parse(&rest[..i]).ok()?;
            let post = Formula::parse(&rest[i + 1..]).ok()?;
            Some((pre, post))
        })
        .collect();
    match parses.len() {
        1 => {
            let (pre, post) = parses.into_iter().next().expect("one parse");
            Ok(Action::new(label, pre, post))
        }
        0 if splits.is_empty() => Err(Error::InvalidArgument(
            "expected `action: <label> | <pre> | <post>`".into(),
        )),
        0 => {
            // Report the error of the first split for a useful position.
            let i = splits[0];
            Formula::parse(&rest[..i])?;
            Formula::parse(&rest[i + 1..])?;
            unreachable!("a failing split reported above")
        }
        _ => Err(Error::InvalidArgument(format!(
            "ambiguous action `{label}`: parenthesise the disjunction in its pre- or postcondition"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    fn breakfast() -> Vec<Action> {
        vec![
            Action::new("choice1", Formula::Top, f("x")),
            Action::new("choice2", Formula::Top, f("x & z")),
            Action::new("choice3", Formula::Top, f("z")),
        ]
    }

    #[test]
    fn complete_achievement() {
        let g = f("x & y");
        let empty = Theory::new();
        assert!(completely_achieves(&empty, &g, &Action::new("a", Formula::Top, f("x & y"))).unwrap());
        assert!(!completely_achieves(&empty, &g, &breakfast()[0]).unwrap());
        assert!(!completely_achieves(&empty, &f("x"), &Action::new("a", f("z"), f("x"))).unwrap());
        // inconsistent postcondition
        assert!(!completely_achieves(&empty, &g, &Action::new("a", Formula::Top, f("x & !x"))).unwrap());
    }

    #[test]
    fn partial_achievement() {
        let g = f("x & y");
        let empty = Theory::new();
        let [c1, c2, c3] = <[Action; 3]>::try_from(breakfast()).unwrap();
        assert!(partially_achieves(EntailmentKind::Strong, &empty, &g, &c1).unwrap());
        assert!(partially_achieves(EntailmentKind::Weak, &empty, &g, &c2).unwrap());
        assert!(partially_achieves(EntailmentKind::Plain, &empty, &g, &c2).unwrap());
        assert!(!partially_achieves(EntailmentKind::Strong, &empty, &g, &c2).unwrap());
        for kind in EntailmentKind::ALL {
            assert!(!partially_achieves(kind, &empty, &g, &c3).unwrap());
        }
        let belief: Theory = [f("z -> x")].into_iter().collect();
        assert!(partially_achieves(EntailmentKind::Weak, &belief, &g, &c3).unwrap());
        // precondition not entailed
        let gated = Action::new("gated", f("w"), f("x"));
        assert!(!partially_achieves(EntailmentKind::Weak, &empty, &g, &gated).unwrap());
    }

    #[test]
    fn ranking_buckets() {
        let report = rank_actions(&Theory::new(), &f("x & y"), &breakfast()).unwrap();
        assert_eq!(report.bucket(Rank::Strong), ["choice1"]);
        assert_eq!(report.bucket(Rank::Plain), ["choice2"]);
        assert_eq!(report.bucket(Rank::None), ["choice3"]);
        assert!(report.bucket(Rank::Complete).is_empty());
        assert!(report.unranked().is_empty());
    }

    #[test]
    fn ranking_is_stable_and_skips_inapplicable() {
        let actions = vec![
            Action::new("late", Formula::Top, f("z")),
            Action::new("a", Formula::Top, f("x")),
            Action::new("gated", f("w"), f("x & y")),
            Action::new("b", Formula::Top, f("x")),
        ];
        let report = rank_actions(&Theory::new(), &f("x & y"), &actions).unwrap();
        assert_eq!(report.bucket(Rank::Strong), ["a", "b"]);
        assert_eq!(report.unranked(), ["gated"]);
        let order: Vec<&str> = report.ranking().iter().map(|a| a.label.as_str()).collect();
        assert_eq!(order, ["a", "b", "late"]);
    }

    #[test]
    fn restricting_kinds() {
        let report = rank_actions_with(
            &Theory::new(),
            &f("x & y"),
            &breakfast(),
            &[EntailmentKind::Weak],
        )
        .unwrap();
        assert_eq!(report.bucket(Rank::Weak), ["choice1", "choice2"]);
        assert!(report.assessments[0].strong);
    }

    #[test]
    fn empty_and_duplicate() {
        let report = rank_actions(&Theory::new(), &f("x"), &[]).unwrap();
        assert!(report.assessments.is_empty());
        let dup = vec![
            Action::new("a", Formula::Top, f("x")),
            Action::new("a", Formula::Top, f("y")),
        ];
        assert_eq!(
            rank_actions(&Theory::new(), &f("x"), &dup).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn scenario_format() {
        let text = "# breakfast\nbelief: z -> x\n\ngoal: x & y\naction: choice1 | true | x   # milk\naction: choice2 | true | x & z\n";
        let s = Scenario::parse(text).unwrap();
        assert_eq!(s.belief.len(), 1);
        assert_eq!(s.goal, f("x & y"));
        assert_eq!(s.actions.len(), 2);
        assert_eq!(s.actions[1].post, f("x & z"));
    }

    #[test]
    fn scenario_disjunctions() {
        let s = Scenario::parse("goal: x\naction: a | (x | y) | z | w\n");
        assert!(s.is_err(), "z | w split is ambiguous without parentheses");
        let s = Scenario::parse("goal: x\naction: a | (x | y) | (z | w)\n").unwrap();
        assert_eq!(s.actions[0].pre, f("x | y"));
        assert_eq!(s.actions[0].post, f("z | w"));
        let s = Scenario::parse("goal: x\naction: a | true | !z | w -> x\n").unwrap_err();
        assert!(matches!(s, Error::AtLine { line: 2, .. }));
        let s = Scenario::parse("goal: x\naction: a | x & | y\n").unwrap_err();
        assert!(matches!(s, Error::AtLine { line: 2, .. }));
    }

    #[test]
    fn scenario_errors() {
        assert!(Scenario::parse("belief: x\n").is_err());
        assert!(Scenario::parse("goal: x\ngoal: y\n").is_err());
        assert!(Scenario::parse("goal: x\nwish: y\n").is_err());
        assert!(matches!(
            Scenario::parse("goal: x\naction: a | true | x\naction: a | true | y\n"),
            Err(Error::AtLine { line: 3, .. })
        ));
    }
}
