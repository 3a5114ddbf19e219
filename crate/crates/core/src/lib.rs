//! Relativized prime implicants and the partial-entailment relations built
//! on them: weak, plain and strong partial entailment, their inference
//! rules, relevance notions and goal satisfaction for agents.
//!
//! ```
//! use partial_entailment::{partially_entails, EntailmentKind, Formula, Theory};
//!
//! let p: Formula = "x | y".parse().unwrap();
//! let q: Formula = "x & y".parse().unwrap();
//! let v = partially_entails(EntailmentKind::Strong, &Theory::new(), &p, &q).unwrap();
//! assert!(v.holds);
//! ```

pub mod cli;
pub mod entailment;
pub mod error;
pub mod formula;
pub mod generate;
pub mod goal;
mod parser;
pub mod prime_implicants;
pub mod relevance;
pub mod rules;
pub mod semantics;
mod table;

pub use entailment::{
    clause_relation_report, compare_implicants, is_trivial, literal_set_relation,
    partially_entails, ClauseReport, EntailmentKind, Reason, Verdict,
};
pub use error::{Error, Result};
pub use formula::{AtomId, Formula, Literal, LiteralSet, Theory};
pub use goal::{rank_actions, Action, GoalReport, Rank, Scenario};
pub use prime_implicants::{
    abductive_explanations, is_prime_implicant, literal_in_all_pi, literal_in_some_pi,
    prime_implicants, HypothesisSet, PrimeImplicantSet,
};
pub use relevance::{
    novelty, novelty_independent, relevant_formulas, strictly_relevant, variable_independent,
    Novelty, VariableSet,
};
pub use rules::{check_rule_instance, generate_instances, table2_report, RuleId, RuleInstance, RuleVerdict};
pub use semantics::{entails, evaluate, is_consistent, models, theories_equivalent, Assignment};
pub use table::MAX_ATOMS;
