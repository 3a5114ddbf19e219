//! Command-line front end. [`run`] is the whole program minus process I/O,
//! so it can be driven from tests.
//!
//! Exit codes: 0 for a positive verdict or a finished report, 1 for a
//! negative verdict, 2 for usage, input and parse errors.

use std::ffi::OsString;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::entailment::{is_trivial, partially_entails, EntailmentKind};
use crate::error::{Error, Result};
use crate::formula::{Formula, LiteralSet, Theory};
use crate::goal::{rank_actions_with, GoalReport, Rank, Scenario};
use crate::prime_implicants::prime_implicants;
use crate::relevance::{novelty, relevant_formulas, strictly_relevant, variable_independent, VariableSet};
use crate::rules::{render_table, table2_report, CounterexampleSource, RuleVerdict};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "pentail",
    version,
    about = "Prime implicants, partial entailment and goal satisfaction for propositional logic"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Prime implicants of a formula w.r.t. a theory.
    Pi {
        #[arg(long)]
        theory: Option<PathBuf>,
        formula: String,
    },
    /// Decide whether P partially entails Q.
    Check {
        #[arg(long)]
        kind: EntailmentKind,
        #[arg(long)]
        theory: Option<PathBuf>,
        p: String,
        q: String,
    },
    /// Decide whether the theory entails P or its negation.
    Trivial {
        #[arg(long)]
        theory: Option<PathBuf>,
        p: String,
    },
    /// Re-derive the inference-rule table by random sweep.
    Rules {
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Decide whether F can be written without the atoms of a set such as `{x, y}`.
    Independent { formula: String, varset: String },
    /// Decide whether F is strictly relevant to a set of atoms.
    StrictRelevant { formula: String, varset: String },
    /// Decide whether some prime implicant of P meets one of Q.
    Relevant {
        #[arg(long)]
        theory: Option<PathBuf>,
        p: String,
        q: String,
    },
    /// Report whether learning P is new positive or new negative to Q.
    Novelty {
        #[arg(long)]
        theory: Option<PathBuf>,
        p: String,
        q: String,
    },
    /// Classify and rank the actions of a scenario file.
    Goal {
        scenario: PathBuf,
        /// Comma-separated kinds that count towards ranking.
        #[arg(long, value_delimiter = ',', default_value = "weak,plain,strong")]
        kinds: Vec<EntailmentKind>,
    },
}

impl clap::ValueEnum for EntailmentKind {
    fn value_variants<'a>() -> &'a [Self] {
        &EntailmentKind::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.as_str()))
    }
}

/// What a finished invocation produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn report(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(positive: bool, stdout: String) -> Self {
        Outcome {
            code: if positive { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(code: i32, err: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Parses `argv` (including the program name) and executes it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::report(text)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e @ Error::RuleViolation { .. }) => Outcome::failure(1, e),
        Err(e) => Outcome::failure(2, e),
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        message: match e.kind() {
            io::ErrorKind::NotFound => "no such file".to_string(),
            _ => e.to_string(),
        },
    })
}

fn with_path(path: &Path, e: Error) -> Error {
    match e {
        Error::AtLine { line, inner } => Error::Input {
            path: path.to_path_buf(),
            line,
            message: inner.to_string(),
        },
        other => other,
    }
}

fn load_theory(path: Option<&PathBuf>) -> Result<Theory> {
    match path {
        None => Ok(Theory::new()),
        Some(p) => Theory::parse_lines(&read_file(p)?).map_err(|e| with_path(p, e)),
    }
}

fn formula(text: &str) -> Result<Formula> {
    Formula::parse(text)
}

fn set_json(set: &LiteralSet) -> Value {
    Value::from(set.iter().map(|l| l.to_string()).collect::<Vec<_>>())
}

fn theory_json(theory: &Theory) -> Value {
    Value::from(theory.iter().map(|f| f.to_string()).collect::<Vec<_>>())
}

fn json_line(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Pi { theory, formula: text } => {
            let theory = load_theory(theory.as_ref())?;
            let p = formula(text)?;
            let pis = prime_implicants(&theory, &p)?;
            let out = if json {
                json_line(json!({
                    "theory": theory_json(&theory),
                    "formula": p.to_string(),
                    "prime_implicants": pis.iter().map(set_json).collect::<Vec<_>>(),
                }))
            } else {
                pis.iter().map(|pi| format!("{pi}\n")).collect()
            };
            Ok(Outcome::report(out))
        }
        Command::Check { kind, theory, p, q } => {
            let theory = load_theory(theory.as_ref())?;
            let (p, q) = (formula(p)?, formula(q)?);
            let v = partially_entails(*kind, &theory, &p, &q)?;
            let out = if json {
                json_line(json!({
                    "kind": kind,
                    "holds": v.holds,
                    "reason": v.reason,
                    "refuter": v.refuter.as_ref().map(set_json),
                }))
            } else {
                format!("{v}\n")
            };
            Ok(Outcome::verdict(v.holds, out))
        }
        Command::Trivial { theory, p } => {
            let theory = load_theory(theory.as_ref())?;
            let t = is_trivial(&theory, &formula(p)?)?;
            Ok(Outcome::verdict(t, boolean_output(json, "trivial", t, "TRIVIAL", "NONTRIVIAL")))
        }
        Command::Rules { samples, seed } => {
            let verdicts = table2_report(*samples, *seed)?;
            let all_match = verdicts.iter().all(RuleVerdict::matches_expectation);
            let out = if json {
                json_line(json!({
                    "samples_per_cell": samples,
                    "seed": seed,
                    "cells": verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
                }))
            } else {
                render_table(&verdicts, *samples, *seed)
            };
            Ok(Outcome::verdict(all_match, out))
        }
        Command::Independent { formula: text, varset } => {
            let vars: VariableSet = varset.parse()?;
            let b = variable_independent(&formula(text)?, &vars)?;
            Ok(Outcome::verdict(b, boolean_output(json, "independent", b, "INDEPENDENT", "DEPENDENT")))
        }
        Command::StrictRelevant { formula: text, varset } => {
            let vars: VariableSet = varset.parse()?;
            let b = strictly_relevant(&formula(text)?, &vars)?;
            Ok(Outcome::verdict(b, boolean_output(json, "strictly_relevant", b, "RELEVANT", "NOT_RELEVANT")))
        }
        Command::Relevant { theory, p, q } => {
            let theory = load_theory(theory.as_ref())?;
            let b = relevant_formulas(&theory, &formula(p)?, &formula(q)?)?;
            Ok(Outcome::verdict(b, boolean_output(json, "relevant", b, "RELEVANT", "NOT_RELEVANT")))
        }
        Command::Novelty { theory, p, q } => {
            let theory = load_theory(theory.as_ref())?;
            let n = novelty(&theory, &formula(p)?, &formula(q)?)?;
            let out = if json {
                json_line(serde_json::to_value(n).expect("serializable"))
            } else {
                format!("new_positive={} new_negative={}\n", n.new_positive, n.new_negative)
            };
            Ok(Outcome::report(out))
        }
        Command::Goal { scenario, kinds } => {
            let s = Scenario::parse(&read_file(scenario)?).map_err(|e| with_path(scenario, e))?;
            let report = rank_actions_with(&s.belief, &s.goal, &s.actions, kinds)?;
            let out = if json {
                json_line(goal_json(&report))
            } else {
                render_goal(&report)
            };
            Ok(Outcome::report(out))
        }
    }
}

fn boolean_output(json: bool, key: &str, value: bool, yes: &str, no: &str) -> String {
    if json {
        json_line(json!({ key: value }))
    } else {
        format!("{}\n", if value { yes } else { no })
    }
}

fn verdict_json(v: &RuleVerdict) -> Value {
    json!({
        "rule": v.rule,
        "kind": v.kind,
        "expected": v.expected,
        "confirmed": v.confirmed,
        "extension": v.rule.is_extension(),
        "samples": v.samples,
        "exercised": v.exercised,
        "counterexample": v.counterexample.as_ref().map(|c| json!({
            "theory": theory_json(&c.theory),
            "alt_theory": c.alt_theory.as_ref().map(theory_json),
            "p": c.p.to_string(),
            "q": c.q.to_string(),
            "r": c.r.as_ref().map(|r| r.to_string()),
            "x": c.substitution.as_ref().map(|(x, _)| x.to_string()),
            "y": c.substitution.as_ref().map(|(_, y)| y.to_string()),
            "source": v.source.map(|s| match s {
                CounterexampleSource::Published => "published",
                CounterexampleSource::Search => "search",
            }),
        })),
    })
}

fn goal_json(report: &GoalReport) -> Value {
    let ranking: Vec<&str> = report.ranking().iter().map(|a| a.label.as_str()).collect();
    let buckets: serde_json::Map<String, Value> = Rank::ALL
        .iter()
        .map(|r| (r.as_str().to_string(), Value::from(report.bucket(*r))))
        .collect();
    json!({
        "kinds": report.kinds,
        "actions": report.assessments,
        "buckets": buckets,
        "ranking": ranking,
        "not_applicable": report.unranked(),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_goal(report: &GoalReport) -> String {
    let width = report
        .assessments
        .iter()
        .map(|a| a.label.len())
        .max()
        .unwrap_or(0)
        .max("action".len())
        + 2;
    let mut out = format!(
        "{:<width$}{:<12}{:<10}{:<6}{:<7}{:<8}rank\n",
        "action", "applicable", "complete", "weak", "plain", "strong"
    );
    for a in &report.assessments {
        out.push_str(&format!(
            "{:<width$}{:<12}{:<10}{:<6}{:<7}{:<8}{}\n",
            a.label,
            yes_no(a.applicable),
            yes_no(a.complete),
            yes_no(a.weak),
            yes_no(a.plain),
            yes_no(a.strong),
            a.rank.map_or("-", Rank::as_str),
        ));
    }
    out.push('\n');
    for rank in Rank::ALL {
        out.push_str(&format!("{}: {}\n", rank, report.bucket(rank).join(", ")).replace(": \n", ":\n"));
    }
    let unranked = report.unranked();
    if !unranked.is_empty() {
        out.push_str(&format!("not applicable: {}\n", unranked.join(", ")));
    }
    out
}
