//! Backward proof search for the bunched sequent calculus, and an
//! independent checker for the proof trees it emits.

mod canon;
mod check;
mod search;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::syntax::{Path, Sequent};

pub use canon::{ac_chain, canonical, canonical_sequent, steps_to_canonical, Step};
pub use check::{check_proof, ProofError};
pub use search::{prove, prove_with_cancel, CutMode, Exhausted, SearchBudget, SearchStats};

/// Inference rules and axioms, named as in the rule table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Id,
    Cut,
    OtimesLeft,
    OtimesRight,
    LolLeft,
    LolRight,
    LolinvLeft,
    LolinvRight,
    AndLeft,
    AndRight,
    OrLeft,
    OrRight,
    TopLeft,
    TopRight,
    BotLeft,
    AndAss,
    AndEx,
    AndWeak,
    AndCont,
    NegLeft,
    NegRight,
    OneLeft,
    OneRight,
    Assumption,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Id => "id",
            Rule::Cut => "cut",
            Rule::OtimesLeft => "otimes-left",
            Rule::OtimesRight => "otimes-right",
            Rule::LolLeft => "lol-left",
            Rule::LolRight => "lol-right",
            Rule::LolinvLeft => "lolinv-left",
            Rule::LolinvRight => "lolinv-right",
            Rule::AndLeft => "and-left",
            Rule::AndRight => "and-right",
            Rule::OrLeft => "or-left",
            Rule::OrRight => "or-right",
            Rule::TopLeft => "top-left",
            Rule::TopRight => "top-right",
            Rule::BotLeft => "bot-left",
            Rule::AndAss => "and-ass",
            Rule::AndEx => "and-ex",
            Rule::AndWeak => "and-weak",
            Rule::AndCont => "and-cont",
            Rule::NegLeft => "neg-left",
            Rule::NegRight => "neg-right",
            Rule::OneLeft => "one-left",
            Rule::OneRight => "one-right",
            Rule::Assumption => "assumption",
        }
    }

    /// Rearrangements of semicolon structure only.
    pub fn is_structural_glue(self) -> bool {
        matches!(self, Rule::AndAss | Rule::AndEx)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A derivation: the conclusion, the rule concluding it, the antecedent
/// position the rule acts on (for rules working inside a context), and
/// the derivations of the premises in rule-table order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTree {
    pub sequent: Sequent,
    pub rule: Rule,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<Path>,
    #[serde(default)]
    pub premises: Vec<ProofTree>,
}

impl ProofTree {
    pub fn leaf(sequent: Sequent, rule: Rule) -> ProofTree {
        ProofTree { sequent, rule, position: None, premises: Vec::new() }
    }

    /// Height, a single axiom counting 1.
    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::depth).max().unwrap_or(0)
    }

    /// Height ignoring associativity and exchange steps.
    pub fn logical_depth(&self) -> usize {
        let below = self.premises.iter().map(ProofTree::logical_depth).max().unwrap_or(0);
        if self.rule.is_structural_glue() {
            below
        } else {
            below + 1
        }
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::size).sum::<usize>()
    }

    pub fn rules_used(&self) -> std::collections::BTreeSet<Rule> {
        let mut out = std::collections::BTreeSet::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            out.insert(t.rule);
            stack.extend(t.premises.iter());
        }
        out
    }

    /// One line per node, premises indented below their conclusion.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(0, &mut out);
        out
    }

    fn write_text(&self, indent: usize, out: &mut String) {
        use std::fmt::Write;
        let pos = match &self.position {
            Some(p) if !p.is_empty() => {
                format!(" @{}", p.iter().map(u8::to_string).collect::<Vec<_>>().join(""))
            }
            _ => String::new(),
        };
        let _ = writeln!(out, "{:indent$}{}  [{}{}]", "", self.sequent, self.rule, pos, indent = indent);
        for p in &self.premises {
            p.write_text(indent + 2, out);
        }
    }
}
