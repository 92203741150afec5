use std::collections::{BTreeSet, HashMap, HashSet};
use std::rc::Rc;
use std::sync::atomic::{AtomicBool, Ordering};

use serde::Serialize;
use thiserror::Error;

use crate::syntax::{size, BinOp, Bunch, Formula, Path, Sep, Sequent};

use super::canon::{ac_chain, canonical_sequent, cluster_members, steps_to_canonical, Step};
use super::{ProofTree, Rule};

/// When the restricted cut is tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CutMode {
    /// Only when there are assumptions.
    Auto,
    Always,
    /// Also turns off the derived negation patterns, which contain cuts.
    Never,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Longest branch, counting logical rules and axioms but not the
    /// associativity and exchange steps that rearrange semicolons.
    pub max_depth: usize,
    /// Antecedents may hold at most `bunch_cap` times the combined size of
    /// the goal and the assumptions, in nodes.
    pub bunch_cap: usize,
    pub cut: CutMode,
    /// Upper bound on expanded search nodes.
    pub max_expansions: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_depth: 30, bunch_cap: 2, cut: CutMode::Auto, max_expansions: 2_000_000 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub expansions: u64,
    pub deepest_round: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Exhausted {
    #[error("no proof within depth {max_depth}")]
    Depth { max_depth: usize },
    #[error("expansion limit {limit} reached")]
    Expansions { limit: u64 },
    #[error("cancelled")]
    Cancelled,
}

pub fn prove(goal: &Sequent, assumptions: &[Sequent], budget: &SearchBudget) -> Result<ProofTree, Exhausted> {
    prove_with_cancel(goal, assumptions, budget, None).0
}

/// Iterative deepening from depth 1 up to the budget's maximum.
pub fn prove_with_cancel(
    goal: &Sequent,
    assumptions: &[Sequent],
    budget: &SearchBudget,
    cancel: Option<&AtomicBool>,
) -> (Result<ProofTree, Exhausted>, SearchStats) {
    let mut s = Searcher::new(goal, assumptions, budget, cancel);
    let start = canonical_sequent(goal);
    let mut result = Err(Exhausted::Depth { max_depth: budget.max_depth });
    for d in 1..=budget.max_depth {
        s.stats.deepest_round = d;
        match s.search(&start, d) {
            Outcome::Proved(p) => {
                let tree = chain_proof(&goal.antecedent, &steps_to_canonical(&goal.antecedent), &goal.succedent, (*p).clone());
                result = Ok(tree);
                break;
            }
            Outcome::Aborted(e) => {
                result = Err(e);
                break;
            }
            Outcome::Failed { .. } => {}
        }
    }
    (result, s.stats)
}

/// A derivation of `end` preceded by the given rearrangement steps, the
/// first conclusion being `start`.
fn chain_proof(start: &Bunch, steps: &[Step], succ: &Formula, end: ProofTree) -> ProofTree {
    let mut tree = end;
    for i in (0..steps.len()).rev() {
        let concl = if i == 0 { start.clone() } else { steps[i - 1].result.clone() };
        tree = ProofTree {
            sequent: Sequent::new(concl, succ.clone()),
            rule: steps[i].rule,
            position: Some(steps[i].position.clone()),
            premises: vec![tree],
        };
    }
    if steps.is_empty() {
        tree.sequent = Sequent::new(start.clone(), succ.clone());
    }
    tree
}

enum Outcome {
    Proved(Rc<ProofTree>),
    Failed { clean: bool },
    Aborted(Exhausted),
}

/// One backward step on a canonical sequent: a single rule, or one of the
/// two derived patterns that the negation axioms support.
struct Move {
    rule: Rule,
    position: Option<Path>,
    premises: Vec<Sequent>,
    shape: Shape,
}

enum Shape {
    Rule,
    /// `Γ[Δ] ⇒ C` from `Γ[Δ ; A] ⇒ C` and `Γ[Δ ; ~A] ⇒ C`.
    CaseSplit(Formula),
    /// `Γ[Δ] ⇒ C` from `Δ ⇒ A` and `Δ ⇒ ~A`.
    Explode(Formula),
}

impl Move {
    fn new(rule: Rule, position: Option<Path>, premises: Vec<Sequent>) -> Move {
        Move { rule, position, premises, shape: Shape::Rule }
    }

    /// The derivation of `concl` from proofs of the premises.
    fn assemble(&self, concl: &Sequent, subproofs: Vec<ProofTree>) -> ProofTree {
        let node = |sequent: Sequent, rule: Rule, position: Option<Path>, premises: Vec<ProofTree>| ProofTree {
            sequent,
            rule,
            position,
            premises,
        };
        let g = &concl.antecedent;
        let c = &concl.succedent;
        match &self.shape {
            Shape::Rule => node(concl.clone(), self.rule, self.position.clone(), subproofs),
            Shape::CaseSplit(a) => {
                // contract Δ, cut `A | ~A` into the second copy, split on it
                let p = self.position.clone().expect("position");
                let d = g.get(&p).expect("position").clone();
                let em = Formula::or(a.clone(), Formula::not(a.clone()));
                let mut q = p.clone();
                q.push(1);
                let put = |b: Bunch| g.replace_at(&p, Bunch::semi(d.clone(), b)).expect("position");
                let split = node(Sequent::new(put(Bunch::Leaf(em.clone())), c.clone()), Rule::OrLeft, Some(q.clone()), subproofs);
                let from_top = node(
                    Sequent::new(Bunch::Del, em.clone()),
                    Rule::Cut,
                    Some(vec![]),
                    vec![
                        ProofTree::leaf(Sequent::new(Bunch::Del, Formula::Top), Rule::TopRight),
                        ProofTree::leaf(Sequent::new(Bunch::Leaf(Formula::Top), em.clone()), Rule::NegRight),
                    ],
                );
                let lemma = node(Sequent::new(d.clone(), em), Rule::AndWeak, Some(vec![]), vec![from_top]);
                let cut = node(Sequent::new(put(d.clone()), c.clone()), Rule::Cut, Some(q), vec![lemma, split]);
                node(concl.clone(), Rule::AndCont, Some(p), vec![cut])
            }
            Shape::Explode(a) => {
                // Δ ⇒ A & ~A ⇒ F, then cut F into the context
                let p = self.position.clone().expect("position");
                let d = g.get(&p).expect("position").clone();
                let clash = Formula::and(a.clone(), Formula::not(a.clone()));
                let both = node(Sequent::new(d.clone(), clash.clone()), Rule::AndRight, None, subproofs);
                let bottom = node(
                    Sequent::new(d, Formula::Bot),
                    Rule::Cut,
                    Some(vec![]),
                    vec![both, ProofTree::leaf(Sequent::new(Bunch::Leaf(clash), Formula::Bot), Rule::NegLeft)],
                );
                if p.is_empty() && *c == Formula::Bot {
                    return ProofTree { sequent: concl.clone(), ..bottom };
                }
                let rest = g.replace_at(&p, Bunch::Leaf(Formula::Bot)).expect("position");
                let absurd = ProofTree {
                    position: Some(p.clone()),
                    ..ProofTree::leaf(Sequent::new(rest, c.clone()), Rule::BotLeft)
                };
                node(concl.clone(), Rule::Cut, Some(p), vec![bottom, absurd])
            }
        }
    }
}

struct Searcher<'a> {
    assumptions: Vec<(Sequent, Sequent)>,
    cut_formulas: Vec<Formula>,
    /// Every `A` with `~A` among the subformulas.
    negated: Vec<Formula>,
    cap: usize,
    limit: u64,
    cancel: Option<&'a AtomicBool>,
    proofs: HashMap<Sequent, Rc<ProofTree>>,
    failed: HashMap<Sequent, usize>,
    ancestors: HashSet<Sequent>,
    stats: SearchStats,
}

fn leaf_of(b: &Bunch) -> Option<&Formula> {
    b.as_formula()
}

fn is_negation_of(a: &Formula, na: &Formula) -> bool {
    matches!(na, Formula::Not(x) if **x == *a)
}

impl<'a> Searcher<'a> {
    fn new(goal: &Sequent, assumptions: &[Sequent], budget: &SearchBudget, cancel: Option<&'a AtomicBool>) -> Self {
        let mut closure = BTreeSet::new();
        for s in assumptions.iter().chain(std::iter::once(goal)) {
            let mut fs = Vec::new();
            s.antecedent.collect_formulas(&mut fs);
            for f in fs.into_iter().chain(std::iter::once(&s.succedent)) {
                closure.extend(f.subformulas());
            }
        }
        // the clash and case-split patterns contain cuts
        let negated: Vec<Formula> = closure
            .iter()
            .filter(|_| budget.cut != CutMode::Never)
            .filter_map(|f| match f {
                Formula::Not(a) => Some((**a).clone()),
                _ => None,
            })
            .collect();
        let cut_on = match budget.cut {
            CutMode::Auto => !assumptions.is_empty(),
            CutMode::Always => true,
            CutMode::Never => false,
        };
        let mut cut_formulas = BTreeSet::new();
        if cut_on {
            cut_formulas.extend([Formula::One, Formula::Top, Formula::Bot]);
            cut_formulas.extend(closure);
        }
        let total: usize = size(goal) + assumptions.iter().map(size).sum::<usize>();
        Searcher {
            assumptions: assumptions.iter().map(|a| (canonical_sequent(a), a.normalize_units())).collect(),
            cut_formulas: cut_formulas.into_iter().collect(),
            negated,
            cap: budget.bunch_cap.max(1) * total.max(1),
            limit: budget.max_expansions,
            cancel,
            proofs: HashMap::new(),
            failed: HashMap::new(),
            ancestors: HashSet::new(),
            stats: SearchStats::default(),
        }
    }

    fn search(&mut self, s: &Sequent, depth: usize) -> Outcome {
        if let Some(p) = self.proofs.get(s) {
            if p.logical_depth() <= depth {
                return Outcome::Proved(p.clone());
            }
        }
        if depth == 0 || self.failed.get(s).is_some_and(|&d| d >= depth) {
            return Outcome::Failed { clean: true };
        }
        if self.ancestors.contains(s) {
            return Outcome::Failed { clean: false };
        }
        if self.cancel.is_some_and(|c| c.load(Ordering::Relaxed)) {
            return Outcome::Aborted(Exhausted::Cancelled);
        }
        self.stats.expansions += 1;
        if self.stats.expansions > self.limit {
            return Outcome::Aborted(Exhausted::Expansions { limit: self.limit });
        }

        if let Some(p) = self.axiom(s) {
            let p = Rc::new(p);
            self.proofs.insert(s.clone(), p.clone());
            return Outcome::Proved(p);
        }
        if depth == 1 {
            self.failed.insert(s.clone(), 1);
            return Outcome::Failed { clean: true };
        }

        self.ancestors.insert(s.clone());
        let mut clean = true;
        let mut found = None;
        'moves: for mv in self.moves(s) {
            let mut subproofs = Vec::with_capacity(mv.premises.len());
            for prem in &mv.premises {
                let target = canonical_sequent(prem);
                match self.search(&target, depth - 1) {
                    Outcome::Proved(p) => {
                        let steps = steps_to_canonical(&prem.antecedent);
                        subproofs.push(chain_proof(&prem.antecedent, &steps, &prem.succedent, (*p).clone()));
                    }
                    Outcome::Failed { clean: c } => {
                        clean &= c;
                        continue 'moves;
                    }
                    Outcome::Aborted(e) => {
                        self.ancestors.remove(s);
                        return Outcome::Aborted(e);
                    }
                }
            }
            found = Some(Rc::new(mv.assemble(s, subproofs)));
            break;
        }
        self.ancestors.remove(s);
        match found {
            Some(p) => {
                self.proofs.insert(s.clone(), p.clone());
                Outcome::Proved(p)
            }
            None => {
                if clean {
                    let e = self.failed.entry(s.clone()).or_insert(0);
                    *e = (*e).max(depth);
                }
                Outcome::Failed { clean }
            }
        }
    }

    fn axiom(&self, s: &Sequent) -> Option<ProofTree> {
        let g = &s.antecedent;
        let c = &s.succedent;
        let leaf = |rule| Some(ProofTree::leaf(s.clone(), rule));
        if *g == Bunch::Leaf(c.clone()) {
            return leaf(Rule::Id);
        }
        if *c == Formula::Top {
            return leaf(Rule::TopRight);
        }
        if *g == Bunch::Eps && *c == Formula::One {
            return leaf(Rule::OneRight);
        }
        if *c == Formula::Bot {
            if let Some(Formula::Bin(BinOp::And, a, na)) = leaf_of(g) {
                if is_negation_of(a, na) {
                    return leaf(Rule::NegLeft);
                }
            }
        }
        if *g == Bunch::Leaf(Formula::Top) {
            if let Formula::Bin(BinOp::Or, a, na) = c {
                if is_negation_of(a, na) {
                    return leaf(Rule::NegRight);
                }
            }
        }
        for p in g.positions() {
            if g.get(&p) == Some(&Bunch::Leaf(Formula::Bot)) {
                return Some(ProofTree { position: Some(p), ..ProofTree::leaf(s.clone(), Rule::BotLeft) });
            }
        }
        for (canon, original) in &self.assumptions {
            if canon == s {
                let leaf = ProofTree::leaf(original.clone(), Rule::Assumption);
                return Some(chain_proof(g, &ac_chain(g, &original.antecedent), c, leaf));
            }
        }
        None
    }

    fn fits(&self, b: &Bunch) -> bool {
        b.node_count() <= self.cap
    }

    fn moves(&self, s: &Sequent) -> Vec<Move> {
        let g = &s.antecedent;
        let c = &s.succedent;
        let sq = |b: Bunch, f: &Formula| Sequent::new(b, f.clone());
        let put = |p: &Path, b: Bunch| g.replace_at(p, b).expect("valid position");

        // invertible right rules, applied eagerly
        if let Formula::Bin(op, a, b) = c {
            let eager = match op {
                BinOp::And => Some(Move::new(Rule::AndRight, None, vec![sq(g.clone(), a), sq(g.clone(), b)])),
                BinOp::Under => {
                    let prem = Bunch::comma(Bunch::Leaf((**a).clone()), g.clone());
                    self.fits(&prem).then(|| Move::new(Rule::LolRight, None, vec![sq(prem, b)]))
                }
                BinOp::Over => {
                    let prem = Bunch::comma(g.clone(), Bunch::Leaf((**b).clone()));
                    self.fits(&prem).then(|| Move::new(Rule::LolinvRight, None, vec![sq(prem, a)]))
                }
                _ => None,
            };
            if let Some(m) = eager {
                return vec![m];
            }
        }

        let positions = g.positions();
        let mut out = Vec::new();

        // left rules
        for p in &positions {
            let node = g.get(p).expect("position");
            match node {
                Bunch::Leaf(Formula::Bin(BinOp::Tensor, a, b)) => out.push(Move::new(
                    Rule::OtimesLeft,
                    Some(p.clone()),
                    vec![sq(put(p, Bunch::comma(Bunch::Leaf((**a).clone()), Bunch::Leaf((**b).clone()))), c)],
                )),
                Bunch::Leaf(Formula::Bin(BinOp::And, a, b)) => out.push(Move::new(
                    Rule::AndLeft,
                    Some(p.clone()),
                    vec![sq(put(p, Bunch::semi(Bunch::Leaf((**a).clone()), Bunch::Leaf((**b).clone()))), c)],
                )),
                Bunch::Leaf(Formula::Bin(BinOp::Or, a, b)) => out.push(Move::new(
                    Rule::OrLeft,
                    Some(p.clone()),
                    vec![sq(put(p, Bunch::Leaf((**a).clone())), c), sq(put(p, Bunch::Leaf((**b).clone())), c)],
                )),
                Bunch::Leaf(Formula::Top) => {
                    out.push(Move::new(Rule::TopLeft, Some(p.clone()), vec![sq(put(p, Bunch::Del), c)]))
                }
                Bunch::Leaf(Formula::One) => {
                    out.push(Move::new(Rule::OneLeft, Some(p.clone()), vec![sq(put(p, Bunch::Eps), c)]))
                }
                Bunch::Leaf(Formula::Bin(BinOp::Under, a, b)) => out.push(Move::new(
                    Rule::LolLeft,
                    Some(p.clone()),
                    vec![sq(put(p, Bunch::Leaf((**b).clone())), c), sq(Bunch::Eps, a)],
                )),
                Bunch::Leaf(Formula::Bin(BinOp::Over, a, b)) => out.push(Move::new(
                    Rule::LolinvLeft,
                    Some(p.clone()),
                    vec![sq(put(p, Bunch::Leaf((**a).clone())), c), sq(Bunch::Eps, b)],
                )),
                Bunch::Node(Sep::Comma, l, r) => {
                    if let Bunch::Leaf(Formula::Bin(BinOp::Under, a, b)) = &**r {
                        out.push(Move::new(
                            Rule::LolLeft,
                            Some(p.clone()),
                            vec![sq(put(p, Bunch::Leaf((**b).clone())), c), sq((**l).clone(), a)],
                        ));
                    }
                    if let Bunch::Leaf(Formula::Bin(BinOp::Over, a, b)) = &**l {
                        out.push(Move::new(
                            Rule::LolinvLeft,
                            Some(p.clone()),
                            vec![sq(put(p, Bunch::Leaf((**a).clone())), c), sq((**r).clone(), b)],
                        ));
                    }
                }
                _ => {}
            }
        }

        // remaining right rules
        match c {
            Formula::Bin(BinOp::Or, a, b) => {
                out.push(Move::new(Rule::OrRight, None, vec![sq(g.clone(), a)]));
                out.push(Move::new(Rule::OrRight, None, vec![sq(g.clone(), b)]));
            }
            Formula::Bin(BinOp::Tensor, a, b) => {
                if let Bunch::Node(Sep::Comma, l, r) = g {
                    out.push(Move::new(Rule::OtimesRight, None, vec![sq((**l).clone(), a), sq((**r).clone(), b)]));
                }
                out.push(Move::new(Rule::OtimesRight, None, vec![sq(Bunch::Eps, a), sq(g.clone(), b)]));
                if *g != Bunch::Eps {
                    out.push(Move::new(Rule::OtimesRight, None, vec![sq(g.clone(), a), sq(Bunch::Eps, b)]));
                }
            }
            _ => {}
        }

        let parent_is_semi = |p: &Path| {
            !p.is_empty() && matches!(g.get(&p[..p.len() - 1]), Some(Bunch::Node(Sep::Semi, ..)))
        };
        // cluster roots: positions that are not units and not inside a
        // longer run of semicolons
        let roots: Vec<&Path> = positions
            .iter()
            .filter(|p| {
                let node = g.get(p).expect("position");
                !matches!(node, Bunch::Del | Bunch::Eps)
                    && !(matches!(node, Bunch::Node(Sep::Semi, ..)) && parent_is_semi(p))
            })
            .collect();

        // a negated formula on the left is only usable through a clash
        for p in &roots {
            let node = g.get(p).expect("position");
            if node.as_formula().is_some() {
                continue;
            }
            let mut leaves = Vec::new();
            node.collect_formulas(&mut leaves);
            for a in &self.negated {
                let na = Formula::not(a.clone());
                if leaves.contains(&&na) {
                    let m = Move {
                        rule: Rule::Cut,
                        position: Some((*p).clone()),
                        premises: vec![sq(node.clone(), a), sq(node.clone(), &na)],
                        shape: Shape::Explode(a.clone()),
                    };
                    out.push(m);
                }
            }
        }
        // `ε ; A` does not collapse, so a bare `ε` can be split as well
        let eps_root: Vec<Path> = (*g == Bunch::Eps).then(Vec::new).into_iter().collect();
        for p in roots.iter().copied().chain(&eps_root) {
            let node = g.get(p).expect("position");
            let mut members = Vec::new();
            cluster_members(node, &mut members);
            for a in &self.negated {
                let na = Formula::not(a.clone());
                if members.iter().any(|m| m.as_formula() == Some(a) || m.as_formula() == Some(&na)) {
                    continue;
                }
                let with = |f: Formula| put(p, Bunch::semi(node.clone(), Bunch::Leaf(f)));
                let (yes, no) = (with(a.clone()), with(na.clone()));
                if self.fits(&no) {
                    out.push(Move {
                        rule: Rule::AndCont,
                        position: Some((*p).clone()),
                        premises: vec![sq(yes, c), sq(no, c)],
                        shape: Shape::CaseSplit(a.clone()),
                    });
                }
            }
        }

        // structural rules
        for p in &positions {
            let node = g.get(p).expect("position");
            let weakenable = match node {
                Bunch::Del => false,
                Bunch::Eps => parent_is_semi(p),
                _ => true,
            };
            if weakenable {
                out.push(Move::new(Rule::AndWeak, Some(p.clone()), vec![sq(put(p, Bunch::Del), c)]));
            }
        }
        for p in &positions {
            let node = g.get(p).expect("position");
            let intermediate = matches!(node, Bunch::Node(Sep::Semi, ..)) && parent_is_semi(p);
            if intermediate || matches!(node, Bunch::Del | Bunch::Eps) {
                continue;
            }
            let doubled = put(p, Bunch::semi(node.clone(), node.clone()));
            if self.fits(&doubled) {
                out.push(Move::new(Rule::AndCont, Some(p.clone()), vec![sq(doubled, c)]));
            }
        }

        // restricted cut
        for p in &positions {
            let node = g.get(p).expect("position");
            for a in &self.cut_formulas {
                if *node == Bunch::Leaf(a.clone()) {
                    continue;
                }
                let rest = put(p, Bunch::Leaf(a.clone()));
                if self.fits(&rest) {
                    out.push(Move::new(Rule::Cut, Some(p.clone()), vec![sq(node.clone(), a), sq(rest, c)]));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prover::check_proof;

    fn s(t: &str) -> Sequent {
        t.parse().unwrap()
    }

    fn proved(goal: &str, phi: &[&str]) -> ProofTree {
        let phi: Vec<Sequent> = phi.iter().map(|x| s(x)).collect();
        let t = prove(&s(goal), &phi, &SearchBudget::default()).unwrap_or_else(|e| panic!("{goal}: {e}"));
        check_proof(&t, &phi).unwrap_or_else(|e| panic!("{goal}: {e}\n{}", t.to_text()));
        t
    }

    #[test]
    fn axioms_have_depth_one() {
        assert_eq!(proved("p => p", &[]).depth(), 1);
        assert_eq!(proved("eps => 1", &[]).rule, Rule::OneRight);
        assert_eq!(proved("p & ~p => F", &[]).rule, Rule::NegLeft);
    }

    #[test]
    fn small_theorems() {
        for goal in [
            "p ; q => q & p",
            "p & (q | r) => (p & q) | (p & r)",
            "1 , p => p",
            "p , (p \\ q) => q",
            "(q / p) , p => q",
            "(p ; q) ; r => p & (q & r)",
            "p => p & p",
            "p * q => p * q",
            "T => p | ~p",
        ] {
            proved(goal, &[]);
        }
    }

    #[test]
    fn assumptions_with_cut() {
        let t = proved("p => r", &["p => q", "q => r"]);
        assert_eq!(t.rule, Rule::Cut);
    }

    #[test]
    fn excluded_middle_from_empty_goes_through_the_negation_axioms() {
        let goal = s("eps => p | ~p");
        let b = SearchBudget { cut: CutMode::Never, ..SearchBudget::default() };
        assert!(prove(&goal, &[], &b).is_err());
        for cut in [CutMode::Auto, CutMode::Always] {
            let t = prove(&goal, &[], &SearchBudget { cut, ..SearchBudget::default() }).unwrap();
            check_proof(&t, &[]).unwrap();
            assert!(t.rules_used().contains(&Rule::NegRight));
        }
    }

    #[test]
    fn boolean_laws_of_negation() {
        for goal in ["~~p => p", "p => ~~p", "~(p | q) => ~p & ~q", "~p & ~q => ~(p | q)", "~(p & q) => ~p | ~q"] {
            let t = proved(goal, &[]);
            assert!(t.rules_used().contains(&Rule::Cut), "{goal}");
        }
    }

    #[test]
    fn non_theorems_exhaust() {
        let b = SearchBudget { max_depth: 6, ..SearchBudget::default() };
        assert!(prove(&s("p , q => q * p"), &[], &b).is_err());
        assert!(prove(&s("p => q"), &[], &b).is_err());
    }
}
