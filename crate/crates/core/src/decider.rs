//! Entailment decisions: proof search raced against countermodel search.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{
    assignments, check_complement, check_poset_bounds_lattice, check_total_residuation, check_unit_laws,
    restrict_to_partial, satisfies, AlgebraJson, CompiledFormulas, Elem, Gap, PartialAlgebra, RestrictError,
    Truth, Valuation, Violation,
};
use crate::bitset::BitSet64;
use crate::checker::check_partial_rba;
use crate::frames::{check_frame, enumerate_frames, ComplexAlgebra, Frame, FrameViolation};
use crate::prover::{check_proof, prove_with_cancel, Exhausted, ProofError, ProofTree, SearchBudget};
use crate::syntax::{closure_set, entailment_bound, Formula, Sequent};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionConfig {
    /// Largest frame tried by the frame refuter.
    pub kmax: usize,
    pub budget: SearchBudget,
    pub paper_faithful: bool,
    /// Largest universe tried by the table enumeration.
    pub size_cap: usize,
    pub jobs: usize,
    pub prover: bool,
    pub frames: bool,
}

impl Default for DecisionConfig {
    fn default() -> Self {
        DecisionConfig {
            kmax: 2,
            budget: SearchBudget::default(),
            paper_faithful: false,
            size_cap: 3,
            jobs: 1,
            prover: true,
            frames: true,
        }
    }
}

fn algebra_json<S: Serializer>(a: &PartialAlgebra, s: S) -> Result<S::Ok, S::Error> {
    AlgebraJson::from(a).serialize(s)
}

/// A model with a valuation of the variables that satisfies every
/// assumption and falsifies the goal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum Countermodel {
    /// The complex algebra of a frame; variables denote sets of points.
    Frame { frame: Frame, valuation: BTreeMap<String, BitSet64> },
    /// A partial algebra accepted by the checker.
    Algebra {
        #[serde(serialize_with = "algebra_json")]
        algebra: PartialAlgebra,
        valuation: BTreeMap<String, Elem>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CountermodelError {
    #[error("frame is malformed: {0}")]
    Frame(FrameViolation),
    #[error("frame has {0} points, more than can be materialized")]
    FrameTooLarge(usize),
    #[error("complex algebra is not residuated: {0}")]
    NotResiduated(Violation),
    #[error("checker rejects the algebra at step {0:?}")]
    Rejected(Option<u8>),
    #[error("valuation misses variable {0}")]
    MissingVariable(String),
    #[error("valuation value for {0} is outside the universe")]
    OutOfRange(String),
    #[error("assumption {index} is {truth:?}, not satisfied")]
    Assumption { index: usize, truth: Truth },
    #[error("a side of the goal is undefined")]
    GoalUndefined,
    #[error("the goal is satisfied")]
    GoalSatisfied,
}

fn all_vars(assumptions: &[Sequent], goal: &Sequent) -> BTreeSet<String> {
    let mut vars = goal.vars();
    for a in assumptions {
        vars.extend(a.vars());
    }
    vars
}

fn judge(alg: &PartialAlgebra, mu: &Valuation, assumptions: &[Sequent], goal: &Sequent) -> Result<(), CountermodelError> {
    for (index, a) in assumptions.iter().enumerate() {
        let truth = satisfies(alg, mu, a);
        if truth != Truth::True {
            return Err(CountermodelError::Assumption { index, truth });
        }
    }
    match satisfies(alg, mu, goal) {
        Truth::False => Ok(()),
        Truth::True => Err(CountermodelError::GoalSatisfied),
        Truth::Undefined => Err(CountermodelError::GoalUndefined),
    }
}

fn lookup<T: Copy>(
    vals: &BTreeMap<String, T>,
    vars: &BTreeSet<String>,
    index: impl Fn(T) -> Option<Elem>,
) -> Result<Valuation, CountermodelError> {
    let mut mu = Valuation::new();
    for v in vars {
        let x = *vals.get(v).ok_or_else(|| CountermodelError::MissingVariable(v.clone()))?;
        let e = index(x).ok_or_else(|| CountermodelError::OutOfRange(v.clone()))?;
        mu.set(Formula::var(v.clone()), e);
    }
    Ok(mu)
}

/// Independent re-check of a countermodel: the model is a legitimate
/// structure, every assumption holds and the goal is defined and fails.
pub fn verify_countermodel(model: &Countermodel, assumptions: &[Sequent], goal: &Sequent) -> Result<(), CountermodelError> {
    let vars = all_vars(assumptions, goal);
    match model {
        Countermodel::Frame { frame, valuation } => {
            check_frame(frame).map_err(CountermodelError::Frame)?;
            if frame.points() > 5 {
                return Err(CountermodelError::FrameTooLarge(frame.points()));
            }
            let alg = ComplexAlgebra::new(frame.clone()).materialize();
            check_total_residuation(&alg, true).map_err(CountermodelError::NotResiduated)?;
            let universe = frame.universe();
            let mu = lookup(valuation, &vars, |s: BitSet64| s.is_subset(universe).then_some(s.0 as usize))?;
            judge(&alg, &mu, assumptions, goal)
        }
        Countermodel::Algebra { algebra, valuation } => {
            let verdict = check_partial_rba(algebra);
            if !verdict.accepted {
                return Err(CountermodelError::Rejected(verdict.failing_step));
            }
            let mu = lookup(valuation, &vars, |e: Elem| (e < algebra.size).then_some(e))?;
            judge(algebra, &mu, assumptions, goal)
        }
    }
}

/// Compiled sides of the goal and assumptions.
struct Problem {
    compiled: CompiledFormulas,
    goal: (usize, usize),
    assumptions: Vec<(usize, usize)>,
}

impl Problem {
    fn new(assumptions: &[Sequent], goal: &Sequent) -> Problem {
        let sides: Vec<(Formula, Formula)> =
            std::iter::once(goal).chain(assumptions).map(Sequent::sides).collect();
        let compiled = CompiledFormulas::new(sides.iter().flat_map(|(g, c)| [g, c]));
        let idx = |(g, c): &(Formula, Formula)| {
            (compiled.index_of(g).expect("compiled"), compiled.index_of(c).expect("compiled"))
        };
        let goal = idx(&sides[0]);
        let assumptions = sides[1..].iter().map(idx).collect();
        Problem { compiled, goal, assumptions }
    }

    fn holds(alg: &PartialAlgebra, out: &[Option<Elem>], (g, c): (usize, usize)) -> Option<bool> {
        Some(alg.le(out[g]?, out[c]?))
    }

    /// First assignment, in odometer order, that refutes the goal in the
    /// complex algebra of `frame`.
    fn refute_in_frame(&self, frame: &Frame) -> Option<Vec<Elem>> {
        let alg = ComplexAlgebra::new(frame.clone()).materialize();
        let mut out = Vec::with_capacity(self.compiled.len());
        assignments(alg.elements().collect(), self.compiled.vars().len()).find(|asg| {
            self.compiled.eval_into(&alg, asg, &mut out);
            Problem::holds(&alg, &out, self.goal) == Some(false)
                && self.assumptions.iter().all(|&s| Problem::holds(&alg, &out, s) == Some(true))
        })
    }

    fn named<T>(&self, asg: &[Elem], f: impl Fn(Elem) -> T) -> BTreeMap<String, T> {
        self.compiled.vars().iter().cloned().zip(asg.iter().map(|&e| f(e))).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrameReport {
    pub kmax: usize,
    pub frames_checked: u64,
}

/// Outcome of a frame sweep; `cancelled` is set when it stopped early.
#[derive(Clone, Debug)]
pub struct FrameSearch {
    pub countermodel: Option<Countermodel>,
    pub report: FrameReport,
    pub cancelled: bool,
}

const CHUNK: usize = 64;

pub fn refute_by_frames(assumptions: &[Sequent], goal: &Sequent, kmax: usize) -> Option<Countermodel> {
    refute_by_frames_with(assumptions, goal, kmax, false, None).countermodel
}

/// Sweep unital frames of size `1..=kmax` in canonical order. Frames are
/// taken in fixed chunks and the earliest hit within a chunk wins, so the
/// result does not depend on `parallel`.
pub fn refute_by_frames_with(
    assumptions: &[Sequent],
    goal: &Sequent,
    kmax: usize,
    parallel: bool,
    cancel: Option<&AtomicBool>,
) -> FrameSearch {
    assert!((1..=5).contains(&kmax), "kmax must lie in 1..=5");
    let problem = Problem::new(assumptions, goal);
    let mut report = FrameReport { kmax, frames_checked: 0 };
    for k in 1..=kmax {
        let mut stream = enumerate_frames(k, true, true);
        loop {
            if cancel.is_some_and(|c| c.load(Ordering::Relaxed)) {
                return FrameSearch { countermodel: None, report, cancelled: true };
            }
            let chunk: Vec<Frame> = stream.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let probe = |(i, f): (usize, &Frame)| problem.refute_in_frame(f).map(|a| (i, a));
            let hit = if parallel {
                chunk.par_iter().enumerate().find_map_first(probe)
            } else {
                chunk.iter().enumerate().find_map(probe)
            };
            match hit {
                Some((i, asg)) => {
                    report.frames_checked += i as u64 + 1;
                    let valuation = problem.named(&asg, |e| BitSet64(e as u64));
                    let countermodel = Countermodel::Frame { frame: chunk[i].clone(), valuation };
                    return FrameSearch { countermodel: Some(countermodel), report, cancelled: false };
                }
                None => report.frames_checked += chunk.len() as u64,
            }
        }
    }
    FrameSearch { countermodel: None, report, cancelled: false }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PaperFaithfulReport {
    pub size_cap: usize,
    pub entailment_bound: usize,
    /// Candidate structures handed to the checker.
    pub structures_checked: u64,
    /// Whether the cap reaches the bound, so that exhaustion is conclusive.
    pub conclusive: bool,
}

/// Orders on `0..m` with `0` least and `m-1` greatest.
fn bounded_orders(m: usize) -> Vec<Vec<bool>> {
    if m == 1 {
        return vec![vec![true]];
    }
    let middle: Vec<(usize, usize)> =
        (1..m - 1).flat_map(|a| (1..m - 1).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << middle.len()) {
        let mut rel = vec![false; m * m];
        for a in 0..m {
            rel[a * m + a] = true;
            rel[a] = true;
            rel[a * m + m - 1] = true;
        }
        for (i, &(a, b)) in middle.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rel[a * m + b] = true;
            }
        }
        let antisym = (0..m).all(|a| (0..m).all(|b| a == b || !(rel[a * m + b] && rel[b * m + a])));
        let trans = (0..m)
            .all(|a| (0..m).all(|b| !rel[a * m + b] || (0..m).all(|c| !rel[b * m + c] || rel[a * m + c])));
        if antisym && trans {
            out.push(rel);
        }
    }
    out
}

/// Structures of size `m` carrying only the entries every candidate needs:
/// the order, the constants, negation, the complement joins and meets, and
/// products with the unit. Those failing the table axioms are dropped.
fn skeletons(m: usize) -> Vec<PartialAlgebra> {
    let mut out = Vec::new();
    for order in bounded_orders(m) {
        for one in 0..m {
            for neg in assignments((0..m).collect(), m) {
                let mut a = PartialAlgebra::skeleton(m, |x, y| order[x * m + y], one, m - 1, 0);
                for x in 0..m {
                    a.neg[x] = Some(neg[x]);
                    a.join.set(x, neg[x], Some(m - 1));
                    a.meet.set(x, neg[x], Some(0));
                    a.otimes.set(one, x, Some(x));
                    a.otimes.set(x, one, Some(x));
                }
                if check_poset_bounds_lattice(&a).is_ok() && check_unit_laws(&a).is_ok() && check_complement(&a).is_ok()
                {
                    out.push(a);
                }
            }
        }
    }
    out
}

struct TableSearch<'a> {
    problem: &'a Problem,
    cancel: Option<&'a AtomicBool>,
    checked: u64,
}

impl TableSearch<'_> {
    /// Define missing entries one at a time, in evaluation order, until
    /// every side is defined; prune as soon as an assumption fails or the
    /// goal holds.
    fn fill(&mut self, alg: &mut PartialAlgebra, asg: &[Elem], out: &mut Vec<Option<Elem>>) -> bool {
        let p = self.problem;
        p.compiled.eval_into(alg, asg, out);
        if Problem::holds(alg, out, p.goal) == Some(true)
            || p.assumptions.iter().any(|&s| Problem::holds(alg, out, s) == Some(false))
        {
            return false;
        }
        match p.compiled.first_gap(out) {
            None => {
                self.checked += 1;
                check_partial_rba(alg).accepted
            }
            Some(Gap::Bin(op, x, y)) => {
                for v in alg.elements() {
                    alg.table_mut(op).set(x, y, Some(v));
                    if self.fill(alg, asg, out) {
                        return true;
                    }
                }
                alg.table_mut(op).set(x, y, None);
                false
            }
            Some(Gap::Not(x)) => {
                for v in alg.elements() {
                    alg.neg[x] = Some(v);
                    if self.fill(alg, asg, out) {
                        return true;
                    }
                }
                alg.neg[x] = None;
                false
            }
        }
    }
}

/// The bounded structure enumeration behind the finite model property:
/// every partial structure of size at most `size_cap` with the entries the
/// formulas need, filtered by the checker, under every valuation.
pub fn paper_faithful_search(
    assumptions: &[Sequent],
    goal: &Sequent,
    size_cap: usize,
    cancel: Option<&AtomicBool>,
) -> (Option<Countermodel>, PaperFaithfulReport) {
    let bound = entailment_bound(assumptions, goal);
    if size_cap < bound {
        log::warn!("size cap {size_cap} is below the bound {bound}; exhaustion is not conclusive");
    }
    let problem = Problem::new(assumptions, goal);
    let mut search = TableSearch { problem: &problem, cancel, checked: 0 };
    let report = |checked| PaperFaithfulReport {
        size_cap,
        entailment_bound: bound,
        structures_checked: checked,
        conclusive: size_cap >= bound,
    };
    let mut out = Vec::new();
    for m in 1..=size_cap {
        for skeleton in skeletons(m) {
            for asg in assignments((0..m).collect(), problem.compiled.vars().len()) {
                if search.cancel.is_some_and(|c| c.load(Ordering::Relaxed)) {
                    return (None, report(search.checked));
                }
                let mut alg = skeleton.clone();
                if search.fill(&mut alg, &asg, &mut out) {
                    let valuation = problem.named(&asg, |e| e);
                    return (Some(Countermodel::Algebra { algebra: alg, valuation }), report(search.checked));
                }
            }
        }
    }
    (None, report(search.checked))
}

pub fn decide_paper_faithful(assumptions: &[Sequent], goal: &Sequent, size_cap: usize) -> Verdict {
    match paper_faithful_search(assumptions, goal, size_cap, None) {
        (Some(countermodel), _) => Verdict::Refuted { countermodel },
        (None, report) => Verdict::Unknown {
            report: BoundsReport { prover: None, frames: None, paper_faithful: Some(report) },
        },
    }
}

/// The partial algebra cut out of a frame countermodel by the subformulas
/// involved, with the induced valuation.
pub fn restrict_countermodel(
    model: &Countermodel,
    assumptions: &[Sequent],
    goal: &Sequent,
) -> Result<Countermodel, RestrictError> {
    let Countermodel::Frame { frame, valuation } = model else {
        return Ok(model.clone());
    };
    let total = ComplexAlgebra::new(frame.clone()).materialize();
    let mut mu = Valuation::new();
    for (v, s) in valuation {
        mu.set(Formula::var(v.clone()), s.0 as usize);
    }
    let t = closure_set(assumptions.iter().chain(std::iter::once(goal)));
    let r = restrict_to_partial(&total, &t, &mu)?;
    Ok(Countermodel::Algebra { algebra: r.algebra, valuation: r.valuation.var_assignment() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProverReport {
    pub exhausted: Exhausted,
    pub expansions: u64,
}

/// What each enabled engine tried before giving up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prover: Option<ProverReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frames: Option<FrameReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_faithful: Option<PaperFaithfulReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Provable {
        proof: ProofTree,
        /// A countermodel found at the same time; its presence means one of
        /// the engines is unsound.
        #[serde(skip_serializing_if = "Option::is_none")]
        soundness_alarm: Option<Countermodel>,
    },
    Refuted {
        countermodel: Countermodel,
    },
    Unknown {
        report: BoundsReport,
    },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Provable { .. } => "provable",
            Verdict::Refuted { .. } => "refuted",
            Verdict::Unknown { .. } => "unknown",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Provable { .. } => 0,
            Verdict::Refuted { .. } => 1,
            Verdict::Unknown { .. } => 2,
        }
    }
}

/// Work counters. They depend on which engine finished first, so they are
/// kept out of the serialized verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub prover_expansions: u64,
    pub frames_checked: u64,
    pub structures_checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub goal: Sequent,
    pub assumptions: Vec<Sequent>,
    pub entailment_bound: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(skip)]
    pub stats: EngineStats,
}

#[derive(Debug, Error)]
pub enum DecideError {
    #[error("proof failed its own check: {0}")]
    Proof(ProofError),
    #[error("countermodel failed its own check: {0}")]
    Countermodel(CountermodelError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
    #[error("kmax must lie in 1..=5, got {0}")]
    Kmax(usize),
}

/// Run the enabled refuters in order, stopping at the first countermodel.
fn refute(
    assumptions: &[Sequent],
    goal: &Sequent,
    cfg: &DecisionConfig,
    cancel: &AtomicBool,
) -> (Option<Countermodel>, Option<FrameReport>, Option<PaperFaithfulReport>) {
    let mut frames = None;
    if cfg.frames {
        let run = refute_by_frames_with(assumptions, goal, cfg.kmax, cfg.jobs > 1, Some(cancel));
        if run.countermodel.is_some() {
            return (run.countermodel, Some(run.report), None);
        }
        frames = Some(run.report);
    }
    if cfg.paper_faithful {
        let (cm, report) = paper_faithful_search(assumptions, goal, cfg.size_cap, Some(cancel));
        return (cm, frames, Some(report));
    }
    (None, frames, None)
}

pub fn decide(assumptions: &[Sequent], goal: &Sequent, cfg: &DecisionConfig) -> Result<Decision, DecideError> {
    if cfg.frames && !(1..=5).contains(&cfg.kmax) {
        return Err(DecideError::Kmax(cfg.kmax));
    }
    let cancel = AtomicBool::new(false);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| DecideError::Pool(e.to_string()))?;

    let (proved, (countermodel, frames, paper)) = std::thread::scope(|s| {
        let prover = cfg.prover.then(|| {
            s.spawn(|| {
                let run = prove_with_cancel(goal, assumptions, &cfg.budget, Some(&cancel));
                if run.0.is_ok() {
                    cancel.store(true, Ordering::Relaxed);
                }
                run
            })
        });
        let refuted = pool.install(|| refute(assumptions, goal, cfg, &cancel));
        if refuted.0.is_some() {
            cancel.store(true, Ordering::Relaxed);
        }
        (prover.map(|h| h.join().expect("prover thread panicked")), refuted)
    });

    let stats = EngineStats {
        prover_expansions: proved.as_ref().map_or(0, |(_, st)| st.expansions),
        frames_checked: frames.as_ref().map_or(0, |r| r.frames_checked),
        structures_checked: paper.as_ref().map_or(0, |r| r.structures_checked),
    };
    let verdict = match (proved, countermodel) {
        (Some((Ok(proof), _)), alarm) => {
            check_proof(&proof, assumptions).map_err(DecideError::Proof)?;
            if alarm.is_some() {
                log::error!("both a proof and a countermodel were found for {goal}");
            }
            Verdict::Provable { proof, soundness_alarm: alarm }
        }
        (_, Some(countermodel)) => {
            verify_countermodel(&countermodel, assumptions, goal).map_err(DecideError::Countermodel)?;
            Verdict::Refuted { countermodel }
        }
        (proved, None) => Verdict::Unknown {
            report: BoundsReport {
                prover: proved.map(|(r, stats)| ProverReport {
                    exhausted: r.expect_err("proof handled above"),
                    expansions: stats.expansions,
                }),
                frames,
                paper_faithful: paper,
            },
        },
    };
    Ok(Decision {
        goal: goal.clone(),
        assumptions: assumptions.to_vec(),
        entailment_bound: entailment_bound(assumptions, goal),
        verdict,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Sequent {
        t.parse().unwrap()
    }

    fn chain_model(p: Elem, q: Elem) -> Countermodel {
        Countermodel::Algebra {
            algebra: PartialAlgebra::two_chain(),
            valuation: [("p".to_string(), p), ("q".to_string(), q)].into_iter().collect(),
        }
    }

    #[test]
    fn countermodel_examples() {
        let m = chain_model(1, 0);
        assert_eq!(verify_countermodel(&m, &[], &s("p => q")), Ok(()));
        assert_eq!(verify_countermodel(&m, &[], &s("p => p")), Err(CountermodelError::GoalSatisfied));
        assert_eq!(verify_countermodel(&m, &[s("q => p")], &s("p => q")), Ok(()));
        assert_eq!(
            verify_countermodel(&m, &[s("p => q")], &s("p => q")),
            Err(CountermodelError::Assumption { index: 0, truth: Truth::False })
        );
    }

    #[test]
    fn atom_implication_refuted_at_one_point() {
        let cm = refute_by_frames(&[], &s("p => q"), 1).expect("countermodel");
        let Countermodel::Frame { frame, .. } = &cm else { panic!() };
        assert_eq!(frame.points(), 1);
        verify_countermodel(&cm, &[], &s("p => q")).unwrap();
    }

    #[test]
    fn theorems_have_no_frame_countermodel() {
        for goal in ["p => p", "p ; q => q & p", "T => p | ~p"] {
            assert_eq!(refute_by_frames(&[], &s(goal), 2), None, "{goal}");
        }
    }

    #[test]
    fn orders_with_bounds() {
        assert_eq!(bounded_orders(1).len(), 1);
        assert_eq!(bounded_orders(2).len(), 1);
        assert_eq!(bounded_orders(3).len(), 1);
        // antichain, two chains
        assert_eq!(bounded_orders(4).len(), 3);
    }

    #[test]
    fn paper_faithful_examples() {
        assert!(matches!(decide_paper_faithful(&[], &s("p => p"), 3), Verdict::Unknown { .. }));
        let Verdict::Refuted { countermodel } = decide_paper_faithful(&[], &s("p => q"), 2) else {
            panic!("expected a refutation");
        };
        let Countermodel::Algebra { algebra, .. } = &countermodel else { panic!() };
        assert_eq!(algebra.size, 2);
        verify_countermodel(&countermodel, &[], &s("p => q")).unwrap();
        assert!(matches!(decide_paper_faithful(&[], &s("T => p | ~p"), 4), Verdict::Unknown { .. }));
    }

    #[test]
    fn restriction_keeps_refuting() {
        let goal = s("p => q");
        let cm = refute_by_frames(&[], &goal, 2).unwrap();
        let small = restrict_countermodel(&cm, &[], &goal).unwrap();
        verify_countermodel(&small, &[], &goal).unwrap();
    }

    #[test]
    fn decide_examples() {
        let cfg = DecisionConfig::default();
        assert_eq!(decide(&[], &s("p => p"), &cfg).unwrap().verdict.name(), "provable");
        assert_eq!(decide(&[], &s("p => q"), &cfg).unwrap().verdict.name(), "refuted");
        let phi = [s("p => q"), s("q => r")];
        assert_eq!(decide(&phi, &s("p => r"), &cfg).unwrap().verdict.name(), "provable");
    }
}
