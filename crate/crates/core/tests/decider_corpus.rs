mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bfnl::algebra::Valuation;
use bfnl::bitset::BitSet64;
use bfnl::checker::check_partial_rba;
use bfnl::decider::{
    decide, decide_paper_faithful, refute_by_frames, restrict_countermodel, verify_countermodel, Countermodel,
    DecisionConfig, Verdict,
};
use bfnl::frames::{enumerate_frames, Frame};
use bfnl::prover::check_proof;
use bfnl::syntax::{entailment_bound, Formula, Sequent};

use common::{frame_valuations, holds_in_frame, seq, seqs};

const PROVABLE: &[&str] = &[
    "p => p",
    "p | q => q | p",
    "p & q => q & p",
    "p => p | q",
    "p & q => p",
    "p ; q => p",
    "F => p",
    "p => T",
    "~~p => p",
    "p => ~~p",
    "~(p | q) => ~p & ~q",
    "~p & ~q => ~(p | q)",
    "~(p & q) => ~p | ~q",
    "~p | ~q => ~(p & q)",
    "p * (q | r) => (p * q) | (p * r)",
    "(p * q) | (p * r) => p * (q | r)",
    "(q | r) * p => (q * p) | (r * p)",
    "p * F => F",
    "F * p => F",
    "eps => p \\ p",
    "eps => p / p",
    "p * 1 => p",
    "p => 1 * p",
    "p \\ (q & r) => (p \\ q) & (p \\ r)",
    "p , (p \\ q) => q",
    "(q / p) , p => q",
    "q => p \\ (p * q)",
    "p => (p * q) / q",
    "T => p | ~p",
    "eps => p | ~p",
    "p & ~p => F",
    "p & (q | r) => (p & q) | (p & r)",
    "~~p , q => p * q",
];

const REFUTED: &[&str] = &[
    "(p \\ q) , (q \\ r) => p \\ r",
    "p , q => q * p",
    "(p * q) * r => p * (q * r)",
    "p * (q * r) => (p * q) * r",
    "p * q => p",
    "p => p * p",
    "p => q",
    "p | q => p",
    "p => p & q",
    "T => p",
    "p => F",
    "eps => p",
    "p * p => p",
    "p \\ q => q / p",
    "p => 1",
    "1 => p",
    "p * q => q * p",
    "(p \\ q) * p => q",
    "~(p * q) => ~p * ~q",
    "p \\ q => ~p | q",
    "~(p \\ q) => ~q",
    "~p => p \\ F",
];

/// Provable from assumptions, checked against every small model of them.
const WITH_ASSUMPTIONS: &[(&[&str], &str)] = &[
    (&["p => q", "q => r"], "p => r"),
    (&["p => q"], "p * r => q * r"),
    (&["p => q"], "~q => ~p"),
    (&["p * q => r"], "q => p \\ r"),
    (&["q => p \\ r"], "p , q => r"),
    (&["T => p"], "q => p"),
];

fn cfg(kmax: usize) -> DecisionConfig {
    DecisionConfig { kmax, ..DecisionConfig::default() }
}

fn small_frames() -> Vec<Frame> {
    (1..=2).flat_map(|k| enumerate_frames(k, true, false)).collect()
}

fn min_refuting_k(goal: &str) -> Option<usize> {
    let goal = seq(goal);
    (1..=3).find(|&k| refute_by_frames(&[], &goal, k).is_some())
}

fn valuations(frame: &Frame, vars: &[String], rng: &mut ChaCha8Rng) -> Vec<Valuation<BitSet64>> {
    let total = 1usize << (frame.points() * vars.len());
    if total <= 4096 {
        return frame_valuations(frame, vars);
    }
    (0..512)
        .map(|_| {
            let mut mu = Valuation::new();
            for v in vars {
                mu.set(Formula::var(v.clone()), BitSet64(rng.gen_range(0..1u64 << frame.points())));
            }
            mu
        })
        .collect()
}

#[test]
fn corpus_verdicts_are_exclusive_and_certified() {
    let frames = small_frames();
    assert!(PROVABLE.len() + REFUTED.len() >= 40);
    for text in PROVABLE {
        let goal = seq(text);
        let d = decide(&[], &goal, &cfg(3)).unwrap();
        let Verdict::Provable { proof, soundness_alarm } = &d.verdict else {
            panic!("{text}: {}", d.verdict.name());
        };
        assert!(soundness_alarm.is_none(), "{text}");
        check_proof(proof, &[]).unwrap();
        assert_eq!(proof.sequent, goal);
        let vars: Vec<String> = goal.vars().into_iter().collect();
        for f in &frames {
            for mu in frame_valuations(f, &vars) {
                assert!(holds_in_frame(f, &mu, &goal), "{text} fails in {f:?}");
            }
        }
    }
    for text in REFUTED {
        let goal = seq(text);
        let d = decide(&[], &goal, &cfg(3)).unwrap();
        let Verdict::Refuted { countermodel } = &d.verdict else {
            panic!("{text}: {}", d.verdict.name());
        };
        verify_countermodel(countermodel, &[], &goal).unwrap();
    }
}

#[test]
fn smallest_refuting_frames() {
    assert_eq!(min_refuting_k("p => q"), Some(1));
    assert_eq!(min_refuting_k("p * q => p"), Some(2));
    assert_eq!(min_refuting_k("p => p * p"), Some(2));
    assert_eq!(min_refuting_k("p , q => q * p"), Some(3));
    assert_eq!(min_refuting_k("(p * q) * r => p * (q * r)"), Some(3));
    assert_eq!(min_refuting_k("p * (q * r) => (p * q) * r"), Some(3));
    assert_eq!(min_refuting_k("p => p"), None);
}

#[test]
fn refutations_restrict_to_accepted_partial_algebras() {
    for text in REFUTED {
        let goal = seq(text);
        let bound = entailment_bound(&[], &goal);
        let cm = refute_by_frames(&[], &goal, 3).unwrap_or_else(|| panic!("{text}"));
        let small = restrict_countermodel(&cm, &[], &goal).unwrap();
        let Countermodel::Algebra { algebra, .. } = &small else {
            panic!("{text}: restriction is not an algebra");
        };
        assert!(algebra.size <= bound, "{text}: {} elements, bound {bound}", algebra.size);
        assert!(check_partial_rba(algebra).accepted, "{text}");
        verify_countermodel(&small, &[], &goal).unwrap_or_else(|e| panic!("{text}: {e}"));
    }
}

#[test]
fn worker_count_does_not_change_answers() {
    for text in PROVABLE.iter().chain(REFUTED).step_by(3) {
        let goal = seq(text);
        let one = decide(&[], &goal, &cfg(3)).unwrap();
        let four = decide(&[], &goal, &DecisionConfig { jobs: 4, ..cfg(3) }).unwrap();
        assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap(), "{text}");
    }
}

#[test]
fn assumptions_are_respected_by_small_models() {
    let frames = small_frames();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (phi, goal) in WITH_ASSUMPTIONS {
        let phi = seqs(phi);
        let goal = seq(goal);
        let d = decide(&phi, &goal, &cfg(2)).unwrap();
        let Verdict::Provable { proof, .. } = &d.verdict else {
            panic!("{goal}: {}", d.verdict.name());
        };
        check_proof(proof, &phi).unwrap();

        let mut vars: Vec<String> = goal.vars().into_iter().collect();
        for s in &phi {
            vars.extend(s.vars());
        }
        vars.sort();
        vars.dedup();
        for f in &frames {
            for mu in valuations(f, &vars, &mut rng) {
                if phi.iter().all(|s| holds_in_frame(f, &mu, s)) {
                    assert!(holds_in_frame(f, &mu, &goal), "{goal} fails under the assumptions in {f:?}");
                }
            }
        }
    }
}

#[test]
fn transitivity_from_assumptions() {
    let phi = seqs(&["p => q", "q => r"]);
    let goal = seq("p => r");
    let d = decide(&phi, &goal, &cfg(2)).unwrap();
    assert_eq!(d.verdict.name(), "provable");
    assert!(refute_by_frames(&phi, &goal, 2).is_none());
}

#[test]
fn assumption_does_not_give_its_converse() {
    let phi = seqs(&["p => q"]);
    let goal = seq("q => p");
    let d = decide(&phi, &goal, &cfg(2)).unwrap();
    let Verdict::Refuted { countermodel } = &d.verdict else {
        panic!("{}", d.verdict.name());
    };
    verify_countermodel(countermodel, &phi, &goal).unwrap();
}

#[test]
fn table_enumeration_is_sound_but_bounded() {
    let goal = seq("T => p | ~p");
    let v = decide_paper_faithful(&[], &goal, 4);
    let Verdict::Unknown { report } = &v else {
        panic!("{}", v.name());
    };
    let pf = report.paper_faithful.as_ref().unwrap();
    assert!(!pf.conclusive);
    assert_eq!(pf.entailment_bound, entailment_bound(&[], &goal));
    assert_eq!(decide(&[], &goal, &cfg(2)).unwrap().verdict.name(), "provable");

    let goal: Sequent = seq("p => q");
    let v = decide_paper_faithful(&[], &goal, 2);
    let Verdict::Refuted { countermodel } = &v else {
        panic!("{}", v.name());
    };
    verify_countermodel(countermodel, &[], &goal).unwrap();
}
