#![allow(dead_code)]

use bfnl::algebra::{eval, Algebra, Valuation};
use bfnl::bitset::BitSet64;
use bfnl::frames::{ComplexAlgebra, Frame};
use bfnl::syntax::{Formula, Sequent};

pub fn seq(s: &str) -> Sequent {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn seqs(v: &[&str]) -> Vec<Sequent> {
    v.iter().map(|s| seq(s)).collect()
}

/// One instance per rule of the sequent system, tagged with the rule.
pub const GOLDEN: &[(&str, &[&str], &str)] = &[
    ("id", &[], "p => p"),
    ("cut", &["p => q", "q => r"], "p => r"),
    ("otimes-left", &[], "p * q => p * q"),
    ("otimes-right", &[], "p , q => p * q"),
    ("lol-left", &[], "p , (p \\ q) => q"),
    ("lol-right", &[], "q => p \\ (p * q)"),
    ("lolinv-left", &[], "(q / p) , p => q"),
    ("lolinv-right", &[], "p => (p * q) / q"),
    ("and-left", &[], "p & q => p"),
    ("and-right", &[], "p ; q => p & q"),
    ("or-left", &[], "p | q => q | p"),
    ("or-right", &[], "p => p | q"),
    ("top-left", &[], "T ; p => p"),
    ("top-right", &[], "p => T"),
    ("bot-left", &[], "F => p"),
    ("and-ass", &[], "(p ; q) ; r => p & (q & r)"),
    ("and-ex", &[], "p ; q => q & p"),
    ("and-weak", &[], "p ; q => p"),
    ("and-cont", &[], "p => p & p"),
    ("neg-left", &[], "p & ~p => F"),
    ("neg-right", &[], "T => p | ~p"),
    ("one-left", &[], "1 , p => p"),
    ("one-right", &[], "eps => 1"),
];

/// Known theorems, with assumptions.
pub const THEOREMS: &[(&[&str], &str)] = &[
    (&[], "p => p"),
    (&[], "q * r => q * r"),
    (&[], "eps => 1"),
    (&[], "p & ~p => F"),
    (&[], "(p * q) & ~(p * q) => F"),
    (&[], "T => p | ~p"),
    (&[], "p ; q => q & p"),
    (&[], "p & (q | r) => (p & q) | (p & r)"),
    (&[], "1 , p => p"),
    (&[], "p , 1 => p"),
    (&[], "p , (p \\ q) => q"),
    (&[], "(q / p) , p => q"),
    (&[], "q => p \\ (p * q)"),
    (&[], "p => (p * q) / q"),
    (&["p => q", "q => r"], "p => r"),
];

/// Known non-theorems.
pub const NON_THEOREMS: &[(&[&str], &str)] = &[
    (&[], "p , q => q * p"),
    (&[], "(p * q) * r => p * (q * r)"),
    (&[], "p * (q * r) => (p * q) * r"),
    (&[], "p * q => p"),
    (&[], "p => p * p"),
    (&[], "p => q"),
];

/// `μ(Γ) ≤ μ(A)` in the complex algebra of `frame`, evaluated directly on
/// point sets.
pub fn holds_in_frame(frame: &Frame, mu: &Valuation<BitSet64>, s: &Sequent) -> bool {
    let alg = ComplexAlgebra::new(frame.clone());
    let (g, c) = s.sides();
    let x = eval(&alg, mu, &g).expect("total");
    let y = eval(&alg, mu, &c).expect("total");
    alg.leq(x, y)
}

/// Every assignment of point sets to `vars`.
pub fn frame_valuations(frame: &Frame, vars: &[String]) -> Vec<Valuation<BitSet64>> {
    let n = 1u64 << frame.points();
    let mut out = vec![Valuation::new()];
    for v in vars {
        out = out
            .into_iter()
            .flat_map(|mu| {
                (0..n).map(move |m| {
                    let mut mu = mu.clone();
                    mu.set(Formula::var(v.clone()), BitSet64(m));
                    mu
                })
            })
            .collect();
    }
    out
}
