//! Formulas, bunches, contexts and sequents.

mod bunch;
mod formula;
mod parse;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use bunch::{substitute, Bunch, Context, Path, Sep};
pub use formula::{BinOp, Formula};
pub use parse::{parse_bunch, parse_formula, parse_sequent, parse_sequent_lines, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub antecedent: Bunch,
    pub succedent: Formula,
}

impl Sequent {
    pub fn new(antecedent: Bunch, succedent: Formula) -> Sequent {
        Sequent { antecedent, succedent }
    }

    /// The formula-only form `G ⇒ C` with the antecedent translated.
    pub fn sides(&self) -> (Formula, Formula) {
        (self.antecedent.to_formula(), self.succedent.clone())
    }

    pub fn normalize_units(&self) -> Sequent {
        Sequent::new(self.antecedent.normalize_units(), self.succedent.clone())
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.antecedent.collect_vars(&mut out);
        self.succedent.collect_vars(&mut out);
        out
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {}", self.antecedent, self.succedent)
    }
}

impl FromStr for Sequent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sequent(s)
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

impl Serialize for Sequent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Sequent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_sequent(&text).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_formula(&text).map_err(serde::de::Error::custom)
    }
}

/// `s(G ⇒ A) = s(G) + s(A)`, with the antecedent translated to a formula
/// first.
pub fn size(s: &Sequent) -> usize {
    s.antecedent.to_formula().size() + s.succedent.size()
}

/// Structure-size bound for the finite-model property of the consequence
/// relation: `2 · (Σ_{φ ∈ Φ} s(φ) + s(goal)) + 4`.
pub fn entailment_bound(assumptions: &[Sequent], goal: &Sequent) -> usize {
    let total: usize = assumptions.iter().map(size).sum::<usize>() + size(goal);
    2 * total + 4
}

pub fn subformulas(f: &Formula) -> BTreeSet<Formula> {
    f.subformulas()
}

/// The formula set used by the finite-model construction: `1`, `⊤`, `⊥` and
/// every subformula of both sides of every sequent involved.
pub fn closure_set<'a>(sequents: impl IntoIterator<Item = &'a Sequent>) -> BTreeSet<Formula> {
    let mut out = BTreeSet::new();
    for c in [Formula::One, Formula::Top, Formula::Bot] {
        out.insert(c);
    }
    for s in sequents {
        let (g, c) = s.sides();
        g.collect_subformulas(&mut out);
        c.collect_subformulas(&mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Sequent {
        s.parse().unwrap()
    }

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    #[test]
    fn bunch_translation() {
        assert_eq!(parse_bunch("p , q").unwrap().to_formula(), f("p * q"));
        assert_eq!(Bunch::Eps.to_formula(), Formula::One);
        assert_eq!(parse_bunch("((p ; del) , eps)").unwrap().to_formula(), f("(p & T) * 1"));
    }

    #[test]
    fn substitution_examples() {
        let d = parse_bunch("q ; r").unwrap();
        assert_eq!(substitute(&Context::hole(), d.clone()), d);

        let ctx = Context::hole().descend(Sep::Comma, false, Bunch::Leaf(f("p")));
        assert_eq!(substitute(&ctx, d), parse_bunch("p , (q ; r)").unwrap());

        let ctx = Context::hole().descend(Sep::Semi, true, Bunch::Del);
        assert_eq!(ctx.to_string(), "(_ ; del)");
        assert_eq!(substitute(&ctx, Bunch::Eps), parse_bunch("eps ; del").unwrap());
    }

    #[test]
    fn split_and_fill_round_trip() {
        let b = parse_bunch("(p , (q ; r)) ; s").unwrap();
        for path in b.positions() {
            let (ctx, sub) = b.split_at(&path).unwrap();
            assert_eq!(ctx.path(), path);
            assert_eq!(&sub, b.get(&path).unwrap());
            assert_eq!(ctx.fill(sub), b);
        }
    }

    #[test]
    fn size_examples() {
        assert_eq!(size(&seq("p * q => p")), 4);
        assert_eq!(size(&seq("T => p | ~p")), 5);
        assert_eq!(size(&seq("p => p")), 2);
        assert_eq!(size(&seq("p , q => p")), 4);
    }

    #[test]
    fn entailment_bound_examples() {
        assert_eq!(entailment_bound(&[], &seq("p * q => p")), 12);
        assert_eq!(entailment_bound(&[seq("p => q")], &seq("p => q")), 12);
        assert_eq!(entailment_bound(&[], &seq("p => p")), 8);
    }

    #[test]
    fn subformula_examples() {
        let s = subformulas(&f("p * q"));
        assert_eq!(s, [f("p"), f("q"), f("p * q")].into_iter().collect());
        let s = subformulas(&f("~p"));
        assert_eq!(s, [f("p"), f("~p")].into_iter().collect());
        assert_eq!(subformulas(&Formula::One).len(), 1);
    }

    #[test]
    fn unit_normalization() {
        let b = parse_bunch("((p ; del) , eps)").unwrap();
        assert_eq!(b.normalize_units(), Bunch::Leaf(f("p")));
        let b = parse_bunch("(eps ; p) , (del , eps)").unwrap();
        assert_eq!(b.normalize_units(), parse_bunch("(eps ; p) , del").unwrap());
        assert!(b.normalize_units().is_unit_normal());
        assert_eq!(parse_bunch("eps , eps").unwrap().normalize_units(), Bunch::Eps);
    }

    #[test]
    fn display_examples() {
        assert_eq!(seq("p , q => p * q").to_string(), "(p , q) => p * q");
        assert_eq!(f("(p * q) * r").to_string(), "(p * q) * r");
        assert_eq!(f("p * (q * r)").to_string(), "p * (q * r)");
        assert_eq!(f("~(p & T)").to_string(), "~(p & T)");
        assert_eq!(f("(p / q) \\ r").to_string(), "(p / q) \\ r");
    }
}
