use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::{Algebra, Elem, PartialAlgebra};
use crate::syntax::{BinOp, Formula, Sequent};

/// A partial map from formulas to algebra elements.
///
/// Constants are never stored: `1`, `⊤`, `⊥` always denote the algebra's
/// constants. Compound formulas without a stored value are computed from
/// their parts by [`eval`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation<E = Elem> {
    values: BTreeMap<Formula, E>,
}

impl<E> Default for Valuation<E> {
    fn default() -> Self {
        Valuation { values: BTreeMap::new() }
    }
}

impl<E: Copy> Valuation<E> {
    pub fn new() -> Self {
        Valuation::default()
    }

    pub fn from_vars<'a>(pairs: impl IntoIterator<Item = (&'a str, E)>) -> Self {
        let mut v = Valuation::new();
        for (name, e) in pairs {
            v.set(Formula::var(name), e);
        }
        v
    }

    pub fn set(&mut self, f: Formula, e: E) {
        self.values.insert(f, e);
    }

    pub fn get(&self, f: &Formula) -> Option<E> {
        self.values.get(f).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Formula, &E)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Restriction to variables, keyed by name.
    pub fn var_assignment(&self) -> BTreeMap<String, E> {
        self.values
            .iter()
            .filter_map(|(f, e)| match f {
                Formula::Var(v) => Some((v.clone(), *e)),
                _ => None,
            })
            .collect()
    }

    pub fn map<F: Copy>(&self, f: impl Fn(E) -> F) -> Valuation<F> {
        Valuation { values: self.values.iter().map(|(k, v)| (k.clone(), f(*v))).collect() }
    }

    /// Check the closure clauses: every stored compound value is defined
    /// from its immediate subformulas and agrees with the operation.
    pub fn is_consistent<A: Algebra<Elem = E>>(&self, alg: &A) -> bool
    where
        E: PartialEq,
    {
        self.values.iter().all(|(f, &v)| {
            let computed = match f {
                Formula::Var(_) => return true,
                Formula::One => Some(alg.one()),
                Formula::Top => Some(alg.top()),
                Formula::Bot => Some(alg.bot()),
                Formula::Not(a) => eval(alg, self, a).and_then(|x| alg.neg(x)),
                Formula::Bin(op, a, b) => match (eval(alg, self, a), eval(alg, self, b)) {
                    (Some(x), Some(y)) => alg.op(*op, x, y),
                    _ => None,
                },
            };
            computed == Some(v)
        })
    }
}

/// Value of `f` under `mu`: the stored value when present, otherwise the
/// bottom-up computation through the tables, `None` if any step is
/// undefined.
pub fn eval<A: Algebra>(alg: &A, mu: &Valuation<A::Elem>, f: &Formula) -> Option<A::Elem> {
    match f {
        Formula::One => return Some(alg.one()),
        Formula::Top => return Some(alg.top()),
        Formula::Bot => return Some(alg.bot()),
        _ => {}
    }
    if let Some(v) = mu.get(f) {
        return Some(v);
    }
    match f {
        Formula::Var(_) => None,
        Formula::Not(a) => alg.neg(eval(alg, mu, a)?),
        Formula::Bin(op, a, b) => alg.op(*op, eval(alg, mu, a)?, eval(alg, mu, b)?),
        _ => unreachable!(),
    }
}

/// Three-valued truth of a sequent under a partial valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Truth {
    True,
    False,
    Undefined,
}

pub fn satisfies<A: Algebra>(alg: &A, mu: &Valuation<A::Elem>, s: &Sequent) -> Truth {
    let (g, c) = s.sides();
    match (eval(alg, mu, &g), eval(alg, mu, &c)) {
        (Some(x), Some(y)) if alg.leq(x, y) => Truth::True,
        (Some(_), Some(_)) => Truth::False,
        _ => Truth::Undefined,
    }
}

/// Every assignment of universe elements to `vars`, in odometer order with
/// the last variable varying fastest.
pub fn enumerate_valuations(
    alg: &PartialAlgebra,
    vars: &BTreeSet<String>,
) -> impl Iterator<Item = Valuation> {
    let names: Vec<String> = vars.iter().cloned().collect();
    let universe: Vec<Elem> = alg.elements().collect();
    assignments(universe, names.len()).map(move |vals| {
        let mut v = Valuation::new();
        for (n, e) in names.iter().zip(vals) {
            v.set(Formula::var(n.clone()), e);
        }
        v
    })
}

/// All `universe.len()^arity` tuples, last position fastest.
pub fn assignments<E: Copy>(universe: Vec<E>, arity: usize) -> impl Iterator<Item = Vec<E>> {
    let m = universe.len();
    let mut counter = vec![0usize; arity];
    let mut done = m == 0 && arity > 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out: Vec<E> = counter.iter().map(|&i| universe[i]).collect();
        done = true;
        for pos in (0..arity).rev() {
            counter[pos] += 1;
            if counter[pos] < m {
                done = false;
                break;
            }
            counter[pos] = 0;
        }
        Some(out)
    })
}

/// An undefined entry met during evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gap<E> {
    Not(E),
    Bin(BinOp, E, E),
}

#[derive(Clone, Debug)]
enum Node {
    Var(usize),
    One,
    Top,
    Bot,
    Not(usize),
    Bin(BinOp, usize, usize),
}

/// A set of formulas flattened into a shared DAG in dependency order, so
/// that many valuations can be evaluated without re-walking trees.
#[derive(Clone, Debug)]
pub struct CompiledFormulas {
    nodes: Vec<Node>,
    index: HashMap<Formula, usize>,
    vars: Vec<String>,
}

impl CompiledFormulas {
    pub fn new<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> CompiledFormulas {
        let mut c = CompiledFormulas { nodes: Vec::new(), index: HashMap::new(), vars: Vec::new() };
        let mut var_set = BTreeSet::new();
        let roots: Vec<&Formula> = formulas.into_iter().collect();
        for f in &roots {
            f.collect_vars(&mut var_set);
        }
        c.vars = var_set.into_iter().collect();
        for f in roots {
            c.add(f);
        }
        c
    }

    fn add(&mut self, f: &Formula) -> usize {
        if let Some(&i) = self.index.get(f) {
            return i;
        }
        let node = match f {
            Formula::Var(v) => Node::Var(self.vars.binary_search(v).expect("variable collected")),
            Formula::One => Node::One,
            Formula::Top => Node::Top,
            Formula::Bot => Node::Bot,
            Formula::Not(a) => Node::Not(self.add(a)),
            Formula::Bin(op, a, b) => {
                let (x, y) = (self.add(a), self.add(b));
                Node::Bin(*op, x, y)
            }
        };
        self.nodes.push(node);
        self.index.insert(f.clone(), self.nodes.len() - 1);
        self.nodes.len() - 1
    }

    /// Variables in sorted order; assignments are positional in this order.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, f: &Formula) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Evaluate every node; `out[i]` is the value of node `i`.
    pub fn eval_into<A: Algebra>(&self, alg: &A, assignment: &[A::Elem], out: &mut Vec<Option<A::Elem>>) {
        out.clear();
        for node in &self.nodes {
            let v = match *node {
                Node::Var(i) => Some(assignment[i]),
                Node::One => Some(alg.one()),
                Node::Top => Some(alg.top()),
                Node::Bot => Some(alg.bot()),
                Node::Not(a) => out[a].and_then(|x| alg.neg(x)),
                Node::Bin(op, a, b) => match (out[a], out[b]) {
                    (Some(x), Some(y)) => alg.op(op, x, y),
                    _ => None,
                },
            };
            out.push(v);
        }
    }

    /// The first node, in evaluation order, whose arguments are defined but
    /// whose own table entry is not.
    pub fn first_gap<E: Copy>(&self, out: &[Option<E>]) -> Option<Gap<E>> {
        self.nodes.iter().zip(out).find_map(|(node, v)| {
            if v.is_some() {
                return None;
            }
            match *node {
                Node::Not(a) => out[a].map(Gap::Not),
                Node::Bin(op, a, b) => match (out[a], out[b]) {
                    (Some(x), Some(y)) => Some(Gap::Bin(op, x, y)),
                    _ => None,
                },
                _ => None,
            }
        })
    }

    /// The full valuation (every compiled formula with a defined value).
    pub fn valuation<A: Algebra>(&self, alg: &A, assignment: &[A::Elem]) -> Valuation<A::Elem> {
        let mut out = Vec::with_capacity(self.nodes.len());
        self.eval_into(alg, assignment, &mut out);
        let mut v = Valuation::new();
        for (f, &i) in &self.index {
            if matches!(f, Formula::One | Formula::Top | Formula::Bot) {
                continue;
            }
            if let Some(e) = out[i] {
                v.set(f.clone(), e);
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    #[test]
    fn eval_examples() {
        let alg = PartialAlgebra::two_chain();
        let mu = Valuation::from_vars([("p", 1)]);
        assert_eq!(eval(&alg, &mu, &Formula::Top), Some(alg.top));
        assert_eq!(eval(&alg, &mu, &f("p * q")), None);
        assert_eq!(eval(&alg, &mu, &f("~p")), Some(0));
    }

    #[test]
    fn stored_values_take_precedence() {
        let alg = PartialAlgebra::two_chain();
        let mut mu = Valuation::from_vars([("p", 1), ("q", 0)]);
        mu.set(f("p * q"), 0);
        assert_eq!(eval(&alg, &mu, &f("p * q")), Some(0));
        assert!(mu.is_consistent(&alg));
        mu.set(f("p * q"), 1);
        assert!(!mu.is_consistent(&alg));
    }

    #[test]
    fn satisfaction_examples() {
        let alg = PartialAlgebra::two_chain();
        let s: Sequent = "p => p".parse().unwrap();
        assert_eq!(satisfies(&alg, &Valuation::from_vars([("p", 0)]), &s), Truth::True);
        let s: Sequent = "p => q".parse().unwrap();
        let mu = Valuation::from_vars([("p", 1), ("q", 0)]);
        assert_eq!(satisfies(&alg, &mu, &s), Truth::False);
        let mu = Valuation::from_vars([("p", 1)]);
        assert_eq!(satisfies(&alg, &mu, &s), Truth::Undefined);
    }

    #[test]
    fn valuation_counts() {
        let two = PartialAlgebra::two_chain();
        let four = PartialAlgebra::boolean(2);
        let vars = |names: &[&str]| names.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
        assert_eq!(enumerate_valuations(&two, &vars(&["p"])).count(), 2);
        assert_eq!(enumerate_valuations(&two, &vars(&["p", "q"])).count(), 4);
        assert_eq!(enumerate_valuations(&four, &vars(&["p", "q", "r"])).count(), 64);
        assert_eq!(enumerate_valuations(&four, &BTreeSet::new()).count(), 1);
    }

    #[test]
    fn compiled_agrees_with_eval() {
        let alg = PartialAlgebra::boolean(2);
        let fs = [f("(p * q) \\ ~r"), f("p | (q / r)"), f("1 & T | F")];
        let c = CompiledFormulas::new(fs.iter());
        assert_eq!(c.vars(), ["p", "q", "r"]);
        let mut out = Vec::new();
        for asg in assignments((0..4).collect(), 3) {
            c.eval_into(&alg, &asg, &mut out);
            let mu = Valuation::from_vars([("p", asg[0]), ("q", asg[1]), ("r", asg[2])]);
            for g in &fs {
                assert_eq!(out[c.index_of(g).unwrap()], eval(&alg, &mu, g));
            }
        }
    }
}
