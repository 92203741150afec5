use std::collections::BTreeSet;

use thiserror::Error;

use super::{eval, Elem, PartialAlgebra, Valuation};
use crate::syntax::{BinOp, Formula};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RestrictError {
    #[error("source algebra is not total")]
    NotTotal,
    #[error("formula set lacks the constant {0}")]
    MissingConstant(Formula),
    #[error("formula set is not closed under subformulas: {sub} of {formula} is missing")]
    NotClosed { formula: Formula, sub: Formula },
    #[error("valuation is undefined on {0}")]
    Undefined(Formula),
    #[error("negation leaves the restricted universe at element {0}")]
    NegationEscapes(Elem),
}

/// A partial algebra cut out of a total one, with the restricted
/// valuation and the inclusion map back into the source.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub algebra: PartialAlgebra,
    pub valuation: Valuation,
    /// `inclusion[i]` is the source element that new element `i` stands for.
    pub inclusion: Vec<Elem>,
}

/// Keep the values of `t` under `mu` and their negations; define exactly the
/// operation entries that some formula of `t` computes, plus the unit,
/// negation and complement entries for every kept element.
///
/// The new universe lists the kept source elements in increasing order,
/// except that bottom always comes first.
pub fn restrict_to_partial(
    total: &PartialAlgebra,
    t: &BTreeSet<Formula>,
    mu: &Valuation,
) -> Result<Restriction, RestrictError> {
    if !total.is_total() {
        return Err(RestrictError::NotTotal);
    }
    for c in [Formula::One, Formula::Top, Formula::Bot] {
        if !t.contains(&c) {
            return Err(RestrictError::MissingConstant(c));
        }
    }
    for f in t {
        let parts: Vec<&Formula> = match f {
            Formula::Not(a) => vec![a],
            Formula::Bin(_, a, b) => vec![a, b],
            _ => vec![],
        };
        if let Some(sub) = parts.into_iter().find(|p| !t.contains(*p)) {
            return Err(RestrictError::NotClosed { formula: f.clone(), sub: sub.clone() });
        }
    }

    let mut value = std::collections::BTreeMap::new();
    for f in t {
        let v = eval(total, mu, f).ok_or_else(|| RestrictError::Undefined(f.clone()))?;
        value.insert(f, v);
    }

    let neg = |x: Elem| total.neg[x].expect("total");
    let mut kept: BTreeSet<Elem> = BTreeSet::new();
    for &v in value.values() {
        kept.insert(v);
        kept.insert(neg(v));
    }
    let mut inclusion: Vec<Elem> = vec![total.bot];
    inclusion.extend(kept.iter().copied().filter(|&x| x != total.bot));
    let index = |x: Elem| inclusion.iter().position(|&y| y == x);
    let m = inclusion.len();

    let mut alg = PartialAlgebra::skeleton(
        m,
        |a, b| total.le(inclusion[a], inclusion[b]),
        index(total.one).expect("1 kept"),
        index(total.top).expect("top kept"),
        0,
    );
    let def = |alg: &mut PartialAlgebra, op: BinOp, a: Elem, b: Elem| {
        let r = total.table(op).get(inclusion[a], inclusion[b]).expect("total");
        let r = index(r).expect("value of a formula in the set");
        alg.table_mut(op).set(a, b, Some(r));
    };
    for f in t {
        if let Formula::Bin(op, x, y) = f {
            let (a, b) = (index(value[&**x]).unwrap(), index(value[&**y]).unwrap());
            def(&mut alg, *op, a, b);
        }
    }
    for a in 0..m {
        let na = index(neg(inclusion[a])).ok_or(RestrictError::NegationEscapes(inclusion[a]))?;
        alg.neg[a] = Some(na);
        alg.otimes.set(alg.one, a, Some(a));
        alg.otimes.set(a, alg.one, Some(a));
        alg.join.set(a, na, Some(alg.top));
        alg.meet.set(a, na, Some(alg.bot));
    }

    let mut valuation = Valuation::new();
    for (f, &v) in &value {
        if !matches!(f, Formula::One | Formula::Top | Formula::Bot) {
            valuation.set((*f).clone(), index(v).unwrap());
        }
    }
    Ok(Restriction { algebra: alg, valuation, inclusion })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_complement, check_poset_bounds_lattice, check_unit_laws};
    use crate::syntax::closure_set;

    #[test]
    fn constants_only() {
        let total = PartialAlgebra::boolean(2);
        let t: BTreeSet<Formula> = [Formula::One, Formula::Top, Formula::Bot].into_iter().collect();
        let r = restrict_to_partial(&total, &t, &Valuation::new()).unwrap();
        assert_eq!(r.inclusion, vec![0, 3]);
        assert_eq!(r.algebra.size, 2);
        assert!(r.valuation.is_empty());
    }

    #[test]
    fn product_entry_is_defined() {
        let total = PartialAlgebra::two_chain();
        let s = "p * q => p".parse().unwrap();
        let t = closure_set([&s]);
        let mu = Valuation::from_vars([("p", 1), ("q", 0)]);
        let r = restrict_to_partial(&total, &t, &mu).unwrap();
        assert!(r.algebra.size <= 2);
        let p = r.valuation.get(&Formula::var("p")).unwrap();
        let q = r.valuation.get(&Formula::var("q")).unwrap();
        assert_eq!(r.algebra.otimes.get(p, q), Some(0));
        check_poset_bounds_lattice(&r.algebra).unwrap();
        check_unit_laws(&r.algebra).unwrap();
        check_complement(&r.algebra).unwrap();
        assert!(r.valuation.is_consistent(&r.algebra));
    }

    #[test]
    fn rejects_unclosed_sets() {
        let total = PartialAlgebra::two_chain();
        let mut t: BTreeSet<Formula> = [Formula::One, Formula::Top, Formula::Bot].into_iter().collect();
        t.insert("p * q".parse().unwrap());
        let mu = Valuation::from_vars([("p", 1), ("q", 0)]);
        assert!(matches!(
            restrict_to_partial(&total, &t, &mu),
            Err(RestrictError::NotClosed { .. })
        ));
        t.remove(&Formula::Bot);
        assert_eq!(
            restrict_to_partial(&total, &t, &mu).unwrap_err(),
            RestrictError::MissingConstant(Formula::Bot)
        );
    }
}
