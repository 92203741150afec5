//! Filters and prime filters of finite partial algebras.

use thiserror::Error;

use crate::algebra::{Elem, PartialAlgebra};
use crate::bitset::BitSet64;

/// A subset of an algebra's universe.
pub type FilterSet = BitSet64;
/// Prime filters of one algebra, sorted by bitset value.
pub type FilterFamily = Vec<FilterSet>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FilterError {
    #[error("meet of {a} and {b} is undefined")]
    UndefinedMeet { a: Elem, b: Elem },
}

fn upward_closed(alg: &PartialAlgebra, s: FilterSet) -> bool {
    s.iter().all(|a| alg.elements().all(|b| !alg.le(a, b) || s.contains(b)))
}

fn meet_closed(alg: &PartialAlgebra, s: FilterSet) -> bool {
    alg.meet.defined().all(|(a, b, c)| !(s.contains(a) && s.contains(b)) || s.contains(c))
}

/// Upward closed, and closed under every defined meet.
pub fn is_filter(alg: &PartialAlgebra, s: FilterSet) -> bool {
    upward_closed(alg, s) && meet_closed(alg, s)
}

fn nonempty_proper(alg: &PartialAlgebra, s: FilterSet) -> bool {
    s.contains(alg.top) && !s.contains(alg.bot)
}

/// Proper filter satisfying the join condition on every defined join and
/// the complement condition wherever negation is defined. On total Boolean
/// algebras either condition alone is equivalent; on partial ones the
/// complement condition does not give the join condition.
pub fn is_prime(alg: &PartialAlgebra, s: FilterSet) -> bool {
    is_prime_f3(alg, s) && complement_split(alg, s)
}

fn complement_split(alg: &PartialAlgebra, s: FilterSet) -> bool {
    alg.elements().all(|a| match alg.neg[a] {
        Some(na) => s.contains(na) != s.contains(a),
        None => true,
    })
}

pub fn is_prime_fb(alg: &PartialAlgebra, s: FilterSet) -> bool {
    is_filter(alg, s) && nonempty_proper(alg, s) && complement_split(alg, s)
}

pub fn is_prime_f3(alg: &PartialAlgebra, s: FilterSet) -> bool {
    is_filter(alg, s)
        && nonempty_proper(alg, s)
        && alg.join.defined().all(|(a, b, c)| !s.contains(c) || s.contains(a) || s.contains(b))
}

#[derive(Clone, Copy, Debug)]
enum Clause {
    In(Elem),
    Out(Elem),
    /// `a ∈ F ⇒ b ∈ F`
    Imp(Elem, Elem),
    /// `a, b ∈ F ⇒ c ∈ F`
    Meet(Elem, Elem, Elem),
    /// `c ∈ F ⇒ a ∈ F ∨ b ∈ F`
    Join(Elem, Elem, Elem),
    /// exactly one of `a`, `b` in `F`
    Xor(Elem, Elem),
}

impl Clause {
    fn max_index(self) -> Elem {
        match self {
            Clause::In(a) | Clause::Out(a) => a,
            Clause::Imp(a, b) | Clause::Xor(a, b) => a.max(b),
            Clause::Meet(a, b, c) | Clause::Join(a, b, c) => a.max(b).max(c),
        }
    }

    fn holds(self, s: FilterSet) -> bool {
        let i = |x| s.contains(x);
        match self {
            Clause::In(a) => i(a),
            Clause::Out(a) => !i(a),
            Clause::Imp(a, b) => !i(a) || i(b),
            Clause::Meet(a, b, c) => !(i(a) && i(b)) || i(c),
            Clause::Join(a, b, c) => !i(c) || i(a) || i(b),
            Clause::Xor(a, b) => i(a) != i(b),
        }
    }
}

/// All prime filters, by depth-first search over element membership with
/// each condition checked as soon as its last element is decided.
pub fn enumerate_prime_filters(alg: &PartialAlgebra) -> FilterFamily {
    let n = alg.size;
    let mut buckets: Vec<Vec<Clause>> = vec![Vec::new(); n];
    let mut push = |c: Clause| buckets[c.max_index()].push(c);
    push(Clause::In(alg.top));
    push(Clause::Out(alg.bot));
    for a in 0..n {
        for b in 0..n {
            if a != b && alg.le(a, b) {
                push(Clause::Imp(a, b));
            }
        }
    }
    for (a, b, c) in alg.meet.defined() {
        push(Clause::Meet(a, b, c));
    }
    for a in 0..n {
        if let Some(na) = alg.neg[a] {
            push(Clause::Xor(a, na));
        }
    }
    for (a, b, c) in alg.join.defined() {
        push(Clause::Join(a, b, c));
    }

    fn dfs(i: usize, s: FilterSet, buckets: &[Vec<Clause>], out: &mut FilterFamily) {
        if i == buckets.len() {
            out.push(s);
            return;
        }
        for member in [false, true] {
            let mut t = s;
            if member {
                t.insert(i);
            }
            if buckets[i].iter().all(|c| c.holds(t)) {
                dfs(i + 1, t, buckets, out);
            }
        }
    }

    let mut out = Vec::new();
    dfs(0, BitSet64::EMPTY, &buckets, &mut out);
    out.sort();
    out
}

/// Reference enumeration: test every subset. Exponential; for oracles.
pub fn prime_filters_exhaustive(alg: &PartialAlgebra) -> FilterFamily {
    assert!(alg.size <= 24, "exhaustive enumeration over {} elements", alg.size);
    (0u64..1 << alg.size).map(BitSet64).filter(|&s| is_prime(alg, s)).collect()
}

/// `[x) = {b : x ≤ b}`.
pub fn principal_upset(alg: &PartialAlgebra, x: Elem) -> FilterSet {
    BitSet64::from_indices(alg.elements().filter(|&b| alg.le(x, b)))
}

/// `(x] = {b : b ≤ x}`.
pub fn principal_downset(alg: &PartialAlgebra, x: Elem) -> FilterSet {
    BitSet64::from_indices(alg.elements().filter(|&b| alg.le(b, x)))
}

/// `F_x = {y : ∃ z ∈ F, z ∧ x ≤ y}`.
pub fn filter_extend(alg: &PartialAlgebra, f: FilterSet, x: Elem) -> Result<FilterSet, FilterError> {
    let mut out = BitSet64::EMPTY;
    for z in f.iter() {
        let m = alg.meet.get(z, x).ok_or(FilterError::UndefinedMeet { a: z, b: x })?;
        out = out.union(principal_upset(alg, m));
    }
    Ok(out)
}

/// First prime filter (in family order) containing `x` and not `y`.
pub fn separate(alg: &PartialAlgebra, x: Elem, y: Elem) -> Option<FilterSet> {
    separate_in(&enumerate_prime_filters(alg), x, y)
}

pub fn separate_in(family: &[FilterSet], x: Elem, y: Elem) -> Option<FilterSet> {
    family.iter().copied().find(|f| f.contains(x) && !f.contains(y))
}
