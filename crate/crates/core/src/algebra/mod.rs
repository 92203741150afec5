//! Finite partial residuated Boolean algebras given by explicit tables.

mod checks;
mod json;
mod restrict;
mod valuation;

use std::fmt::Debug;
use std::hash::Hash;

pub use checks::{
    check_complement, check_poset_bounds_lattice, check_total_residuation, check_unit_laws,
    Side, Violation,
};
pub use json::{AlgebraJson, LoadError};
pub use restrict::{restrict_to_partial, RestrictError, Restriction};
pub use valuation::{
    assignments, enumerate_valuations, eval, satisfies, CompiledFormulas, Gap, Truth, Valuation,
};

use crate::syntax::BinOp;

/// Element of an explicit algebra: an index into its universe.
pub type Elem = usize;

/// Read access shared by explicit tables and frame-backed complex algebras.
pub trait Algebra {
    type Elem: Copy + Eq + Ord + Hash + Debug + Send + Sync;

    fn one(&self) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    fn bot(&self) -> Self::Elem;
    fn leq(&self, a: Self::Elem, b: Self::Elem) -> bool;
    /// `None` where the operation is undefined.
    fn op(&self, op: BinOp, a: Self::Elem, b: Self::Elem) -> Option<Self::Elem>;
    fn neg(&self, a: Self::Elem) -> Option<Self::Elem>;
}

/// A square operation table; `None` marks an undefined entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Table {
    size: usize,
    cells: Vec<Option<Elem>>,
}

impl Table {
    pub fn undefined(size: usize) -> Table {
        Table { size, cells: vec![None; size * size] }
    }

    pub fn from_fn(size: usize, f: impl Fn(Elem, Elem) -> Option<Elem>) -> Table {
        let mut t = Table::undefined(size);
        for a in 0..size {
            for b in 0..size {
                t.cells[a * size + b] = f(a, b);
            }
        }
        t
    }

    #[inline]
    pub fn get(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.cells[a * self.size + b]
    }

    #[inline]
    pub fn set(&mut self, a: Elem, b: Elem, v: Option<Elem>) {
        self.cells[a * self.size + b] = v;
    }

    pub fn is_total(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    /// All defined entries as `(a, b, a∘b)`.
    pub fn defined(&self) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter_map(move |(i, v)| v.map(|v| (i / self.size, i % self.size, v)))
    }

    pub fn rows(&self) -> Vec<Vec<Option<Elem>>> {
        self.cells.chunks(self.size.max(1)).take(self.size).map(<[_]>::to_vec).collect()
    }
}

/// Finite universe `0..size` with an order, partial operation tables for
/// `⊗ ⊸ ⟜ ∨ ∧`, a negation table and the constants `1 ⊤ ⊥`.
///
/// `lol.get(a, c)` is `a ⊸ c` and `lolinv.get(c, b)` is `c ⟜ b`, so
/// residuation reads `a⊗b ≤ c ⇔ b ≤ lol(a,c) ⇔ a ≤ lolinv(c,b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialAlgebra {
    pub size: usize,
    pub leq: Vec<bool>,
    pub otimes: Table,
    pub lol: Table,
    pub lolinv: Table,
    pub join: Table,
    pub meet: Table,
    pub neg: Vec<Option<Elem>>,
    pub one: Elem,
    pub top: Elem,
    pub bot: Elem,
}

impl PartialAlgebra {
    /// An algebra with the given order and constants and every operation
    /// undefined.
    pub fn skeleton(size: usize, leq: impl Fn(Elem, Elem) -> bool, one: Elem, top: Elem, bot: Elem) -> Self {
        let mut rel = vec![false; size * size];
        for a in 0..size {
            for b in 0..size {
                rel[a * size + b] = leq(a, b);
            }
        }
        PartialAlgebra {
            size,
            leq: rel,
            otimes: Table::undefined(size),
            lol: Table::undefined(size),
            lolinv: Table::undefined(size),
            join: Table::undefined(size),
            meet: Table::undefined(size),
            neg: vec![None; size],
            one,
            top,
            bot,
        }
    }

    /// The Boolean algebra of subsets of an `atoms`-element set, with
    /// element `i` the subset whose bitmask is `i`. `⊗` is `∧`, `1` is `⊤`
    /// and both residuals are Boolean implication.
    pub fn boolean(atoms: usize) -> PartialAlgebra {
        let size = 1usize << atoms;
        let full = size - 1;
        let mut a = PartialAlgebra::skeleton(size, |x, y| x & !y == 0, full, full, 0);
        a.join = Table::from_fn(size, |x, y| Some(x | y));
        a.meet = Table::from_fn(size, |x, y| Some(x & y));
        a.otimes = a.meet.clone();
        a.lol = Table::from_fn(size, |x, y| Some((!x & full) | y));
        a.lolinv = Table::from_fn(size, |y, x| Some((!x & full) | y));
        a.neg = (0..size).map(|x| Some(!x & full)).collect();
        a
    }

    /// The two-element chain `⊥ < ⊤` as a residuated Boolean algebra.
    pub fn two_chain() -> PartialAlgebra {
        PartialAlgebra::boolean(1)
    }

    #[inline]
    pub fn le(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn set_le(&mut self, a: Elem, b: Elem, v: bool) {
        self.leq[a * self.size + b] = v;
    }

    pub fn table(&self, op: BinOp) -> &Table {
        match op {
            BinOp::Tensor => &self.otimes,
            BinOp::Under => &self.lol,
            BinOp::Over => &self.lolinv,
            BinOp::Or => &self.join,
            BinOp::And => &self.meet,
        }
    }

    pub fn table_mut(&mut self, op: BinOp) -> &mut Table {
        match op {
            BinOp::Tensor => &mut self.otimes,
            BinOp::Under => &mut self.lol,
            BinOp::Over => &mut self.lolinv,
            BinOp::Or => &mut self.join,
            BinOp::And => &mut self.meet,
        }
    }

    pub fn is_total(&self) -> bool {
        BinOp::ALL.iter().all(|&op| self.table(op).is_total()) && self.neg.iter().all(Option::is_some)
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    /// Least upper bound of `{a, b}` in the order, if one exists.
    pub fn supremum(&self, a: Elem, b: Elem) -> Option<Elem> {
        let uppers: Vec<Elem> = self.elements().filter(|&c| self.le(a, c) && self.le(b, c)).collect();
        uppers.iter().copied().find(|&c| uppers.iter().all(|&d| self.le(c, d)))
    }

    /// Greatest lower bound of `{a, b}` in the order, if one exists.
    pub fn infimum(&self, a: Elem, b: Elem) -> Option<Elem> {
        let lowers: Vec<Elem> = self.elements().filter(|&c| self.le(c, a) && self.le(c, b)).collect();
        lowers.iter().copied().find(|&c| lowers.iter().all(|&d| self.le(d, c)))
    }
}

impl BinOp {
    pub const ALL: [BinOp; 5] = [BinOp::Tensor, BinOp::Under, BinOp::Over, BinOp::Or, BinOp::And];
}

impl Algebra for PartialAlgebra {
    type Elem = Elem;

    fn one(&self) -> Elem {
        self.one
    }

    fn top(&self) -> Elem {
        self.top
    }

    fn bot(&self) -> Elem {
        self.bot
    }

    fn leq(&self, a: Elem, b: Elem) -> bool {
        self.le(a, b)
    }

    fn op(&self, op: BinOp, a: Elem, b: Elem) -> Option<Elem> {
        self.table(op).get(a, b)
    }

    fn neg(&self, a: Elem) -> Option<Elem> {
        self.neg[a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_algebras_are_residuated() {
        for atoms in 0..=3 {
            let a = PartialAlgebra::boolean(atoms);
            assert!(a.is_total());
            check_poset_bounds_lattice(&a).unwrap();
            check_unit_laws(&a).unwrap();
            check_complement(&a).unwrap();
            check_total_residuation(&a, true).unwrap();
        }
    }

    #[test]
    fn suprema_in_the_four_element_algebra() {
        let a = PartialAlgebra::boolean(2);
        assert_eq!(a.supremum(1, 2), Some(3));
        assert_eq!(a.infimum(1, 2), Some(0));
        assert_eq!(a.supremum(1, 1), Some(1));
    }
}
