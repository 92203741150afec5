use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, Elem, PartialAlgebra, Table};
use crate::bitset::BitSet64;
use crate::syntax::BinOp;

use super::Frame;

/// The powerset algebra of a frame: sets of points under union,
/// intersection and complement, with the product and both residuals
/// induced by the relation and the unit set as `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexAlgebra {
    frame: Frame,
}

impl ComplexAlgebra {
    pub fn new(frame: Frame) -> ComplexAlgebra {
        ComplexAlgebra { frame }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// `{z : ∃ x∈X, y∈Y. R(x, y, z)}`
    pub fn tensor(&self, x: BitSet64, y: BitSet64) -> BitSet64 {
        let mut out = BitSet64::EMPTY;
        for a in x.iter() {
            for b in y.iter() {
                out = out.union(self.frame.successors(a, b));
            }
        }
        out
    }

    /// `X ⊸ Z = {y : ∀ x∈X, z. R(x, y, z) ⇒ z ∈ Z}`
    pub fn under(&self, x: BitSet64, z: BitSet64) -> BitSet64 {
        BitSet64::from_indices(
            (0..self.frame.points()).filter(|&b| x.iter().all(|a| self.frame.successors(a, b).is_subset(z))),
        )
    }

    /// `Z ⟜ Y = {x : ∀ y∈Y, z. R(x, y, z) ⇒ z ∈ Z}`
    pub fn over(&self, z: BitSet64, y: BitSet64) -> BitSet64 {
        BitSet64::from_indices(
            (0..self.frame.points()).filter(|&a| y.iter().all(|b| self.frame.successors(a, b).is_subset(z))),
        )
    }

    pub fn elements(&self) -> impl Iterator<Item = BitSet64> {
        (0u64..1 << self.frame.points()).map(BitSet64)
    }

    /// Explicit tables with element `i` the point set whose mask is `i`.
    pub fn materialize(&self) -> PartialAlgebra {
        let k = self.frame.points();
        assert!(k <= 5, "materializing a complex algebra over {k} points");
        let m = 1usize << k;
        let s = |i: Elem| BitSet64(i as u64);
        let mut a = PartialAlgebra::skeleton(m, |x, y| s(x).is_subset(s(y)), self.frame.unit().0 as Elem, m - 1, 0);
        let lift = |f: &dyn Fn(BitSet64, BitSet64) -> BitSet64| Table::from_fn(m, |x, y| Some(f(s(x), s(y)).0 as Elem));
        a.otimes = lift(&|x, y| self.tensor(x, y));
        a.lol = lift(&|x, y| self.under(x, y));
        a.lolinv = lift(&|x, y| self.over(x, y));
        a.join = lift(&|x, y| x.union(y));
        a.meet = lift(&|x, y| x.intersection(y));
        a.neg = (0..m).map(|x| Some(s(x).complement(k).0 as Elem)).collect();
        a
    }
}

impl Algebra for ComplexAlgebra {
    type Elem = BitSet64;

    fn one(&self) -> BitSet64 {
        self.frame.unit()
    }

    fn top(&self) -> BitSet64 {
        self.frame.universe()
    }

    fn bot(&self) -> BitSet64 {
        BitSet64::EMPTY
    }

    fn leq(&self, a: BitSet64, b: BitSet64) -> bool {
        a.is_subset(b)
    }

    fn op(&self, op: BinOp, a: BitSet64, b: BitSet64) -> Option<BitSet64> {
        Some(match op {
            BinOp::Tensor => self.tensor(a, b),
            BinOp::Under => self.under(a, b),
            BinOp::Over => self.over(a, b),
            BinOp::Or => a.union(b),
            BinOp::And => a.intersection(b),
        })
    }

    fn neg(&self, a: BitSet64) -> Option<BitSet64> {
        Some(a.complement(self.frame.points()))
    }
}

/// First way in which a map fails to embed a partial algebra, reported on
/// source elements.
#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum EmbeddingViolation {
    #[error("map has {got} entries for {expected} elements")]
    WrongLength { expected: usize, got: usize },
    #[error("elements {a} and {b} have the same image")]
    NotInjective { a: Elem, b: Elem },
    #[error("constant {name} is not preserved")]
    Constant { name: String },
    #[error("`{op}` at ({a}, {b}) is not preserved")]
    Operation { op: String, a: Elem, b: Elem },
    #[error("negation at {a} is not preserved")]
    Negation { a: Elem },
    #[error("order between {a} and {b} is not reflected")]
    Order { a: Elem, b: Elem },
}

/// Injective, preserves the constants and every defined operation entry,
/// and `a ≤ b ⇔ ι(a) ≤ ι(b)`.
pub fn verify_embedding<A: Algebra>(src: &PartialAlgebra, dst: &A, map: &[A::Elem]) -> Result<(), EmbeddingViolation> {
    if map.len() != src.size {
        return Err(EmbeddingViolation::WrongLength { expected: src.size, got: map.len() });
    }
    for a in src.elements() {
        for b in (a + 1)..src.size {
            if map[a] == map[b] {
                return Err(EmbeddingViolation::NotInjective { a, b });
            }
        }
    }
    for (name, s, d) in [("1", src.one, dst.one()), ("top", src.top, dst.top()), ("bot", src.bot, dst.bot())] {
        if map[s] != d {
            return Err(EmbeddingViolation::Constant { name: name.into() });
        }
    }
    for op in BinOp::ALL {
        for (a, b, c) in src.table(op).defined() {
            if dst.op(op, map[a], map[b]) != Some(map[c]) {
                return Err(EmbeddingViolation::Operation { op: op.symbol().into(), a, b });
            }
        }
    }
    for a in src.elements() {
        if let Some(na) = src.neg[a] {
            if dst.neg(map[a]) != Some(map[na]) {
                return Err(EmbeddingViolation::Negation { a });
            }
        }
    }
    for a in src.elements() {
        for b in src.elements() {
            if src.le(a, b) != dst.leq(map[a], map[b]) {
                return Err(EmbeddingViolation::Order { a, b });
            }
        }
    }
    Ok(())
}
