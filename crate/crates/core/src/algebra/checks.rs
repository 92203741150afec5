use serde::Serialize;
use thiserror::Error;

use super::{Elem, PartialAlgebra};
use crate::syntax::BinOp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// First axiom violation found by one of the table checks, with the
/// elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    #[error("order is not reflexive at {a}")]
    Reflexivity { a: Elem },
    #[error("order is not antisymmetric: {a} <= {b} <= {a}")]
    Antisymmetry { a: Elem, b: Elem },
    #[error("order is not transitive: {a} <= {b} <= {c} but not {a} <= {c}")]
    Transitivity { a: Elem, b: Elem, c: Elem },
    #[error("bottom {bot} is not below {a}")]
    BottomBound { bot: Elem, a: Elem },
    #[error("top {top} is not above {a}")]
    TopBound { top: Elem, a: Elem },
    #[error("join({a}, {b}) = {value} is not the supremum")]
    JoinCompatibility { a: Elem, b: Elem, value: Elem },
    #[error("meet({a}, {b}) = {value} is not the infimum")]
    MeetCompatibility { a: Elem, b: Elem, value: Elem },
    #[error("unit law fails on the {side:?} at {a}: got {got:?}")]
    UnitLaw { a: Elem, side: Side, got: Option<Elem> },
    #[error("negation undefined at {a}")]
    NegationUndefined { a: Elem },
    #[error("{a} | ~{a} is {got:?}, not top")]
    ComplementJoin { a: Elem, got: Option<Elem> },
    #[error("{a} & ~{a} is {got:?}, not bottom")]
    ComplementMeet { a: Elem, got: Option<Elem> },
    #[error("operation `{op}` undefined at ({a}, {b})")]
    NotTotal { op: String, a: Elem, b: Elem },
    #[error("residuation fails at ({a}, {b}, {c}): {detail}")]
    Residuation { a: Elem, b: Elem, c: Elem, detail: String },
}

/// `≤` is a partial order with `⊥`/`⊤` as bounds, and every defined join
/// (meet) is the supremum (infimum) of its arguments.
pub fn check_poset_bounds_lattice(alg: &PartialAlgebra) -> Result<(), Violation> {
    let n = alg.size;
    for a in 0..n {
        if !alg.le(a, a) {
            return Err(Violation::Reflexivity { a });
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if alg.le(a, b) && alg.le(b, a) {
                return Err(Violation::Antisymmetry { a, b });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !alg.le(a, b) {
                continue;
            }
            for c in 0..n {
                if alg.le(b, c) && !alg.le(a, c) {
                    return Err(Violation::Transitivity { a, b, c });
                }
            }
        }
    }
    for a in 0..n {
        if !alg.le(alg.bot, a) {
            return Err(Violation::BottomBound { bot: alg.bot, a });
        }
        if !alg.le(a, alg.top) {
            return Err(Violation::TopBound { top: alg.top, a });
        }
    }
    for (a, b, value) in alg.join.defined() {
        if alg.supremum(a, b) != Some(value) {
            return Err(Violation::JoinCompatibility { a, b, value });
        }
    }
    for (a, b, value) in alg.meet.defined() {
        if alg.infimum(a, b) != Some(value) {
            return Err(Violation::MeetCompatibility { a, b, value });
        }
    }
    Ok(())
}

/// `1 ⊗ a = a = a ⊗ 1` with both products defined.
pub fn check_unit_laws(alg: &PartialAlgebra) -> Result<(), Violation> {
    for a in alg.elements() {
        let left = alg.otimes.get(alg.one, a);
        if left != Some(a) {
            return Err(Violation::UnitLaw { a, side: Side::Left, got: left });
        }
        let right = alg.otimes.get(a, alg.one);
        if right != Some(a) {
            return Err(Violation::UnitLaw { a, side: Side::Right, got: right });
        }
    }
    Ok(())
}

/// `¬a` defined, `a ∨ ¬a = ⊤` and `a ∧ ¬a = ⊥`, all defined.
pub fn check_complement(alg: &PartialAlgebra) -> Result<(), Violation> {
    for a in alg.elements() {
        let Some(na) = alg.neg[a] else {
            return Err(Violation::NegationUndefined { a });
        };
        let j = alg.join.get(a, na);
        if j != Some(alg.top) {
            return Err(Violation::ComplementJoin { a, got: j });
        }
        let m = alg.meet.get(a, na);
        if m != Some(alg.bot) {
            return Err(Violation::ComplementMeet { a, got: m });
        }
    }
    Ok(())
}

/// `a⊗b ≤ c ⇔ b ≤ a⊸c ⇔ a ≤ c⟜b` for every triple.
///
/// With `require_total` every table must be total; otherwise triples that
/// touch an undefined entry are skipped.
pub fn check_total_residuation(alg: &PartialAlgebra, require_total: bool) -> Result<(), Violation> {
    if require_total {
        for op in BinOp::ALL {
            if let Some((i, _)) = alg.table(op).cells.iter().enumerate().find(|(_, v)| v.is_none()) {
                return Err(Violation::NotTotal {
                    op: op.symbol().to_string(),
                    a: i / alg.size,
                    b: i % alg.size,
                });
            }
        }
    }
    for a in alg.elements() {
        for b in alg.elements() {
            let Some(ab) = alg.otimes.get(a, b) else { continue };
            for c in alg.elements() {
                let (Some(a_c), Some(c_b)) = (alg.lol.get(a, c), alg.lolinv.get(c, b)) else {
                    continue;
                };
                let prod = alg.le(ab, c);
                let left = alg.le(b, a_c);
                let right = alg.le(a, c_b);
                if prod != left {
                    return Err(Violation::Residuation {
                        a,
                        b,
                        c,
                        detail: format!("a*b <= c is {prod} but b <= a\\c is {left}"),
                    });
                }
                if prod != right {
                    return Err(Violation::Residuation {
                        a,
                        b,
                        c,
                        detail: format!("a*b <= c is {prod} but a <= c/b is {right}"),
                    });
                }
            }
        }
    }
    Ok(())
}
